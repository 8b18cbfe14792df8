//! Exact linear algebra over a coordinate field, plus a fraction-free
//! integer echelon engine for the hot combinatorial loops.

use crate::scalar::{FieldRef, Scalar};

pub type Vector = Vec<Scalar>;
pub type Matrix = Vec<Vec<Scalar>>;

pub fn zero_vector(field: &FieldRef, n: usize) -> Vector {
    vec![Scalar::zero(field); n]
}

pub fn identity(field: &FieldRef, n: usize) -> Matrix {
    let mut m = vec![zero_vector(field, n); n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Scalar::one(field);
    }
    m
}

pub fn mat_vec(m: &Matrix, v: &Vector) -> Vector {
    m.iter()
        .map(|row| {
            let mut acc = Scalar::zero(row[0].field());
            for (a, b) in row.iter().zip(v.iter()) {
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let field = a[0][0].field().clone();
    let rows = a.len();
    let inner = b.len();
    let cols = b[0].len();
    let mut out = vec![zero_vector(&field, cols); rows];
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
            }
        }
    }
    out
}

pub fn transpose(m: &Matrix) -> Matrix {
    let rows = m.len();
    let cols = m[0].len();
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

pub fn dot(form: &Matrix, u: &Vector, v: &Vector) -> Scalar {
    let field = u[0].field().clone();
    let mut acc = Scalar::zero(&field);
    for (i, a) in u.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in v.iter().enumerate() {
            if b.is_zero() || form[i][j].is_zero() {
                continue;
            }
            acc = &acc + &(&(a * b) * &form[i][j]);
        }
    }
    acc
}

/// In-place reduced row echelon form; returns the pivot columns.
/// Zero rows are removed, leading entries are normalised to 1 and
/// cleared above and below, so the output is a canonical basis of the
/// row space.
pub fn rref(rows: &mut Vec<Vector>) -> Vec<usize> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    if rows.is_empty() {
        return vec![];
    }
    let cols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot nonzero");
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(pivot_row.iter()) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vector]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m);
    m.len()
}

/// Basis of the kernel of the linear map with the given rows.
pub fn kernel_basis(field: &FieldRef, rows: &[Vector], cols: usize) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    let is_pivot = |c: usize| pivots.iter().position(|&p| p == c);
    for free in 0..cols {
        if is_pivot(free).is_some() {
            continue;
        }
        let mut v = zero_vector(field, cols);
        v[free] = Scalar::one(field);
        for (ri, &p) in pivots.iter().enumerate() {
            v[p] = -&m[ri][free];
        }
        basis.push(v);
    }
    basis
}

/// Reduce `v` against an rref basis; returns the residual.
pub fn residual(rrows: &[Vector], pivots: &[usize], v: &Vector) -> Vector {
    let mut v = v.clone();
    for (row, &p) in rrows.iter().zip(pivots.iter()) {
        if v[p].is_zero() {
            continue;
        }
        let f = v[p].clone();
        for (x, r) in v.iter_mut().zip(row.iter()) {
            if !r.is_zero() {
                *x = &*x - &(&f * r);
            }
        }
    }
    v
}

pub fn in_span(rrows: &[Vector], pivots: &[usize], v: &Vector) -> bool {
    residual(rrows, pivots, v).iter().all(|x| x.is_zero())
}

/// Solve `A x = b` for square invertible `A`.
pub fn solve(a: &Matrix, b: &Vector) -> Option<Vector> {
    let n = a.len();
    let field = b[0].field().clone();
    let mut aug: Vec<Vector> = (0..n)
        .map(|i| {
            let mut row = a[i].clone();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    let mut x = zero_vector(&field, n);
    for (ri, &p) in pivots.iter().enumerate() {
        x[p] = aug[ri][n].clone();
    }
    Some(x)
}

pub fn invert(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let field = a[0][0].field().clone();
    let mut aug: Vec<Vector> = (0..n)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend(identity(&field, n)[i].iter().cloned());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some((0..n).map(|i| aug[i][n..].to_vec()).collect())
}

// ---------------------------------------------------------------------------
// Incremental echelon forms for span queries.
//
// The broken-circuit enumeration asks millions of "is h in the span of
// this stack of vectors" questions. For crystallographic types the root
// coordinates are integers, and a fraction-free form keeps the inner
// loop allocation-free.

/// Stack-disciplined echelon basis over the integers (fraction-free).
pub struct IntEchelon {
    rows: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl IntEchelon {
    pub fn new() -> Self {
        IntEchelon { rows: vec![], pivots: vec![] }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if v[p] == 0 {
                continue;
            }
            let a = row[p] as i128;
            let b = v[p] as i128;
            for (x, r) in v.iter_mut().zip(row.iter()) {
                let val = (*x as i128) * a - b * (*r as i128);
                *x = i64::try_from(val).expect("echelon overflow");
            }
            normalize_gcd(&mut v);
        }
        v
    }

    /// Push a vector; returns `false` (and pushes nothing) if it is
    /// already in the span.
    pub fn push(&mut self, v: &[i64]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        normalize_gcd(&mut r);
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn pop(&mut self) {
        self.rows.pop();
        self.pivots.pop();
    }

    pub fn spans(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

fn normalize_gcd(v: &mut [i64]) {
    let mut g: i64 = 0;
    for &x in v.iter() {
        g = gcd_i64(g, x);
        if g == 1 {
            return;
        }
    }
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The same stack discipline over an exact field.
pub struct FieldEchelon {
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl FieldEchelon {
    pub fn new() -> Self {
        FieldEchelon { rows: vec![], pivots: vec![] }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &Vector) -> Vector {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if v[p].is_zero() {
                continue;
            }
            let f = &v[p] / &row[p];
            for (x, r) in v.iter_mut().zip(row.iter()) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        v
    }

    pub fn push(&mut self, v: &Vector) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn pop(&mut self) {
        self.rows.pop();
        self.pivots.pop();
    }

    pub fn spans(&self, v: &Vector) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

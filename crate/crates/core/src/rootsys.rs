//! Root systems of the finite Coxeter groups.
//!
//! Every irreducible type gets its standard realization: orthonormal
//! ambient coordinates for the crystallographic families (the `A_n`
//! hyperplane model keeps `n+1` coordinates), and simple-root
//! coordinates with an explicit Gram form for the `H` and `I` families,
//! which keeps all arithmetic inside the smallest coordinate field.
//! The full system is the closure of the simple roots under the simple
//! reflections. Roots are ordered deterministically (positive roots by
//! graded lexicographic order on their simple-root coordinates,
//! negatives mirrored after them), and everything downstream — group
//! elements, hyperplane indices, broken-circuit bases — inherits that
//! order.

use std::collections::HashMap;
use std::fmt;

use serde::ser::{Serialize, Serializer};
use thiserror::Error;

use crate::linalg::{self, Matrix, Vector};
use crate::poly::IntPoly;
use crate::scalar::{Field, FieldKind, FieldRef, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    H,
    I,
}

/// An irreducible Coxeter type: family, rank, and (family `I` only) the
/// dihedral edge label `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterType {
    pub family: Family,
    pub rank: usize,
    /// Order of the product of the two generators, `I2(m)` only.
    pub m: u32,
}

#[derive(Debug, Error)]
pub enum RootError {
    #[error("invalid Coxeter type: {0}")]
    InvalidType(String),
    #[error("cannot parse Coxeter type from `{0}`")]
    Parse(String),
    #[error("root closure exceeded the safety cap")]
    ClosureOverflow,
    #[error("angle between roots does not match any dihedral label")]
    UnknownAngle,
    #[error("Coxeter graph component is not of finite type")]
    UnknownComponent,
    #[error("polynomial does not split into factors 1 + k t over the integers")]
    NonSplitting,
}

impl CoxeterType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootError> {
        let t = CoxeterType { family, rank, m: 0 };
        t.validate()?;
        Ok(t)
    }

    pub fn dihedral(m: u32) -> Result<Self, RootError> {
        let t = CoxeterType { family: Family::I, rank: 2, m };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<(), RootError> {
        let ok = match self.family {
            Family::A | Family::B => self.rank >= 1,
            Family::D => self.rank >= 2,
            Family::E => (6..=8).contains(&self.rank),
            Family::F => self.rank == 4,
            Family::H => (3..=4).contains(&self.rank),
            Family::I => self.rank == 2 && self.m >= 3,
        };
        if ok {
            Ok(())
        } else {
            Err(RootError::InvalidType(self.to_string()))
        }
    }

    /// Parse `A3`, `b2`, `E6`, `I2(7)`.
    pub fn parse(s: &str) -> Result<Self, RootError> {
        let s = s.trim();
        let err = || RootError::Parse(s.to_string());
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') | Some('C') => Family::B,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('H') => Family::H,
            Some('G') => {
                // G2 is the m = 6 dihedral group.
                if chars.as_str() == "2" {
                    return CoxeterType::dihedral(6);
                }
                return Err(err());
            }
            Some('I') => {
                let rest = chars.as_str();
                let rest = rest.strip_prefix('2').ok_or_else(err)?;
                let inner = rest
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(err)?;
                let m: u32 = inner.parse().map_err(|_| err())?;
                return CoxeterType::dihedral(m);
            }
            _ => return Err(err()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| err())?;
        CoxeterType::new(fam, rank)
    }

    /// Order of the corresponding Coxeter group.
    pub fn order(&self) -> u64 {
        fn fact(n: u64) -> u64 {
            (1..=n).product::<u64>().max(1)
        }
        match self.family {
            Family::A => fact(self.rank as u64 + 1),
            Family::B => (1u64 << self.rank) * fact(self.rank as u64),
            Family::D => (1u64 << (self.rank - 1)) * fact(self.rank as u64),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::H => {
                if self.rank == 3 {
                    120
                } else {
                    14_400
                }
            }
            Family::I => 2 * self.m as u64,
        }
    }

    /// Number of positive roots, `|R+| = sum of the exponents`.
    pub fn num_positive_roots(&self) -> usize {
        match self.family {
            Family::A => self.rank * (self.rank + 1) / 2,
            Family::B => self.rank * self.rank,
            Family::D => self.rank * (self.rank - 1),
            Family::E => match self.rank {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::H => {
                if self.rank == 3 {
                    15
                } else {
                    60
                }
            }
            Family::I => self.m as usize,
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I => write!(f, "I2({})", self.m),
            _ => write!(f, "{:?}{}", self.family, self.rank),
        }
    }
}

impl Serialize for CoxeterType {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

/// A realized finite root system with its deterministic root order.
pub struct RootSystem {
    ctype: CoxeterType,
    field: FieldRef,
    ambient_dim: usize,
    rank: usize,
    /// Bilinear form on ambient coordinates.
    form: Matrix,
    /// Ambient coordinates, positives first, negatives mirrored.
    roots: Vec<Vector>,
    /// Simple-root-basis coordinates of every root.
    coords: Vec<Vector>,
    simple_indices: Vec<usize>,
    num_positive: usize,
    neg_of: Vec<usize>,
    /// Gram matrix of the simple roots.
    gram: Matrix,
    cox_matrix: Vec<Vec<u32>>,
    coords_index: HashMap<Vec<Scalar>, usize>,
    /// Squared lengths `(α, α)`.
    lengths: Vec<Scalar>,
    /// Root permutations induced by the simple reflections.
    simple_perms: Vec<Vec<u16>>,
    /// Orbit label of each root under the group (smallest index in the
    /// orbit); computed from the simple reflections alone.
    orbit_of: Vec<u16>,
}

struct Realization {
    field: FieldRef,
    ambient: usize,
    simples: Vec<Vector>,
    form: Matrix,
}

fn orthonormal_realization(field: &FieldRef, ambient: usize, simples: Vec<Vec<i64>>) -> Realization {
    let form = linalg::identity(field, ambient);
    let simples = simples
        .into_iter()
        .map(|v| v.into_iter().map(|x| Scalar::from_integer(field, x)).collect())
        .collect();
    Realization { field: field.clone(), ambient, simples, form }
}

fn realization(t: &CoxeterType) -> Realization {
    let q = Field::rational();
    let n = t.rank;
    match t.family {
        Family::A => {
            let simples = (0..n)
                .map(|i| {
                    let mut v = vec![0i64; n + 1];
                    v[i] = 1;
                    v[i + 1] = -1;
                    v
                })
                .collect();
            orthonormal_realization(&q, n + 1, simples)
        }
        Family::B => {
            let mut simples: Vec<Vec<i64>> = (0..n.saturating_sub(1))
                .map(|i| {
                    let mut v = vec![0i64; n];
                    v[i] = 1;
                    v[i + 1] = -1;
                    v
                })
                .collect();
            let mut last = vec![0i64; n];
            last[n - 1] = 1;
            simples.push(last);
            orthonormal_realization(&q, n, simples)
        }
        Family::D => {
            let mut simples: Vec<Vec<i64>> = (0..n - 1)
                .map(|i| {
                    let mut v = vec![0i64; n];
                    v[i] = 1;
                    v[i + 1] = -1;
                    v
                })
                .collect();
            let mut last = vec![0i64; n];
            last[n - 2] = 1;
            last[n - 1] = 1;
            simples.push(last);
            orthonormal_realization(&q, n, simples)
        }
        Family::E => {
            let half = Scalar::from_ratio(&q, 1, 2);
            let mut alpha1 = vec![-&half; 8];
            alpha1[0] = half.clone();
            alpha1[7] = half;
            let mut simples: Vec<Vector> = vec![alpha1];
            let e = |i: usize, s: i64| {
                let mut v = vec![Scalar::zero(&q); 8];
                v[i] = Scalar::from_integer(&q, s);
                v
            };
            let mut alpha2 = e(0, 1);
            alpha2[1] = Scalar::from_integer(&q, 1);
            simples.push(alpha2);
            for i in 0..6 {
                // e_{i+1} - e_i
                let mut v = e(i + 1, 1);
                v[i] = Scalar::from_integer(&q, -1);
                simples.push(v);
            }
            simples.truncate(n);
            Realization { field: q.clone(), ambient: 8, simples, form: linalg::identity(&q, 8) }
        }
        Family::F => {
            let half = Scalar::from_ratio(&q, 1, 2);
            let s = |v: Vec<i64>| -> Vector { v.into_iter().map(|x| Scalar::from_integer(&q, x)).collect() };
            let simples = vec![
                s(vec![0, 1, -1, 0]),
                s(vec![0, 0, 1, -1]),
                s(vec![0, 0, 0, 1]),
                vec![half.clone(), -&half, -&half, -&half],
            ];
            Realization { field: q.clone(), ambient: 4, simples, form: linalg::identity(&q, 4) }
        }
        Family::H => {
            let f = Field::quadratic(5);
            let tau = &(&Scalar::one(&f) + &Scalar::generator(&f)) * &Scalar::from_ratio(&f, 1, 2);
            gram_realization(&f, hp_gram(&f, &tau, n))
        }
        Family::I => dihedral_realization(t.m),
    }
}

/// Gram matrix of the `H_n` simple roots: all length² 2, first edge
/// label 5, the rest label 3.
fn hp_gram(f: &FieldRef, tau: &Scalar, n: usize) -> Matrix {
    let mut g = vec![vec![Scalar::zero(f); n]; n];
    for i in 0..n {
        g[i][i] = Scalar::from_integer(f, 2);
    }
    g[0][1] = -tau;
    g[1][0] = -tau;
    for i in 1..n - 1 {
        g[i][i + 1] = Scalar::from_integer(f, -1);
        g[i + 1][i] = Scalar::from_integer(f, -1);
    }
    g
}

/// Build a realization directly in simple-root coordinates from a Gram
/// matrix: the simple roots are the standard basis vectors and the
/// ambient bilinear form is the Gram matrix itself.
fn gram_realization(field: &FieldRef, gram: Matrix) -> Realization {
    let n = gram.len();
    let simples = linalg::identity(field, n);
    Realization { field: field.clone(), ambient: n, simples, form: gram }
}

/// `I2(m)` over the smallest field containing the root coordinates:
/// rational for m = 3, 4, 6 (crystallographic normalisations), the
/// quadratic field of sqrt 5 for m = 5, 10, and the cosine field
/// otherwise (equal-length normalisation).
fn dihedral_realization(m: u32) -> Realization {
    let q = Field::rational();
    let mk = |f: &FieldRef, a: Scalar, b: Scalar, c: Scalar| {
        gram_realization(f, vec![vec![a, b.clone()], vec![b, c]])
    };
    match m {
        3 => mk(
            &q,
            Scalar::from_integer(&q, 2),
            Scalar::from_integer(&q, -1),
            Scalar::from_integer(&q, 2),
        ),
        4 => mk(
            &q,
            Scalar::from_integer(&q, 2),
            Scalar::from_integer(&q, -1),
            Scalar::from_integer(&q, 1),
        ),
        6 => mk(
            &q,
            Scalar::from_integer(&q, 2),
            Scalar::from_integer(&q, -3),
            Scalar::from_integer(&q, 6),
        ),
        5 => {
            let f = Field::quadratic(5);
            let tau = &(&Scalar::one(&f) + &Scalar::generator(&f)) * &Scalar::from_ratio(&f, 1, 2);
            mk(&f, Scalar::from_integer(&f, 2), -&tau, Scalar::from_integer(&f, 2))
        }
        10 => {
            // lengths² 2 and 5+sqrt5; pairing -(5+sqrt5)/2 gives
            // cos² = (5+sqrt5)/8 = cos²(pi/10).
            let f = Field::quadratic(5);
            let w = &Scalar::from_integer(&f, 5) + &Scalar::generator(&f);
            let half = Scalar::from_ratio(&f, 1, 2);
            mk(&f, Scalar::from_integer(&f, 2), -&(&w * &half), w.clone())
        }
        _ => {
            let f = Field::cosine(m);
            let g = Scalar::generator(&f);
            mk(&f, Scalar::from_integer(&f, 2), -&g, Scalar::from_integer(&f, 2))
        }
    }
}

/// Close the simple roots under the simple reflections and fix the
/// deterministic root order.
pub fn build_root_system(t: CoxeterType) -> Result<RootSystem, RootError> {
    t.validate()?;
    let real = realization(&t);
    let field = real.field.clone();
    let n = real.simples.len();
    let cap = 4 * t.num_positive_roots().max(4);

    let pair = |u: &Vector, v: &Vector| linalg::dot(&real.form, u, v);
    let simple_norms: Vec<Scalar> = real.simples.iter().map(|a| pair(a, a)).collect();

    let mut all: Vec<Vector> = Vec::new();
    let mut seen: HashMap<Vec<Scalar>, usize> = HashMap::new();
    for a in &real.simples {
        if seen.insert(a.clone(), all.len()).is_none() {
            all.push(a.clone());
        }
    }
    let mut head = 0;
    while head < all.len() {
        let v = all[head].clone();
        head += 1;
        for (i, a) in real.simples.iter().enumerate() {
            let c = &(&pair(a, &v) + &pair(a, &v)) / &simple_norms[i];
            let img: Vector = v
                .iter()
                .zip(a.iter())
                .map(|(x, y)| x - &(&c * y))
                .collect();
            if !seen.contains_key(&img) {
                seen.insert(img.clone(), all.len());
                all.push(img);
                if all.len() > cap {
                    return Err(RootError::ClosureOverflow);
                }
            }
        }
    }

    // Simple-root coordinates: c = G^{-1} (<α_i, v>)_i.
    let gram: Matrix = (0..n)
        .map(|i| (0..n).map(|j| pair(&real.simples[i], &real.simples[j])).collect())
        .collect();
    let gram_inv = linalg::invert(&gram).expect("Gram matrix invertible");
    let coords_of = |v: &Vector| -> Vector {
        let b: Vector = real.simples.iter().map(|a| pair(a, v)).collect();
        linalg::mat_vec(&gram_inv, &b)
    };

    let mut positives: Vec<(Vector, Vector)> = Vec::new(); // (ambient, coords)
    for v in &all {
        let c = coords_of(v);
        let lead = c.iter().find(|x| !x.is_zero()).expect("nonzero root");
        if lead.sign() > 0 {
            positives.push((v.clone(), c));
        }
    }
    assert_eq!(positives.len() * 2, all.len(), "roots split into R+ and -R+");

    // Graded lexicographic order on simple-root coordinates.
    positives.sort_by(|(_, ca), (_, cb)| {
        let ha = ca.iter().fold(Scalar::zero(&field), |acc, x| &acc + x);
        let hb = cb.iter().fold(Scalar::zero(&field), |acc, x| &acc + x);
        ha.cmp(&hb).then_with(|| ca.cmp(cb))
    });

    let num_positive = positives.len();
    let mut roots = Vec::with_capacity(2 * num_positive);
    let mut coords = Vec::with_capacity(2 * num_positive);
    for (v, c) in &positives {
        roots.push(v.clone());
        coords.push(c.clone());
    }
    for (v, c) in &positives {
        roots.push(v.iter().map(|x| -x).collect());
        coords.push(c.iter().map(|x| -x).collect());
    }
    let neg_of: Vec<usize> = (0..2 * num_positive)
        .map(|i| if i < num_positive { i + num_positive } else { i - num_positive })
        .collect();

    let coords_index: HashMap<Vec<Scalar>, usize> =
        coords.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    let simple_indices: Vec<usize> = real
        .simples
        .iter()
        .map(|a| *coords_index.get(&coords_of(a)).expect("simple root present"))
        .collect();

    let lengths: Vec<Scalar> = roots.iter().map(|v| pair(v, v)).collect();

    // Coxeter matrix of the simple roots.
    let labels = coxeter_labels(&field, &gram)?;

    let mut rs = RootSystem {
        ctype: t,
        field,
        ambient_dim: real.ambient,
        rank: n,
        form: real.form,
        roots,
        coords,
        simple_indices,
        num_positive,
        neg_of,
        gram,
        cox_matrix: labels,
        coords_index,
        lengths,
        simple_perms: Vec::new(),
        orbit_of: Vec::new(),
    };
    rs.simple_perms = (0..n)
        .map(|i| rs.reflection_perm(rs.simple_indices[i]))
        .collect();
    rs.orbit_of = rs.compute_orbits();
    Ok(rs)
}

impl RootSystem {
    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive
    }

    pub fn root(&self, i: usize) -> &Vector {
        &self.roots[i]
    }

    /// Simple-root-basis coordinates of root `i`.
    pub fn coords(&self, i: usize) -> &Vector {
        &self.coords[i]
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple_indices
    }

    pub fn neg_of(&self, i: usize) -> usize {
        self.neg_of[i]
    }

    pub fn length_sq(&self, i: usize) -> &Scalar {
        &self.lengths[i]
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn coxeter_matrix(&self) -> &Vec<Vec<u32>> {
        &self.cox_matrix
    }

    pub fn simple_perms(&self) -> &[Vec<u16>] {
        &self.simple_perms
    }

    pub fn index_of_coords(&self, c: &Vector) -> Option<usize> {
        self.coords_index.get(c).copied()
    }

    /// Bilinear form in simple-root coordinates.
    pub fn pairing(&self, u: &Vector, v: &Vector) -> Scalar {
        linalg::dot(&self.gram, u, v)
    }

    /// Ambient bilinear form.
    pub fn dot_ambient(&self, u: &Vector, v: &Vector) -> Scalar {
        linalg::dot(&self.form, u, v)
    }

    /// Reflect an ambient vector in the hyperplane of root `root_index`.
    pub fn reflect(&self, root_index: usize, v: &Vector) -> Vector {
        let a = &self.roots[root_index];
        let c = &(&self.dot_ambient(a, v) + &self.dot_ambient(a, v)) / &self.lengths[root_index];
        v.iter().zip(a.iter()).map(|(x, y)| x - &(&c * y)).collect()
    }

    /// Reflect a simple-root-coordinate vector in the hyperplane of
    /// root `root_index`.
    pub fn reflect_coords(&self, root_index: usize, v: &Vector) -> Vector {
        let a = &self.coords[root_index];
        let c = &(&self.pairing(a, v) + &self.pairing(a, v)) / &self.lengths[root_index];
        v.iter().zip(a.iter()).map(|(x, y)| x - &(&c * y)).collect()
    }

    /// The permutation of all roots induced by the reflection in root
    /// `root_index`.
    pub fn reflection_perm(&self, root_index: usize) -> Vec<u16> {
        (0..self.num_roots())
            .map(|j| {
                let img = self.reflect_coords(root_index, &self.coords[j]);
                self.coords_index[&img] as u16
            })
            .collect()
    }

    fn compute_orbits(&self) -> Vec<u16> {
        let n = self.num_roots();
        let mut orbit = vec![u16::MAX; n];
        for start in 0..n {
            if orbit[start] != u16::MAX {
                continue;
            }
            let label = start as u16;
            let mut stack = vec![start];
            orbit[start] = label;
            while let Some(r) = stack.pop() {
                for p in &self.simple_perms {
                    let img = p[r] as usize;
                    if orbit[img] == u16::MAX {
                        orbit[img] = label;
                        stack.push(img);
                    }
                }
            }
        }
        orbit
    }

    /// Orbit label of a root under the full group.
    pub fn orbit_of(&self, i: usize) -> u16 {
        self.orbit_of[i]
    }

    /// Apply an essential (rank × rank) matrix to every root; `None` if
    /// some image is not a root.
    pub fn root_images_of_matrix(&self, m: &Matrix) -> Option<Vec<u16>> {
        (0..self.num_roots())
            .map(|j| {
                let img = linalg::mat_vec(m, &self.coords[j]);
                self.coords_index.get(&img).map(|&i| i as u16)
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Coxeter labels and component classification.

/// `4 cos²(pi/k)` inside `field`, if representable.
fn four_cos_sq(field: &FieldRef, k: u32) -> Option<Scalar> {
    match k {
        2 => Some(Scalar::zero(field)),
        3 => Some(Scalar::one(field)),
        4 => Some(Scalar::from_integer(field, 2)),
        6 => Some(Scalar::from_integer(field, 3)),
        _ => match field.kind() {
            FieldKind::Quadratic(5) => {
                let g = Scalar::generator(field);
                let half = Scalar::from_ratio(field, 1, 2);
                match k {
                    // 4cos²(pi/5) = (3+sqrt5)/2, 4cos²(pi/10) = (5+sqrt5)/2
                    5 => Some(&(&Scalar::from_integer(field, 3) + &g) * &half),
                    10 => Some(&(&Scalar::from_integer(field, 5) + &g) * &half),
                    _ => None,
                }
            }
            FieldKind::Cosine(m0) if m0 % k == 0 => {
                // 2cos(pi/k) = D_{m0/k}(2cos(pi/m0)) with the Dickson
                // recursion D_0 = 2, D_1 = x, D_{j+1} = x D_j - D_{j-1}.
                let x = Scalar::generator(field);
                let mut d0 = Scalar::from_integer(field, 2);
                let mut d1 = x.clone();
                let j = m0 / k;
                let val = match j {
                    0 => d0.clone(),
                    _ => {
                        for _ in 1..j {
                            let next = &(&x * &d1) - &d0;
                            d0 = d1;
                            d1 = next;
                        }
                        d1.clone()
                    }
                };
                Some(&val * &val)
            }
            _ => None,
        },
    }
}

fn candidate_labels(field: &FieldRef) -> Vec<u32> {
    let mut ks = vec![2u32, 3, 4, 6];
    match field.kind() {
        FieldKind::Quadratic(5) => ks.extend([5, 10]),
        FieldKind::Cosine(m0) => {
            for k in 5..=m0 {
                if m0 % k == 0 {
                    ks.push(k);
                }
            }
        }
        _ => {}
    }
    ks.sort_unstable();
    ks.dedup();
    ks
}

/// Edge label between two roots from `4 cos²` of their angle.
pub fn edge_label(field: &FieldRef, pairing: &Scalar, len_a: &Scalar, len_b: &Scalar) -> Result<u32, RootError> {
    let c = &(&(pairing * pairing) * &Scalar::from_integer(field, 4)).try_div(&(len_a * len_b)).unwrap();
    for k in candidate_labels(field) {
        if let Some(v) = four_cos_sq(field, k) {
            if &v == c {
                return Ok(k);
            }
        }
    }
    Err(RootError::UnknownAngle)
}

/// Coxeter matrix from a Gram matrix of simple roots.
pub fn coxeter_labels(field: &FieldRef, gram: &Matrix) -> Result<Vec<Vec<u32>>, RootError> {
    let n = gram.len();
    let mut m = vec![vec![1u32; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            m[i][j] = edge_label(field, &gram[i][j], &gram[i][i], &gram[j][j])?;
        }
    }
    Ok(m)
}

/// Connected components of a Coxeter matrix (edges are labels >= 3).
pub fn graph_components(labels: &[Vec<u32>]) -> Vec<Vec<usize>> {
    let n = labels.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            for w in 0..n {
                if !seen[w] && labels[v][w] >= 3 {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Classify the connected components of a Coxeter matrix as irreducible
/// types. Rank-2 components use `A2`, `B2`, `I2(m)` naming.
pub fn classify_components(labels: &[Vec<u32>]) -> Result<Vec<CoxeterType>, RootError> {
    let mut out = Vec::new();
    for comp in graph_components(labels) {
        out.push(classify_component(labels, &comp)?);
    }
    out.sort();
    Ok(out)
}

/// Classify one connected component of a Coxeter matrix.
pub fn classify_component(labels: &[Vec<u32>], comp: &[usize]) -> Result<CoxeterType, RootError> {
    let n = comp.len();
    if n == 1 {
        return CoxeterType::new(Family::A, 1);
    }
    let deg = |v: usize| comp.iter().filter(|&&w| w != v && labels[v][w] >= 3).count();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| deg(v) >= 3).collect();
    if branch.len() > 1 || branch.iter().any(|&v| deg(v) > 3) {
        return Err(RootError::UnknownComponent);
    }
    if branch.is_empty() {
        // A path; walk it from one endpoint.
        let ends: Vec<usize> = comp.iter().copied().filter(|&v| deg(v) == 1).collect();
        if ends.len() != 2 {
            return Err(RootError::UnknownComponent);
        }
        let mut path = vec![ends[0]];
        let mut prev = usize::MAX;
        while path.len() < n {
            let v = *path.last().unwrap();
            let next = comp
                .iter()
                .copied()
                .find(|&w| w != v && w != prev && labels[v][w] >= 3)
                .ok_or(RootError::UnknownComponent)?;
            prev = v;
            path.push(next);
        }
        let mut edge: Vec<u32> = path.windows(2).map(|w| labels[w[0]][w[1]]).collect();
        if edge.last() > edge.first() {
            // normalise so a high label sits at the front
            edge.reverse();
        }
        if n == 2 {
            return match edge[0] {
                3 => CoxeterType::new(Family::A, 2),
                4 => CoxeterType::new(Family::B, 2),
                m => CoxeterType::dihedral(m),
            };
        }
        if edge.iter().all(|&m| m == 3) {
            return CoxeterType::new(Family::A, n);
        }
        if edge[0] == 4 && edge[1..].iter().all(|&m| m == 3) {
            return CoxeterType::new(Family::B, n);
        }
        if n == 4 && edge == [3, 4, 3] {
            return CoxeterType::new(Family::F, 4);
        }
        if edge[0] == 5 && edge[1..].iter().all(|&m| m == 3) && (n == 3 || n == 4) {
            return CoxeterType::new(Family::H, n);
        }
        return Err(RootError::UnknownComponent);
    }
    // One branch vertex of degree 3; all labels must be 3.
    for &v in comp {
        for &w in comp {
            if v != w && labels[v][w] >= 4 {
                return Err(RootError::UnknownComponent);
            }
        }
    }
    let b = branch[0];
    let mut legs: Vec<usize> = Vec::new();
    for &s in comp.iter().filter(|&&v| v != b && labels[b][v] >= 3) {
        let mut len = 1;
        let mut prev = b;
        let mut cur = s;
        loop {
            let next = comp
                .iter()
                .copied()
                .find(|&w| w != prev && w != cur && labels[cur][w] >= 3);
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                    len += 1;
                }
                None => break,
            }
        }
        legs.push(len);
    }
    legs.sort_unstable();
    match legs.as_slice() {
        [1, 1, k] => CoxeterType::new(Family::D, k + 3),
        [1, 2, 2] => CoxeterType::new(Family::E, 6),
        [1, 2, 3] => CoxeterType::new(Family::E, 7),
        [1, 2, 4] => CoxeterType::new(Family::E, 8),
        _ => Err(RootError::UnknownComponent),
    }
}

/// Recover the exponent multiset from a Betti polynomial by trial
/// division with factors `1 + k t`.
pub fn exponents_from_poincare(p: &IntPoly) -> Result<Vec<u64>, RootError> {
    let mut q = p.clone();
    let mut exps = Vec::new();
    if q.coeff(0) != 1 {
        return Err(RootError::NonSplitting);
    }
    let bound = q.coeff(1).max(1);
    'outer: while q.degree() > 0 {
        for k in 1..=bound {
            if let Some(r) = q.div_one_plus_kt(k) {
                exps.push(k as u64);
                q = r;
                continue 'outer;
            }
        }
        return Err(RootError::NonSplitting);
    }
    if q.coeffs != vec![1] {
        return Err(RootError::NonSplitting);
    }
    exps.sort_unstable();
    Ok(exps)
}

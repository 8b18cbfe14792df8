//! The Orlik–Solomon algebra of the reflection arrangement in its
//! broken-circuit basis, with the group action on each graded piece.
//!
//! Hyperplanes are the positive roots in the root order. A monomial is
//! a sorted tuple of hyperplane indices; dependent tuples vanish, and a
//! tuple containing a broken circuit rewrites through the circuit
//! boundary relation, always substituting the smallest completing
//! element, which strictly decreases the tuple and terminates. The nbc
//! monomials per degree form a basis whose counts are the Betti
//! numbers. Reductions are memoized in a concurrent map shared by the
//! per-class trace computations.

use std::collections::HashMap;
use std::sync::Arc;

use dashmap::DashMap;
use rayon::prelude::*;

use crate::characters::ClassFunction;
use crate::group::{Elem, Group};
use crate::involutions::{analyze_subsystem, geometry_from_perm, InvolutionClass};
use crate::linalg::{FieldEchelon, IntEchelon, Vector};
use crate::poly::IntPoly;
use crate::rootsys::RootSystem;
use crate::scalar::Scalar;

type Tuple = Box<[u16]>;
/// Sparse vector over the degree-k nbc basis: (position, coefficient).
type Reduced = Vec<(u32, i64)>;

/// An integer combination of nbc monomials, keyed by tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OSElement {
    pub terms: std::collections::BTreeMap<Tuple, i64>,
}

impl OSElement {
    pub fn zero() -> Self {
        OSElement { terms: Default::default() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

enum Coords {
    Int(Vec<Vec<i64>>),
    Alg(Vec<Vector>),
}

/// The arrangement matroid with its nbc basis and reduction engine.
pub struct ArrangementMatroid {
    num_hyperplanes: usize,
    rank: usize,
    coords: Coords,
    /// Per degree, the nbc tuples in lexicographic order.
    nbc: Vec<Vec<Tuple>>,
    nbc_index: Vec<HashMap<Tuple, u32>>,
    memo: DashMap<Tuple, Arc<Reduced>>,
}

/// Build the matroid of the reflection arrangement: one hyperplane per
/// positive root, coordinates in the simple-root basis.
pub fn build_matroid(rs: &RootSystem) -> ArrangementMatroid {
    let nh = rs.num_positive();
    let rank = rs.rank();
    // Integer coordinates when the field is plain Q; exact field
    // vectors otherwise.
    let all_rational = (0..nh).all(|p| {
        rs.coords(p).iter().all(|c| {
            c.as_rational().map(|q| q.is_integer()).unwrap_or(false)
        })
    });
    let coords = if all_rational {
        Coords::Int(
            (0..nh)
                .map(|p| {
                    rs.coords(p)
                        .iter()
                        .map(|c| {
                            let q = c.as_rational().unwrap();
                            i64::try_from(q.numer().clone()).expect("small integer coordinates")
                        })
                        .collect()
                })
                .collect(),
        )
    } else {
        Coords::Alg((0..nh).map(|p| rs.coords(p).clone()).collect())
    };

    let mut per_degree: Vec<Vec<Tuple>> = vec![Vec::new(); rank + 1];
    match &coords {
        Coords::Int(v) => enumerate_nbc_int(v, nh, rank, &mut per_degree),
        Coords::Alg(v) => enumerate_nbc_alg(v, nh, rank, &mut per_degree),
    }
    for d in per_degree.iter_mut() {
        d.sort();
    }
    let nbc_index: Vec<HashMap<Tuple, u32>> = per_degree
        .iter()
        .map(|d| d.iter().enumerate().map(|(i, t)| (t.clone(), i as u32)).collect())
        .collect();

    ArrangementMatroid {
        num_hyperplanes: nh,
        rank,
        coords,
        nbc: per_degree,
        nbc_index,
        memo: DashMap::new(),
    }
}

fn enumerate_nbc_int(coords: &[Vec<i64>], nh: usize, rank: usize, out: &mut [Vec<Tuple>]) {
    let mut ech = IntEchelon::new();
    let mut current: Vec<u16> = Vec::new();
    fn rec(
        coords: &[Vec<i64>],
        ech: &mut IntEchelon,
        current: &mut Vec<u16>,
        min: usize,
        rank: usize,
        out: &mut [Vec<Tuple>],
    ) {
        let mut sorted: Vec<u16> = current.clone();
        sorted.reverse();
        out[current.len()].push(sorted.into_boxed_slice());
        if current.len() == rank {
            return;
        }
        for t in (0..min).rev() {
            if !ech.push(&coords[t]) {
                continue; // dependent
            }
            let broken = (0..t).any(|h| ech.spans(&coords[h]));
            if !broken {
                current.push(t as u16);
                rec(coords, ech, current, t, rank, out);
                current.pop();
            }
            ech.pop();
        }
    }
    rec(coords, &mut ech, &mut current, nh, rank, out);
}

fn enumerate_nbc_alg(coords: &[Vector], nh: usize, rank: usize, out: &mut [Vec<Tuple>]) {
    let mut ech = FieldEchelon::new();
    let mut current: Vec<u16> = Vec::new();
    fn rec(
        coords: &[Vector],
        ech: &mut FieldEchelon,
        current: &mut Vec<u16>,
        min: usize,
        rank: usize,
        out: &mut [Vec<Tuple>],
    ) {
        let mut sorted: Vec<u16> = current.clone();
        sorted.reverse();
        out[current.len()].push(sorted.into_boxed_slice());
        if current.len() == rank {
            return;
        }
        for t in (0..min).rev() {
            if !ech.push(&coords[t]) {
                continue;
            }
            let broken = (0..t).any(|h| ech.spans(&coords[h]));
            if !broken {
                current.push(t as u16);
                rec(coords, ech, current, t, rank, out);
                current.pop();
            }
            ech.pop();
        }
    }
    rec(coords, &mut ech, &mut current, nh, rank, out);
}

/// Sort with the sign of the sorting permutation; `None` on repeats.
fn sort_with_sign(mut v: Vec<u16>) -> Option<(Vec<u16>, i64)> {
    let mut sign = 1i64;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] >= v[j] {
            if v[j - 1] == v[j] {
                return None;
            }
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    Some((v, sign))
}

impl ArrangementMatroid {
    pub fn num_hyperplanes(&self) -> usize {
        self.num_hyperplanes
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nbc_count(&self, degree: usize) -> usize {
        self.nbc.get(degree).map(|d| d.len()).unwrap_or(0)
    }

    pub fn nbc_tuples(&self, degree: usize) -> &[Tuple] {
        &self.nbc[degree]
    }

    /// Betti polynomial: nbc count per degree.
    pub fn betti(&self) -> IntPoly {
        IntPoly::from_coeffs(self.nbc.iter().map(|d| d.len() as i64).collect())
    }

    fn is_dependent(&self, tuple: &[u16]) -> bool {
        match &self.coords {
            Coords::Int(v) => {
                let mut ech = IntEchelon::new();
                tuple.iter().any(|&t| !ech.push(&v[t as usize]))
            }
            Coords::Alg(v) => {
                let mut ech = FieldEchelon::new();
                tuple.iter().any(|&t| !ech.push(&v[t as usize]))
            }
        }
    }

    /// Smallest `h` not in the tuple with `h` in the span of the tuple
    /// elements above `h` (the completing element of a broken circuit).
    fn min_completion(&self, tuple: &[u16]) -> Option<usize> {
        let max = *tuple.last()? as usize;
        for h in 0..max {
            if tuple.binary_search(&(h as u16)).is_ok() {
                continue;
            }
            let start = tuple.partition_point(|&t| (t as usize) < h);
            let suffix = &tuple[start..];
            let spans = match &self.coords {
                Coords::Int(v) => {
                    let mut ech = IntEchelon::new();
                    for &t in suffix {
                        ech.push(&v[t as usize]);
                    }
                    ech.spans(&v[h])
                }
                Coords::Alg(v) => {
                    let mut ech = FieldEchelon::new();
                    for &t in suffix {
                        ech.push(&v[t as usize]);
                    }
                    ech.spans(&v[h])
                }
            };
            if spans {
                return Some(h);
            }
        }
        None
    }

    /// Support of the unique dependency of `h` on the suffix (which is
    /// independent): the fundamental circuit minus `h`.
    fn circuit_support(&self, h: usize, suffix: &[u16]) -> Vec<u16> {
        match &self.coords {
            Coords::Int(v) => {
                let cols: Vec<&[i64]> = suffix.iter().map(|&t| v[t as usize].as_slice()).collect();
                let sol = int_dependency(&cols, &v[h]);
                suffix
                    .iter()
                    .zip(sol.iter())
                    .filter(|(_, c)| **c)
                    .map(|(&t, _)| t)
                    .collect()
            }
            Coords::Alg(v) => {
                let cols: Vec<&Vector> = suffix.iter().map(|&t| &v[t as usize]).collect();
                let sol = alg_dependency(&cols, &v[h]);
                suffix
                    .iter()
                    .zip(sol.iter())
                    .filter(|(_, c)| **c)
                    .map(|(&t, _)| t)
                    .collect()
            }
        }
    }

    /// Canonical nbc form of a sorted independent-or-dependent tuple.
    /// The result maps positions in the degree-`len` nbc list to
    /// coefficients.
    fn reduce_sorted(&self, tuple: &[u16]) -> Arc<Reduced> {
        let k = tuple.len();
        if k > self.rank {
            return Arc::new(Vec::new());
        }
        if let Some(&pos) = self.nbc_index[k].get(tuple) {
            return Arc::new(vec![(pos, 1)]);
        }
        if let Some(hit) = self.memo.get(tuple) {
            return hit.clone();
        }
        let result = self.reduce_uncached(tuple);
        let arc = Arc::new(result);
        self.memo.insert(tuple.into(), arc.clone());
        arc
    }

    fn reduce_uncached(&self, tuple: &[u16]) -> Reduced {
        if self.is_dependent(tuple) {
            return Vec::new();
        }
        let h = self
            .min_completion(tuple)
            .expect("independent non-nbc tuple has a broken circuit") as u16;
        self.rewrite_at(tuple, h)
    }

    /// Apply the circuit boundary relation for the completion `h`.
    fn rewrite_at(&self, tuple: &[u16], h: u16) -> Reduced {
        let start = tuple.partition_point(|&t| t < h);
        let suffix = &tuple[start..];
        let support = self.circuit_support(h as usize, suffix);
        // circuit c_0 = h < c_1 < ... < c_k; relation:
        // e_{C \ c_0} = sum_j (-1)^{j+1} e_{C \ c_j}
        let mut acc: HashMap<u32, i64> = HashMap::new();
        let rest: Vec<u16> = tuple
            .iter()
            .copied()
            .filter(|t| !support.contains(t))
            .collect();
        // sign of merging (support, rest) back into the sorted tuple
        let mut concat: Vec<u16> = support.clone();
        concat.extend_from_slice(&rest);
        let (_, base_sign) = sort_with_sign(concat).expect("tuple elements distinct");
        for (j, &cj) in support.iter().enumerate() {
            let mut term: Vec<u16> = Vec::with_capacity(tuple.len());
            term.push(h);
            term.extend(support.iter().copied().filter(|&c| c != cj));
            term.extend_from_slice(&rest);
            let (sorted, s) = sort_with_sign(term).expect("h is fresh");
            let coef = base_sign * s * if j % 2 == 0 { 1 } else { -1 };
            for &(pos, c) in self.reduce_sorted(&sorted).iter() {
                *acc.entry(pos).or_insert(0) += coef * c;
            }
        }
        let mut out: Reduced = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        out.sort_unstable();
        out
    }

    /// Public reduction: canonical nbc expansion of `sign · e_tuple`.
    /// Panics on a repeated index (antisymmetry zeroes such products
    /// before reduction is meaningful).
    pub fn reduce(&self, tuple: &[u16], sign: i64) -> OSElement {
        let (sorted, s) = sort_with_sign(tuple.to_vec()).expect("repeated hyperplane index");
        let reduced = self.reduce_sorted(&sorted);
        let k = sorted.len();
        let mut out = OSElement::zero();
        for &(pos, c) in reduced.iter() {
            let t = self.nbc[k][pos as usize].clone();
            out.terms.insert(t, c * s * sign);
        }
        out
    }

    /// Reduce with a caller-chosen admissible completion for the first
    /// rewrite step (confluence checks).
    pub fn reduce_with_first_choice(&self, tuple: &[u16], choice: usize) -> OSElement {
        let (sorted, s) = sort_with_sign(tuple.to_vec()).expect("repeated hyperplane index");
        let k = sorted.len();
        if self.nbc_index[k].contains_key(sorted.as_slice() as &[u16]) || self.is_dependent(&sorted)
        {
            return self.reduce(tuple, 1);
        }
        let max = *sorted.last().unwrap() as usize;
        let completions: Vec<u16> = (0..max as u16)
            .filter(|&h| {
                if sorted.binary_search(&h).is_ok() {
                    return false;
                }
                let start = sorted.partition_point(|&t| t < h);
                let mut probe = sorted[start..].to_vec();
                probe.insert(0, h);
                self.is_dependent(&probe)
            })
            .collect();
        let h = completions[choice % completions.len()];
        let reduced = self.rewrite_at(&sorted, h);
        let mut out = OSElement::zero();
        for &(pos, c) in reduced.iter() {
            let t = self.nbc[k][pos as usize].clone();
            out.terms.insert(t, c * s);
        }
        out
    }

    /// The hyperplane permutation induced by a group element.
    pub fn hyperplane_perm(&self, rs: &RootSystem, group: &Group, x: Elem) -> Vec<u16> {
        let perm = group.perm(x);
        (0..self.num_hyperplanes)
            .map(|p| {
                let img = perm[p] as usize;
                let pos = if rs.is_positive(img) { img } else { rs.neg_of(img) };
                pos as u16
            })
            .collect()
    }

    /// Trace of the element on the degree-`k` piece.
    pub fn action_trace(&self, rs: &RootSystem, group: &Group, x: Elem, k: usize) -> i64 {
        let hperm = self.hyperplane_perm(rs, group, x);
        self.trace_of_perm(&hperm, k)
    }

    fn trace_of_perm(&self, hperm: &[u16], k: usize) -> i64 {
        let mut total = 0i64;
        for (pos, t) in self.nbc[k].iter().enumerate() {
            let image: Vec<u16> = t.iter().map(|&i| hperm[i as usize]).collect();
            let (sorted, sign) = sort_with_sign(image).expect("permutation of distinct indices");
            if sorted.as_slice() == &t[..] {
                total += sign;
                continue;
            }
            if self.nbc_index[k].contains_key(sorted.as_slice() as &[u16]) {
                continue;
            }
            let reduced = self.reduce_sorted(&sorted);
            if let Ok(i) = reduced.binary_search_by_key(&(pos as u32), |&(p, _)| p) {
                total += sign * reduced[i].1;
            }
        }
        total
    }

    /// Standard and twisted characters of the total cohomology, as
    /// class functions in the group's class order.
    pub fn total_and_twisted_character(
        &self,
        rs: &RootSystem,
        group: &Group,
    ) -> (ClassFunction, ClassFunction) {
        let classes: Vec<usize> = (0..group.num_classes()).collect();
        let rows: Vec<(i64, i64)> = classes
            .par_iter()
            .map(|&c| {
                let rep = group.class_rep(c);
                let hperm = self.hyperplane_perm(rs, group, rep);
                let eps = group.parity(rep);
                let mut std_sum = 0i64;
                let mut tw_sum = 0i64;
                let mut eps_k = 1i64;
                for k in 0..=self.rank {
                    let tr = self.trace_of_perm(&hperm, k);
                    std_sum += tr;
                    tw_sum += eps_k * tr;
                    eps_k *= eps;
                }
                (std_sum, tw_sum)
            })
            .collect();
        let standard = ClassFunction::new(
            rows.iter().map(|r| r.0).collect(),
            "H*(M) standard action".into(),
        );
        let twisted = ClassFunction::new(
            rows.iter().map(|r| r.1).collect(),
            "H*(M) twisted action".into(),
        );
        (standard, twisted)
    }

    /// Poincaré polynomial of the invariant subspace:
    /// per degree, the average of the traces over the group.
    pub fn invariant_poincare(&self, rs: &RootSystem, group: &Group) -> IntPoly {
        let order = group.order() as i64;
        let per_class: Vec<Vec<i64>> = (0..group.num_classes())
            .into_par_iter()
            .map(|c| {
                let rep = group.class_rep(c);
                let hperm = self.hyperplane_perm(rs, group, rep);
                (0..=self.rank).map(|k| self.trace_of_perm(&hperm, k)).collect()
            })
            .collect();
        let coeffs: Vec<i64> = (0..=self.rank)
            .map(|k| {
                let total: i64 = (0..group.num_classes())
                    .map(|c| group.class_size(c) as i64 * per_class[c][k])
                    .sum();
                assert_eq!(total % order, 0, "non-integer invariant dimension");
                total / order
            })
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// Symmetrize the product of the generators indexed by the simple
    /// roots of `R_1(σ)` over the whole group.
    pub fn symmetrize_omega(
        &self,
        rs: &RootSystem,
        group: &Group,
        cls: &InvolutionClass,
    ) -> OSElement {
        let rep = cls.representative.expect("full-enumeration mode");
        let geom = geometry_from_perm(rs, group.perm(rep));
        let info = analyze_subsystem(rs, &geom.r1_positive).expect("subsystem of finite type");
        let mut base: Vec<u16> = info.simples.iter().map(|&r| r as u16).collect();
        base.sort_unstable();
        let k = base.len();
        let mut acc: HashMap<u32, i64> = HashMap::new();
        for x in group.elements() {
            let hperm = self.hyperplane_perm(rs, group, x);
            let image: Vec<u16> = base.iter().map(|&i| hperm[i as usize]).collect();
            let Some((sorted, sign)) = sort_with_sign(image) else {
                continue;
            };
            for &(pos, c) in self.reduce_sorted(&sorted).iter() {
                *acc.entry(pos).or_insert(0) += sign * c;
            }
        }
        let mut out = OSElement::zero();
        for (pos, c) in acc {
            if c != 0 {
                out.terms.insert(self.nbc[k][pos as usize].clone(), c);
            }
        }
        out
    }

    /// Lefschetz-style vanishing: the alternating trace sum is zero for
    /// every element.
    pub fn lefschetz_vanishing(&self, rs: &RootSystem, group: &Group) -> bool {
        (0..group.num_classes()).into_par_iter().all(|c| {
            let rep = group.class_rep(c);
            let hperm = self.hyperplane_perm(rs, group, rep);
            let alt: i64 = (0..=self.rank)
                .map(|k| {
                    let tr = self.trace_of_perm(&hperm, k);
                    if k % 2 == 0 {
                        tr
                    } else {
                        -tr
                    }
                })
                .sum();
            alt == 0
        })
    }

    /// Rank of the span of a family of elements, grouped by degree.
    pub fn span_rank(&self, elements: &[OSElement]) -> usize {
        use crate::scalar::Field;
        let field = Field::rational();
        let mut by_degree: HashMap<usize, Vec<&OSElement>> = HashMap::new();
        for e in elements {
            let degree = e.terms.keys().next().map(|t| t.len()).unwrap_or(0);
            by_degree.entry(degree).or_default().push(e);
        }
        let mut rank = 0;
        for (degree, elems) in by_degree {
            let dim = self.nbc_count(degree);
            let mut ech = FieldEchelon::new();
            for e in elems {
                let mut row = vec![Scalar::zero(&field); dim];
                for (t, &c) in &e.terms {
                    let pos = self.nbc_index[degree][t] as usize;
                    row[pos] = Scalar::from_integer(&field, c);
                }
                ech.push(&row);
            }
            rank += ech.len();
        }
        rank
    }
}

fn int_dependency(cols: &[&[i64]], target: &[i64]) -> Vec<bool> {
    // Solve sum x_i cols_i = target exactly over Q; return the support.
    let n = target.len();
    let k = cols.len();
    let field = crate::scalar::Field::rational();
    let to_scalar = |x: i64| Scalar::from_integer(&field, x);
    let a: Vec<Vector> = (0..n)
        .map(|r| {
            let mut row: Vector = (0..k).map(|c| to_scalar(cols[c][r])).collect();
            row.push(to_scalar(target[r]));
            row
        })
        .collect();
    solve_support(a, k)
}

fn alg_dependency(cols: &[&Vector], target: &Vector) -> Vec<bool> {
    let n = target.len();
    let k = cols.len();
    let a: Vec<Vector> = (0..n)
        .map(|r| {
            let mut row: Vector = (0..k).map(|c| cols[c][r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    solve_support(a, k)
}

fn solve_support(mut aug: Vec<Vector>, k: usize) -> Vec<bool> {
    let pivots = crate::linalg::rref(&mut aug);
    let mut support = vec![false; k];
    for (ri, &p) in pivots.iter().enumerate() {
        assert!(p < k, "target not in span");
        if !aug[ri][k].is_zero() {
            support[p] = true;
        }
    }
    support
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate;
    use crate::rootsys::{build_root_system, CoxeterType};

    fn setup(name: &str) -> (RootSystem, Group, ArrangementMatroid) {
        let rs = build_root_system(CoxeterType::parse(name).unwrap()).unwrap();
        let g = generate(&rs, 2_000_000).unwrap();
        let m = build_matroid(&rs);
        (rs, g, m)
    }

    #[test]
    fn betti_counts() {
        let (_, _, m) = setup("A2");
        assert_eq!(m.betti(), IntPoly::from_coeffs(vec![1, 3, 2]));
        let (_, _, m) = setup("B2");
        assert_eq!(m.betti(), IntPoly::from_coeffs(vec![1, 4, 3]));
        let (_, _, m) = setup("A1");
        assert_eq!(m.betti(), IntPoly::from_coeffs(vec![1, 1]));
        let (_, _, m) = setup("H3");
        assert_eq!(m.betti(), IntPoly::from_exponents(&[1, 5, 9]));
    }

    #[test]
    fn betti_total_equals_group_order() {
        for name in ["A3", "B3", "D4", "H3", "I2(7)"] {
            let (_, g, m) = setup(name);
            let total: i64 = m.betti().coeffs.iter().sum();
            assert_eq!(total as u64, g.order(), "{name}");
        }
    }

    #[test]
    fn reduce_nbc_tuple_is_itself() {
        let (_, _, m) = setup("A2");
        let t = m.nbc_tuples(2)[0].clone();
        let r = m.reduce(&t, 1);
        assert_eq!(r.terms.len(), 1);
        assert_eq!(r.terms.get(&t), Some(&1));
    }

    #[test]
    fn reduce_dependent_tuple_is_zero() {
        // A2 has three concurrent lines: the full triple is dependent.
        let (_, _, m) = setup("A2");
        let r = m.reduce(&[0, 1, 2], 1);
        assert!(r.is_zero());
    }

    #[test]
    fn reduce_broken_circuit_two_terms() {
        // {H1, H2} contains the broken circuit of the 3-line circuit:
        // e12 = e01 - e02 style two-term expansion.
        let (_, _, m) = setup("A2");
        let r = m.reduce(&[1, 2], 1);
        assert_eq!(r.terms.len(), 2);
        let vals: Vec<i64> = r.terms.values().copied().collect();
        assert_eq!(vals.iter().map(|v| v.abs()).sum::<i64>(), 2);
        // the expansion only uses tuples containing hyperplane 0
        assert!(r.terms.keys().all(|t| t[0] == 0));
    }

    #[test]
    fn reduction_is_confluent() {
        let (_, _, m) = setup("B3");
        // exercise every non-nbc independent triple with every
        // first-step choice
        for a in 0..9u16 {
            for b in a + 1..9 {
                for c in b + 1..9 {
                    let t = [a, b, c];
                    let canonical = m.reduce(&t, 1);
                    for choice in 0..3 {
                        assert_eq!(m.reduce_with_first_choice(&t, choice), canonical);
                    }
                }
            }
        }
    }

    #[test]
    fn identity_trace_is_betti() {
        let (rs, g, m) = setup("B2");
        for k in 0..=m.rank() {
            assert_eq!(
                m.action_trace(&rs, &g, g.identity(), k),
                m.betti().coeff(k)
            );
        }
    }

    #[test]
    fn s3_standard_character() {
        // S3: chi at (e, transposition, 3-cycle) = (6, 2, 0)
        let (rs, g, m) = setup("A2");
        let (std_ch, tw_ch) = m.total_and_twisted_character(&rs, &g);
        let mut std_sorted = std_ch.values.clone();
        std_sorted.sort_unstable();
        assert_eq!(std_sorted, vec![0, 2, 6]);
        let mut tw_sorted = tw_ch.values.clone();
        tw_sorted.sort_unstable();
        assert_eq!(tw_sorted, vec![0, 0, 6]);
        // twisted value vanishes on odd classes
        for c in 0..g.num_classes() {
            if g.parity(g.class_rep(c)) == -1 {
                assert_eq!(tw_ch.values[c], 0);
            }
        }
    }

    #[test]
    fn character_constant_on_class_members() {
        let (rs, g, m) = setup("B2");
        for c in 0..g.num_classes() {
            let values: Vec<i64> = g
                .class_members(c)
                .take(2)
                .map(|x| (0..=m.rank()).map(|k| m.action_trace(&rs, &g, x, k)).sum::<i64>())
                .collect();
            assert!(values.windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn order_gt_two_has_zero_total_trace() {
        let (rs, g, m) = setup("B3");
        for c in 0..g.num_classes() {
            let rep = g.class_rep(c);
            if g.element_order(rep) > 2 {
                let total: i64 = (0..=m.rank()).map(|k| m.action_trace(&rs, &g, rep, k)).sum();
                assert_eq!(total, 0);
            }
        }
    }

    #[test]
    fn minus_id_character_equals_group_order() {
        let (rs, g, m) = setup("B2");
        // -Id is the unique central involution: its standard character
        // equals |G| = |G1| |G2| with G2 trivial.
        let minus_id = g
            .elements()
            .find(|&x| {
                let p = g.perm(x);
                (0..rs.num_roots()).all(|r| p[r] as usize == rs.neg_of(r))
            })
            .unwrap();
        let total: i64 = (0..=m.rank()).map(|k| m.action_trace(&rs, &g, minus_id, k)).sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn invariant_poincare_small() {
        let (rs, g, m) = setup("A2");
        assert_eq!(m.invariant_poincare(&rs, &g), IntPoly::from_coeffs(vec![1, 1]));
        let (rs, g, m) = setup("B2");
        assert_eq!(m.invariant_poincare(&rs, &g), IntPoly::from_coeffs(vec![1, 2, 1]));
        let (rs, g, m) = setup("D4");
        assert_eq!(
            m.invariant_poincare(&rs, &g),
            IntPoly::from_coeffs(vec![1, 1, 0, 1, 1])
        );
    }

    #[test]
    fn lefschetz_vanishing_small() {
        for name in ["A2", "B2", "H3"] {
            let (rs, g, m) = setup(name);
            assert!(m.lefschetz_vanishing(&rs, &g), "{name}");
        }
    }

    #[test]
    fn antisymmetrization_vanishes() {
        for name in ["A2", "B2"] {
            let (rs, g, m) = setup(name);
            for k in 1..=m.rank() {
                for t in m.nbc_tuples(k) {
                    let mut acc: HashMap<Tuple, i64> = HashMap::new();
                    for x in g.elements() {
                        let hperm = m.hyperplane_perm(&rs, &g, x);
                        let image: Vec<u16> = t.iter().map(|&i| hperm[i as usize]).collect();
                        let (sorted, sign) = sort_with_sign(image).unwrap();
                        let eps = g.parity(x);
                        for (tt, c) in m.reduce(&sorted, sign * eps).terms {
                            *acc.entry(tt).or_insert(0) += c;
                        }
                    }
                    assert!(acc.values().all(|&c| c == 0), "{name} degree {k}");
                }
            }
        }
    }

    #[test]
    fn symmetrized_products_span_invariants() {
        use crate::involutions::special_set;
        let (rs, g, m) = setup("B3");
        let xs = special_set(&g, &rs).unwrap();
        let elems: Vec<OSElement> = xs
            .classes
            .iter()
            .map(|c| m.symmetrize_omega(&rs, &g, c))
            .collect();
        assert!(elems.iter().all(|e| !e.is_zero()));
        assert_eq!(m.span_rank(&elems), xs.len());
        assert_eq!(xs.len(), 6);
    }
}

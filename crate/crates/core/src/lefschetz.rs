//! Euler characteristics of the fixed sets of anti-holomorphic
//! involutions, via Möbius functions of subspace arrangements.
//!
//! The fixed set of `σ` composed with complex conjugation is the real
//! space `V2 ⊕ iV1` minus, for each positive root `α`, the subspace cut
//! out by `(α2, y) = 0` and `(α1, x) = 0`, where `α1, α2` are the
//! eigenprojections of `α`. The Euler characteristic of the open
//! complement falls out of the Möbius function:
//! `χ = Σ μ(0̂, x) (-1)^{codim x}`. Region counts of the two real
//! reflection arrangements give the component count of the fixed set
//! independently.

use std::collections::HashMap;

use thiserror::Error;

use crate::involutions::InvolutionGeometry;
use crate::linalg::{self, Vector};
use crate::rootsys::RootSystem;
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum LefschetzError {
    #[error("intersection poset exceeded the cap of {0} subspaces")]
    PosetCapExceeded(usize),
}

/// Intersection poset of a finite set of linear subspaces, ordered by
/// reverse inclusion with the ambient space as `0̂`, closed under
/// pairwise intersection, with the Möbius function `μ(0̂, ·)`.
pub struct SubspacePoset {
    pub ambient_dim: usize,
    /// Canonical (reduced row echelon) condition rows per node; node 0
    /// is the ambient space with no conditions.
    nodes: Vec<Vec<Vector>>,
    pub moebius: Vec<i64>,
}

impl SubspacePoset {
    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn codim(&self, i: usize) -> usize {
        self.nodes[i].len()
    }

    /// Is `a ≤ b` in the poset (i.e. the subspace of `a` contains the
    /// subspace of `b`)?
    pub fn leq(&self, a: usize, b: usize) -> bool {
        if self.codim(a) > self.codim(b) {
            return false;
        }
        let mut rows = self.nodes[b].clone();
        let pivots = linalg::rref(&mut rows);
        self.nodes[a]
            .iter()
            .all(|r| linalg::in_span(&rows, &pivots, r))
    }

    /// `Σ_{z ≤ y} μ(0̂, z) = δ(y = 0̂)` for every node `y`.
    pub fn verify_moebius(&self) -> bool {
        (0..self.num_nodes()).all(|y| {
            let total: i64 = (0..self.num_nodes())
                .filter(|&z| self.leq(z, y))
                .map(|z| self.moebius[z])
                .sum();
            total == if y == 0 { 1 } else { 0 }
        })
    }
}

const DEFAULT_POSET_CAP: usize = 200_000;

/// Build the intersection poset generated by subspaces given as
/// condition-row groups inside a `dim`-dimensional space.
fn poset_from_conditions(
    dim: usize,
    atoms: Vec<Vec<Vector>>,
    cap: usize,
) -> Result<SubspacePoset, LefschetzError> {
    let mut nodes: Vec<Vec<Vector>> = vec![Vec::new()]; // 0̂
    let mut seen: HashMap<Vec<Vector>, usize> = HashMap::new();
    seen.insert(Vec::new(), 0);
    let add = |nodes: &mut Vec<Vec<Vector>>,
                   seen: &mut HashMap<Vec<Vector>, usize>,
                   rows: Vec<Vector>|
     -> Option<usize> {
        let mut canon = rows;
        linalg::rref(&mut canon);
        if let Some(&i) = seen.get(&canon) {
            return Some(i);
        }
        let id = nodes.len();
        seen.insert(canon.clone(), id);
        nodes.push(canon);
        None
    };

    for atom in atoms {
        if atom.is_empty() {
            continue;
        }
        add(&mut nodes, &mut seen, atom);
    }
    // Closure under pairwise intersection (union of conditions).
    let mut i = 1;
    while i < nodes.len() {
        for j in 1..i {
            let mut rows = nodes[i].clone();
            rows.extend(nodes[j].iter().cloned());
            add(&mut nodes, &mut seen, rows);
            if nodes.len() > cap {
                return Err(LefschetzError::PosetCapExceeded(cap));
            }
        }
        i += 1;
    }

    // Möbius by increasing codimension: μ(x) = δ(x=0̂) - Σ_{z<x} μ(z).
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by_key(|&i| nodes[i].len());
    let poset = SubspacePoset { ambient_dim: dim, nodes, moebius: vec![] };
    let mut moebius = vec![0i64; poset.num_nodes()];
    for (pos, &x) in order.iter().enumerate() {
        let mut m = if x == 0 { 1 } else { 0 };
        for &z in &order[..pos] {
            if poset.codim(z) < poset.codim(x) && poset.leq(z, x) {
                m -= moebius[z];
            }
        }
        moebius[x] = m;
    }
    Ok(SubspacePoset { moebius, ..poset })
}

/// Gram-orthonormal-free bases of the two eigenspaces: `V1` is spanned
/// by the roots negated by `σ`, `V2` is its orthogonal complement under
/// the Gram form.
pub fn eigenspace_bases(rs: &RootSystem, geom: &InvolutionGeometry) -> (Vec<Vector>, Vec<Vector>) {
    let n = rs.rank();
    let field = rs.field();
    let mut v1: Vec<Vector> = geom.r1_positive.iter().map(|&r| rs.coords(r).clone()).collect();
    linalg::rref(&mut v1);
    // functionals cutting out V2: b^T G for b in basis(V1)
    let gram = rs.gram();
    let rows: Vec<Vector> = v1
        .iter()
        .map(|b| {
            (0..n)
                .map(|j| {
                    let mut acc = Scalar::zero(field);
                    for (i, bi) in b.iter().enumerate() {
                        if !bi.is_zero() {
                            acc = &acc + &(bi * &gram[i][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let v2 = linalg::kernel_basis(field, &rows, n);
    assert_eq!(v1.len() + v2.len(), n, "eigenspace dimensions add up");
    assert_eq!(v1.len(), geom.dim_minus);
    (v1, v2)
}

/// The removed-subspace arrangement of the fixed set of `σ̄` inside
/// `V2 ⊕ iV1`, with coordinates `(y ∈ V2, x ∈ V1)`.
pub fn build_fixed_arrangement(
    rs: &RootSystem,
    geom: &InvolutionGeometry,
) -> Result<SubspacePoset, LefschetzError> {
    let field = rs.field();
    let half = Scalar::from_ratio(field, 1, 2);
    let (v1, v2) = eigenspace_bases(rs, geom);
    let (p, q) = (v2.len(), v1.len());
    let dim = p + q;
    let pairing = |a: &Vector, b: &Vector| rs.pairing(a, b);

    let mut atoms = Vec::new();
    for r in 0..rs.num_positive() {
        let c = rs.coords(r);
        let ci = rs.coords(geom.root_image[r] as usize);
        let a1: Vector = c.iter().zip(ci.iter()).map(|(a, b)| &(a - b) * &half).collect();
        let a2: Vector = c.iter().zip(ci.iter()).map(|(a, b)| &(a + b) * &half).collect();
        let mut rows: Vec<Vector> = Vec::new();
        if a2.iter().any(|x| !x.is_zero()) {
            let mut row: Vector = v2.iter().map(|b| pairing(&a2, b)).collect();
            row.extend(std::iter::repeat_with(|| Scalar::zero(field)).take(q));
            rows.push(row);
        }
        if a1.iter().any(|x| !x.is_zero()) {
            let mut row: Vector = std::iter::repeat_with(|| Scalar::zero(field)).take(p).collect();
            row.extend(v1.iter().map(|b| pairing(&a1, b)));
            rows.push(row);
        }
        atoms.push(rows);
    }
    poset_from_conditions(dim, atoms, DEFAULT_POSET_CAP)
}

/// `χ(F) = Σ μ(0̂, x) (-1)^{codim x}`: the Euler characteristic of the
/// open complement.
pub fn fixed_set_euler(poset: &SubspacePoset) -> i64 {
    (0..poset.num_nodes())
        .map(|x| {
            let sign = if poset.codim(x) % 2 == 0 { 1 } else { -1 };
            poset.moebius[x] * sign
        })
        .sum()
}

/// Region count of a central hyperplane arrangement from its Möbius
/// function: `Σ |μ(0̂, x)|`.
fn region_count(dim: usize, rows_per_hyperplane: Vec<Vector>) -> Result<u64, LefschetzError> {
    let atoms: Vec<Vec<Vector>> = rows_per_hyperplane.into_iter().map(|r| vec![r]).collect();
    let poset = poset_from_conditions(dim, atoms, DEFAULT_POSET_CAP)?;
    Ok(poset.moebius.iter().map(|m| m.unsigned_abs()).sum())
}

/// Number of connected components of the fixed set of a special
/// involution: the product of the chamber counts of the `R1`
/// arrangement in `V1` and the `R2` arrangement in `V2`.
pub fn component_count_special(
    rs: &RootSystem,
    geom: &InvolutionGeometry,
) -> Result<u64, LefschetzError> {
    let (v1, v2) = eigenspace_bases(rs, geom);
    let rows1: Vec<Vector> = geom
        .r1_positive
        .iter()
        .map(|&r| v1.iter().map(|b| rs.pairing(rs.coords(r), b)).collect())
        .collect();
    let rows2: Vec<Vector> = geom
        .r2_positive
        .iter()
        .map(|&r| v2.iter().map(|b| rs.pairing(rs.coords(r), b)).collect())
        .collect();
    let c1 = region_count(v1.len(), rows1)?;
    let c2 = region_count(v2.len(), rows2)?;
    Ok(c1 * c2)
}

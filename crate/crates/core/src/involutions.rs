//! Involutions in normal form, the (-1)-condition, and the geometric
//! specialness test.
//!
//! Every involution is conjugate to a `σ_J` acting as `-Id` on the span
//! of a subset `J` of simple roots satisfying the (-1)-condition and as
//! `+Id` on its orthogonal complement. An involution is *special* when
//! every root projects onto one of the two eigenspaces proportionally
//! to a root of the corresponding subsystem. In full-enumeration mode
//! classes come from the group; in rootspace mode (E7/E8) classes are
//! identified by the invariant data of their `J` subsystems, which the
//! smaller types validate against full enumeration.

use std::collections::{BTreeMap, HashSet};

use crate::group::{Elem, Group, Subgroup};
use crate::linalg::{self, FieldEchelon, Vector};
use crate::rootsys::{self, CoxeterType, Family, RootError, RootSystem};
use crate::scalar::Scalar;

/// A conjugacy class of involutions.
#[derive(Clone, Debug)]
pub struct InvolutionClass {
    /// The `σ_J` representative (full-enumeration mode only).
    pub representative: Option<Elem>,
    /// Index of the class in the group's class list (full mode only).
    pub class_index: Option<usize>,
    /// Canonical Richardson subset, sorted simple-root indices.
    pub j_set: Vec<usize>,
    /// `dim V^-(σ) = |J|`.
    pub dim_minus: usize,
    /// `det σ = +1`, i.e. `dim_minus` even.
    pub even: bool,
    pub special: bool,
    pub r1_types: Vec<CoxeterType>,
    pub r2_types: Vec<CoxeterType>,
    pub g1_order: u64,
    pub g2_order: u64,
}

impl InvolutionClass {
    pub fn is_identity(&self) -> bool {
        self.dim_minus == 0
    }
}

/// The set `X_G` of special involution classes, sorted by
/// `(dim_minus, J)`.
#[derive(Clone, Debug)]
pub struct SpecialSet {
    pub classes: Vec<InvolutionClass>,
}

impl SpecialSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn even(&self) -> impl Iterator<Item = &InvolutionClass> {
        self.classes.iter().filter(|c| c.even)
    }

    pub fn odd(&self) -> impl Iterator<Item = &InvolutionClass> {
        self.classes.iter().filter(|c| !c.even)
    }
}

/// Root-level data of one involution: its action as a permutation of
/// the roots and the split `R = R_1 ⊔ R_2 ⊔ (mixed)`.
pub struct InvolutionGeometry {
    pub root_image: Vec<u16>,
    /// Positive roots with `σα = -α`.
    pub r1_positive: Vec<usize>,
    /// Positive roots with `σα = α`.
    pub r2_positive: Vec<usize>,
    pub dim_minus: usize,
}

pub fn geometry_from_perm(rs: &RootSystem, perm: &[u16]) -> InvolutionGeometry {
    for (i, &img) in perm.iter().enumerate() {
        assert_eq!(
            perm[img as usize] as usize, i,
            "input is not an involution"
        );
    }
    let mut r1 = Vec::new();
    let mut r2 = Vec::new();
    for p in 0..rs.num_positive() {
        let img = perm[p] as usize;
        if img == p {
            r2.push(p);
        } else if img == rs.neg_of(p) {
            r1.push(p);
        }
    }
    let dim_minus = coords_rank(rs, &r1);
    InvolutionGeometry { root_image: perm.to_vec(), r1_positive: r1, r2_positive: r2, dim_minus }
}

fn coords_rank(rs: &RootSystem, roots: &[usize]) -> usize {
    let mut ech = FieldEchelon::new();
    for &r in roots {
        ech.push(rs.coords(r));
    }
    ech.len()
}

/// Geometry of the normal form `σ_J` built directly from the matrix
/// `Id - 2 proj_{V_J}`; works without group enumeration. `J` must
/// satisfy the (-1)-condition so that `σ_J` lies in the group.
pub fn geometry_from_j(rs: &RootSystem, j: &[usize]) -> InvolutionGeometry {
    let n = rs.rank();
    let field = rs.field();
    // In simple-root coordinates V_J is spanned by the standard basis
    // vectors indexed by J; project with the Gram form.
    let gram = rs.gram();
    let k = j.len();
    let gjj: Vec<Vector> = j.iter().map(|&a| j.iter().map(|&b| gram[a][b].clone()).collect()).collect();
    let gjj_inv = if k > 0 { linalg::invert(&gjj).expect("Gram block invertible") } else { vec![] };
    let mut mat = linalg::identity(field, n);
    if k > 0 {
        // column c of proj: sum_j coeff e_j with G_JJ coeff = (G e_c)_J
        for c in 0..n {
            let rhs: Vector = j.iter().map(|&a| gram[a][c].clone()).collect();
            let coeff = linalg::mat_vec(&gjj_inv, &rhs);
            for (ji, &a) in j.iter().enumerate() {
                let two = Scalar::from_integer(field, 2);
                mat[a][c] = &mat[a][c] - &(&two * &coeff[ji]);
            }
        }
    }
    let image = rs
        .root_images_of_matrix(&mat)
        .expect("σ_J maps the root system to itself");
    geometry_from_perm(rs, &image)
}

/// Subsystem data: simple roots, component types, component simple-root
/// lengths, and the product of the component group orders.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubsystemInfo {
    pub types: Vec<CoxeterType>,
    /// Per component: type plus sorted squared lengths of its simples.
    pub components: Vec<(CoxeterType, Vec<Scalar>)>,
    pub order: u64,
    /// Indices (into the root list) of the subsystem's simple roots.
    pub simples: Vec<usize>,
}

/// Simple roots of a subsystem given by its positive roots: the ones
/// whose reflection permutes the other positive roots of the subsystem.
pub fn subsystem_simples(rs: &RootSystem, positives: &[usize]) -> Vec<usize> {
    let pset: HashSet<usize> = positives.iter().copied().collect();
    positives
        .iter()
        .copied()
        .filter(|&d| {
            positives.iter().all(|&b| {
                if b == d {
                    return true;
                }
                let img = rs.reflect_coords(d, rs.coords(b));
                let idx = rs.index_of_coords(&img).expect("reflection preserves roots");
                pset.contains(&idx)
            })
        })
        .collect()
}

pub fn analyze_subsystem(rs: &RootSystem, positives: &[usize]) -> Result<SubsystemInfo, RootError> {
    if positives.is_empty() {
        return Ok(SubsystemInfo { types: vec![], components: vec![], order: 1, simples: vec![] });
    }
    let simples = subsystem_simples(rs, positives);
    let gram: Vec<Vector> = simples
        .iter()
        .map(|&a| simples.iter().map(|&b| rs.pairing(rs.coords(a), rs.coords(b))).collect())
        .collect();
    let labels = rootsys::coxeter_labels(rs.field(), &gram)?;
    let mut components = Vec::new();
    let mut types = Vec::new();
    let mut order = 1u64;
    for comp in rootsys::graph_components(&labels) {
        let t = rootsys::classify_component(&labels, &comp)?;
        let mut lens: Vec<Scalar> = comp.iter().map(|&i| rs.length_sq(simples[i]).clone()).collect();
        lens.sort();
        order *= t.order();
        types.push(t);
        components.push((t, lens));
    }
    types.sort();
    components.sort();
    Ok(SubsystemInfo { types, components, order, simples })
}

/// Does the component type belong to the list of irreducible types
/// whose longest element is `-Id`?
fn has_minus_one(t: &CoxeterType) -> bool {
    match t.family {
        Family::A => t.rank == 1,
        Family::B => true,
        Family::D => t.rank % 2 == 0,
        Family::E => t.rank == 7 || t.rank == 8,
        Family::F | Family::H => true,
        Family::I => t.m % 2 == 0,
    }
}

/// The (-1)-condition via component classification only (no group
/// enumeration needed).
pub fn minus_one_by_type(rs: &RootSystem, j: &[usize]) -> bool {
    if j.is_empty() {
        return true;
    }
    let cox = rs.coxeter_matrix();
    let labels: Vec<Vec<u32>> = j
        .iter()
        .map(|&a| j.iter().map(|&b| cox[a][b]).collect())
        .collect();
    match rootsys::classify_components(&labels) {
        Ok(types) => types.iter().all(has_minus_one),
        Err(_) => false,
    }
}

/// The (-1)-condition with both routes: the direct longest-element
/// check and the component-type classification. The two must agree.
pub fn minus_one_condition(rs: &RootSystem, group: &Group, j: &[usize]) -> bool {
    let by_type = minus_one_by_type(rs, j);
    let sub = group.parabolic(j);
    let w0 = group.longest_element(rs, &sub, j);
    let p = group.perm(w0);
    let direct = j.iter().all(|&ji| {
        let s = rs.simple_indices()[ji];
        p[s] as usize == rs.neg_of(s)
    });
    assert_eq!(
        direct, by_type,
        "(-1)-condition routes disagree for J = {j:?} in {}",
        rs.ctype()
    );
    direct
}

/// Is the involution special: every root projects onto `V_1` or `V_2`
/// proportionally to a root of `R_1` or `R_2`? Roots lying in an
/// eigenspace pass through their own (nonzero) projection; a zero
/// projection never counts.
pub fn is_special(rs: &RootSystem, geom: &InvolutionGeometry) -> bool {
    let field = rs.field();
    let half = Scalar::from_ratio(field, 1, 2);
    for p in 0..rs.num_positive() {
        let img = geom.root_image[p] as usize;
        if img == p || img == rs.neg_of(p) {
            continue;
        }
        let c = rs.coords(p);
        let ci = rs.coords(img);
        let proj1: Vector = c.iter().zip(ci.iter()).map(|(a, b)| &(a - b) * &half).collect();
        let proj2: Vector = c.iter().zip(ci.iter()).map(|(a, b)| &(a + b) * &half).collect();
        let ok1 = geom.r1_positive.iter().any(|&r| proportional(&proj1, rs.coords(r)));
        let ok2 = || geom.r2_positive.iter().any(|&r| proportional(&proj2, rs.coords(r)));
        if !ok1 && !ok2() {
            return false;
        }
    }
    true
}

/// `u = c v` for a nonzero scalar `c` (u is known nonzero).
fn proportional(u: &Vector, v: &Vector) -> bool {
    let Some(k) = v.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if u[k].is_zero() {
        return false;
    }
    let c = &u[k] / &v[k];
    u.iter().zip(v.iter()).all(|(a, b)| a == &(&c * b))
}

/// Subsets of the simple indices in canonical (size, lex) order.
fn canonical_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut subsets: Vec<Vec<usize>> = (0u32..(1 << n))
        .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets
}

/// All conjugacy classes of involutions (identity included), each with
/// its canonical Richardson subset. Verifies that the `σ_J` cover every
/// involution class.
pub fn richardson_classes(group: &Group, rs: &RootSystem) -> Result<Vec<InvolutionClass>, RootError> {
    let mut involution_classes: Vec<usize> = (0..group.num_classes())
        .filter(|&c| {
            let r = group.class_rep(c);
            group.mul(r, r) == group.identity()
        })
        .collect();
    involution_classes.sort_unstable();

    let mut j_of_class: BTreeMap<usize, (Vec<usize>, Elem)> = BTreeMap::new();
    for j in canonical_subsets(rs.rank()) {
        if !minus_one_condition(rs, group, &j) {
            continue;
        }
        let sub = group.parabolic(&j);
        let sigma = group.longest_element(rs, &sub, &j);
        let c = group.class_of(sigma);
        j_of_class.entry(c).or_insert((j, sigma));
    }
    for &c in &involution_classes {
        assert!(
            j_of_class.contains_key(&c),
            "involution class without a Richardson subset in {}",
            rs.ctype()
        );
    }

    let mut out = Vec::new();
    for &c in &involution_classes {
        let (j, sigma) = j_of_class[&c].clone();
        let geom = geometry_from_perm(rs, group.perm(sigma));
        assert_eq!(geom.dim_minus, j.len(), "V^- dimension equals |J|");
        let r1 = analyze_subsystem(rs, &geom.r1_positive)?;
        let r2 = analyze_subsystem(rs, &geom.r2_positive)?;
        let even = geom.dim_minus % 2 == 0;
        assert_eq!(group.parity(sigma) == 1, even);
        out.push(InvolutionClass {
            representative: Some(sigma),
            class_index: Some(c),
            j_set: j,
            dim_minus: geom.dim_minus,
            even,
            special: is_special(rs, &geom),
            r1_types: r1.types,
            r2_types: r2.types,
            g1_order: r1.order,
            g2_order: r2.order,
        });
    }
    out.sort_by(|a, b| (a.dim_minus, &a.j_set).cmp(&(b.dim_minus, &b.j_set)));
    Ok(out)
}

/// The special set `X_G` with its even/odd split (full mode).
pub fn special_set(group: &Group, rs: &RootSystem) -> Result<SpecialSet, RootError> {
    let classes = richardson_classes(group, rs)?
        .into_iter()
        .filter(|c| c.special)
        .collect();
    Ok(SpecialSet { classes })
}

/// Special classes identified without enumerating the group: one class
/// per invariant tuple `(|J|, component types with root-length data)`.
/// This is how E7 and E8 are handled; the smaller types cross-validate
/// it against full enumeration.
pub fn rootspace_special_set(rs: &RootSystem) -> Result<SpecialSet, RootError> {
    type Key = (
        usize,
        Vec<u16>,
        Vec<(CoxeterType, Vec<Scalar>)>,
        Vec<(CoxeterType, Vec<Scalar>)>,
    );
    let mut by_invariant: BTreeMap<Key, InvolutionClass> = BTreeMap::new();
    for j in canonical_subsets(rs.rank()) {
        if !minus_one_by_type(rs, &j) {
            continue;
        }
        let geom = geometry_from_j(rs, &j);
        assert_eq!(geom.dim_minus, j.len());
        if !is_special(rs, &geom) {
            continue;
        }
        let r1 = analyze_subsystem(rs, &geom.r1_positive)?;
        let r2 = analyze_subsystem(rs, &geom.r2_positive)?;
        // Root orbits of the J-simples distinguish the two reflection
        // classes of the even dihedral groups, which share all type and
        // length data.
        let mut orbits: Vec<u16> = j.iter().map(|&ji| rs.orbit_of(rs.simple_indices()[ji])).collect();
        orbits.sort_unstable();
        let key: Key = (j.len(), orbits, r1.components.clone(), r2.components.clone());
        by_invariant.entry(key).or_insert_with(|| InvolutionClass {
            representative: None,
            class_index: None,
            dim_minus: j.len(),
            even: j.len() % 2 == 0,
            special: true,
            r1_types: r1.types,
            r2_types: r2.types,
            g1_order: r1.order,
            g2_order: r2.order,
            j_set: j,
        });
    }
    let mut classes: Vec<InvolutionClass> = by_invariant.into_values().collect();
    classes.sort_by(|a, b| (a.dim_minus, &a.j_set).cmp(&(b.dim_minus, &b.j_set)));
    Ok(SpecialSet { classes })
}

/// Check that the centraliser of a special involution is exactly the
/// product of the two reflection subgroups `G_1 × G_2`.
pub fn verify_centralizer_product(group: &Group, rs: &RootSystem, cls: &InvolutionClass) -> bool {
    let Some(rep) = cls.representative else {
        return false;
    };
    let geom = geometry_from_perm(rs, group.perm(rep));
    let g1 = reflection_subgroup(group, rs, &geom.r1_positive);
    let g2 = reflection_subgroup(group, rs, &geom.r2_positive);
    let cent = group.centralizer(rep);
    if cent.order() != g1.order() * g2.order() {
        return false;
    }
    // The product map G1 × G2 -> C(σ) must be injective and onto.
    let mut products: HashSet<Elem> = HashSet::new();
    for &a in &g1.members {
        for &b in &g2.members {
            products.insert(group.mul(a, b));
        }
    }
    products.len() as u64 == cent.order() && cent.members.iter().all(|m| products.contains(m))
}

/// Subgroup generated by the reflections in the given roots.
pub fn reflection_subgroup(group: &Group, rs: &RootSystem, roots: &[usize]) -> Subgroup {
    let gens: Vec<Elem> = roots
        .iter()
        .map(|&r| {
            let perm = rs.reflection_perm(r);
            group.index_of_perm(&perm).expect("reflection is a group element")
        })
        .collect();
    group.subgroup(&gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate;
    use crate::rootsys::build_root_system;

    fn setup(name: &str) -> (RootSystem, Group) {
        let rs = build_root_system(CoxeterType::parse(name).unwrap()).unwrap();
        let g = generate(&rs, 2_000_000).unwrap();
        (rs, g)
    }

    #[test]
    fn minus_one_singletons_and_a2() {
        let (rs, g) = setup("A3");
        for i in 0..3 {
            assert!(minus_one_condition(&rs, &g, &[i]));
        }
        // J of type A2 fails
        assert!(!minus_one_condition(&rs, &g, &[0, 1]));
        // empty set passes trivially
        assert!(minus_one_condition(&rs, &g, &[]));
    }

    #[test]
    fn minus_one_b2_full() {
        let (rs, g) = setup("B2");
        assert!(minus_one_condition(&rs, &g, &[0, 1]));
    }

    #[test]
    fn richardson_class_counts() {
        let (rs, g) = setup("A2");
        let classes = richardson_classes(&g, &rs).unwrap();
        assert_eq!(classes.len(), 2); // identity, reflections
        let (rs, g) = setup("B2");
        let classes = richardson_classes(&g, &rs).unwrap();
        assert_eq!(classes.len(), 4); // identity, two reflection classes, -Id
    }

    #[test]
    fn d4_has_plus_minus_id_and_s() {
        let (rs, g) = setup("D4");
        let classes = richardson_classes(&g, &rs).unwrap();
        let dims: Vec<usize> = classes.iter().map(|c| c.dim_minus).collect();
        assert!(dims.contains(&0)); // Id
        assert!(dims.contains(&4)); // -Id
        let special: Vec<&InvolutionClass> = classes.iter().filter(|c| c.special).collect();
        assert_eq!(special.len(), 4);
    }

    #[test]
    fn specialness_examples() {
        // identity is special
        let (rs, g) = setup("A3");
        let geom = geometry_from_perm(&rs, g.perm(g.identity()));
        assert!(is_special(&rs, &geom));
        // (12)(34) in S4 is not special
        let classes = richardson_classes(&g, &rs).unwrap();
        let pi2 = classes.iter().find(|c| c.dim_minus == 2).unwrap();
        assert!(!pi2.special);
        // diag(-1,1) in B2 is special
        let (rs2, g2) = setup("B2");
        let classes2 = richardson_classes(&g2, &rs2).unwrap();
        for c in classes2.iter().filter(|c| c.dim_minus == 1) {
            assert!(c.special);
        }
    }

    #[test]
    fn special_counts_small() {
        for (name, expect) in [("A2", 2), ("A3", 2), ("B3", 6), ("H3", 4), ("D4", 4), ("F4", 8)] {
            let (rs, g) = setup(name);
            let xs = special_set(&g, &rs).unwrap();
            assert_eq!(xs.len(), expect, "{name}");
        }
    }

    #[test]
    fn specialness_is_a_class_function() {
        let (rs, g) = setup("B3");
        let classes = richardson_classes(&g, &rs).unwrap();
        for cls in &classes {
            let c = cls.class_index.unwrap();
            // deterministic sample of conjugates
            for (i, x) in g.class_members(c).enumerate() {
                if i % 3 != 0 {
                    continue;
                }
                let geom = geometry_from_perm(&rs, g.perm(x));
                assert_eq!(is_special(&rs, &geom), cls.special);
                assert_eq!(geom.dim_minus, cls.dim_minus);
            }
        }
    }

    #[test]
    fn centralizer_products() {
        for name in ["A3", "B3", "D4", "H3"] {
            let (rs, g) = setup(name);
            let xs = special_set(&g, &rs).unwrap();
            for cls in &xs.classes {
                assert!(
                    verify_centralizer_product(&g, &rs, cls),
                    "{name} J={:?}",
                    cls.j_set
                );
            }
        }
    }

    #[test]
    fn d5_nonspecial_centralizer_gap() {
        let (rs, g) = setup("D5");
        let classes = richardson_classes(&g, &rs).unwrap();
        // σ_2 = P ⊕ (-I_2) ⊕ I_1 has dim_minus 3 and is not special;
        // its centraliser exceeds G1 × G2 by index 2.
        let sigma2 = classes
            .iter()
            .find(|c| c.dim_minus == 3 && !c.special)
            .expect("σ_2 class");
        assert!(!verify_centralizer_product(&g, &rs, sigma2));
        let rep = sigma2.representative.unwrap();
        let geom = geometry_from_perm(&rs, g.perm(rep));
        let g1 = reflection_subgroup(&g, &rs, &geom.r1_positive);
        let g2 = reflection_subgroup(&g, &rs, &geom.r2_positive);
        assert_eq!(g.centralizer(rep).order(), 2 * g1.order() * g2.order());
    }

    #[test]
    fn rootspace_matches_full_on_small_types() {
        for name in ["A2", "A3", "A4", "B2", "B3", "B4", "D4", "D5", "F4", "H3", "I2(5)", "I2(6)", "I2(7)", "I2(8)"] {
            let (rs, g) = setup(name);
            let full = special_set(&g, &rs).unwrap();
            let root = rootspace_special_set(&rs).unwrap();
            assert_eq!(full.len(), root.len(), "{name}");
            for (a, b) in full.classes.iter().zip(root.classes.iter()) {
                assert_eq!(a.j_set, b.j_set, "{name}");
                assert_eq!(a.dim_minus, b.dim_minus, "{name}");
                assert_eq!(a.r1_types, b.r1_types, "{name}");
                assert_eq!(a.r2_types, b.r2_types, "{name}");
                assert_eq!(a.g1_order, b.g1_order, "{name}");
                assert_eq!(a.g2_order, b.g2_order, "{name}");
            }
        }
    }

    #[test]
    fn even_odd_balance() {
        for name in ["A3", "B3", "D4", "H3", "F4", "I2(6)", "I2(7)"] {
            let (rs, g) = setup(name);
            let xs = special_set(&g, &rs).unwrap();
            assert_eq!(xs.even().count(), xs.odd().count(), "{name}");
        }
    }
}

//! Virtual characters and the special-involution formulas for the
//! cohomology of the complement.
//!
//! The main formula writes the total cohomology, as a virtual
//! character, as a sum of `2 Ind_{<σ>}(1) - ρ` over the special
//! involution classes; the twisted action restricts the sum to the even
//! classes. Everything is exact integer arithmetic in the group's
//! canonical class order.

use crate::group::{Elem, Group};
use crate::involutions::SpecialSet;
use crate::poly::IntPoly;

/// Integer-valued class function, one value per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<i64>,
    pub label: String,
}

impl ClassFunction {
    pub fn new(values: Vec<i64>, label: String) -> Self {
        ClassFunction { values, label }
    }

    pub fn zero(group: &Group, label: &str) -> Self {
        ClassFunction { values: vec![0; group.num_classes()], label: label.into() }
    }

    pub fn add(&self, rhs: &ClassFunction) -> ClassFunction {
        assert_eq!(self.values.len(), rhs.values.len());
        ClassFunction {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect(),
            label: format!("{} + {}", self.label, rhs.label),
        }
    }

    pub fn sub(&self, rhs: &ClassFunction) -> ClassFunction {
        assert_eq!(self.values.len(), rhs.values.len());
        ClassFunction {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a - b).collect(),
            label: format!("{} - {}", self.label, rhs.label),
        }
    }

    pub fn scale(&self, c: i64) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().map(|v| c * v).collect(),
            label: format!("{}·{}", c, self.label),
        }
    }

    pub fn value_at(&self, group: &Group, x: Elem) -> i64 {
        self.values[group.class_of(x)]
    }
}

/// The regular character `(|G|, 0, ..., 0)`.
pub fn regular_character(group: &Group) -> ClassFunction {
    let mut values = vec![0i64; group.num_classes()];
    values[group.class_of(group.identity())] = group.order() as i64;
    ClassFunction::new(values, "regular".into())
}

pub fn trivial_character(group: &Group) -> ClassFunction {
    ClassFunction::new(vec![1; group.num_classes()], "trivial".into())
}

/// The alternating character `ε = det`.
pub fn alternating_character(group: &Group) -> ClassFunction {
    let values = (0..group.num_classes())
        .map(|c| group.parity(group.class_rep(c)))
        .collect();
    ClassFunction::new(values, "alternating".into())
}

/// Character of the representation induced from the trivial character
/// of the order-two subgroup generated by `sigma` (the regular
/// character when `sigma` is the identity): at a class `c`, the average
/// over `h` in the subgroup conjugate into `c` of the centraliser
/// orders.
pub fn induced_trivial(group: &Group, sigma: Elem) -> ClassFunction {
    assert_eq!(group.mul(sigma, sigma), group.identity(), "generator must be an involution");
    let mut values = vec![0i64; group.num_classes()];
    let subgroup: Vec<Elem> = if sigma == group.identity() {
        vec![group.identity()]
    } else {
        vec![group.identity(), sigma]
    };
    let h = subgroup.len() as i64;
    for member in &subgroup {
        values[group.class_of(*member)] += group.centralizer_order(*member) as i64;
    }
    for v in values.iter_mut() {
        assert_eq!(*v % h, 0, "induced character must be integral");
        *v /= h;
    }
    ClassFunction::new(values, format!("Ind(1) from <{:?}>", sigma.0))
}

/// `sum over X of (2 Ind_{<σ>}(1) - ρ)`: the standard-action character
/// of the total cohomology.
pub fn formula_f1(group: &Group, xs: &SpecialSet) -> ClassFunction {
    let rho = regular_character(group);
    let mut acc = ClassFunction::zero(group, "");
    for cls in &xs.classes {
        let sigma = cls.representative.expect("full-enumeration mode");
        let ind = induced_trivial(group, sigma);
        acc = acc.add(&ind.scale(2).sub(&rho));
    }
    acc.label = "sum over X of (2 Ind - rho)".into();
    acc
}

/// The twisted-action character: the same sum over the even classes
/// only.
pub fn formula_f2(group: &Group, xs: &SpecialSet) -> ClassFunction {
    let rho = regular_character(group);
    let mut acc = ClassFunction::zero(group, "");
    for cls in xs.even() {
        let sigma = cls.representative.expect("full-enumeration mode");
        let ind = induced_trivial(group, sigma);
        acc = acc.add(&ind.scale(2).sub(&rho));
    }
    acc.label = "sum over even X of (2 Ind - rho)".into();
    acc
}

/// Poincaré polynomial of the quotient: `sum over X of t^{dim V^-}`.
pub fn poincare_sigma(xs: &SpecialSet) -> IntPoly {
    let deg = xs.classes.iter().map(|c| c.dim_minus).max().unwrap_or(0);
    let mut coeffs = vec![0i64; deg + 1];
    for cls in &xs.classes {
        coeffs[cls.dim_minus] += 1;
    }
    IntPoly::from_coeffs(coeffs)
}

/// Multiplicities of the trivial and alternating characters in the
/// total cohomology: `(|X|, |X_even| - |X_odd|)`.
pub fn multiplicity_summary(xs: &SpecialSet) -> (u64, i64) {
    let even = xs.even().count() as i64;
    let odd = xs.odd().count() as i64;
    (xs.len() as u64, even - odd)
}

/// Exact inner product `<f, g> = (1/|G|) sum |class| f g`.
pub fn inner_product(group: &Group, f: &ClassFunction, g: &ClassFunction) -> i64 {
    let total: i64 = (0..group.num_classes())
        .map(|c| group.class_size(c) as i64 * f.values[c] * g.values[c])
        .sum();
    let order = group.order() as i64;
    assert_eq!(total % order, 0, "inner product of characters is integral");
    total / order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate;
    use crate::involutions::special_set;
    use crate::rootsys::{build_root_system, CoxeterType, RootSystem};

    fn setup(name: &str) -> (RootSystem, Group) {
        let rs = build_root_system(CoxeterType::parse(name).unwrap()).unwrap();
        let g = generate(&rs, 2_000_000).unwrap();
        (rs, g)
    }

    #[test]
    fn induced_from_transposition_in_s3() {
        let (_, g) = setup("A2");
        let s = g.generators()[0];
        let ind = induced_trivial(&g, s);
        // values (3, 1, 0) on (e, transpositions, 3-cycles)
        assert_eq!(ind.values[g.class_of(g.identity())], 3);
        assert_eq!(ind.values[g.class_of(s)], 1);
        let mut all = ind.values.clone();
        all.sort_unstable();
        assert_eq!(all, vec![0, 1, 3]);
    }

    #[test]
    fn induced_from_identity_is_regular() {
        let (_, g) = setup("B2");
        let ind = induced_trivial(&g, g.identity());
        assert_eq!(ind.values, regular_character(&g).values);
    }

    #[test]
    fn induced_dimension_is_index() {
        let (_, g) = setup("A3");
        let s = g.generators()[0];
        let ind = induced_trivial(&g, s);
        assert_eq!(ind.values[g.class_of(g.identity())], 12);
    }

    #[test]
    fn f1_at_identity_is_group_order() {
        for name in ["A2", "B2", "B3", "H3"] {
            let (rs, g) = setup(name);
            let xs = special_set(&g, &rs).unwrap();
            let f1 = formula_f1(&g, &xs);
            assert_eq!(f1.values[g.class_of(g.identity())], g.order() as i64, "{name}");
        }
    }

    #[test]
    fn f1_for_symmetric_group_reduces_to_twice_induced() {
        // |X| = 2 for S_n: F1 = 2 Ind_{<s>}(1)
        let (rs, g) = setup("A3");
        let xs = special_set(&g, &rs).unwrap();
        assert_eq!(xs.len(), 2);
        let f1 = formula_f1(&g, &xs);
        let s = xs.classes[1].representative.unwrap();
        let twice = induced_trivial(&g, s).scale(2);
        assert_eq!(f1.values, twice.values);
    }

    #[test]
    fn f2_is_regular_for_symmetric_and_d5() {
        for name in ["A2", "A3", "A4", "D5"] {
            let (rs, g) = setup(name);
            let xs = special_set(&g, &rs).unwrap();
            let f2 = formula_f2(&g, &xs);
            assert_eq!(f2.values, regular_character(&g).values, "{name}");
        }
    }

    #[test]
    fn f2_for_d4_is_twice_induced_from_minus_id() {
        let (rs, g) = setup("D4");
        let xs = special_set(&g, &rs).unwrap();
        let minus_id = xs
            .classes
            .iter()
            .find(|c| c.dim_minus == 4)
            .unwrap()
            .representative
            .unwrap();
        let f2 = formula_f2(&g, &xs);
        let twice = induced_trivial(&g, minus_id).scale(2);
        assert_eq!(f2.values, twice.values);
    }

    #[test]
    fn f2_vanishes_on_odd_classes() {
        for name in ["B3", "D4", "F4", "H3"] {
            let (rs, g) = setup(name);
            let xs = special_set(&g, &rs).unwrap();
            let f2 = formula_f2(&g, &xs);
            for c in 0..g.num_classes() {
                if g.parity(g.class_rep(c)) == -1 {
                    assert_eq!(f2.values[c], 0, "{name}");
                }
            }
        }
    }

    #[test]
    fn poincare_sigma_examples() {
        let (rs, g) = setup("F4");
        let xs = special_set(&g, &rs).unwrap();
        assert_eq!(poincare_sigma(&xs), IntPoly::from_coeffs(vec![1, 2, 2, 2, 1]));
        let (rs, g) = setup("H3");
        let xs = special_set(&g, &rs).unwrap();
        assert_eq!(poincare_sigma(&xs), IntPoly::from_coeffs(vec![1, 1, 1, 1]));
        let (rs, g) = setup("I2(7)");
        let xs = special_set(&g, &rs).unwrap();
        assert_eq!(poincare_sigma(&xs), IntPoly::from_coeffs(vec![1, 1]));
    }

    #[test]
    fn multiplicities() {
        let (rs, g) = setup("B3");
        let xs = special_set(&g, &rs).unwrap();
        assert_eq!(multiplicity_summary(&xs), (6, 0));
        let (rs, g) = setup("A1");
        let xs = special_set(&g, &rs).unwrap();
        assert_eq!(multiplicity_summary(&xs), (2, 0));
    }

    #[test]
    fn frobenius_inner_products() {
        for name in ["A3", "B3", "H3"] {
            let (rs, g) = setup(name);
            let xs = special_set(&g, &rs).unwrap();
            let f1 = formula_f1(&g, &xs);
            assert_eq!(
                inner_product(&g, &f1, &trivial_character(&g)),
                xs.len() as i64,
                "{name}"
            );
            assert_eq!(inner_product(&g, &f1, &alternating_character(&g)), 0, "{name}");
        }
    }

    #[test]
    fn f1_vanishes_off_involutions_and_hits_orders_on_special() {
        let (rs, g) = setup("B3");
        let xs = special_set(&g, &rs).unwrap();
        let f1 = formula_f1(&g, &xs);
        for c in 0..g.num_classes() {
            let rep = g.class_rep(c);
            if g.element_order(rep) > 2 {
                assert_eq!(f1.values[c], 0);
            }
        }
        for cls in &xs.classes {
            let c = cls.class_index.unwrap();
            assert_eq!(f1.values[c], (cls.g1_order * cls.g2_order) as i64);
        }
    }
}

//! Reference data for the verification commands: known special-class
//! counts, exponents, quotient Poincaré polynomials, and the canonical
//! diagram subsets of the nontrivial special involution classes. The
//! verify commands diff computed values against these tables.

use crate::poly::IntPoly;
use crate::rootsys::{CoxeterType, Family};

/// Known number of special involution classes.
pub fn special_count(t: &CoxeterType) -> u64 {
    match t.family {
        Family::A => 2,
        Family::B => 2 * t.rank as u64,
        Family::D => {
            if t.rank % 2 == 0 {
                4
            } else {
                2
            }
        }
        Family::E => {
            if t.rank == 6 {
                2
            } else {
                4
            }
        }
        Family::F => 8,
        Family::H => 4,
        Family::I => {
            if t.m % 2 == 0 {
                4
            } else {
                2
            }
        }
    }
}

/// Known exponents `m_1 <= ... <= m_n`.
pub fn exponents(t: &CoxeterType) -> Vec<u64> {
    let n = t.rank as u64;
    let mut e = match t.family {
        Family::A => (1..=n).collect::<Vec<_>>(),
        Family::B => (0..n).map(|i| 2 * i + 1).collect(),
        Family::D => {
            let mut v: Vec<u64> = (0..n - 1).map(|i| 2 * i + 1).collect();
            v.push(n - 1);
            v
        }
        Family::E => match t.rank {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        },
        Family::F => vec![1, 5, 7, 11],
        Family::H => {
            if t.rank == 3 {
                vec![1, 5, 9]
            } else {
                vec![1, 11, 19, 29]
            }
        }
        Family::I => vec![1, t.m as u64 - 1],
    };
    e.sort_unstable();
    e
}

/// Known Poincaré polynomial of the quotient space, one row per
/// irreducible type.
pub fn quotient_poincare(t: &CoxeterType) -> IntPoly {
    let n = t.rank;
    match t.family {
        Family::A => IntPoly::from_coeffs(vec![1, 1]),
        Family::B => {
            // 1 + 2t + ... + 2t^{n-1} + t^n
            let mut c = vec![2i64; n + 1];
            c[0] = 1;
            c[n] = 1;
            IntPoly::from_coeffs(c)
        }
        Family::D => {
            if n % 2 == 1 {
                IntPoly::from_coeffs(vec![1, 1])
            } else {
                let mut c = vec![0i64; n + 1];
                c[0] = 1;
                c[1] = 1;
                c[n - 1] += 1;
                c[n] += 1;
                IntPoly::from_coeffs(c)
            }
        }
        Family::E => match n {
            6 => IntPoly::from_coeffs(vec![1, 1]),
            7 => IntPoly::from_coeffs(vec![1, 1, 0, 0, 0, 0, 1, 1]),
            _ => IntPoly::from_coeffs(vec![1, 1, 0, 0, 0, 0, 0, 1, 1]),
        },
        Family::F => IntPoly::from_coeffs(vec![1, 2, 2, 2, 1]),
        Family::H => {
            if n == 3 {
                IntPoly::from_coeffs(vec![1, 1, 1, 1])
            } else {
                IntPoly::from_coeffs(vec![1, 1, 0, 1, 1])
            }
        }
        Family::I => {
            if t.m % 2 == 1 {
                IntPoly::from_coeffs(vec![1, 1])
            } else {
                IntPoly::from_coeffs(vec![1, 2, 1])
            }
        }
    }
}

/// One nontrivial special involution class: display label and the
/// subset `J` of diagram nodes (0-based) spanning its `-1` eigenspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramInvolution {
    pub label: String,
    pub j: Vec<usize>,
}

/// Canonical diagram subsets of the nontrivial special involution
/// classes, per irreducible type, in the conventional presentation:
/// for `B_n`, `σ_k` pairs the first node with the length-`k` tail and
/// `τ_l` is the length-`l` tail alone.
pub fn diagram_involutions(t: &CoxeterType) -> Vec<DiagramInvolution> {
    let n = t.rank;
    let mk = |label: &str, j: Vec<usize>| DiagramInvolution { label: label.into(), j };
    match t.family {
        Family::A => vec![mk("s", vec![0])],
        Family::B => {
            let mut out = Vec::new();
            if n >= 2 {
                for k in 0..=n - 2 {
                    let mut j = vec![0];
                    j.extend(n - k..n);
                    out.push(DiagramInvolution { label: format!("sigma_{k}"), j });
                }
            }
            for l in 1..=n {
                out.push(DiagramInvolution {
                    label: format!("tau_{l}"),
                    j: (n - l..n).collect(),
                });
            }
            out
        }
        Family::D => {
            if n % 2 == 1 {
                vec![mk("s", vec![0])]
            } else {
                vec![
                    mk("s", vec![0]),
                    mk("-s", (0..n).filter(|&i| i != 1).collect()),
                    mk("-Id", (0..n).collect()),
                ]
            }
        }
        Family::E => match n {
            6 => vec![mk("s", vec![0])],
            7 => vec![
                mk("s", vec![0]),
                mk("-s", (1..7).collect()),
                mk("-Id", (0..7).collect()),
            ],
            _ => vec![
                mk("s", vec![0]),
                mk("-s", (0..7).collect()),
                mk("-Id", (0..8).collect()),
            ],
        },
        Family::F => vec![
            mk("s_1", vec![0]),
            mk("s_2", vec![3]),
            mk("diag(-1,-1,1,1)", vec![1, 2]),
            mk("P_12+diag(-1,1)", vec![0, 2]),
            mk("-s_1", vec![1, 2, 3]),
            mk("-s_2", vec![0, 1, 2]),
            mk("-Id", vec![0, 1, 2, 3]),
        ],
        Family::H => {
            if n == 3 {
                vec![mk("s", vec![0]), mk("-s", vec![0, 2]), mk("-Id", vec![0, 1, 2])]
            } else {
                vec![
                    mk("s", vec![0]),
                    mk("-s", vec![0, 1, 2]),
                    mk("-Id", vec![0, 1, 2, 3]),
                ]
            }
        }
        Family::I => {
            if t.m % 2 == 1 {
                vec![mk("s", vec![0])]
            } else {
                vec![mk("s_1", vec![0]), mk("s_2", vec![1]), mk("-Id", vec![0, 1])]
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CoxeterType;

    fn t(name: &str) -> CoxeterType {
        CoxeterType::parse(name).unwrap()
    }

    #[test]
    fn exponents_products() {
        // sum = number of positive roots, product of (1 + m_i) = |G|
        for name in ["A4", "B4", "D5", "E6", "E7", "E8", "F4", "H3", "H4", "I2(9)"] {
            let ty = t(name);
            let e = exponents(&ty);
            assert_eq!(e.iter().sum::<u64>() as usize, ty.num_positive_roots(), "{name}");
            assert_eq!(e.iter().map(|m| m + 1).product::<u64>(), ty.order(), "{name}");
        }
    }

    #[test]
    fn quotient_polynomials_evaluate_to_zero_at_minus_one() {
        for name in ["A3", "B4", "D4", "D5", "E6", "E7", "E8", "F4", "H3", "H4", "I2(5)", "I2(6)"] {
            assert_eq!(quotient_poincare(&t(name)).eval(-1), 0, "{name}");
        }
    }

    #[test]
    fn special_counts_match_polynomials() {
        // |X_G| equals the total Betti number of the quotient
        for name in ["A3", "B4", "D4", "D5", "E6", "E7", "E8", "F4", "H3", "H4", "I2(5)", "I2(6)"] {
            let ty = t(name);
            let total: i64 = quotient_poincare(&ty).coeffs.iter().sum();
            assert_eq!(total as u64, special_count(&ty), "{name}");
        }
    }

    #[test]
    fn diagram_involution_counts() {
        for name in ["A3", "B4", "D4", "D5", "E6", "E7", "E8", "F4", "H3", "H4", "I2(5)", "I2(6)"] {
            let ty = t(name);
            // +1 for the identity class
            assert_eq!(
                diagram_involutions(&ty).len() as u64 + 1,
                special_count(&ty),
                "{name}"
            );
        }
    }
}

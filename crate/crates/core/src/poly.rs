//! Dense integer polynomials in one variable `t`.
//!
//! Used for Betti polynomials, Poincaré polynomials of the quotient and
//! the exponent-recovery factorisation.

use std::fmt;

use serde::Serialize;

/// Integer polynomial; `coeffs[k]` is the coefficient of `t^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IntPoly {
    pub coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: vec![0] }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![1] }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    /// `1 + k t`.
    pub fn one_plus_kt(k: i64) -> Self {
        IntPoly { coeffs: vec![1, k] }
    }

    /// The product of `1 + m t` over the given exponents.
    pub fn from_exponents(exponents: &[u64]) -> Self {
        let mut p = IntPoly::one();
        for &m in exponents {
            p = p.mul(&IntPoly::one_plus_kt(m as i64));
        }
        p
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && *self.coeffs.last().unwrap() == 0 {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn eval(&self, t: i64) -> i64 {
        let mut acc = 0i64;
        for &c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn add(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0i64; n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPoly::from_coeffs(out)
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Divide exactly by `1 + k t`; `None` if the division leaves a remainder.
    pub fn div_one_plus_kt(&self, k: i64) -> Option<IntPoly> {
        // Synthetic division by (kt + 1) from the constant term upward.
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n == 1 {
            return None;
        }
        let mut quot = vec![0i64; n - 1];
        for i in 0..n - 1 {
            let q = rem[i];
            quot[i] = q;
            rem[i] = 0;
            rem[i + 1] -= k * q;
        }
        if rem[n - 1] != 0 {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 && !(self.coeffs.len() == 1) {
                continue;
            }
            if !first {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    write!(f, "t")?;
                }
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    write!(f, "t^{k}")?;
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

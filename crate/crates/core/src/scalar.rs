//! Exact arithmetic in the coordinate fields of the root systems.
//!
//! Three field towers cover every irreducible type: the rationals
//! (crystallographic types), real quadratic extensions `Q(sqrt(d))`
//! (the icosahedral types need `d = 5`), and the real cyclotomic slices
//! `Q(2cos(pi/m))` for the remaining dihedral types. A [`Scalar`] is a
//! polynomial in the field generator, reduced modulo its minimal
//! polynomial, so equality is literal coefficient equality and no
//! rounding ever occurs. Signs are decided by refining an isolating
//! interval for the generator.

use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};
use thiserror::Error;

/// Which field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    /// The rational numbers.
    Rational,
    /// `Q(sqrt(d))` for a squarefree `d > 1`.
    Quadratic(u64),
    /// `Q(2cos(pi/m))` for `m >= 3`.
    Cosine(u32),
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "rational"),
            FieldKind::Quadratic(d) => write!(f, "quadratic({d})"),
            FieldKind::Cosine(m) => write!(f, "cosine({m})"),
        }
    }
}

impl Serialize for FieldKind {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            FieldKind::Rational => ser.serialize_str("rational"),
            FieldKind::Quadratic(d) => {
                let mut s = ser.serialize_struct("quadratic", 1)?;
                s.serialize_field("quadratic", d)?;
                s.end()
            }
            FieldKind::Cosine(m) => {
                let mut s = ser.serialize_struct("cosine", 1)?;
                s.serialize_field("cosine", m)?;
                s.end()
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars belong to different fields: {0} vs {1}")]
    FieldMismatch(FieldKind, FieldKind),
}

/// A fixed coordinate field, shared by every scalar of one root system.
#[derive(Debug)]
pub struct Field {
    kind: FieldKind,
    degree: usize,
    /// Monic minimal polynomial of the generator, length `degree + 1`.
    minpoly: Vec<BigRational>,
    /// Isolating interval for the generator, refined on demand.
    interval: Mutex<(BigRational, BigRational)>,
}

pub type FieldRef = Arc<Field>;

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Field {
    /// The rational field. A single shared instance.
    pub fn rational() -> FieldRef {
        static RATIONAL: OnceLock<FieldRef> = OnceLock::new();
        RATIONAL
            .get_or_init(|| {
                Arc::new(Field {
                    kind: FieldKind::Rational,
                    degree: 1,
                    minpoly: vec![BigRational::zero(), BigRational::one()],
                    interval: Mutex::new((BigRational::zero(), BigRational::zero())),
                })
            })
            .clone()
    }

    /// `Q(sqrt(d))`, generator `sqrt(d)`.
    pub fn quadratic(d: u64) -> FieldRef {
        assert!(d > 1, "quadratic field needs d > 1");
        let minpoly = vec![-big(d as i64), big(0), big(1)];
        let interval = isolate_largest_root(&minpoly);
        Arc::new(Field {
            kind: FieldKind::Quadratic(d),
            degree: 2,
            minpoly,
            interval: Mutex::new(interval),
        })
    }

    /// `Q(2cos(pi/m))`, generator `2cos(pi/m)`, the largest root of the
    /// folded cyclotomic polynomial of order `2m`.
    pub fn cosine(m: u32) -> FieldRef {
        assert!(m >= 3, "cosine field needs m >= 3");
        let minpoly = cosine_minpoly(m);
        let degree = minpoly.len() - 1;
        if degree == 1 {
            // 2cos(pi/3) = 1: the field is plain Q with a relabelled kind.
            return Arc::new(Field {
                kind: FieldKind::Cosine(m),
                degree: 1,
                minpoly,
                interval: Mutex::new((BigRational::zero(), BigRational::zero())),
            });
        }
        let interval = isolate_largest_root(&minpoly);
        Arc::new(Field {
            kind: FieldKind::Cosine(m),
            degree,
            minpoly,
            interval: Mutex::new(interval),
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Bisect the generator interval once, keeping it isolating.
    fn refine(&self) {
        let mut guard = self.interval.lock().unwrap();
        let (lo, hi) = guard.clone();
        let mid = (&lo + &hi) / big(2);
        let sign_lo = poly_eval(&self.minpoly, &lo).signum();
        let sign_mid = poly_eval(&self.minpoly, &mid).signum();
        assert!(!sign_mid.is_zero(), "rational midpoint cannot be a root");
        if sign_mid == sign_lo {
            *guard = (mid, hi);
        } else {
            *guard = (lo, mid);
        }
    }

    fn interval(&self) -> (BigRational, BigRational) {
        self.interval.lock().unwrap().clone()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}
impl Eq for Field {}

/// An exact element of a fixed field: rational coefficients of
/// `1, g, g^2, ...` with `g` the field generator, reduced modulo the
/// minimal polynomial. The representation is canonical, so `==` decides
/// field equality.
#[derive(Clone)]
pub struct Scalar {
    field: FieldRef,
    coeffs: Vec<BigRational>,
}

impl Scalar {
    fn from_reduced(field: FieldRef, mut coeffs: Vec<BigRational>) -> Self {
        coeffs.resize(field.degree, BigRational::zero());
        Scalar { field, coeffs }
    }

    /// Reduce an arbitrary-degree polynomial in the generator.
    fn reduce(field: &FieldRef, mut poly: Vec<BigRational>) -> Self {
        let deg = field.degree;
        while poly.len() > deg {
            let lead = poly.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let shift = poly.len() - deg;
            for (i, m) in field.minpoly.iter().take(deg).enumerate() {
                let entry = &poly[shift + i] - &lead * m;
                poly[shift + i] = entry;
            }
        }
        Scalar::from_reduced(field.clone(), poly)
    }

    pub fn zero(field: &FieldRef) -> Self {
        Scalar::from_reduced(field.clone(), vec![])
    }

    pub fn one(field: &FieldRef) -> Self {
        Scalar::from_reduced(field.clone(), vec![BigRational::one()])
    }

    pub fn from_integer(field: &FieldRef, n: i64) -> Self {
        Scalar::from_reduced(field.clone(), vec![big(n)])
    }

    pub fn from_ratio(field: &FieldRef, num: i64, den: i64) -> Self {
        assert!(den != 0);
        Scalar::from_reduced(
            field.clone(),
            vec![BigRational::new(BigInt::from(num), BigInt::from(den))],
        )
    }

    pub fn from_rational(field: &FieldRef, q: BigRational) -> Self {
        Scalar::from_reduced(field.clone(), vec![q])
    }

    /// The field generator `g` (`sqrt(d)` or `2cos(pi/m)`).
    pub fn generator(field: &FieldRef) -> Self {
        if field.degree == 1 {
            // Degree-one generator is the rational root of its minimal
            // polynomial (e.g. 2cos(pi/3) = 1).
            let g = -&field.minpoly[0];
            return Scalar::from_reduced(field.clone(), vec![g]);
        }
        Scalar::from_reduced(field.clone(), vec![BigRational::zero(), BigRational::one()])
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn field_kind(&self) -> FieldKind {
        self.field.kind
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Exact rational value, if the scalar is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.kind, other.field.kind,
            "scalars from different fields"
        );
    }

    /// Sign of the real embedding: -1, 0 or +1.
    ///
    /// Zero is decided by canonical form; otherwise the generator
    /// interval is halved until the interval evaluation excludes zero,
    /// which terminates because a nonzero element has nonzero value.
    pub fn sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if self.field.degree == 1 || self.as_rational().is_some() {
            return rational_sign(&self.coeffs[0]);
        }
        loop {
            let (lo, hi) = self.field.interval();
            let (vlo, vhi) = interval_eval(&self.coeffs, &lo, &hi);
            if vlo.is_positive() {
                return 1;
            }
            if vhi.is_negative() {
                return -1;
            }
            self.field.refine();
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.field.degree == 1 {
            return Ok(Scalar::from_reduced(
                self.field.clone(),
                vec![self.coeffs[0].recip()],
            ));
        }
        // Extended Euclid in Q[g] modulo the (irreducible) minimal
        // polynomial: gcd is a nonzero constant.
        let (g, s) = poly_half_egcd(&trim(&self.coeffs), &self.field.minpoly);
        debug_assert_eq!(g.len(), 1);
        let c = g[0].recip();
        let inv: Vec<BigRational> = s.iter().map(|x| x * &c).collect();
        Ok(Scalar::reduce(&self.field, inv))
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        if self.field.kind != rhs.field.kind {
            return Err(ScalarError::FieldMismatch(self.field.kind, rhs.field.kind));
        }
        Ok(self * &rhs.inv()?)
    }

    /// `f64` approximation (display and sorting hints only; never used
    /// in a decision).
    pub fn approx(&self) -> f64 {
        let g = match self.field.kind {
            FieldKind::Rational => 0.0,
            FieldKind::Quadratic(d) => (d as f64).sqrt(),
            FieldKind::Cosine(m) => 2.0 * (std::f64::consts::PI / m as f64).cos(),
        };
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * g + ratio_to_f64(c);
        }
        acc
    }
}

fn ratio_to_f64(q: &BigRational) -> f64 {
    let n = q.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let d = q.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    n / d
}

fn rational_sign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.kind == other.field.kind && self.coeffs == other.coeffs
    }
}
impl Eq for Scalar {}

impl std::hash::Hash for Scalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.kind.hash(state);
        self.coeffs.hash(state);
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if self == other {
            return std::cmp::Ordering::Equal;
        }
        match (self - other).sign() {
            1 => std::cmp::Ordering::Greater,
            -1 => std::cmp::Ordering::Less,
            _ => std::cmp::Ordering::Equal,
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.check_same_field(rhs);
                let coeffs = self
                    .coeffs
                    .iter()
                    .zip(rhs.coeffs.iter())
                    .map(|(a, b)| a $op b)
                    .collect();
                Scalar::from_reduced(self.field.clone(), coeffs)
            }
        }
        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same_field(rhs);
        if self.field.degree == 1 {
            return Scalar::from_reduced(self.field.clone(), vec![&self.coeffs[0] * &rhs.coeffs[0]]);
        }
        let mut prod = vec![BigRational::zero(); 2 * self.field.degree - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let entry = &prod[i + j] + a * b;
                prod[i + j] = entry;
            }
        }
        Scalar::reduce(&self.field, prod)
    }
}

impl std::ops::Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        (&self) * (&rhs)
    }
}

impl std::ops::Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.try_div(rhs).expect("scalar division")
    }
}

impl std::ops::Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        (&self) / (&rhs)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        Scalar::from_reduced(self.field.clone(), coeffs)
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -(&self)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "g")?;
                    } else {
                        write!(f, "g^{i}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut s = ser.serialize_struct("Scalar", 2)?;
        s.serialize_field("field", &self.field.kind)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers (internal).

fn trim(p: &[BigRational]) -> Vec<BigRational> {
    let mut v = p.to_vec();
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
    v
}

fn poly_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Evaluate `p` over the interval `[lo, hi]` with interval Horner.
fn interval_eval(
    p: &[BigRational],
    lo: &BigRational,
    hi: &BigRational,
) -> (BigRational, BigRational) {
    let mut alo = BigRational::zero();
    let mut ahi = BigRational::zero();
    for c in p.iter().rev() {
        let products = [&alo * lo, &alo * hi, &ahi * lo, &ahi * hi];
        let mut min = products[0].clone();
        let mut max = products[0].clone();
        for q in &products[1..] {
            if q < &min {
                min = q.clone();
            }
            if q > &max {
                max = q.clone();
            }
        }
        alo = min + c;
        ahi = max + c;
    }
    (alo, ahi)
}

fn is_zero_poly(p: &[BigRational]) -> bool {
    p.len() == 1 && p[0].is_zero()
}

/// Quotient and remainder of `a / b` (b nonzero).
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b);
    let db = b.len() - 1;
    let mut rem = trim(a);
    if rem.len() - 1 < db || is_zero_poly(&rem) {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while !is_zero_poly(&rem) && rem.len() - 1 >= db {
        let dr = rem.len() - 1;
        let coef = rem.last().unwrap() / b.last().unwrap();
        quot[dr - db] = coef.clone();
        for i in 0..=db {
            let entry = &rem[dr - db + i] - &coef * &b[i];
            rem[dr - db + i] = entry;
        }
        rem = trim(&rem);
    }
    (trim(&quot), rem)
}

/// Half extended gcd: returns `(gcd, s)` with `s*a = gcd (mod b)`.
fn poly_half_egcd(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = trim(b);
    let mut r1 = trim(a);
    let mut s0 = vec![BigRational::zero()];
    let mut s1 = vec![BigRational::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    (r0, s0)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let entry = &out[i + j] + x * y;
            out[i + j] = entry;
        }
    }
    trim(&out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        let entry = &out[i] - y;
        out[i] = entry;
    }
    trim(&out)
}

// ---------------------------------------------------------------------------
// Minimal polynomial of 2cos(pi/m) via the cyclotomic fold.

/// Cyclotomic polynomial `Phi_n`, integer coefficients.
fn cyclotomic(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by the product of Phi_d over proper divisors d.
    let mut num = vec![BigInt::from(0); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::from(1);
    for d in 1..n {
        if n % d == 0 {
            num = int_poly_exact_div(&num, &cyclotomic(d));
        }
    }
    num
}

/// Exact division of integer polynomials (divisor monic up to sign).
fn int_poly_exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let da = rem.len() - 1;
    let mut quot = vec![BigInt::from(0); da - db + 1];
    for k in (0..=da - db).rev() {
        let coef = &rem[k + db] / &b[db];
        for i in 0..=db {
            let entry = &rem[k + i] - &coef * &b[i];
            rem[k + i] = entry;
        }
        quot[k] = coef;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact division");
    quot
}

/// Monic minimal polynomial of `2cos(pi/m)`: fold `Phi_{2m}(z)` through
/// `z + 1/z`. Degree is `phi(2m)/2`.
fn cosine_minpoly(m: u32) -> Vec<BigRational> {
    let phi = cyclotomic(2 * m);
    let full = phi.len() - 1;
    assert!(full % 2 == 0);
    let half = full / 2;
    // Solve Phi(z) = sum_j c_j z^{half-j} (z^2+1)^j from the top degree down.
    let mut rem: Vec<BigInt> = phi;
    let mut coeffs = vec![BigInt::from(0); half + 1];
    for j in (0..=half).rev() {
        let c = rem[half + j].clone();
        coeffs[j] = c.clone();
        if c.is_zero() {
            continue;
        }
        // rem -= c * z^{half-j} * (z^2+1)^j
        let mut binom = BigInt::from(1);
        for k in 0..=j {
            // coefficient of z^{half-j+2k} gets c * C(j, k)
            let entry = &rem[half - j + 2 * k] - &c * &binom;
            rem[half - j + 2 * k] = entry;
            binom = binom * BigInt::from((j - k) as i64) / BigInt::from((k + 1) as i64);
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "cyclotomic fold left a remainder");
    coeffs
        .into_iter()
        .map(|c| BigRational::from_integer(c))
        .collect()
}

// ---------------------------------------------------------------------------
// Sturm isolation of the largest real root.

fn sturm_chain(p: &[BigRational]) -> Vec<Vec<BigRational>> {
    let mut chain = vec![trim(p)];
    let d: Vec<BigRational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * big(i as i64))
        .collect();
    chain.push(trim(&d));
    loop {
        let last = &chain[chain.len() - 1];
        if last.len() == 1 {
            break;
        }
        let prev = &chain[chain.len() - 2];
        let (_, r) = poly_divmod(prev, last);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
        chain.push(r.iter().map(|c| -c).collect());
    }
    chain
}

fn sign_variations(chain: &[Vec<BigRational>], x: &BigRational) -> usize {
    let mut variations = 0;
    let mut prev = 0i32;
    for p in chain {
        let s = rational_sign(&poly_eval(p, x));
        if s != 0 {
            if prev != 0 && s != prev {
                variations += 1;
            }
            prev = s;
        }
    }
    variations
}

/// Isolating interval for the largest real root of a squarefree monic
/// polynomial whose roots all lie in (-B, B) for some computed bound.
fn isolate_largest_root(p: &[BigRational]) -> (BigRational, BigRational) {
    let chain = sturm_chain(p);
    // Cauchy bound: 1 + max |c_i| (monic).
    let mut bound = BigRational::one();
    for c in &p[..p.len() - 1] {
        let a = c.abs();
        if a > bound {
            bound = a;
        }
    }
    bound = bound + BigRational::one();
    let hi = bound.clone();
    let mut lo = -bound;
    let count = |a: &BigRational, b: &BigRational| sign_variations(&chain, a) - sign_variations(&chain, b);
    assert!(count(&lo, &hi) >= 1, "no real root");
    // Shrink until only the largest root remains in (lo, hi].
    let mut hi = hi;
    while count(&lo, &hi) > 1 {
        let mid = (&lo + &hi) / big(2);
        if count(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    assert!(rational_sign(&poly_eval(p, &lo)) != 0);
    (lo, hi)
}

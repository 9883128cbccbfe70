//! Exact arithmetic over real quadratic-radical extensions of the rationals.
//!
//! Every matrix entry handled by this crate lives in the ring
//!
//! ```text
//!   S = M ⊕ M·x,   M = ℚ-span of { √d : d square-free, d ≥ 1 },
//!                  x = √((5 − √5)/10).
//! ```
//!
//! `M` covers entries like `1/3`, `√2/√10`, `-(1/6)√6`; the `x`-component is
//! needed for the golden staircase sets, whose coordinates
//! `x = √((5−√5)/10)` and `y = √((5+√5)/10) = ((1+√5)/2)·x` generate a cyclic
//! quartic field and therefore cannot be written as ℚ-combinations of `√d`.
//! Since `x² = 1/2 − (1/10)√5 ∈ M`, the direct sum above is closed under
//! multiplication, and because `x ∉ M` the decomposition is unique: a value is
//! zero exactly when both component maps are empty. That syntactic zero test
//! is what makes every verdict in this crate tolerance-free.
//!
//! Signs of nonzero values are decided by interval arithmetic with adaptive
//! precision: each `√d` is enclosed by integer-square-root bounds that are
//! refined until the interval excludes zero. Refinement always terminates
//! because nonzero normal forms denote nonzero reals. Conversion to `f64` is
//! export-only and never participates in a verdict.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::LazyLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Trial-division bound for square-free reduction of radicands.
const FACTOR_BOUND: u64 = 1_000_000;
/// Residuals below `FACTOR_BOUND³` with no factor up to the bound and which
/// are not perfect squares have at most two prime factors, hence are
/// square-free.
const RESIDUAL_BOUND: u64 = 1_000_000_000_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("square root of a negative rational has no real value")]
    NegativeRadicand,
    #[error("radicand {0} cannot be reduced to square-free form within the factoring bound")]
    UnsupportedRadicand(String),
    #[error("coefficient does not fit the serialized integer range")]
    CoefficientOverflow,
    #[error("zero denominator in serialized term")]
    ZeroDenominator,
}

type TermMap = BTreeMap<u64, Rational>;

/// An exact real number of the form `Σ qᵢ√dᵢ + (Σ rⱼ√eⱼ)·x` with rational
/// coefficients, square-free integer radicands, and `x = √((5−√5)/10)`.
///
/// The representation is kept in normal form at all times: radicands are
/// square-free, radicand `1` holds the rational part, zero coefficients are
/// dropped, and two values are equal iff their term maps are identical.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Surd {
    base: TermMap,
    golden: TermMap,
}

/// One serialized term: `(num/den)·√rad`, times `x = √((5−√5)/10)` when
/// `golden` is set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurdTerm {
    pub num: i64,
    pub den: i64,
    pub rad: u64,
    #[serde(default, skip_serializing_if = "is_false")]
    pub golden: bool,
}

fn is_false(b: &bool) -> bool {
    !*b
}

fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `x² = (5 − √5)/10 = 1/2 − (1/10)√5`, as a base-component map.
static X_SQUARED: LazyLock<TermMap> = LazyLock::new(|| {
    let mut m = TermMap::new();
    m.insert(1, rational(1, 2));
    m.insert(5, rational(-1, 10));
    m
});

fn map_insert(map: &mut TermMap, rad: u64, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(rad) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn map_add(a: &TermMap, b: &TermMap) -> TermMap {
    let mut out = a.clone();
    for (rad, coeff) in b {
        map_insert(&mut out, *rad, coeff.clone());
    }
    out
}

fn map_neg(a: &TermMap) -> TermMap {
    a.iter().map(|(rad, c)| (*rad, -c.clone())).collect()
}

fn map_scale(a: &TermMap, s: &Rational) -> TermMap {
    if s.is_zero() {
        return TermMap::new();
    }
    a.iter().map(|(rad, c)| (*rad, c * s)).collect()
}

/// `√d · √e = g·√(d'e')` with `g = gcd(d, e)`, `d = g·d'`, `e = g·e'`.
/// For square-free `d`, `e` the cofactors are coprime, so the product
/// radicand is square-free without any factoring.
fn radical_product(d: u64, e: u64) -> (u64, u64) {
    let g = d.gcd(&e);
    let rad = (d / g)
        .checked_mul(e / g)
        .expect("product radicand exceeds the supported range");
    (g, rad)
}

fn map_mul(a: &TermMap, b: &TermMap) -> TermMap {
    let mut out = TermMap::new();
    for (da, ca) in a {
        for (db, cb) in b {
            let (g, rad) = radical_product(*da, *db);
            map_insert(&mut out, rad, ca * cb * Rational::from(BigInt::from(g)));
        }
    }
    out
}

impl Surd {
    pub fn zero() -> Self {
        Surd::default()
    }

    pub fn one() -> Self {
        Surd::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Surd::from_rational(Rational::from(BigInt::from(n)))
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut base = TermMap::new();
        map_insert(&mut base, 1, q);
        Surd {
            base,
            golden: TermMap::new(),
        }
    }

    /// The rational `num/den`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Surd::from_rational(rational(num, den))
    }

    /// `(num/den)·√rad`, normalized. Errors if `rad` cannot be reduced to
    /// square-free form within the factoring bound.
    pub fn radical(num: i64, den: i64, rad: u64) -> Result<Self, ExactError> {
        let root = Surd::sqrt_rational(&Rational::from(BigInt::from(rad)))?;
        Ok(root.scale(&rational(num, den)))
    }

    /// Exact `√q` for a non-negative rational, in normal form:
    /// `√(a/b) = √(ab)/b`, with the square part of `ab` extracted.
    pub fn sqrt_rational(q: &Rational) -> Result<Self, ExactError> {
        if q.is_negative() {
            return Err(ExactError::NegativeRadicand);
        }
        if q.is_zero() {
            return Ok(Surd::zero());
        }
        let a = q.numer().to_biguint().expect("non-negative numerator");
        let b = q.denom().to_biguint().expect("positive denominator");
        let (square_part, rad) = square_free_split(&a * &b)?;
        let coeff = Rational::new(BigInt::from(square_part), q.denom().clone());
        let mut base = TermMap::new();
        map_insert(&mut base, rad, coeff);
        Ok(Surd {
            base,
            golden: TermMap::new(),
        })
    }

    /// `√((5−√5)/10)`, the smaller golden staircase coordinate.
    pub fn golden_x() -> Self {
        let mut golden = TermMap::new();
        golden.insert(1, Rational::one());
        Surd {
            base: TermMap::new(),
            golden,
        }
    }

    /// `√((5+√5)/10) = ((1+√5)/2)·√((5−√5)/10)`, the larger golden
    /// staircase coordinate.
    pub fn golden_y() -> Self {
        let mut golden = TermMap::new();
        golden.insert(1, rational(1, 2));
        golden.insert(5, rational(1, 2));
        Surd {
            base: TermMap::new(),
            golden,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_empty() && self.golden.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.golden.is_empty()
            && self.base.len() == 1
            && self.base.get(&1).is_some_and(|c| c.is_one())
    }

    /// The value as a plain rational, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        if !self.golden.is_empty() {
            return None;
        }
        match self.base.len() {
            0 => Some(Rational::zero()),
            1 => self.base.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Surd {
            base: map_scale(&self.base, s),
            golden: map_scale(&self.golden, s),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact sign: `-1`, `0`, or `+1`. Zero is decided syntactically from
    /// the normal form; nonzero values by adaptive-precision intervals.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        // x > 0, so a pure golden component has the sign of its M-factor;
        // a pure base component is decided directly.
        if self.golden.is_empty() {
            return map_sign(&self.base);
        }
        if self.base.is_empty() {
            return map_sign(&self.golden);
        }
        let mut bits = 64u32;
        loop {
            let (lo, hi) = self.interval(bits);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            bits = bits.checked_mul(2).expect("sign refinement runaway");
        }
    }

    /// Nearest `f64` to the exact value. Every radical is enclosed at 128
    /// fractional bits before rounding. Export-only; not used in verdicts.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let (lo, hi) = self.interval(128);
        let mid = (lo + hi) / Rational::from(BigInt::from(2));
        mid.to_f64().expect("finite rational")
    }

    /// Multiplicative inverse; `None` for zero.
    ///
    /// The golden component is cleared with the conjugate `u − v·x`, then the
    /// remaining multi-quadratic value is inverted by rationalizing one prime
    /// at a time.
    pub fn inverse(&self) -> Option<Surd> {
        if self.is_zero() {
            return None;
        }
        if self.golden.is_empty() {
            return map_inverse(&self.base).map(|base| Surd {
                base,
                golden: TermMap::new(),
            });
        }
        let conj = Surd {
            base: self.base.clone(),
            golden: map_neg(&self.golden),
        };
        let denom = self * &conj;
        debug_assert!(denom.golden.is_empty());
        let inv = map_inverse(&denom.base)?;
        Some(conj * Surd {
            base: inv,
            golden: TermMap::new(),
        })
    }

    /// Interval enclosure of the value at the given fractional precision.
    fn interval(&self, bits: u32) -> (Rational, Rational) {
        let (mut lo, mut hi) = map_interval(&self.base, bits);
        if !self.golden.is_empty() {
            let (vlo, vhi) = map_interval(&self.golden, bits);
            let (xlo, xhi) = golden_x_interval(bits);
            let candidates = [&vlo * &xlo, &vlo * &xhi, &vhi * &xlo, &vhi * &xhi];
            let pmin = candidates.iter().min().unwrap().clone();
            let pmax = candidates.iter().max().unwrap().clone();
            lo += pmin;
            hi += pmax;
        }
        (lo, hi)
    }

    /// Serialized term list; normal form is already guaranteed by
    /// construction.
    pub fn to_terms(&self) -> Result<Vec<SurdTerm>, ExactError> {
        let mut out = Vec::with_capacity(self.base.len() + self.golden.len());
        for (golden, map) in [(false, &self.base), (true, &self.golden)] {
            for (rad, coeff) in map {
                out.push(SurdTerm {
                    num: coeff
                        .numer()
                        .to_i64()
                        .ok_or(ExactError::CoefficientOverflow)?,
                    den: coeff
                        .denom()
                        .to_i64()
                        .ok_or(ExactError::CoefficientOverflow)?,
                    rad: *rad,
                    golden,
                });
            }
        }
        Ok(out)
    }

    /// Rebuild a value from serialized terms, re-normalizing as required:
    /// radicands are reduced to square-free form and like terms combined.
    pub fn from_terms(terms: &[SurdTerm]) -> Result<Self, ExactError> {
        let mut acc = Surd::zero();
        for t in terms {
            if t.den == 0 {
                return Err(ExactError::ZeroDenominator);
            }
            let mut part = Surd::radical(t.num, t.den, t.rad)?;
            if t.golden {
                part = part * Surd::golden_x();
            }
            acc = acc + part;
        }
        Ok(acc)
    }
}

/// Sign of a pure multi-quadratic component. All radicals are positive, so a
/// map whose coefficients share one sign is decided immediately; mixed signs
/// fall back to interval refinement.
fn map_sign(map: &TermMap) -> i8 {
    if map.is_empty() {
        return 0;
    }
    if map.values().all(|c| c.is_positive()) {
        return 1;
    }
    if map.values().all(|c| c.is_negative()) {
        return -1;
    }
    let mut bits = 64u32;
    loop {
        let (lo, hi) = map_interval(map, bits);
        if lo.is_positive() {
            return 1;
        }
        if hi.is_negative() {
            return -1;
        }
        bits = bits.checked_mul(2).expect("sign refinement runaway");
    }
}

fn map_interval(map: &TermMap, bits: u32) -> (Rational, Rational) {
    let mut lo = Rational::zero();
    let mut hi = Rational::zero();
    for (rad, coeff) in map {
        let (rlo, rhi) = sqrt_u64_interval(*rad, bits);
        if coeff.is_positive() {
            lo += coeff * rlo;
            hi += coeff * rhi;
        } else {
            lo += coeff * rhi;
            hi += coeff * rlo;
        }
    }
    (lo, hi)
}

/// `[s, s+1]/2^bits` enclosure of `√d` via integer square roots.
fn sqrt_u64_interval(d: u64, bits: u32) -> (Rational, Rational) {
    if d == 1 {
        return (Rational::one(), Rational::one());
    }
    let scaled = BigUint::from(d) << (2 * bits);
    let root = scaled.sqrt();
    let denom = BigInt::from(BigUint::one() << bits);
    (
        Rational::new(BigInt::from(root.clone()), denom.clone()),
        Rational::new(BigInt::from(root + BigUint::one()), denom),
    )
}

/// Enclosure of `√q` for a non-negative rational `q = a/b`, via
/// `√(a/b) = √(ab)/b`.
fn sqrt_rational_interval(q: &Rational, bits: u32) -> (Rational, Rational) {
    debug_assert!(!q.is_negative());
    if q.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    let a = q.numer().to_biguint().expect("non-negative");
    let b = q.denom().to_biguint().expect("positive");
    let scaled = (&a * &b) << (2 * bits);
    let root = scaled.sqrt();
    let denom = BigInt::from(&b << bits);
    (
        Rational::new(BigInt::from(root.clone()), denom.clone()),
        Rational::new(BigInt::from(root + BigUint::one()), denom),
    )
}

/// Enclosure of `x = √((5−√5)/10)`.
fn golden_x_interval(bits: u32) -> (Rational, Rational) {
    let (slo, shi) = sqrt_u64_interval(5, bits);
    let ten = Rational::from(BigInt::from(10));
    let five = Rational::from(BigInt::from(5));
    let sq_lo = (&five - &shi) / &ten;
    let sq_hi = (&five - &slo) / &ten;
    let (lo, _) = sqrt_rational_interval(&sq_lo, bits);
    let (_, hi) = sqrt_rational_interval(&sq_hi, bits);
    (lo, hi)
}

/// Invert a nonzero multi-quadratic value by conjugating away one prime at a
/// time: split `e = A + √p·B`, then `e·(A − √p·B)` is free of `p` and the
/// recursion bottoms out at a rational.
fn map_inverse(map: &TermMap) -> Option<TermMap> {
    if map.is_empty() {
        return None;
    }
    if map.len() == 1 {
        if let Some(c) = map.get(&1) {
            let mut out = TermMap::new();
            out.insert(1, c.recip());
            return Some(out);
        }
    }
    let p = map
        .keys()
        .find(|rad| **rad > 1)
        .map(|rad| smallest_prime_factor(*rad))
        .expect("non-rational map has a radical term");
    let conj: TermMap = map
        .iter()
        .map(|(rad, c)| {
            if rad % p == 0 {
                (*rad, -c.clone())
            } else {
                (*rad, c.clone())
            }
        })
        .collect();
    let reduced = map_mul(map, &conj);
    debug_assert!(reduced.keys().all(|rad| rad % p != 0));
    let inv_reduced = map_inverse(&reduced)?;
    Some(map_mul(&conj, &inv_reduced))
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut p = 3u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            return p;
        }
        p += 2;
    }
    n
}

/// `n = s²·f` with `f` square-free. Trial division up to the factoring
/// bound; beyond it only perfect squares and provably square-free residuals
/// are accepted, everything else fails loudly.
fn square_free_split(n: BigUint) -> Result<(BigUint, u64), ExactError> {
    if n.is_zero() {
        return Ok((BigUint::zero(), 1));
    }
    let mut rest = n.clone();
    let mut square = BigUint::one();
    let mut free: u64 = 1;
    let push_free = |p: u64, free: &mut u64| -> Result<(), ExactError> {
        *free = free
            .checked_mul(p)
            .ok_or_else(|| ExactError::UnsupportedRadicand(n.to_string()))?;
        Ok(())
    };
    let mut p = 2u64;
    while p <= FACTOR_BOUND {
        let bp = BigUint::from(p);
        if (&bp * &bp) > rest {
            break;
        }
        let mut count = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            count += 1;
        }
        for _ in 0..count / 2 {
            square *= &bp;
        }
        if count % 2 == 1 {
            push_free(p, &mut free)?;
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    if !rest.is_one() {
        let root = rest.sqrt();
        if &root * &root == rest {
            square *= root;
        } else if rest <= BigUint::from(RESIDUAL_BOUND) {
            let r = rest.to_u64().expect("bounded residual");
            push_free(r, &mut free)?;
        } else {
            return Err(ExactError::UnsupportedRadicand(n.to_string()));
        }
    }
    Ok((square, free))
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match (self - other).sign() {
            -1 => Ordering::Less,
            1 => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for Surd {
            type Output = Surd;
            fn $method(self, rhs: Surd) -> Surd {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&Surd> for Surd {
            type Output = Surd;
            fn $method(self, rhs: &Surd) -> Surd {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<Surd> for &Surd {
            type Output = Surd;
            fn $method(self, rhs: Surd) -> Surd {
                self.$method(&rhs)
            }
        }
    };
}

impl std::ops::Add<&Surd> for &Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        Surd {
            base: map_add(&self.base, &rhs.base),
            golden: map_add(&self.golden, &rhs.golden),
        }
    }
}
forward_binop!(Add, add);

impl std::ops::Sub<&Surd> for &Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        Surd {
            base: map_add(&self.base, &map_neg(&rhs.base)),
            golden: map_add(&self.golden, &map_neg(&rhs.golden)),
        }
    }
}
forward_binop!(Sub, sub);

impl std::ops::Mul<&Surd> for &Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        if self.is_zero() || rhs.is_zero() {
            return Surd::zero();
        }
        // (u₁ + v₁x)(u₂ + v₂x) = u₁u₂ + v₁v₂x² + (u₁v₂ + u₂v₁)x
        let mut base = map_mul(&self.base, &rhs.base);
        if !self.golden.is_empty() && !rhs.golden.is_empty() {
            let vv = map_mul(&self.golden, &rhs.golden);
            base = map_add(&base, &map_mul(&vv, &X_SQUARED));
        }
        let golden = map_add(
            &map_mul(&self.base, &rhs.golden),
            &map_mul(&self.golden, &rhs.base),
        );
        Surd { base, golden }
    }
}
forward_binop!(Mul, mul);

impl std::ops::Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            base: map_neg(&self.base),
            golden: map_neg(&self.golden),
        }
    }
}

impl std::ops::Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        -&self
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // The golden staircase coordinates get their short names.
        if self.base.is_empty() {
            if *self == Surd::golden_x() {
                return write!(f, "x");
            }
            if *self == -Surd::golden_x() {
                return write!(f, "-x");
            }
            if *self == Surd::golden_y() {
                return write!(f, "y");
            }
            if *self == -Surd::golden_y() {
                return write!(f, "-y");
            }
        }
        let mut first = true;
        for (golden, map) in [(false, &self.base), (true, &self.golden)] {
            for (rad, coeff) in map {
                let neg = coeff.is_negative();
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if neg {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let a = coeff.abs();
                let radical = *rad != 1;
                if a.is_one() && (radical || golden) {
                    // bare √rad or x
                } else {
                    write!(f, "{a}")?;
                    if radical || golden {
                        write!(f, "·")?;
                    }
                }
                if radical {
                    write!(f, "√{rad}")?;
                }
                if golden {
                    if radical {
                        write!(f, "·")?;
                    }
                    write!(f, "x")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd({self})")
    }
}

impl Serialize for Surd {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self.to_terms().map_err(serde::ser::Error::custom)?;
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Surd {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<SurdTerm>::deserialize(deserializer)?;
        Surd::from_terms(&terms).map_err(serde::de::Error::custom)
    }
}

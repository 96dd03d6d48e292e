use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{Prime, ResidueElement, Valuation};
use crate::error::{Error, Result};

/// An element of ℚ_p.
///
/// Three states are possible:
/// * exact: a rational number known to infinite precision,
/// * approximate: `p^v · u + O(p^(v+k))` with `u` a unit below `p^k`,
/// * vanished: `O(p^N)`, every known digit is zero and the valuation is unknown.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PadicNumber {
    p: Prime,
    repr: Repr,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Exact(BigRational),
    Approx { val: i64, unit: BigUint, prec: u32 },
    Vanished { abs: i64 },
}

/// `v_p(n)` for a nonzero integer.
pub(crate) fn int_valuation(p: u64, n: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    if let Some(mut x) = n.magnitude().to_u64() {
        let mut v = 0;
        while x % p == 0 {
            x /= p;
            v += 1;
        }
        return v;
    }
    let pb = BigUint::from(p);
    let mut x = n.magnitude().clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

/// Splits a nonzero rational as `p^v · a / b` with `a`, `b` prime to `p` and `b > 0`.
fn split_rational(p: u64, q: &BigRational) -> (i64, BigInt, BigInt) {
    let pb = BigInt::from(p);
    let vn = int_valuation(p, q.numer());
    let vd = int_valuation(p, q.denom());
    let a = q.numer() / pb.pow(vn as u32);
    let b = q.denom() / pb.pow(vd as u32);
    (vn - vd, a, b)
}

fn mod_inverse(b: &BigInt, m: &BigInt) -> BigInt {
    let eg = b.mod_floor(m).extended_gcd(m);
    debug_assert!(eg.gcd.is_one());
    eg.x.mod_floor(m)
}

/// `truncated_below` in machine words, when the rational and `p^(n-s)` are small.
fn small_truncation(p: u64, q: &BigRational, n: i64) -> Option<BigRational> {
    if q.is_zero() {
        return Some(BigRational::zero());
    }
    let (mut a, mut b) = (q.numer().to_i64()?, q.denom().to_i64()?);
    let p = p as i64;
    let mut v = 0i64;
    while a % p == 0 {
        a /= p;
        v += 1;
    }
    while b % p == 0 {
        b /= p;
        v -= 1;
    }
    if v >= n {
        return Some(BigRational::zero());
    }
    let s = v.min(0);
    let pow = |k: i64| (0..k).try_fold(1i64, |acc, _| acc.checked_mul(p).filter(|&x| x < 1 << 62));
    let modulus = pow(n - s)?;
    let shift = pow(v - s)?;
    let m = modulus as i128;
    let inv = (i128::from(b).extended_gcd(&m).x).rem_euclid(m);
    let x = (i128::from(shift) * i128::from(a).rem_euclid(m) % m * inv).rem_euclid(m);
    let x = BigInt::from(x);
    Some(if s == 0 { BigRational::from_integer(x) } else { BigRational::new(x, BigInt::from(pow(-s)?)) })
}

fn pow_big(p: Prime, k: i64) -> BigInt {
    debug_assert!(k >= 0);
    BigInt::from(p.get()).pow(k as u32)
}

fn rational_pow(p: Prime, e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(pow_big(p, e))
    } else {
        BigRational::new(BigInt::one(), pow_big(p, -e))
    }
}

impl PadicNumber {
    pub fn zero(p: Prime) -> Self {
        PadicNumber { p, repr: Repr::Exact(BigRational::zero()) }
    }

    pub fn one(p: Prime) -> Self {
        PadicNumber::integer(p, 1)
    }

    pub fn integer(p: Prime, n: i64) -> Self {
        PadicNumber { p, repr: Repr::Exact(BigRational::from_integer(n.into())) }
    }

    pub fn from_bigint(p: Prime, n: BigInt) -> Self {
        PadicNumber { p, repr: Repr::Exact(BigRational::from_integer(n)) }
    }

    /// The exact rational `n / d`.
    pub fn rational(p: Prime, n: i64, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(PadicNumber { p, repr: Repr::Exact(BigRational::new(n.into(), d.into())) })
    }

    pub fn from_rational(p: Prime, q: BigRational) -> Self {
        PadicNumber { p, repr: Repr::Exact(q) }
    }

    /// `p^e` exactly.
    pub fn prime_power(p: Prime, e: i64) -> Self {
        PadicNumber::from_rational(p, rational_pow(p, e))
    }

    /// `value + O(p^abs)`.
    pub fn with_precision(p: Prime, value: &BigRational, abs: i64) -> Self {
        if value.is_zero() {
            return PadicNumber { p, repr: Repr::Vanished { abs } };
        }
        let (v, a, b) = split_rational(p.get(), value);
        if v >= abs {
            return PadicNumber { p, repr: Repr::Vanished { abs } };
        }
        let prec = (abs - v) as u32;
        let m = pow_big(p, prec as i64);
        let u = (a * mod_inverse(&b, &m)).mod_floor(&m);
        PadicNumber { p, repr: Repr::Approx { val: v, unit: u.to_biguint().unwrap(), prec } }
    }

    /// Reduces the known precision to at most `abs` absolute digits.
    pub fn truncate(&self, abs: i64) -> Self {
        match self.abs_precision() {
            Some(a) if a <= abs => self.clone(),
            _ => {
                let rep = self.representative();
                PadicNumber::with_precision(self.p, &rep, abs)
            }
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.repr, Repr::Exact(_))
    }

    /// True only for the exact zero.
    pub fn is_zero(&self) -> bool {
        matches!(&self.repr, Repr::Exact(q) if q.is_zero())
    }

    /// True when every known digit is zero but the value is not known to be zero.
    pub fn is_vanished(&self) -> bool {
        matches!(self.repr, Repr::Vanished { .. })
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Exact(q) => Some(q),
            _ => None,
        }
    }

    /// A rational number congruent to `self` modulo its precision.
    pub fn representative(&self) -> BigRational {
        match &self.repr {
            Repr::Exact(q) => q.clone(),
            Repr::Approx { val, unit, .. } => {
                rational_pow(self.p, *val) * BigRational::from_integer(BigInt::from(unit.clone()))
            }
            Repr::Vanished { .. } => BigRational::zero(),
        }
    }

    /// Absolute precision `N` of a value known modulo `p^N`; `None` when exact.
    pub fn abs_precision(&self) -> Option<i64> {
        match &self.repr {
            Repr::Exact(_) => None,
            Repr::Approx { val, prec, .. } => Some(val + *prec as i64),
            Repr::Vanished { abs } => Some(*abs),
        }
    }

    pub fn valuation(&self) -> Result<Valuation> {
        match &self.repr {
            Repr::Exact(q) if q.is_zero() => Ok(Valuation::Infinite),
            Repr::Exact(q) => Ok(Valuation::Finite(int_valuation(self.p.get(), q.numer()) - int_valuation(self.p.get(), q.denom()))),
            Repr::Approx { val, .. } => Ok(Valuation::Finite(*val)),
            Repr::Vanished { abs } => Err(Error::InsufficientPrecision(format!("value is O({}^{abs})", self.p))),
        }
    }

    /// Finite valuation, rejecting zero.
    pub fn finite_valuation(&self) -> Result<i64> {
        match self.valuation()? {
            Valuation::Finite(v) => Ok(v),
            Valuation::Infinite => Err(Error::DivisionByZero),
        }
    }

    /// Valuation known from digits, `None` for exact zero and vanished values.
    fn known_valuation(&self) -> Option<i64> {
        match &self.repr {
            Repr::Exact(q) if q.is_zero() => None,
            Repr::Vanished { .. } => None,
            _ => self.valuation().ok().and_then(Valuation::finite),
        }
    }

    /// Unit part `u` together with its digit count `k`; exact values use `default_prec` digits.
    pub fn unit_part(&self, default_prec: u32) -> Option<(BigUint, u32)> {
        match &self.repr {
            Repr::Exact(q) if q.is_zero() => None,
            Repr::Exact(q) => {
                let (_, a, b) = split_rational(self.p.get(), q);
                let m = pow_big(self.p, default_prec as i64);
                let u = (a * mod_inverse(&b, &m)).mod_floor(&m);
                Some((u.to_biguint().unwrap(), default_prec))
            }
            Repr::Approx { unit, prec, .. } => Some((unit.clone(), *prec)),
            Repr::Vanished { .. } => None,
        }
    }

    /// The integer `X` in `[0, p^(n-m))` with `self ≡ p^m · X (mod p^n)`.
    ///
    /// Requires `v(self) ≥ m` and `n` within the known precision.
    pub(crate) fn scaled_digits(&self, m: i64, n: i64) -> BigInt {
        debug_assert!(n > m);
        let modulus = pow_big(self.p, n - m);
        match &self.repr {
            Repr::Exact(q) if q.is_zero() => BigInt::zero(),
            Repr::Exact(q) => {
                let (v, a, b) = split_rational(self.p.get(), q);
                debug_assert!(v >= m);
                if v >= n {
                    return BigInt::zero();
                }
                let x = pow_big(self.p, v - m) * a * mod_inverse(&b, &modulus);
                x.mod_floor(&modulus)
            }
            Repr::Approx { val, unit, .. } => {
                debug_assert!(*val >= m);
                if *val >= n {
                    return BigInt::zero();
                }
                (pow_big(self.p, val - m) * BigInt::from(unit.clone())).mod_floor(&modulus)
            }
            Repr::Vanished { .. } => BigInt::zero(),
        }
    }

    /// Builds `p^m · s + O(p^n)` from an integer `s` in `[0, p^(n-m))`.
    fn from_scaled(p: Prime, m: i64, n: i64, s: BigInt) -> Self {
        if s.is_zero() {
            return PadicNumber { p, repr: Repr::Vanished { abs: n } };
        }
        let t = int_valuation(p.get(), &s);
        let unit = s / pow_big(p, t);
        PadicNumber {
            p,
            repr: Repr::Approx { val: m + t, unit: unit.to_biguint().unwrap(), prec: (n - m - t) as u32 },
        }
    }

    fn check_prime(&self, other: &PadicNumber) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p.get(), other.p.get()));
        }
        Ok(())
    }

    fn add_impl(&self, other: &PadicNumber) -> PadicNumber {
        assert_eq!(self.p, other.p, "p-adic operands over different primes");
        let abs = match (self.abs_precision(), other.abs_precision()) {
            (None, None) => {
                let (Repr::Exact(a), Repr::Exact(b)) = (&self.repr, &other.repr) else { unreachable!() };
                return PadicNumber { p: self.p, repr: Repr::Exact(a + b) };
            }
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => a.min(b),
        };
        let m = [self.known_valuation(), other.known_valuation()].into_iter().flatten().fold(abs, i64::min);
        if m >= abs {
            return PadicNumber { p: self.p, repr: Repr::Vanished { abs } };
        }
        let modulus = pow_big(self.p, abs - m);
        let s = (self.scaled_digits(m, abs) + other.scaled_digits(m, abs)).mod_floor(&modulus);
        PadicNumber::from_scaled(self.p, m, abs, s)
    }

    fn mul_impl(&self, other: &PadicNumber) -> PadicNumber {
        assert_eq!(self.p, other.p, "p-adic operands over different primes");
        let p = self.p;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Exact(a), Repr::Exact(b)) => Repr::Exact(a * b),
            (Repr::Exact(z), _) | (_, Repr::Exact(z)) if z.is_zero() => Repr::Exact(BigRational::zero()),
            (Repr::Vanished { abs: a }, Repr::Vanished { abs: b }) => Repr::Vanished { abs: a + b },
            (Repr::Vanished { abs }, _) => Repr::Vanished { abs: abs + other.known_valuation().unwrap() },
            (_, Repr::Vanished { abs }) => Repr::Vanished { abs: abs + self.known_valuation().unwrap() },
            (Repr::Approx { val: v1, unit: u1, prec: k1 }, Repr::Approx { val: v2, unit: u2, prec: k2 }) => {
                let k = (*k1).min(*k2);
                Repr::Approx { val: v1 + v2, unit: (u1 * u2) % p.pow(k), prec: k }
            }
            (Repr::Approx { val, unit, prec }, Repr::Exact(_)) => {
                let (uq, _) = other.unit_part(*prec).unwrap();
                let vq = other.known_valuation().unwrap();
                Repr::Approx { val: val + vq, unit: (unit * uq) % p.pow(*prec), prec: *prec }
            }
            (Repr::Exact(_), Repr::Approx { .. }) => return other.mul_impl(self),
        };
        PadicNumber { p, repr }
    }

    pub fn checked_add(&self, other: &PadicNumber) -> Result<PadicNumber> {
        self.check_prime(other)?;
        let s = self.add_impl(other);
        if s.is_vanished() && !(self.is_vanished() && other.is_vanished()) {
            return Err(Error::CancellationBeyondPrecision);
        }
        Ok(s)
    }

    pub fn checked_sub(&self, other: &PadicNumber) -> Result<PadicNumber> {
        self.checked_add(&other.neg_impl())
    }

    pub fn checked_mul(&self, other: &PadicNumber) -> Result<PadicNumber> {
        self.check_prime(other)?;
        Ok(self.mul_impl(other))
    }

    pub fn checked_div(&self, other: &PadicNumber) -> Result<PadicNumber> {
        self.check_prime(other)?;
        Ok(self.mul_impl(&other.inv()?))
    }

    pub fn inv(&self) -> Result<PadicNumber> {
        let repr = match &self.repr {
            Repr::Exact(q) if q.is_zero() => return Err(Error::DivisionByZero),
            Repr::Exact(q) => Repr::Exact(q.recip()),
            Repr::Approx { val, unit, prec } => {
                let m = pow_big(self.p, *prec as i64);
                let u = mod_inverse(&BigInt::from(unit.clone()), &m);
                Repr::Approx { val: -val, unit: u.to_biguint().unwrap(), prec: *prec }
            }
            Repr::Vanished { abs } => {
                return Err(Error::InsufficientPrecision(format!("cannot invert O({}^{abs})", self.p)))
            }
        };
        Ok(PadicNumber { p: self.p, repr })
    }

    fn neg_impl(&self) -> PadicNumber {
        let repr = match &self.repr {
            Repr::Exact(q) => Repr::Exact(-q),
            Repr::Approx { val, unit, prec } => Repr::Approx { val: *val, unit: self.p.pow(*prec) - unit, prec: *prec },
            Repr::Vanished { abs } => Repr::Vanished { abs: *abs },
        };
        PadicNumber { p: self.p, repr }
    }

    pub fn pow(&self, e: u32) -> PadicNumber {
        let mut acc = PadicNumber::one(self.p);
        for _ in 0..e {
            acc = acc.mul_impl(self);
        }
        acc
    }

    /// Keeps the base-p digits at positions `< n` and zeroes the rest.
    ///
    /// The result is exact: a rational `m / p^s` with `0 ≤ m / p^s < p^n`.
    pub fn truncated_below(&self, n: i64) -> Result<PadicNumber> {
        if let Some(abs) = self.abs_precision() {
            if abs < n {
                return Err(Error::InsufficientPrecision(format!(
                    "digit {} of a value known modulo {}^{abs} is required",
                    n - 1,
                    self.p
                )));
            }
        }
        if let Repr::Exact(q) = &self.repr {
            if let Some(t) = small_truncation(self.p.get(), q, n) {
                return Ok(PadicNumber::from_rational(self.p, t));
            }
        }
        let Some(v) = self.known_valuation() else {
            return Ok(PadicNumber::zero(self.p));
        };
        if v >= n {
            return Ok(PadicNumber::zero(self.p));
        }
        let s = v.min(0);
        let digits = self.scaled_digits(s, n);
        Ok(PadicNumber::from_rational(self.p, BigRational::from_integer(digits) * rational_pow(self.p, s)))
    }

    /// Image in the residue sphere: `a mod p` when `|a| ≤ 1`, else `∞`.
    pub fn residue(&self) -> Result<ResidueElement> {
        match &self.repr {
            Repr::Vanished { abs } if *abs >= 1 => Ok(ResidueElement::new(self.p, 0)),
            Repr::Vanished { .. } => Err(Error::InsufficientPrecision(
                "residue of a value with unknown integrality".into(),
            )),
            _ => match self.valuation()? {
                Valuation::Infinite => Ok(ResidueElement::new(self.p, 0)),
                Valuation::Finite(v) if v < 0 => Ok(ResidueElement::Infinity),
                Valuation::Finite(v) if v > 0 => Ok(ResidueElement::new(self.p, 0)),
                Valuation::Finite(_) => {
                    let d = self.scaled_digits(0, 1);
                    Ok(ResidueElement::new(self.p, d.to_i64().unwrap()))
                }
            },
        }
    }

    /// Renders as `p^v * u mod p^(v+k)`; exact values use `prec` digits.
    pub fn describe(&self, prec: u32) -> String {
        let p = self.p;
        match &self.repr {
            Repr::Exact(q) if q.is_zero() => "0".to_string(),
            Repr::Vanished { abs } => format!("0 mod {p}^({abs})"),
            _ => {
                let v = self.known_valuation().unwrap();
                let (u, k) = self.unit_part(prec).unwrap();
                format!("{p}^{v} * {u} mod {p}^({})", v + k as i64)
            }
        }
    }
}

impl fmt::Display for PadicNumber {
    /// Literal form accepted by the parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rep = self.representative();
        let write_rat = |f: &mut fmt::Formatter<'_>, q: &BigRational| {
            if q.is_integer() {
                write!(f, "{}", q.numer())
            } else {
                write!(f, "{}/{}", q.numer(), q.denom())
            }
        };
        write_rat(f, &rep)?;
        if let Some(abs) = self.abs_precision() {
            write!(f, " + O({}^{abs})", self.p)?;
        }
        Ok(())
    }
}

impl serde::Serialize for PadicNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&PadicNumber> for &PadicNumber {
            type Output = PadicNumber;
            fn $method(self, rhs: &PadicNumber) -> PadicNumber {
                $body(self, rhs)
            }
        }
        impl $tr<PadicNumber> for PadicNumber {
            type Output = PadicNumber;
            fn $method(self, rhs: PadicNumber) -> PadicNumber {
                $body(&self, &rhs)
            }
        }
        impl $tr<&PadicNumber> for PadicNumber {
            type Output = PadicNumber;
            fn $method(self, rhs: &PadicNumber) -> PadicNumber {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &PadicNumber, b: &PadicNumber| a.add_impl(b));
forward_binop!(Sub, sub, |a: &PadicNumber, b: &PadicNumber| a.add_impl(&b.neg_impl()));
forward_binop!(Mul, mul, |a: &PadicNumber, b: &PadicNumber| a.mul_impl(b));

impl Neg for &PadicNumber {
    type Output = PadicNumber;
    fn neg(self) -> PadicNumber {
        self.neg_impl()
    }
}

impl Neg for PadicNumber {
    type Output = PadicNumber;
    fn neg(self) -> PadicNumber {
        self.neg_impl()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn int(pr: u64, n: i64) -> PadicNumber {
        PadicNumber::integer(p(pr), n)
    }

    fn approx(pr: u64, n: i64, abs: i64) -> PadicNumber {
        PadicNumber::with_precision(p(pr), &BigRational::from_integer(n.into()), abs)
    }

    #[test]
    fn exact_sum_of_small_integers() {
        let s = int(3, 1).checked_add(&int(3, 2)).unwrap();
        assert_eq!(s.valuation().unwrap(), Valuation::Finite(1));
        assert_eq!(s, int(3, 3));
        assert_eq!(s.describe(4), "3^1 * 1 mod 3^(5)");
    }

    #[test]
    fn additive_identity() {
        let x = PadicNumber::rational(p(5), 7, 25).unwrap();
        assert_eq!(x.checked_add(&PadicNumber::zero(p(5))).unwrap(), x);
        let y = approx(5, 7, 3);
        assert_eq!(y.checked_add(&PadicNumber::zero(p(5))).unwrap(), y);
    }

    #[test]
    fn full_cancellation_is_reported() {
        let a = approx(3, 1, 2);
        let b = approx(3, -1, 2);
        assert_eq!(a.checked_add(&b), Err(Error::CancellationBeyondPrecision));
        let s = &a + &b;
        assert!(s.is_vanished());
        assert!(matches!(s.valuation(), Err(Error::InsufficientPrecision(_))));
    }

    #[test]
    fn exact_cancellation_is_a_true_zero() {
        let s = int(3, 1).checked_add(&int(3, -1)).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.valuation().unwrap(), Valuation::Infinite);
    }

    #[test]
    fn precision_of_sums_follows_absolute_rule() {
        // (1 + O(3^4)) + (2 + O(3^3)) = 3 + O(3^3): v = 1, k = 2
        let s = approx(3, 1, 4).checked_add(&approx(3, 2, 3)).unwrap();
        assert_eq!(s.valuation().unwrap(), Valuation::Finite(1));
        assert_eq!(s.abs_precision(), Some(3));
        assert_eq!(s.unit_part(0).unwrap(), (BigUint::from(1u32), 2));
    }

    #[test]
    fn valuation_is_additive_under_products() {
        assert_eq!((int(3, 6) * int(3, 9)).valuation().unwrap(), Valuation::Finite(3));
        let a = approx(7, 14, 5);
        let b = approx(7, 49 * 3, 6);
        let prod = a.checked_mul(&b).unwrap();
        assert_eq!(prod.valuation().unwrap(), Valuation::Finite(3));
        // k = min(4, 4)
        assert_eq!(prod.abs_precision(), Some(7));
    }

    #[test]
    fn inverses() {
        let i = int(5, 5).inv().unwrap();
        assert_eq!(i.valuation().unwrap(), Valuation::Finite(-1));
        assert_eq!(i.describe(3), "5^-1 * 1 mod 5^(2)");
        assert_eq!(PadicNumber::zero(p(5)).inv(), Err(Error::DivisionByZero));
        for n in [1i64, 3, 10, 48, 343 * 2] {
            let a = approx(7, n, 8);
            let one = &a * &a.inv().unwrap();
            assert_eq!(one.valuation().unwrap(), Valuation::Finite(0));
            assert_eq!(one.unit_part(0).unwrap().0, BigUint::one());
        }
    }

    #[test]
    fn valuations() {
        assert_eq!(int(3, 18).valuation().unwrap(), Valuation::Finite(2));
        assert_eq!(PadicNumber::zero(p(3)).valuation().unwrap(), Valuation::Infinite);
        assert_eq!(PadicNumber::rational(p(2), 3, 4).unwrap().valuation().unwrap(), Valuation::Finite(-2));
    }

    #[test]
    fn residues() {
        assert_eq!(int(5, 7).residue().unwrap(), ResidueElement::new(p(5), 2));
        assert_eq!(PadicNumber::rational(p(3), 1, 3).unwrap().residue().unwrap(), ResidueElement::Infinity);
        assert_eq!(int(3, 6).residue().unwrap(), ResidueElement::new(p(3), 0));
        // 1/2 ≡ 3 mod 5
        assert_eq!(PadicNumber::rational(p(5), 1, 2).unwrap().residue().unwrap(), ResidueElement::new(p(5), 3));
        assert!(approx(3, 0, 0).residue().is_err());
        assert_eq!(approx(3, 0, 1).residue().unwrap(), ResidueElement::new(p(3), 0));
    }

    #[test]
    fn negation_of_approximate_values() {
        let a = approx(3, 1, 2);
        let n = -&a;
        assert_eq!(n.unit_part(0).unwrap(), (BigUint::from(8u32), 2));
    }

    #[test]
    fn truncation_keeps_low_digits() {
        // 4 = 1 + 1·3
        assert_eq!(int(3, 4).truncated_below(1).unwrap(), int(3, 1));
        assert_eq!(int(3, 4).truncated_below(0).unwrap(), PadicNumber::zero(p(3)));
        assert_eq!(int(3, 4).truncated_below(5).unwrap(), int(3, 4));
        // -1 = 2 + 2·3 + ...
        assert_eq!(int(3, -1).truncated_below(2).unwrap(), int(3, 8));
        // 4/3 = 1/3 + 1 : digits below 0 give 1/3
        let q = PadicNumber::rational(p(3), 4, 3).unwrap();
        assert_eq!(q.truncated_below(0).unwrap(), PadicNumber::rational(p(3), 1, 3).unwrap());
        assert!(approx(3, 1, 2).truncated_below(3).is_err());
        assert_eq!(approx(3, 10, 2).truncated_below(2).unwrap(), int(3, 1));
    }

    #[test]
    fn word_sized_truncation_matches_big_path() {
        let big = |x: &PadicNumber, n: i64| {
            let v = x.known_valuation().unwrap();
            if v >= n {
                return BigRational::zero();
            }
            let s = v.min(0);
            BigRational::from_integer(x.scaled_digits(s, n)) * rational_pow(x.p, s)
        };
        for pr in [2u64, 3, 5, 7] {
            for a in -40i64..=40 {
                for b in [1i64, 2, 3, 4, 9, 10, 25, 49] {
                    let x = PadicNumber::rational(p(pr), a, b).unwrap();
                    for n in -3..8 {
                        let fast = small_truncation(pr, x.as_rational().unwrap(), n).unwrap();
                        let slow = if a == 0 { BigRational::zero() } else { big(&x, n) };
                        assert_eq!(fast, slow, "{a}/{b} mod {pr}^{n}");
                    }
                }
            }
        }
        // too wide for machine words
        let q = BigRational::from_integer(5.into());
        assert!(small_truncation(3, &q, 60).is_none());
    }
}

//! Reduction modulo the maximal ideal.

use std::fmt;

use serde::Serialize;

use super::{Polynomial, RationalMap};
use crate::error::{Error, Result};
use crate::padic::{PadicNumber, Prime};

/// A polynomial over 𝔽_p, coefficients low to high, trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

impl FpPoly {
    pub fn new(p: Prime, coeffs: Vec<i64>) -> Self {
        let m = p.get() as i128;
        Self::from_raw(p.get(), coeffs.into_iter().map(|c| (c as i128).rem_euclid(m) as u64).collect())
    }

    fn from_raw(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        Self::from_raw(self.p, self.coeffs.iter().map(|&a| mulmod(a, c, self.p)).collect())
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_raw(self.p, (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % self.p).collect())
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return Self::from_raw(self.p, Vec::new());
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, self.p)) % self.p;
            }
        }
        Self::from_raw(self.p, out)
    }

    pub fn compose(&self, g: &FpPoly) -> FpPoly {
        let mut acc = Self::from_raw(self.p, Vec::new());
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::from_raw(self.p, vec![c]));
        }
        acc
    }

    pub fn div_rem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = invmod(d.coeffs[dd], self.p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let q = mulmod(rem[k], inv, self.p);
            for (j, &c) in d.coeffs.iter().enumerate() {
                let t = mulmod(q, c, self.p);
                rem[k - dd + j] = (rem[k - dd + j] + self.p - t) % self.p;
            }
            quot[k - dd] = q;
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (Self::from_raw(self.p, quot), Self::from_raw(self.p, rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> FpPoly {
        match self.coeffs.last() {
            Some(&l) => self.scale(invmod(l, self.p)),
            None => self.clone(),
        }
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            terms.push(match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "z".to_string(),
                (1, c) => format!("{c}*z"),
                (i, 1) => format!("z^{i}"),
                (i, c) => format!("{c}*z^{i}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// A reduced rational map `num/den` over 𝔽_p with coprime parts and monic denominator.
/// The zero denominator stands for the constant `∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpRational {
    pub num: FpPoly,
    pub den: FpPoly,
}

impl FpRational {
    pub fn is_constant(&self) -> bool {
        self.den.is_zero() || self.num.is_zero() || self.degree() == 0
    }

    /// `max(deg num, deg den)`, zero parts counting as degree 0.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }
}

impl fmt::Display for FpRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_zero() {
            return f.write_str("inf");
        }
        if self.den.degree() == Some(0) {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductionKind {
    Trivial,
    NonTrivial,
    Good,
}

impl ReductionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ReductionKind::Trivial => "trivial",
            ReductionKind::NonTrivial => "nontrivial",
            ReductionKind::Good => "good",
        }
    }

    /// Good reduction is in particular non-trivial.
    pub fn is_nontrivial(self) -> bool {
        self != ReductionKind::Trivial
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionClass {
    pub kind: ReductionKind,
    pub reduced: FpRational,
}

impl Serialize for ReductionClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            class: &'a str,
            reduced: String,
        }
        Out { class: self.kind.as_str(), reduced: self.reduced.to_string() }.serialize(s)
    }
}

pub(crate) fn min_valuation(coeffs: &[&PadicNumber]) -> Result<Option<i64>> {
    let mut best: Option<i64> = None;
    let mut vague: Option<i64> = None;
    for c in coeffs {
        if c.is_vanished() {
            let a = c.abs_precision().unwrap();
            vague = Some(vague.map_or(a, |v: i64| v.min(a)));
        } else if !c.is_zero() {
            let v = c.finite_valuation()?;
            best = Some(best.map_or(v, |b| b.min(v)));
        }
    }
    if let Some(a) = vague {
        if best.is_none_or(|b| a <= b) {
            return Err(Error::InsufficientPrecision("a vanished coefficient may carry the largest norm".into()));
        }
    }
    Ok(best)
}

fn reduce_coeffs(p: Prime, coeffs: &[PadicNumber], m: i64) -> Result<FpPoly> {
    let scale = PadicNumber::prime_power(p, -m);
    let mut out = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        let r = if c.is_zero() { 0 } else { (c * &scale).residue()?.value().unwrap() };
        out.push(r as i64);
    }
    Ok(FpPoly::new(p, out))
}

fn classify(num: &Polynomial, den: &Polynomial) -> Result<ReductionClass> {
    let p = num.prime();
    let all: Vec<&PadicNumber> = num.coeffs().iter().chain(den.coeffs()).collect();
    let m = min_valuation(&all)?.ok_or(Error::ZeroPolynomial)?;
    let mut rn = reduce_coeffs(p, num.coeffs(), m)?;
    let mut rd = reduce_coeffs(p, den.coeffs(), m)?;
    if !rn.is_zero() && !rd.is_zero() {
        let g = rn.gcd(&rd);
        rn = rn.div_rem(&g).0;
        rd = rd.div_rem(&g).0;
        let lead = invmod(*rd.coeffs.last().unwrap(), rd.p);
        rn = rn.scale(lead);
        rd = rd.scale(lead);
    } else if rd.is_zero() {
        rn = FpPoly::new(p, vec![1]);
    } else {
        rd = FpPoly::new(p, vec![1]);
    }
    let reduced = FpRational { num: rn, den: rd };
    let original = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));
    let kind = if reduced.is_constant() {
        ReductionKind::Trivial
    } else if reduced.degree() == original {
        ReductionKind::Good
    } else {
        ReductionKind::NonTrivial
    };
    Ok(ReductionClass { kind, reduced })
}

/// Reduction of `f`, read as the rational map `f/1`.
pub fn reduce_polynomial(f: &Polynomial) -> Result<ReductionClass> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    classify(f, &Polynomial::constant(PadicNumber::one(f.prime())))
}

/// Reduction after scaling numerator and denominator by one common power of `p`.
pub fn reduce_rational_map(r: &RationalMap) -> Result<ReductionClass> {
    let (num, den) = r.unscaled_parts();
    if num.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    classify(&num, &den)
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::AnalyticMap;
use crate::error::{Error, Result};
use crate::hyperspace::HPoint;
use crate::padic::{PadicNumber, Prime, RadiusExp, Valuation};

/// A polynomial over ℚ_p, coefficients stored from degree 0 upwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    p: Prime,
    coeffs: Vec<PadicNumber>,
}

impl Polynomial {
    /// Trailing exact zeros are trimmed.
    pub fn new(p: Prime, mut coeffs: Vec<PadicNumber>) -> Self {
        while coeffs.last().is_some_and(PadicNumber::is_zero) {
            coeffs.pop();
        }
        Polynomial { p, coeffs }
    }

    pub fn from_integers(p: Prime, coeffs: &[i64]) -> Self {
        Polynomial::new(p, coeffs.iter().map(|&c| PadicNumber::integer(p, c)).collect())
    }

    pub fn zero(p: Prime) -> Self {
        Polynomial { p, coeffs: Vec::new() }
    }

    pub fn constant(c: PadicNumber) -> Self {
        Polynomial::new(c.prime(), vec![c])
    }

    /// The identity map `z`.
    pub fn identity(p: Prime) -> Self {
        Polynomial::from_integers(p, &[0, 1])
    }

    /// `c · z^n`.
    pub fn monomial(c: PadicNumber, n: usize) -> Self {
        let p = c.prime();
        let mut coeffs = vec![PadicNumber::zero(p); n];
        coeffs.push(c);
        Polynomial::new(p, coeffs)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn coeffs(&self) -> &[PadicNumber] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> PadicNumber {
        self.coeffs.get(i).cloned().unwrap_or_else(|| PadicNumber::zero(self.p))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.coeffs.iter().all(PadicNumber::is_exact)
    }

    /// Number of exact zero coefficients below the first nonzero one.
    pub fn order_at_zero(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn eval(&self, x: &PadicNumber) -> PadicNumber {
        let mut acc = PadicNumber::zero(self.p);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &PadicNumber::integer(self.p, i as i64))
            .collect();
        Polynomial::new(self.p, coeffs)
    }

    pub fn scale(&self, c: &PadicNumber) -> Polynomial {
        Polynomial::new(self.p, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `self ∘ g`, evaluated by Horner's scheme over polynomials.
    pub fn compose(&self, g: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(self.p);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// Coefficients of `h ↦ f(a + h)`.
    pub fn taylor_shift(&self, a: &PadicNumber) -> Polynomial {
        let lin = Polynomial::new(self.p, vec![a.clone(), PadicNumber::one(self.p)]);
        self.compose(&lin)
    }

    /// Drops every term of degree above `n`.
    pub fn truncate(&self, n: usize) -> Polynomial {
        Polynomial::new(self.p, self.coeffs.iter().take(n + 1).cloned().collect())
    }

    /// Euclidean division by a divisor with invertible leading coefficient.
    pub fn div_rem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![PadicNumber::zero(self.p); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let q = &rem[k] * &lead_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k - dd + j] = &rem[k - dd + j] - &(&q * dc);
            }
            quot[k - dd] = q;
            rem.pop();
            while rem.last().is_some_and(PadicNumber::is_zero) {
                rem.pop();
            }
        }
        Ok((Polynomial::new(self.p, quot), Polynomial::new(self.p, rem)))
    }

    /// Monic gcd for exact coefficients; `None` when some coefficient is approximate.
    pub fn gcd(&self, other: &Polynomial) -> Result<Option<Polynomial>> {
        if !self.is_exact() || !other.is_exact() {
            return Ok(None);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Ok(Some(a));
        }
        let lead = a.coeffs.last().unwrap().inv()?;
        Ok(Some(a.scale(&lead)))
    }

    /// `log_p sup_{z ∈ ball} |f(z)| = max_i (log_p|c'_i| + i·r)` with `c'` the Taylor expansion at the center.
    pub fn gauss_norm_exp(&self, ball: &HPoint) -> Result<RadiusExp> {
        let shifted = self.taylor_shift(ball.center());
        norm_over_terms(&shifted.coeffs, ball.rexp(), 0)?.ok_or(Error::ZeroPolynomial)
    }

    /// Image ball `f_*(P)`: center `f(w)`, radius `max_{i ≥ 1} |c'_i| p^{ir}`.
    pub fn induced_image(&self, point: &HPoint) -> Result<HPoint> {
        let shifted = self.taylor_shift(point.center());
        let r = norm_over_terms(&shifted.coeffs, point.rexp(), 1)?.ok_or(Error::DegenerateConstant)?;
        HPoint::new(shifted.coeff(0), r)
    }

    /// Parses either a comma-separated coefficient list (low to high)
    /// or a symbolic integer polynomial such as `z+z^2` or `3 - 2*z^3`.
    pub fn parse(p: Prime, text: &str) -> Result<Polynomial> {
        if text.contains('z') {
            parse_symbolic(p, text)
        } else {
            let coeffs = text.split(',').map(|c| PadicNumber::parse(p, c)).collect::<Result<Vec<_>>>()?;
            Ok(Polynomial::new(p, coeffs))
        }
    }
}

/// `max_{i ≥ start} (log_p|c_i| + i·r)`, or `None` when all those coefficients are exact zeros.
pub(crate) fn norm_over_terms(coeffs: &[PadicNumber], r: RadiusExp, start: usize) -> Result<Option<RadiusExp>> {
    let mut best: Option<RadiusExp> = None;
    let mut vague: Option<RadiusExp> = None;
    for (i, c) in coeffs.iter().enumerate().skip(start) {
        let shift = r * i as i64;
        if c.is_vanished() {
            let bound = RadiusExp::from_valuation(c.abs_precision().unwrap()) + shift;
            vague = Some(vague.map_or(bound, |v: RadiusExp| v.max(bound)));
            continue;
        }
        if let Valuation::Finite(v) = c.valuation()? {
            let t = RadiusExp::from_valuation(v) + shift;
            best = Some(best.map_or(t, |b| b.max(t)));
        }
    }
    if let Some(v) = vague {
        if best.is_none_or(|b| v >= b) {
            return Err(Error::InsufficientPrecision("a vanished coefficient may dominate the norm".into()));
        }
    }
    Ok(best)
}

fn parse_symbolic(p: Prime, text: &str) -> Result<Polynomial> {
    let bad = || Error::MalformedLiteral(text.to_string());
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut coeffs: Vec<i64> = Vec::new();
    for t in terms {
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t.strip_prefix('+').unwrap_or(&t)),
        };
        if body.is_empty() {
            return Err(bad());
        }
        let (coef, deg) = match body.split_once('z') {
            None => (body.parse::<i64>().map_err(|_| bad())?, 0usize),
            Some((c, e)) => {
                let c = c.strip_suffix('*').unwrap_or(c);
                let c = if c.is_empty() { 1 } else { c.parse::<i64>().map_err(|_| bad())? };
                let e = if e.is_empty() {
                    1
                } else {
                    e.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?
                };
                (c, e)
            }
        };
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0);
        }
        coeffs[deg] += if neg { -coef } else { coef };
    }
    Ok(Polynomial::from_integers(p, &coeffs))
}

impl AnalyticMap for Polynomial {
    fn prime(&self) -> Prime {
        self.p
    }

    fn eval(&self, x: &PadicNumber) -> Result<PadicNumber> {
        Ok(Polynomial::eval(self, x))
    }

    fn eval_derivative(&self, x: &PadicNumber) -> Result<PadicNumber> {
        Ok(self.derivative().eval(x))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ints: Option<Vec<_>> =
            self.coeffs.iter().map(|c| c.as_rational().filter(|q| q.is_integer()).map(|q| q.numer().clone())).collect();
        let Some(ints) = ints else {
            let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
            return f.write_str(&parts.join(","));
        };
        let mut first = true;
        for (i, c) in ints.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude().to_string();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.as_str()) {
                (0, m) => f.write_str(m)?,
                (1, "1") => f.write_str("z")?,
                (1, m) => write!(f, "{m}*z")?,
                (_, "1") => write!(f, "z^{i}")?,
                (_, m) => write!(f, "{m}*z^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(self.p, (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(self.p, (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.p, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.p);
        }
        let mut out = vec![PadicNumber::zero(self.p); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(self.p, out)
    }
}

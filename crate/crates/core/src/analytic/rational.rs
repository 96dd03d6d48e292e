use std::fmt;

use super::reduction::min_valuation;
use super::{AnalyticMap, Polynomial};
use crate::error::{Error, Result};
use crate::padic::{PadicNumber, Prime};

/// `p^scale · num / den` with `num`, `den` of coefficient norm 1 and
/// coprime over ℚ when their coefficients are exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMap {
    num: Polynomial,
    den: Polynomial,
    scale: i64,
}

fn primitive(f: &Polynomial) -> Result<(Polynomial, i64)> {
    let all: Vec<&PadicNumber> = f.coeffs().iter().collect();
    match min_valuation(&all)? {
        None => Ok((f.clone(), 0)),
        Some(m) => Ok((f.scale(&PadicNumber::prime_power(f.prime(), -m)), m)),
    }
}

impl RationalMap {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.prime() != den.prime() {
            return Err(Error::PrimeMismatch(num.prime().get(), den.prime().get()));
        }
        let (mut num, mut den) = (num, den);
        if let Some(g) = num.gcd(&den)? {
            if g.degree().unwrap_or(0) > 0 {
                num = num.div_rem(&g)?.0;
                den = den.div_rem(&g)?.0;
            }
        }
        let (num, a) = primitive(&num)?;
        let (den, b) = primitive(&den)?;
        Ok(RationalMap { num, den, scale: a - b })
    }

    pub fn from_polynomial(f: Polynomial) -> Result<Self> {
        let one = Polynomial::constant(PadicNumber::one(f.prime()));
        RationalMap::new(f, one)
    }

    /// `z ↦ 1/z`.
    pub fn inversion(p: Prime) -> Self {
        RationalMap::new(Polynomial::from_integers(p, &[1]), Polynomial::identity(p)).unwrap()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    /// The recorded scaling exponent `s` in `p^s · num / den`.
    pub fn scale_exp(&self) -> i64 {
        self.scale
    }

    /// Numerator and denominator with the scaling folded into the numerator.
    pub fn unscaled_parts(&self) -> (Polynomial, Polynomial) {
        (self.num.scale(&PadicNumber::prime_power(self.num.prime(), self.scale)), self.den.clone())
    }

    fn den_at(&self, x: &PadicNumber) -> Result<PadicNumber> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleInDomain(x.to_string()));
        }
        Ok(d)
    }
}

impl AnalyticMap for RationalMap {
    fn prime(&self) -> Prime {
        self.num.prime()
    }

    fn eval(&self, x: &PadicNumber) -> Result<PadicNumber> {
        let d = self.den_at(x)?;
        let s = PadicNumber::prime_power(self.prime(), self.scale);
        (&self.num.eval(x) * &s).checked_div(&d)
    }

    fn eval_derivative(&self, x: &PadicNumber) -> Result<PadicNumber> {
        let d = self.den_at(x)?;
        let top = &(&self.num.derivative().eval(x) * &d) - &(&self.num.eval(x) * &self.den.derivative().eval(x));
        let s = PadicNumber::prime_power(self.prime(), self.scale);
        (&top * &s).checked_div(&(&d * &d))
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.unscaled_parts();
        write!(f, "({n})/({d})")
    }
}

use std::fmt;

use super::HPoint;
use crate::error::{Error, Result};
use crate::padic::{PadicNumber, Prime};

/// A point of ℙ¹(ℚ_p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum P1Point {
    Finite(PadicNumber),
    Infinity,
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Point::Finite(z) => write!(f, "{z}"),
            P1Point::Infinity => f.write_str("inf"),
        }
    }
}

/// `z ↦ (az + b) / (cz + d)` with `ad - bc ≠ 0`, up to scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homography {
    a: PadicNumber,
    b: PadicNumber,
    c: PadicNumber,
    d: PadicNumber,
    steps: Result<Steps>,
}

/// The generator decomposition used by the action on ℍ_p, computed once.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Steps {
    /// `T_t ∘ M_λ`
    Affine { lambda: PadicNumber, t: PadicNumber },
    /// `T_t ∘ M_λ ∘ I ∘ T_s`
    Inverting { s: PadicNumber, lambda: PadicNumber, t: PadicNumber },
}

impl Steps {
    fn of(a: &PadicNumber, b: &PadicNumber, c: &PadicNumber, d: &PadicNumber) -> Result<Steps> {
        if c.valuation()?.is_infinite() {
            return Ok(Steps::Affine { lambda: a.checked_div(d)?, t: b.checked_div(d)? });
        }
        let lambda = (b * c - a * d).checked_div(&(c * c))?;
        Ok(Steps::Inverting { s: d.checked_div(c)?, lambda, t: a.checked_div(c)? })
    }
}

impl Homography {
    pub fn new(a: PadicNumber, b: PadicNumber, c: PadicNumber, d: PadicNumber) -> Result<Self> {
        let p = a.prime();
        for x in [&b, &c, &d] {
            if x.prime() != p {
                return Err(Error::PrimeMismatch(p.get(), x.prime().get()));
            }
        }
        let det = &a * &d - &b * &c;
        if det.valuation()?.is_infinite() {
            return Err(Error::SingularHomography);
        }
        let steps = Steps::of(&a, &b, &c, &d);
        Ok(Homography { a, b, c, d, steps })
    }

    pub fn identity(p: Prime) -> Self {
        Homography::affine(PadicNumber::one(p), PadicNumber::zero(p)).unwrap()
    }

    /// `z ↦ λz + t`.
    pub fn affine(lambda: PadicNumber, t: PadicNumber) -> Result<Self> {
        let p = lambda.prime();
        Homography::new(lambda, t, PadicNumber::zero(p), PadicNumber::one(p))
    }

    /// `z ↦ 1/z`.
    pub fn inversion(p: Prime) -> Self {
        Homography::new(PadicNumber::zero(p), PadicNumber::one(p), PadicNumber::one(p), PadicNumber::zero(p)).unwrap()
    }

    /// Parses `"a,b,c,d"`.
    pub fn parse(p: Prime, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        let [a, b, c, d] = parts.as_slice() else {
            return Err(Error::MalformedLiteral(text.to_string()));
        };
        Homography::new(
            PadicNumber::parse(p, a)?,
            PadicNumber::parse(p, b)?,
            PadicNumber::parse(p, c)?,
            PadicNumber::parse(p, d)?,
        )
    }

    pub fn prime(&self) -> Prime {
        self.a.prime()
    }

    pub fn entries(&self) -> [&PadicNumber; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn determinant(&self) -> PadicNumber {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Matrix product: `(self ∘ other)(z) = self(other(z))`.
    pub fn compose(&self, other: &Homography) -> Result<Homography> {
        Homography::new(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
    }

    pub fn inverse(&self) -> Homography {
        Homography::new(self.d.clone(), -&self.b, -&self.c, self.a.clone()).expect("the adjugate is invertible")
    }

    pub fn apply(&self, z: &P1Point) -> Result<P1Point> {
        let (num, den) = match z {
            P1Point::Finite(z) => (&self.a * z + &self.b, &self.c * z + &self.d),
            P1Point::Infinity => (self.a.clone(), self.c.clone()),
        };
        if den.valuation()?.is_infinite() {
            return Ok(P1Point::Infinity);
        }
        Ok(P1Point::Finite(num.checked_div(&den)?))
    }

    /// Applies the homography to a finite point that is not a pole.
    pub fn apply_finite(&self, z: &PadicNumber) -> Result<PadicNumber> {
        match self.apply(&P1Point::Finite(z.clone()))? {
            P1Point::Finite(w) => Ok(w),
            P1Point::Infinity => Err(Error::PoleInDomain(z.to_string())),
        }
    }

    /// The induced action on ℍ_p.
    ///
    /// `c = 0`: `T_{b/d} ∘ M_{a/d}`; otherwise `T_{a/c} ∘ M_{(bc-ad)/c²} ∘ I ∘ T_{d/c}`.
    pub fn act(&self, point: &HPoint) -> Result<HPoint> {
        if point.prime() != self.prime() {
            return Err(Error::PrimeMismatch(self.prime().get(), point.prime().get()));
        }
        match self.steps.clone()? {
            Steps::Affine { lambda, t } => point.scale(&lambda)?.translate(&t),
            Steps::Inverting { s, lambda, t } => point.translate(&s)?.invert()?.scale(&lambda)?.translate(&t),
        }
    }

    /// An affine map sending an integer-exponent point to the Gauss point.
    pub fn normalizing(point: &HPoint) -> Result<Homography> {
        let r = point.rexp().to_integer().ok_or_else(|| Error::FractionalExponent(point.rexp().to_string()))?;
        let p = point.prime();
        let lambda = PadicNumber::prime_power(p, r);
        let t = -(&lambda * point.center());
        Homography::affine(lambda, t)
    }
}

impl fmt::Display for Homography {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

impl serde::Serialize for Homography {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Homography", 4)?;
        st.serialize_field("a", &self.a)?;
        st.serialize_field("b", &self.b)?;
        st.serialize_field("c", &self.c)?;
        st.serialize_field("d", &self.d)?;
        st.end()
    }
}

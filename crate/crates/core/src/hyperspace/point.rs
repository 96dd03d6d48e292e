use std::fmt;

use crate::error::{Error, Result};
use crate::padic::{PadicNumber, Prime, RadiusExp, Valuation};

/// A rational point of ℍ_p: the closed ball `B̄(center, p^rexp)`.
///
/// Always stored in canonical form, so `==` decides whether two
/// representatives name the same point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HPoint {
    center: PadicNumber,
    rexp: RadiusExp,
}

/// `log_p |x|` with `None` standing for `log_p 0 = -∞`.
pub(crate) fn log_norm(x: &PadicNumber) -> Result<Option<RadiusExp>> {
    Ok(match x.valuation()? {
        Valuation::Finite(v) => Some(RadiusExp::from_valuation(v)),
        Valuation::Infinite => None,
    })
}

/// `log_p |a - b|`, answering `None` for equal arguments.
///
/// A difference known only to be `O(p^N)` is accepted when the caller
/// supplies a `floor` at or above `-N`: in that regime it cannot matter.
pub(crate) fn log_dist(a: &PadicNumber, b: &PadicNumber, floor: RadiusExp) -> Result<Option<RadiusExp>> {
    let d = a - b;
    match log_norm(&d) {
        Ok(l) => Ok(l),
        Err(e) => match d.abs_precision() {
            Some(abs) if RadiusExp::from_valuation(abs) <= floor => Ok(None),
            _ => Err(e),
        },
    }
}

impl HPoint {
    /// Canonical representative of the class of `(w, r)`.
    ///
    /// Digits of `w` at base-p positions `≥ ⌈-r⌉` are zeroed.
    pub fn new(center: PadicNumber, rexp: RadiusExp) -> Result<Self> {
        let center = center.truncated_below((-rexp).ceil())?;
        Ok(HPoint { center, rexp })
    }

    /// The Gauss point `(0, 0)`.
    pub fn gauss(p: Prime) -> Self {
        HPoint { center: PadicNumber::zero(p), rexp: RadiusExp::ZERO }
    }

    /// The point `S_r = (0, r)`.
    pub fn origin_ball(p: Prime, rexp: RadiusExp) -> Self {
        HPoint { center: PadicNumber::zero(p), rexp }
    }

    /// Parses `"center ; rexp"`.
    pub fn parse(p: Prime, text: &str) -> Result<Self> {
        let (c, r) = text.split_once(';').ok_or_else(|| Error::MalformedLiteral(text.to_string()))?;
        HPoint::new(PadicNumber::parse(p, c)?, r.parse()?)
    }

    pub fn center(&self) -> &PadicNumber {
        &self.center
    }

    pub fn rexp(&self) -> RadiusExp {
        self.rexp
    }

    pub fn prime(&self) -> Prime {
        self.center.prime()
    }

    fn check_prime(&self, other: &HPoint) -> Result<()> {
        if self.prime() != other.prime() {
            return Err(Error::PrimeMismatch(self.prime().get(), other.prime().get()));
        }
        Ok(())
    }

    /// Is `z` a point of the closed ball?
    pub fn contains(&self, z: &PadicNumber) -> Result<bool> {
        Ok(match log_dist(z, &self.center, self.rexp)? {
            None => true,
            Some(l) => l <= self.rexp,
        })
    }

    /// Ball inclusion `other ⊆ self`.
    pub fn contains_ball(&self, other: &HPoint) -> Result<bool> {
        Ok(other.rexp <= self.rexp && self.contains(&other.center)?)
    }

    /// `2 max{r, r', log_p|w - w'|} - r - r'`.
    pub fn distance(&self, other: &HPoint) -> Result<RadiusExp> {
        self.check_prime(other)?;
        let top = self.rexp.max(other.rexp);
        let m = match log_dist(&self.center, &other.center, top)? {
            Some(l) => top.max(l),
            None => top,
        };
        Ok(m * 2 - self.rexp - other.rexp)
    }

    /// The smallest ball containing both points.
    pub fn join(&self, other: &HPoint) -> Result<HPoint> {
        self.check_prime(other)?;
        let top = self.rexp.max(other.rexp);
        let r = match log_dist(&self.center, &other.center, top)? {
            Some(l) => top.max(l),
            None => top,
        };
        HPoint::new(self.center.clone(), r)
    }

    /// `(w + t, r)`.
    pub fn translate(&self, t: &PadicNumber) -> Result<HPoint> {
        HPoint::new(&self.center + t, self.rexp)
    }

    /// `(λw, r + log_p|λ|)`.
    pub fn scale(&self, lambda: &PadicNumber) -> Result<HPoint> {
        let v = lambda.finite_valuation()?;
        HPoint::new(&self.center * lambda, self.rexp + RadiusExp::from_valuation(v))
    }

    /// Image of the ball under `z ↦ 1/z`.
    ///
    /// A ball avoiding 0 maps to `(1/w, r - 2 log_p|w|)`, a ball around 0 to `(0, -r)`.
    pub fn invert(&self) -> Result<HPoint> {
        let p = self.prime();
        match log_dist(&self.center, &PadicNumber::zero(p), self.rexp)? {
            Some(l) if l > self.rexp => HPoint::new(self.center.inv()?, self.rexp - l * 2),
            _ => Ok(HPoint::origin_ball(p, -self.rexp)),
        }
    }
}

impl fmt::Display for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.center, self.rexp)
    }
}

impl serde::Serialize for HPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HPoint", 2)?;
        st.serialize_field("center", &self.center)?;
        st.serialize_field("rexp", &self.rexp)?;
        st.end()
    }
}

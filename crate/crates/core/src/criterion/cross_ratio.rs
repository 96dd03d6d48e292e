use serde::Serialize;

use crate::analytic::AnalyticMap;
use crate::error::{Error, Result};
use crate::padic::{PadicNumber, RadiusExp};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossRatio {
    pub value: PadicNumber,
    /// `log_p |R|`.
    pub exponent: RadiusExp,
}

fn nonzero_diff(a: &PadicNumber, b: &PadicNumber) -> Result<PadicNumber> {
    let d = a.checked_sub(b).map_err(|_| Error::CoincidentPoints)?;
    if d.is_zero() || d.is_vanished() {
        return Err(Error::CoincidentPoints);
    }
    Ok(d)
}

/// `R(a, b; c, d) = (a - c)(b - d) / ((a - d)(b - c))` for pairwise distinct points.
pub fn cross_ratio(a: &PadicNumber, b: &PadicNumber, c: &PadicNumber, d: &PadicNumber) -> Result<CrossRatio> {
    nonzero_diff(a, b)?;
    nonzero_diff(c, d)?;
    let top = &nonzero_diff(a, c)? * &nonzero_diff(b, d)?;
    let bottom = &nonzero_diff(a, d)? * &nonzero_diff(b, c)?;
    let value = top.checked_div(&bottom)?;
    let exponent = RadiusExp::from_valuation(value.finite_valuation()?);
    Ok(CrossRatio { value, exponent })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossRatioComparison {
    pub holds: bool,
    pub before: RadiusExp,
    pub after: RadiusExp,
}

/// Compares `|R(a, b; c, d)|` with `|R(f(a), f(b); f(c), f(d))|`.
pub fn cross_ratio_preserved<F: AnalyticMap + ?Sized>(f: &F, quad: &[PadicNumber; 4]) -> Result<CrossRatioComparison> {
    let before = cross_ratio(&quad[0], &quad[1], &quad[2], &quad[3])?.exponent;
    let images = quad.iter().map(|z| f.eval(z)).collect::<Result<Vec<_>>>()?;
    for i in 0..4 {
        for j in i + 1..4 {
            if nonzero_diff(&images[i], &images[j]).is_err() {
                return Err(Error::ImageCollision { x: quad[i].to_string(), y: quad[j].to_string() });
            }
        }
    }
    let after = cross_ratio(&images[0], &images[1], &images[2], &images[3])?.exponent;
    Ok(CrossRatioComparison { holds: before == after, before, after })
}

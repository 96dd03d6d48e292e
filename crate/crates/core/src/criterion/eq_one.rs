use serde::Serialize;

use crate::analytic::AnalyticMap;
use crate::error::{Error, Result};
use crate::padic::{PadicNumber, Valuation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    Indeterminate,
}

/// Outcome of the valuation identity at one pair.
///
/// Exponents are on the valuation side: `lhs = 2(v(f(x) - f(y)) - v(x - y))`,
/// `rhs = v(f'(x)) + v(f'(y))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub status: Status,
    pub lhs_exp: Option<Valuation>,
    pub rhs_exp: Option<Valuation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

pub(crate) const DEGENERATE: &str = "f(x) = f(y) while a derivative vanishes: constant-direction degenerate";

impl PairVerdict {
    pub(crate) fn compare(lhs: Valuation, rhs: Valuation) -> PairVerdict {
        let (status, reason) = match (lhs, rhs) {
            (Valuation::Infinite, Valuation::Infinite) => (Status::Indeterminate, Some(DEGENERATE.to_string())),
            (a, b) if a == b => (Status::Holds, None),
            _ => (Status::Fails, None),
        };
        PairVerdict { status, lhs_exp: Some(lhs), rhs_exp: Some(rhs), reason }
    }

    pub(crate) fn unknown(reason: String) -> PairVerdict {
        PairVerdict { status: Status::Indeterminate, lhs_exp: None, rhs_exp: None, reason: Some(reason) }
    }
}

pub(crate) fn is_precision_error(e: &Error) -> bool {
    matches!(e, Error::InsufficientPrecision(_) | Error::CancellationBeyondPrecision)
}

/// Left side given `v(x - y)`, from the two image values.
pub(crate) fn lhs_from(fx: &PadicNumber, fy: &PadicNumber, vdx: i64) -> Result<Valuation> {
    Ok(match fx.checked_sub(fy)?.valuation()? {
        Valuation::Infinite => Valuation::Infinite,
        Valuation::Finite(v) => Valuation::Finite(2 * (v - vdx)),
    })
}

/// Checks `|(f(x) - f(y))/(x - y)|² = |f'(x) f'(y)|` exactly.
pub fn eq_one_holds<F: AnalyticMap + ?Sized>(f: &F, x: &PadicNumber, y: &PadicNumber) -> Result<PairVerdict> {
    let vdx = match x.checked_sub(y) {
        Err(Error::CancellationBeyondPrecision) => return Err(Error::IndistinguishablePoints),
        Err(e) => return Err(e),
        Ok(d) => d.valuation().map_err(|_| Error::IndistinguishablePoints)?,
    };
    let vdx = vdx.finite().ok_or(Error::IndistinguishablePoints)?;
    let attempt = || -> Result<PairVerdict> {
        let lhs = lhs_from(&f.eval(x)?, &f.eval(y)?, vdx)?;
        let rhs = f.eval_derivative(x)?.valuation()? + f.eval_derivative(y)?.valuation()?;
        Ok(PairVerdict::compare(lhs, rhs))
    };
    match attempt() {
        Err(e) if is_precision_error(&e) => Ok(PairVerdict::unknown(e.to_string())),
        other => other,
    }
}

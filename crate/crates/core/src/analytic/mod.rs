//! Polynomials and rational maps over ℚ_p.

mod newton;
mod polynomial;
mod rational;
mod reduction;
mod series;

pub use newton::{count_zeros_in_ball, NewtonPolygon, NewtonSegment};
pub use polynomial::Polynomial;
pub use rational::RationalMap;
pub use reduction::{reduce_polynomial, reduce_rational_map, FpPoly, FpRational, ReductionClass, ReductionKind};
pub use series::{coefficient_valuations, lagrange_inverse_truncation};

use crate::error::Result;
use crate::padic::{PadicNumber, Prime};

/// A map that can be evaluated pointwise together with its derivative.
pub trait AnalyticMap: Sync {
    fn prime(&self) -> Prime;
    fn eval(&self, x: &PadicNumber) -> Result<PadicNumber>;
    fn eval_derivative(&self, x: &PadicNumber) -> Result<PadicNumber>;
}

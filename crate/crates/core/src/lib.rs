//! Exact non-archimedean analysis over ℚ_p.
//!
//! * [`padic`]: p-adic numbers with exact or precision-tracked digits.
//! * [`hyperspace`]: the p-adic hyperbolic space of closed balls, its metric and the homography action.
//! * [`analytic`]: polynomials and rational maps, Gauss norms, induced maps, Newton polygons, reductions.
//! * [`criterion`]: the valuation identity characterizing injective maps, cross-ratios, isometry certificates.

pub mod analytic;
pub mod criterion;
pub mod error;
pub mod hyperspace;
pub mod padic;

pub use error::{Error, Result};

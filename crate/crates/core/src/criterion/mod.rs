//! The valuation identity `|(f(x) - f(y))/(x - y)|² = |f'(x) f'(y)|` and its consequences.
//!
//! A map of a closed ball satisfying the identity for all distinct pairs is
//! injective, and conversely; cross-ratio norms are then preserved.

mod certificate;
mod cross_ratio;
mod eq_one;
mod normalize;
mod oracle;
mod sweep;

pub use certificate::{isometry_certificate, Bivariate, IsometryCertificate};
pub use cross_ratio::{cross_ratio, cross_ratio_preserved, CrossRatio, CrossRatioComparison};
pub use eq_one::{eq_one_holds, PairVerdict, Status};
pub use normalize::{normalize_to_gauss_fixing, Normalization};
pub use oracle::{exhaustive_injectivity_oracle, OracleVerdict};
pub use sweep::{eq_one_sweep, CriterionVerdict, Witness};

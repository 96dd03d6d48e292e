//! Arithmetic in ℚ_p.
//!
//! Values built from integer or rational literals are exact; values carrying
//! an `O(p^N)` term track their known digits and lose precision the usual way.

mod number;
mod parse;
mod prime;
mod radius;
mod residue;
mod valuation;

pub use number::PadicNumber;
pub use prime::Prime;
pub use radius::RadiusExp;
pub use residue::ResidueElement;
pub use valuation::Valuation;

/// Default number of significant base-p digits used when rendering exact values.
pub const DEFAULT_PRECISION: u32 = 64;

//! The p-adic hyperbolic space ℍ_p.
//!
//! A rational point is a closed ball `B̄(w, p^r)`; two representatives agree
//! when `r = r'` and `|w - w'| ≤ p^r`. The distance is
//! `2 max{r, r', log_p|w - w'|} - r - r'`, and homographies act by isometries.

mod affinoid;
mod geodesic;
mod homography;
mod hull;
mod point;

pub use affinoid::{Affinoid, OpenBall};
pub use geodesic::{distance_to_norm, geodesic_point, geodesics_meet, median, meet_point, project_to_residue_sphere};
pub use homography::{Homography, P1Point};
pub use hull::{ConvexHull, HullEdge, HullNode, NodeKind};
pub use point::HPoint;

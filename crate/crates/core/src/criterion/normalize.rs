use serde::Serialize;

use crate::analytic::{reduce_polynomial, Polynomial};
use crate::error::{Error, Result};
use crate::hyperspace::{HPoint, Homography};
use crate::padic::{PadicNumber, RadiusExp};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Normalization {
    pub phi: Homography,
    pub h: Polynomial,
}

/// An affine `φ` with `φ ∘ f` fixing the Gauss point and reducing to the identity.
///
/// With `s` the exponent of `f_*(S)`, first `w ↦ (w - f(0)) p^s` recenters the
/// image onto `S`; the reduction is then `αz`, and dividing by a lift of `α`
/// makes it `z`.
pub fn normalize_to_gauss_fixing(f: &Polynomial) -> Result<Normalization> {
    let p = f.prime();
    let image = f.induced_image(&HPoint::gauss(p))?;
    let s = image.rexp().to_integer().ok_or_else(|| Error::FractionalExponent(image.rexp().to_string()))?;
    let ps = PadicNumber::prime_power(p, s);
    let f0 = f.coeff(0);
    let recentered = (f - &Polynomial::constant(f0.clone())).scale(&ps);
    let red = reduce_polynomial(&recentered)?;
    let num = &red.reduced.num;
    if red.reduced.den.degree() != Some(0) || num.degree() != Some(1) {
        return Err(Error::NotInjectiveOnBall(red.reduced.degree()));
    }
    let alpha = PadicNumber::integer(p, num.coeffs()[1] as i64);
    let lambda = ps.checked_div(&alpha)?;
    let t = -(&f0 * &lambda);
    let phi = Homography::affine(lambda.clone(), t)?;
    let h = recentered.scale(&alpha.inv()?);
    debug_assert_eq!(h.induced_image(&HPoint::gauss(p)).ok().map(|q| q.rexp()), Some(RadiusExp::ZERO));
    Ok(Normalization { phi, h })
}

//! Medians, meet points and half-geodesics towards a base point.

use super::point::log_dist;
use super::{HPoint, P1Point};
use crate::error::{Error, Result};
use crate::padic::{PadicNumber, RadiusExp, ResidueElement};

/// Tree median of three points: the deepest of the three pairwise joins.
pub fn median(a: &HPoint, b: &HPoint, c: &HPoint) -> Result<HPoint> {
    let candidates = [a.join(b)?, a.join(c)?, b.join(c)?];
    Ok(candidates.into_iter().min_by_key(|q| q.rexp()).unwrap())
}

/// The meet point `S_{x,y}` of the half-geodesics `(x, S]` and `(y, S]` for `x ≠ y` in the ball of `S`.
pub fn meet_point(x: &PadicNumber, y: &PadicNumber, base: &HPoint) -> Result<HPoint> {
    if !base.contains(x)? || !base.contains(y)? {
        return Err(Error::PointsOutsideBall);
    }
    let l = log_dist(x, y, base.rexp())?.ok_or(Error::IndistinguishablePoints)?;
    HPoint::new(x.clone(), l)
}

/// `log_p |x - y|` read off the tree: `r_S - d(S_{x,y}, S)`.
pub fn distance_to_norm(x: &PadicNumber, y: &PadicNumber, base: &HPoint) -> Result<RadiusExp> {
    let m = meet_point(x, y, base)?;
    Ok(base.rexp() - m.distance(base)?)
}

/// The residue projection `π: ℙ¹(ℚ_p) → ℙ¹(𝔽_p)`.
pub fn project_to_residue_sphere(z: &P1Point) -> Result<ResidueElement> {
    match z {
        P1Point::Finite(z) => z.residue(),
        P1Point::Infinity => Ok(ResidueElement::Infinity),
    }
}

/// The point of the half-geodesic `(z, S]` at distance `t ≥ 0` from `S`.
pub fn geodesic_point(z: &P1Point, base: &HPoint, t: RadiusExp) -> Result<HPoint> {
    debug_assert!(t >= RadiusExp::ZERO);
    let r = base.rexp();
    let up = || HPoint::new(base.center().clone(), r + t);
    let z = match z {
        P1Point::Infinity => return up(),
        P1Point::Finite(z) => z,
    };
    match log_dist(z, base.center(), r)? {
        None => HPoint::new(z.clone(), r - t),
        Some(l) if l <= r => HPoint::new(z.clone(), r - t),
        Some(l) => {
            let climb = l - r;
            if t <= climb {
                up()
            } else {
                HPoint::new(z.clone(), l - (t - climb))
            }
        }
    }
}

/// Do the open half-geodesics `(z, S)` and `(z', S)` intersect?
///
/// Branch points around a rational-radius base sit at integer exponents, so
/// comparing the two geodesics at any distance below the gap to the nearest
/// other integer decides it.
pub fn geodesics_meet(z: &P1Point, w: &P1Point, base: &HPoint) -> Result<bool> {
    let r = base.rexp();
    let below = r - RadiusExp::integer(r.ceil() - 1);
    let above = RadiusExp::integer(r.floor() + 1) - r;
    let eps = below.min(above).ratio() / 2;
    let eps = RadiusExp::from_ratio(eps);
    Ok(geodesic_point(z, base, eps)? == geodesic_point(w, base, eps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::Prime;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn pt(pr: u64, s: &str) -> HPoint {
        HPoint::parse(p(pr), s).unwrap()
    }

    fn num(pr: u64, s: &str) -> PadicNumber {
        PadicNumber::parse(p(pr), s).unwrap()
    }

    #[test]
    fn medians() {
        let a = pt(3, "1/9;-2");
        assert_eq!(median(&a, &a, &pt(3, "0;0")).unwrap(), a);
        assert_eq!(median(&pt(3, "0;-2"), &pt(3, "1;-2"), &pt(3, "0;0")).unwrap(), pt(3, "0;0"));
        assert_eq!(median(&pt(3, "3;-4"), &pt(3, "6;-4"), &pt(3, "0;0")).unwrap(), pt(3, "3;-1"));
    }

    #[test]
    fn norms_from_tree_distances() {
        let s = HPoint::gauss(p(3));
        assert_eq!(distance_to_norm(&num(3, "0"), &num(3, "3"), &s).unwrap(), RadiusExp::integer(-1));
        assert_eq!(distance_to_norm(&num(5, "1"), &num(5, "6"), &HPoint::gauss(p(5))).unwrap(), RadiusExp::integer(-1));
        let s1 = pt(3, "0;1");
        assert_eq!(meet_point(&num(3, "3"), &num(3, "12"), &s1).unwrap().distance(&s1).unwrap(), RadiusExp::integer(3));
        assert_eq!(distance_to_norm(&num(3, "3"), &num(3, "12"), &s1).unwrap(), RadiusExp::integer(-2));
        assert_eq!(distance_to_norm(&num(3, "1/3"), &num(3, "0"), &s), Err(Error::PointsOutsideBall));
    }

    #[test]
    fn residue_projection() {
        assert_eq!(project_to_residue_sphere(&P1Point::Finite(num(3, "1/3"))).unwrap(), ResidueElement::Infinity);
        assert_eq!(project_to_residue_sphere(&P1Point::Finite(num(3, "3"))).unwrap(), ResidueElement::new(p(3), 0));
        assert_eq!(project_to_residue_sphere(&P1Point::Finite(num(5, "7"))).unwrap(), ResidueElement::new(p(5), 2));
        assert_eq!(project_to_residue_sphere(&P1Point::Infinity).unwrap(), ResidueElement::Infinity);
    }

    #[test]
    fn geodesic_walk() {
        let s = HPoint::gauss(p(3));
        let z = P1Point::Finite(num(3, "1/9"));
        assert_eq!(geodesic_point(&z, &s, RadiusExp::integer(1)).unwrap(), pt(3, "0;1"));
        assert_eq!(geodesic_point(&z, &s, RadiusExp::integer(2)).unwrap(), pt(3, "1/9;2"));
        assert_eq!(geodesic_point(&z, &s, RadiusExp::integer(5)).unwrap(), pt(3, "1/9;-1"));
        let y = P1Point::Finite(num(3, "4"));
        assert_eq!(geodesic_point(&y, &s, RadiusExp::integer(1)).unwrap(), pt(3, "1;-1"));
    }

    #[test]
    fn geodesics_meet_iff_same_residue() {
        let s = HPoint::gauss(p(3));
        let f = |t: &str| P1Point::Finite(num(3, t));
        assert!(geodesics_meet(&f("1"), &f("4"), &s).unwrap());
        assert!(!geodesics_meet(&f("1"), &f("2"), &s).unwrap());
        assert!(geodesics_meet(&f("1/3"), &P1Point::Infinity, &s).unwrap());
        assert!(!geodesics_meet(&f("1/3"), &f("0"), &s).unwrap());
    }
}

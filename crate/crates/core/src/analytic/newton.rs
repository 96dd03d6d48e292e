use num_rational::Rational64;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::hyperspace::HPoint;

/// A side of the Newton polygon; `length` is its horizontal extent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NewtonSegment {
    pub slope: Rational64,
    pub length: usize,
}

/// Lower convex hull of the points `(i, v(c_i))` for the nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<(usize, i64)>,
    pub segments: Vec<NewtonSegment>,
    pub order_at_zero: usize,
}

fn cross(o: (usize, i64), a: (usize, i64), b: (usize, i64)) -> i128 {
    let (ax, ay) = (a.0 as i128 - o.0 as i128, a.1 as i128 - o.1 as i128);
    let (bx, by) = (b.0 as i128 - o.0 as i128, b.1 as i128 - o.1 as i128);
    ax * by - ay * bx
}

impl NewtonPolygon {
    pub fn of(f: &Polynomial) -> Result<NewtonPolygon> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut pts = Vec::new();
        for (i, c) in f.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_vanished() {
                return Err(Error::InsufficientPrecision(format!("coefficient of z^{i} is indeterminate")));
            }
            pts.push((i, c.finite_valuation()?));
        }
        let mut hull: Vec<(usize, i64)> = Vec::new();
        for q in pts {
            while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 0 {
                hull.pop();
            }
            hull.push(q);
        }
        let segments = hull
            .windows(2)
            .map(|w| {
                let len = w[1].0 - w[0].0;
                NewtonSegment { slope: Rational64::new(w[1].1 - w[0].1, len as i64), length: len }
            })
            .collect();
        Ok(NewtonPolygon { order_at_zero: hull[0].0, vertices: hull, segments })
    }

    /// Number of roots in `ℂ_p` (with multiplicity) of absolute value at most `p^r`.
    pub fn roots_with_log_abs_at_most(&self, r: Rational64) -> usize {
        self.order_at_zero + self.segments.iter().filter(|s| s.slope <= r).map(|s| s.length).sum::<usize>()
    }
}

/// Zeros of `f` in the closed ball, counted in `ℂ_p` with multiplicity.
pub fn count_zeros_in_ball(f: &Polynomial, ball: &HPoint) -> Result<usize> {
    let np = NewtonPolygon::of(&f.taylor_shift(ball.center()))?;
    Ok(np.roots_with_log_abs_at_most(ball.rexp().ratio()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::Prime;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn count(pr: u64, f: &str, ball: &str) -> usize {
        let f = Polynomial::parse(p(pr), f).unwrap();
        count_zeros_in_ball(&f, &HPoint::parse(p(pr), ball).unwrap()).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(count(3, "z^2-z", "0;0"), 2);
        assert_eq!(count(5, "z^2-5", "0;-1/2"), 2);
        assert_eq!(count(5, "z^2-5", "0;-1"), 0);
        assert_eq!(count(3, "z^2+z+3", "0;-1"), 1);
        assert_eq!(count(3, "z^2+z+3", "0;-2"), 0);
        assert_eq!(count(3, "z^3", "1;-1"), 0);
        assert_eq!(count(3, "z^3", "0;-9"), 3);
    }

    #[test]
    fn polygon_shape() {
        let f = Polynomial::parse(p(3), "3+z+z^2").unwrap();
        let np = NewtonPolygon::of(&f).unwrap();
        assert_eq!(np.vertices, vec![(0, 1), (1, 0), (2, 0)]);
        assert_eq!(np.segments.iter().map(|s| s.slope).collect::<Vec<_>>(), vec![Rational64::from(-1), Rational64::from(0)]);
        let g = Polynomial::parse(p(2), "z^2+z^4").unwrap();
        assert_eq!(NewtonPolygon::of(&g).unwrap().order_at_zero, 2);
        assert_eq!(NewtonPolygon::of(&Polynomial::zero(p(2))), Err(Error::ZeroPolynomial));
    }
}

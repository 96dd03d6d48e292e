use std::fmt;

use num_bigint::BigInt;

use super::point::log_dist;
use super::HPoint;
use crate::error::{Error, Result};
use crate::padic::{PadicNumber, Prime, RadiusExp};

/// The open ball `{z : |z - center| < p^rexp}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenBall {
    pub center: PadicNumber,
    pub rexp: RadiusExp,
}

impl OpenBall {
    pub fn contains(&self, z: &PadicNumber) -> Result<bool> {
        Ok(match log_dist(z, &self.center, self.rexp - RadiusExp::integer(1))? {
            None => true,
            Some(l) => l < self.rexp,
        })
    }

    fn contains_open(&self, other: &OpenBall) -> Result<bool> {
        Ok(other.rexp <= self.rexp && self.contains(&other.center)?)
    }

    /// The boundary Gauss point `B̄(center, p^rexp)`.
    pub fn boundary_point(&self) -> Result<HPoint> {
        HPoint::new(self.center.clone(), self.rexp)
    }
}

/// A closed ball minus finitely many open balls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Affinoid {
    outer: HPoint,
    removed: Vec<OpenBall>,
}

impl Affinoid {
    /// Builds `outer − ∪ removed`, dropping removed balls nested in others.
    pub fn new(outer: HPoint, removed: Vec<OpenBall>) -> Result<Self> {
        for b in &removed {
            if !outer.contains(&b.center)? {
                return Err(Error::InvalidAffinoid(format!("removed ball around {} leaves the outer ball", b.center)));
            }
            if b.rexp > outer.rexp() {
                return Err(Error::InvalidAffinoid("a removed ball swallows the outer ball".into()));
            }
        }
        let mut kept: Vec<OpenBall> = Vec::new();
        for (i, b) in removed.iter().enumerate() {
            let mut redundant = false;
            for (j, other) in removed.iter().enumerate() {
                if i != j && other.contains_open(b)? && (!b.contains_open(other)? || j < i) {
                    redundant = true;
                    break;
                }
            }
            if !redundant {
                kept.push(b.clone());
            }
        }
        Ok(Affinoid { outer, removed: kept })
    }

    pub fn ball(outer: HPoint) -> Self {
        Affinoid { outer, removed: Vec::new() }
    }

    /// The closed unit ball `O_p`.
    pub fn unit_ball(p: Prime) -> Self {
        Affinoid::ball(HPoint::gauss(p))
    }

    /// The unit circle `{|z| = 1}`.
    pub fn unit_circle(p: Prime) -> Self {
        Affinoid {
            outer: HPoint::gauss(p),
            removed: vec![OpenBall { center: PadicNumber::zero(p), rexp: RadiusExp::ZERO }],
        }
    }

    /// Parses `"c;r"` optionally followed by `"|c1;r1|c2;r2…"` for the removed open balls.
    pub fn parse(p: Prime, text: &str) -> Result<Self> {
        let mut parts = text.split('|');
        let outer = HPoint::parse(p, parts.next().unwrap_or(""))?;
        let mut removed = Vec::new();
        for part in parts {
            let (c, r) = part.split_once(';').ok_or_else(|| Error::MalformedLiteral(part.to_string()))?;
            removed.push(OpenBall { center: PadicNumber::parse(p, c)?, rexp: r.parse()? });
        }
        Affinoid::new(outer, removed)
    }

    pub fn outer(&self) -> &HPoint {
        &self.outer
    }

    pub fn removed(&self) -> &[OpenBall] {
        &self.removed
    }

    pub fn prime(&self) -> Prime {
        self.outer.prime()
    }

    pub fn contains(&self, z: &PadicNumber) -> Result<bool> {
        if !self.outer.contains(z)? {
            return Ok(false);
        }
        for b in &self.removed {
            if b.contains(z)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the outer ball sits inside `ℤ_p`, so lifts modulo `p^k` cover it.
    pub fn is_integral(&self) -> Result<bool> {
        HPoint::gauss(self.prime()).contains_ball(&self.outer)
    }

    /// Residue-lift representatives `j = 0, …, p^k - 1` lying in the affinoid.
    ///
    /// When the outer ball is larger than `ℤ_p`, the lattice is rescaled to
    /// `t + p^e · j` with `e = ⌈-r⌉` and `t` the canonical outer center.
    pub fn lifts(&self, depth: u32) -> Result<Vec<PadicNumber>> {
        let p = self.prime();
        let e = (-self.outer.rexp()).ceil().min(0);
        let offset = if e < 0 { self.outer.center().clone() } else { PadicNumber::zero(p) };
        let scale = PadicNumber::prime_power(p, e);
        let count = BigInt::from(p.get()).pow(depth);
        let count: u64 = count.try_into().map_err(|_| Error::DomainNotLatticeCompatible("depth too large".into()))?;
        let mut out = Vec::new();
        for j in 0..count {
            let z = &offset + &(&scale * &PadicNumber::integer(p, j as i64));
            if self.contains(&z)? {
                out.push(z);
            }
        }
        Ok(out)
    }

    /// The boundary Gauss points: the outer ball and the closure of each removed ball.
    pub fn boundary_points(&self) -> Result<Vec<HPoint>> {
        let mut out = vec![self.outer.clone()];
        for b in &self.removed {
            out.push(b.boundary_point()?);
        }
        Ok(out)
    }
}

impl fmt::Display for Affinoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.outer)?;
        for b in &self.removed {
            write!(f, "|{};{}", b.center, b.rexp)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn unit_circle_membership() {
        let a = Affinoid::unit_circle(p(3));
        assert!(a.contains(&PadicNumber::integer(p(3), 2)).unwrap());
        assert!(!a.contains(&PadicNumber::integer(p(3), 3)).unwrap());
        assert!(!a.contains(&PadicNumber::rational(p(3), 1, 3).unwrap()).unwrap());
        assert_eq!(Affinoid::parse(p(3), "0;0|0;0").unwrap(), a);
    }

    #[test]
    fn lifts_of_small_ball() {
        let a = Affinoid::parse(p(3), "0;-1").unwrap();
        let lifts = a.lifts(3).unwrap();
        assert_eq!(lifts.len(), 9);
        assert_eq!(Affinoid::unit_circle(p(5)).lifts(2).unwrap().len(), 20);
        assert_eq!(Affinoid::unit_ball(p(2)).lifts(4).unwrap().len(), 16);
    }

    #[test]
    fn lifts_of_large_ball_are_rescaled() {
        let a = Affinoid::parse(p(3), "1/3;1").unwrap();
        let lifts = a.lifts(2).unwrap();
        assert_eq!(lifts.len(), 9);
        assert!(lifts.contains(&PadicNumber::rational(p(3), 1, 3).unwrap()));
        assert!(lifts.iter().all(|z| a.contains(z).unwrap()));
        assert!(!a.is_integral().unwrap());
    }

    #[test]
    fn nested_removed_balls_are_merged() {
        let a = Affinoid::parse(p(3), "0;0|0;0|3;-1").unwrap();
        assert_eq!(a.removed().len(), 1);
        assert!(Affinoid::parse(p(3), "0;0|1/3;-1").is_err());
        assert!(Affinoid::parse(p(3), "0;0|0;1").is_err());
    }
}

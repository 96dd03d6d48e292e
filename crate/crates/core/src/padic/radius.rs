use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::Error;

/// Base-p logarithm of a radius: the radius `p^q` is stored as the exact rational `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RadiusExp(Rational64);

impl RadiusExp {
    pub const ZERO: RadiusExp = RadiusExp(Rational64::new_raw(0, 1));

    pub fn new(numer: i64, denom: i64) -> Self {
        RadiusExp(Rational64::new(numer, denom))
    }

    pub fn integer(n: i64) -> Self {
        RadiusExp(Rational64::from_integer(n))
    }

    pub fn from_ratio(q: Rational64) -> Self {
        RadiusExp(q)
    }

    /// `log_p |x|` for an element of valuation `v`.
    pub fn from_valuation(v: i64) -> Self {
        RadiusExp::integer(-v)
    }

    pub fn ratio(self) -> Rational64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0.is_integer()
    }

    pub fn to_integer(self) -> Option<i64> {
        self.0.is_integer().then(|| self.0.to_integer())
    }

    pub fn ceil(self) -> i64 {
        self.0.ceil().to_integer()
    }

    pub fn floor(self) -> i64 {
        self.0.floor().to_integer()
    }

    pub fn abs(self) -> Self {
        if self.0 < Rational64::zero() {
            -self
        } else {
            self
        }
    }

    pub fn is_one(self) -> bool {
        self.0.is_one()
    }
}

impl Add for RadiusExp {
    type Output = RadiusExp;
    fn add(self, rhs: RadiusExp) -> RadiusExp {
        RadiusExp(self.0 + rhs.0)
    }
}

impl Sub for RadiusExp {
    type Output = RadiusExp;
    fn sub(self, rhs: RadiusExp) -> RadiusExp {
        RadiusExp(self.0 - rhs.0)
    }
}

impl Neg for RadiusExp {
    type Output = RadiusExp;
    fn neg(self) -> RadiusExp {
        RadiusExp(-self.0)
    }
}

impl Mul<i64> for RadiusExp {
    type Output = RadiusExp;
    fn mul(self, k: i64) -> RadiusExp {
        RadiusExp(self.0 * k)
    }
}

impl From<i64> for RadiusExp {
    fn from(n: i64) -> Self {
        RadiusExp::integer(n)
    }
}

impl fmt::Display for RadiusExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for RadiusExp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::MalformedLiteral(s.to_string());
        let t = s.trim();
        let q = match t.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                Rational64::new(n, d)
            }
            None => Rational64::from_integer(t.parse().map_err(|_| bad())?),
        };
        Ok(RadiusExp(q))
    }
}

impl serde::Serialize for RadiusExp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_rationals() {
        assert_eq!("-1/2".parse::<RadiusExp>().unwrap(), RadiusExp::new(-1, 2));
        assert_eq!("4/2".parse::<RadiusExp>().unwrap().to_string(), "2");
        assert!("1/0".parse::<RadiusExp>().is_err());
        assert!("x".parse::<RadiusExp>().is_err());
    }

    #[test]
    fn ceil_and_floor() {
        assert_eq!(RadiusExp::new(-1, 2).ceil(), 0);
        assert_eq!(RadiusExp::new(-1, 2).floor(), -1);
        assert_eq!(RadiusExp::new(7, 3).ceil(), 3);
        assert_eq!(RadiusExp::integer(-2).ceil(), -2);
    }
}

//! Literal grammar: `INT | INT "/" INT | LITERAL "+" "O(" p "^" k ")"`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{PadicNumber, Prime};
use crate::error::{Error, Result};

fn parse_rational(text: &str) -> Option<BigRational> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.to_string(), d.to_string()),
        None => (t.clone(), "1".to_string()),
    };
    let n = BigInt::from_str(&n).ok()?;
    let d = BigInt::from_str(&d).ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl PadicNumber {
    pub fn parse(p: Prime, text: &str) -> Result<Self> {
        let bad = || Error::MalformedLiteral(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        if let Some(pos) = compact.find("O(") {
            let head = &compact[..pos];
            let tail = compact[pos + 2..].strip_suffix(')').ok_or_else(bad)?;
            let (base, exp) = tail.split_once('^').ok_or_else(bad)?;
            let base: u64 = base.parse().map_err(|_| bad())?;
            let abs: i64 = exp.trim_matches(|c| c == '(' || c == ')').parse().map_err(|_| bad())?;
            if base != p.get() {
                return Err(bad());
            }
            let value = if head.is_empty() {
                BigRational::zero()
            } else {
                let lit = head.strip_suffix('+').ok_or_else(bad)?;
                parse_rational(lit).ok_or_else(bad)?
            };
            return Ok(PadicNumber::with_precision(p, &value, abs));
        }
        let q = parse_rational(&compact).ok_or_else(bad)?;
        Ok(PadicNumber::from_rational(p, q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::Valuation;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn rational_literal() {
        let x = PadicNumber::parse(p(3), "4/3").unwrap();
        assert!(x.is_exact());
        assert_eq!(x.valuation().unwrap(), Valuation::Finite(-1));
        assert_eq!(x.unit_part(2).unwrap().0, BigUint::from(4u32));
    }

    #[test]
    fn zero_literal() {
        assert!(PadicNumber::parse(p(7), "0").unwrap().is_zero());
    }

    #[test]
    fn big_o_literal() {
        let x = PadicNumber::parse(p(5), "7 + O(5^3)").unwrap();
        assert_eq!(x.valuation().unwrap(), Valuation::Finite(0));
        assert_eq!(x.unit_part(0).unwrap(), (BigUint::from(7u32), 3));
        let y = PadicNumber::parse(p(3), "-1 + O(3^2)").unwrap();
        assert_eq!(y.unit_part(0).unwrap(), (BigUint::from(8u32), 2));
        assert!(PadicNumber::parse(p(3), "0 + O(3^4)").unwrap().is_vanished());
    }

    #[test]
    fn malformed_literals() {
        for s in ["", "1/0", "abc", "1 + O(5^3)", "1 O(3^2)", "1 + O(3^x)", "2//3"] {
            assert!(matches!(PadicNumber::parse(p(3), s), Err(Error::MalformedLiteral(_))), "{s}");
        }
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(n in -10_000i64..10_000, d in 1i64..500, abs in proptest::option::of(-4i64..12)) {
            let pr = p(3);
            let q = BigRational::new(n.into(), d.into());
            let x = match abs {
                Some(a) => PadicNumber::with_precision(pr, &q, a),
                None => PadicNumber::from_rational(pr, q),
            };
            let back = PadicNumber::parse(pr, &x.to_string()).unwrap();
            prop_assert_eq!(back, x);
        }
    }
}

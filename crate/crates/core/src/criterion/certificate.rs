use std::fmt;

use serde::Serialize;

use crate::analytic::Polynomial;
use crate::error::{Error, Result};
use crate::padic::{PadicNumber, RadiusExp};

/// A polynomial in `z` and `w`; `coeffs[j][k]` multiplies `z^j w^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bivariate {
    pub coeffs: Vec<Vec<PadicNumber>>,
}

impl Bivariate {
    fn terms(&self) -> impl Iterator<Item = (usize, usize, &PadicNumber)> {
        self.coeffs.iter().enumerate().flat_map(|(j, row)| row.iter().enumerate().map(move |(k, c)| (j, k, c)))
    }
}

fn monomial(j: usize, k: usize) -> String {
    let part = |v: &str, e: usize| match e {
        0 => None,
        1 => Some(v.to_string()),
        e => Some(format!("{v}^{e}")),
    };
    [part("z", j), part("w", k)].into_iter().flatten().collect::<Vec<_>>().join("*")
}

fn render<T: fmt::Display>(terms: impl Iterator<Item = (usize, usize, T)>, is_one: impl Fn(&T) -> bool) -> String {
    let mut out = Vec::new();
    for (j, k, c) in terms {
        let m = monomial(j, k);
        out.push(match (m.is_empty(), is_one(&c)) {
            (true, _) => c.to_string(),
            (false, true) => m,
            (false, false) => format!("({c})*{m}"),
        });
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out.join(" + ")
    }
}

impl fmt::Display for Bivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = |c: &&PadicNumber| c.is_exact() && c.as_rational().is_some_and(|q| q.is_integer() && q.numer() == &1.into());
        f.write_str(&render(self.terms().filter(|t| !t.2.is_zero()), one))
    }
}

/// Exact test that `|f(x) - f(y)| = |x - y|` on the closed unit ball.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryCertificate {
    /// `g` with `f(z) - f(w) = (z - w) g(z, w)`.
    pub quotient: Bivariate,
    /// Gauss-norm exponent of `g` on the unit bidisk.
    pub gauss_exp: RadiusExp,
    /// Nonzero terms `(j, k, c)` of the reduction of `g / p^{-gauss_exp}` over 𝔽_p.
    pub reduction: Vec<(usize, usize, u64)>,
}

impl IsometryCertificate {
    pub fn is_valid(&self) -> bool {
        self.gauss_exp == RadiusExp::ZERO && matches!(self.reduction.as_slice(), [(0, 0, c)] if *c != 0)
    }

    pub fn reduction_string(&self) -> String {
        render(self.reduction.iter().map(|&(j, k, c)| (j, k, c)), |c| *c == 1)
    }
}

impl Serialize for IsometryCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            quotient: String,
            gauss_exp: RadiusExp,
            reduction: String,
            valid: bool,
        }
        Out {
            quotient: self.quotient.to_string(),
            gauss_exp: self.gauss_exp,
            reduction: self.reduction_string(),
            valid: self.is_valid(),
        }
        .serialize(s)
    }
}

/// Builds `g(z, w) = Σ_i c_i Σ_{j < i} z^j w^{i-1-j}` and checks it on the unit bidisk.
pub fn isometry_certificate(f: &Polynomial) -> Result<IsometryCertificate> {
    let p = f.prime();
    let d = f.degree().filter(|&d| d >= 1).ok_or(Error::DegenerateConstant)?;
    let mut coeffs = vec![vec![PadicNumber::zero(p); d]; d];
    for (i, c) in f.coeffs().iter().enumerate().skip(1) {
        for j in 0..i {
            coeffs[j][i - 1 - j] = c.clone();
        }
    }
    let quotient = Bivariate { coeffs };
    let mut min_v: Option<i64> = None;
    for (_, _, c) in quotient.terms() {
        if c.is_zero() {
            continue;
        }
        if c.is_vanished() {
            return Err(Error::InsufficientPrecision("quotient coefficient is indeterminate".into()));
        }
        let v = c.finite_valuation()?;
        min_v = Some(min_v.map_or(v, |m: i64| m.min(v)));
    }
    let m = min_v.ok_or(Error::DegenerateConstant)?;
    let scale = PadicNumber::prime_power(p, -m);
    let mut reduction = Vec::new();
    for (j, k, c) in quotient.terms() {
        if c.is_zero() {
            continue;
        }
        let r = (c * &scale).residue()?.value().unwrap();
        if r != 0 {
            reduction.push((j, k, r));
        }
    }
    Ok(IsometryCertificate { quotient, gauss_exp: RadiusExp::from_valuation(m), reduction })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::Prime;

    fn cert(pr: u64, s: &str) -> IsometryCertificate {
        isometry_certificate(&Polynomial::parse(Prime::new(pr).unwrap(), s).unwrap()).unwrap()
    }

    #[test]
    fn z_plus_z2_is_not_an_isometry() {
        let c = cert(3, "z+z^2");
        assert_eq!(c.quotient.to_string(), "1 + w + z");
        assert_eq!(c.gauss_exp, RadiusExp::ZERO);
        assert!(!c.is_valid());
    }

    #[test]
    fn conjugate_is_an_isometry() {
        let c = cert(3, "z+3z^2");
        assert_eq!(c.quotient.to_string(), "1 + (3)*w + (3)*z");
        assert_eq!(c.reduction_string(), "1");
        assert!(c.is_valid());
        assert!(cert(7, "z").is_valid());
    }

    #[test]
    fn scaled_maps_fail_on_the_norm() {
        let c = cert(5, "5z");
        assert_eq!(c.gauss_exp, RadiusExp::integer(-1));
        assert_eq!(c.reduction_string(), "1");
        assert!(!c.is_valid());
        assert!(cert(5, "2z+7").is_valid());
        let v = serde_json::to_value(cert(5, "z^3")).unwrap();
        assert_eq!(v["valid"], false);
        assert_eq!(v["reduction"], "w^2 + z*w + z^2");
    }
}

//! Truncated formal inverses of series tangent to a unit multiple of `z`.

use super::Polynomial;
use crate::error::{Error, Result};
use crate::padic::{PadicNumber, Valuation};

/// The degree-`n` truncation `R_n` of the compositional inverse of `f`,
/// so that `R_n ∘ f ≡ z` modulo terms of degree above `n`.
pub fn lagrange_inverse_truncation(f: &Polynomial, n: usize) -> Result<Polynomial> {
    let p = f.prime();
    let c0 = f.coeff(0);
    if !c0.is_zero() {
        return Err(Error::NotInvertibleAtOrigin(format!("f(0) = {c0}")));
    }
    let c1 = f.coeff(1);
    if c1.is_vanished() || c1.valuation()? != Valuation::Finite(0) {
        return Err(Error::NotInvertibleAtOrigin(format!("f'(0) = {c1} is not a unit")));
    }
    if n == 0 {
        return Ok(Polynomial::zero(p));
    }
    let base = f.truncate(n);
    // powers[k] = f^(k+1) truncated at degree n
    let mut powers = vec![base.clone()];
    for _ in 1..n {
        let next = (powers.last().unwrap() * &base).truncate(n);
        powers.push(next);
    }
    let c1_inv = c1.inv()?;
    let mut g = vec![PadicNumber::zero(p), c1_inv.clone()];
    let mut c1_inv_pow = c1_inv;
    for m in 2..=n {
        c1_inv_pow = &c1_inv_pow * &g[1];
        let mut acc = PadicNumber::zero(p);
        for k in 1..m {
            acc = &acc + &(&g[k] * &powers[k - 1].coeff(m));
        }
        g.push(&(-&acc) * &c1_inv_pow);
    }
    Ok(Polynomial::new(p, g))
}

/// Valuations of the coefficients of `g`, indexed from degree 0.
pub fn coefficient_valuations(g: &Polynomial) -> Result<Vec<Valuation>> {
    g.coeffs().iter().map(PadicNumber::valuation).collect()
}

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::analytic::Polynomial;
use crate::error::{Error, Result};
use crate::hyperspace::Affinoid;
use crate::padic::{PadicNumber, Valuation};

/// Brute-force injectivity modulo `p^k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum OracleVerdict {
    /// Distinct lifts have distinct images modulo `p^k`.
    Bijective { lifts: usize, depth: u32, prime: u64 },
    Collision { x: PadicNumber, y: PadicNumber, depth: u32, prime: u64 },
}

/// Evaluates `f` on every lift modulo `p^k` in the domain and looks for two with
/// congruent images. Requires integral domain and coefficients.
pub fn exhaustive_injectivity_oracle(f: &Polynomial, k: u32, domain: &Affinoid, workers: usize) -> Result<OracleVerdict> {
    if f.prime() != domain.prime() {
        return Err(Error::PrimeMismatch(f.prime().get(), domain.prime().get()));
    }
    if !domain.is_integral()? {
        return Err(Error::DomainNotLatticeCompatible(format!("{domain} is not inside the unit ball")));
    }
    for c in f.coeffs() {
        if !c.is_exact() || c.valuation()? < Valuation::Finite(0) {
            return Err(Error::DomainNotLatticeCompatible(format!("coefficient {c} is not an exact p-adic integer")));
        }
    }
    let k = k.max(1);
    let lifts = domain.lifts(k)?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool");
    let keys: Vec<BigInt> = pool.install(|| {
        lifts
            .par_iter()
            .map(|x| {
                let v = f.eval(x).truncated_below(k as i64)?;
                Ok(v.as_rational().expect("exact").to_integer())
            })
            .collect::<Result<_>>()
    })?;
    let mut seen: HashMap<&BigInt, usize> = HashMap::new();
    let prime = domain.prime().get();
    for (j, key) in keys.iter().enumerate() {
        if let Some(&i) = seen.get(key) {
            return Ok(OracleVerdict::Collision { x: lifts[i].clone(), y: lifts[j].clone(), depth: k, prime });
        }
        seen.insert(key, j);
    }
    Ok(OracleVerdict::Bijective { lifts: lifts.len(), depth: k, prime })
}

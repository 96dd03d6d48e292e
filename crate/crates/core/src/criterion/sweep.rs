use rayon::prelude::*;
use serde::Serialize;

use super::eq_one::{lhs_from, PairVerdict, Status};
use crate::analytic::AnalyticMap;
use crate::error::{Error, Result};
use crate::hyperspace::Affinoid;
use crate::padic::{PadicNumber, Valuation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub x: PadicNumber,
    pub y: PadicNumber,
    pub lhs_exp: Option<Valuation>,
    pub rhs_exp: Option<Valuation>,
}

/// Result of testing every pair of distinct lifts of a domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionVerdict {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub pairs_tested: u64,
    pub depth: u32,
    pub prime: u64,
    pub sampling: String,
}

/// Exact values mapped into `ℤ/p^M` after a common shift, so valuations of
/// differences below `M` are read off machine words.
struct Codes {
    p: u64,
    shift: i64,
    modulus: u64,
    codes: Vec<Option<u64>>,
}

impl Codes {
    fn new(p: u64, values: &[Option<&PadicNumber>]) -> Codes {
        let mut digits = 0u32;
        let mut modulus = 1u64;
        while let Some(m) = modulus.checked_mul(p).filter(|&m| m <= u64::MAX / 2) {
            modulus = m;
            digits += 1;
        }
        let exact = |v: &&&PadicNumber| v.is_exact() && !v.is_zero();
        let shift = values.iter().flatten().filter(exact).map(|v| v.finite_valuation().unwrap()).min().unwrap_or(0);
        let codes = values
            .iter()
            .map(|v| {
                let v = v.filter(|v| v.is_exact())?;
                let d = v.scaled_digits(shift, shift + digits as i64);
                Some(u64::try_from(d).unwrap())
            })
            .collect();
        Codes { p, shift, modulus, codes }
    }

    /// `v(a - b)` when the codes tell it, `None` when a slow exact path is needed.
    fn diff_valuation(&self, i: usize, j: usize) -> Option<i64> {
        let (a, b) = (self.codes[i]?, self.codes[j]?);
        let mut d = (a + self.modulus - b) % self.modulus;
        if d == 0 {
            return None;
        }
        let mut v = self.shift;
        while d.is_multiple_of(self.p) {
            d /= self.p;
            v += 1;
        }
        Some(v)
    }
}

struct Sample<'a> {
    lifts: &'a [PadicNumber],
    images: Vec<Result<PadicNumber>>,
    derivs: Vec<Result<Valuation>>,
    lift_codes: Codes,
    image_codes: Codes,
}

impl Sample<'_> {
    fn pair(&self, i: usize, j: usize) -> PairVerdict {
        match self.try_pair(i, j) {
            Ok(v) => v,
            Err(e) => PairVerdict::unknown(e.to_string()),
        }
    }

    fn try_pair(&self, i: usize, j: usize) -> Result<PairVerdict> {
        let (fx, fy) = match (&self.images[i], &self.images[j]) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return Err(e.clone()),
        };
        let rhs = match (&self.derivs[i], &self.derivs[j]) {
            (Ok(a), Ok(b)) => *a + *b,
            (Err(e), _) | (_, Err(e)) => return Err(e.clone()),
        };
        let vdx = match self.lift_codes.diff_valuation(i, j) {
            Some(v) => v,
            None => self.lifts[i].checked_sub(&self.lifts[j])?.finite_valuation()?,
        };
        let lhs = match self.image_codes.diff_valuation(i, j) {
            Some(v) => Valuation::Finite(2 * (v - vdx)),
            None => lhs_from(fx, fy, vdx)?,
        };
        Ok(PairVerdict::compare(lhs, rhs))
    }
}

#[derive(Default)]
struct Row {
    failure: Option<(usize, usize, PairVerdict)>,
    undecided: Option<(usize, usize, PairVerdict)>,
    count: u64,
}

fn earliest(
    a: Option<(usize, usize, PairVerdict)>,
    b: Option<(usize, usize, PairVerdict)>,
) -> Option<(usize, usize, PairVerdict)> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if (a.0, a.1) <= (b.0, b.1) { a } else { b }),
        (a, b) => a.or(b),
    }
}

fn merge(a: Row, b: Row) -> Row {
    Row { failure: earliest(a.failure, b.failure), undecided: earliest(a.undecided, b.undecided), count: a.count + b.count }
}

fn scan_row(sample: &Sample<'_>, i: usize) -> Row {
    let mut row = Row::default();
    for j in i + 1..sample.lifts.len() {
        row.count += 1;
        let v = sample.pair(i, j);
        match v.status {
            Status::Holds => {}
            Status::Fails => {
                row.failure = Some((i, j, v));
                break;
            }
            Status::Indeterminate => {
                if row.undecided.is_none() {
                    row.undecided = Some((i, j, v));
                }
            }
        }
    }
    row
}

/// Tests all pairs of distinct residue lifts modulo `p^depth` lying in `domain`.
///
/// Rows of the pair triangle run in parallel on `workers` threads (0 picks
/// the rayon default); a row stops at its first failure, and the reported
/// witness is the lexicographically first one, so output does not depend on
/// scheduling.
pub fn eq_one_sweep<F: AnalyticMap + ?Sized>(
    f: &F,
    domain: &Affinoid,
    depth: u32,
    workers: usize,
) -> Result<CriterionVerdict> {
    if f.prime() != domain.prime() {
        return Err(Error::PrimeMismatch(f.prime().get(), domain.prime().get()));
    }
    let lifts = domain.lifts(depth.max(1))?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool");
    let row = pool.install(|| {
        let images: Vec<Result<PadicNumber>> = lifts.par_iter().map(|x| f.eval(x)).collect();
        let derivs: Vec<Result<Valuation>> =
            lifts.par_iter().map(|x| f.eval_derivative(x).and_then(|d| d.valuation())).collect();
        let p = domain.prime().get();
        let lift_codes = Codes::new(p, &lifts.iter().map(Some).collect::<Vec<_>>());
        let image_codes = Codes::new(p, &images.iter().map(|r| r.as_ref().ok()).collect::<Vec<_>>());
        let sample = Sample { lifts: &lifts, images, derivs, lift_codes, image_codes };
        (0..lifts.len()).into_par_iter().map(|i| scan_row(&sample, i)).reduce(Row::default, merge)
    });

    let sampling = format!("{} residue lifts mod {}^{} in {}", lifts.len(), domain.prime(), depth.max(1), domain);
    let mut verdict = CriterionVerdict {
        status: Status::Holds,
        witness: None,
        reason: None,
        pairs_tested: row.count,
        depth: depth.max(1),
        prime: domain.prime().get(),
        sampling,
    };
    if let Some((i, j, v)) = row.failure.or(row.undecided) {
        verdict.status = v.status;
        verdict.reason = v.reason;
        verdict.witness = Some(Witness { x: lifts[i].clone(), y: lifts[j].clone(), lhs_exp: v.lhs_exp, rhs_exp: v.rhs_exp });
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{Polynomial, RationalMap};
    use crate::criterion::eq_one_holds;
    use crate::padic::Prime;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn poly(pr: u64, s: &str) -> Polynomial {
        Polynomial::parse(p(pr), s).unwrap()
    }

    #[test]
    fn z_plus_z2_on_small_ball() {
        let dom = Affinoid::parse(p(3), "0;-1").unwrap();
        let v = eq_one_sweep(&poly(3, "z+z^2"), &dom, 3, 1).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.pairs_tested, 36);
    }

    #[test]
    fn square_fails_at_opposite_points() {
        let v = eq_one_sweep(&poly(3, "z^2"), &Affinoid::unit_ball(p(3)), 2, 1).unwrap();
        assert_eq!(v.status, Status::Fails);
        let w = v.witness.unwrap();
        // 0 against 1: f'(0) = 0 makes the right side infinite
        assert_eq!((w.x.to_string(), w.y.to_string()), ("0".into(), "1".into()));
        assert_eq!(w.rhs_exp, Some(Valuation::Infinite));
        let circle = eq_one_sweep(&poly(3, "z^2"), &Affinoid::unit_circle(p(3)), 2, 1).unwrap();
        let w = circle.witness.unwrap();
        assert!((&w.x + &w.y).valuation().unwrap() >= Valuation::Finite(1));
    }

    #[test]
    fn identity_and_inversion_hold() {
        for pr in [2, 3, 5] {
            let v = eq_one_sweep(&Polynomial::identity(p(pr)), &Affinoid::unit_ball(p(pr)), 2, 1).unwrap();
            assert_eq!(v.status, Status::Holds);
            let inv = eq_one_sweep(&RationalMap::inversion(p(pr)), &Affinoid::unit_circle(p(pr)), 2, 1).unwrap();
            assert_eq!(inv.status, Status::Holds);
        }
    }

    #[test]
    fn fast_path_agrees_with_direct_check() {
        let f = poly(5, "3 + 7z + 10z^2 + z^3");
        let dom = Affinoid::unit_ball(p(5));
        let lifts = dom.lifts(2).unwrap();
        let v = eq_one_sweep(&f, &dom, 2, 1).unwrap();
        let mut first = None;
        'outer: for i in 0..lifts.len() {
            for j in i + 1..lifts.len() {
                if eq_one_holds(&f, &lifts[i], &lifts[j]).unwrap().status == Status::Fails {
                    first = Some((lifts[i].clone(), lifts[j].clone()));
                    break 'outer;
                }
            }
        }
        let w = v.witness.unwrap();
        assert_eq!(Some((w.x, w.y)), first);
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let f = poly(3, "z+3z^2+9z^5");
        let dom = Affinoid::unit_circle(p(3));
        let a = eq_one_sweep(&f, &dom, 3, 1).unwrap();
        let b = eq_one_sweep(&f, &dom, 3, 4).unwrap();
        assert_eq!(a, b);
        let g = poly(3, "z^3");
        assert_eq!(eq_one_sweep(&g, &dom, 3, 1).unwrap(), eq_one_sweep(&g, &dom, 3, 3).unwrap());
    }
}

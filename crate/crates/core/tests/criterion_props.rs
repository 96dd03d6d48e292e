mod common;

use common::*;
use proptest::prelude::*;
use ultrametric::analytic::{reduce_polynomial, Polynomial};
use ultrametric::criterion::*;
use ultrametric::hyperspace::{Affinoid, HPoint};
use ultrametric::padic::{PadicNumber, Prime, RadiusExp, Valuation};

fn unit(p: Prime) -> impl Strategy<Value = i64> {
    (1i64..200).prop_filter("unit", move |a| a % p.get() as i64 != 0)
}

/// `z`, `az + b`, `z + p z²` and normalized outputs, all injective on the unit ball.
fn injective(p: Prime) -> impl Strategy<Value = Polynomial> {
    let pi = p.get() as i64;
    prop_oneof![
        Just(Polynomial::identity(p)),
        (unit(p), -50i64..50).prop_map(move |(a, b)| Polynomial::from_integers(p, &[b, a])),
        Just(Polynomial::from_integers(p, &[0, 1, pi])),
        (unit(p), -20i64..20, -20i64..20, 0i64..3).prop_map(move |(a, b, c, m)| {
            let f = Polynomial::from_integers(p, &[b, a, pi * c]).scale(&PadicNumber::prime_power(p, m));
            normalize_to_gauss_fixing(&f).unwrap().h
        }),
    ]
}

fn small_primes() -> impl Strategy<Value = Prime> {
    prop_oneof![Just(3u64), Just(5), Just(7)].prop_map(prime)
}

fn lifts(p: Prime, k: u32) -> Vec<PadicNumber> {
    Affinoid::unit_ball(p).lifts(k).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn injective_family_passes_the_sweep(
        (f, k) in primes().prop_flat_map(|p| (injective(p), 1u32..=3))
    ) {
        let v = eq_one_sweep(&f, &Affinoid::unit_ball(f.prime()), k, 1).unwrap();
        prop_assert_eq!(v.status, Status::Holds);
    }

    #[test]
    fn vanishing_derivative_is_witnessed(
        (a, c, p) in small_primes().prop_flat_map(|p| (-20i64..20, -20i64..20, Just(p)))
    ) {
        // (z - a)^2 (z + c) has f'(a) = 0
        let lin = Polynomial::from_integers(p, &[-a, 1]);
        let f = &(&lin * &lin) * &Polynomial::from_integers(p, &[c, 1]);
        let v = eq_one_sweep(&f, &Affinoid::unit_ball(p), 2, 1).unwrap();
        prop_assert_ne!(v.status, Status::Holds);
    }

    #[test]
    fn failures_rule_out_certificates(
        (cs, p) in small_primes().prop_flat_map(|p| (proptest::collection::vec(-30i64..30, 2..5), Just(p))),
        i in 0usize..49, j in 0usize..49
    ) {
        let f = Polynomial::from_integers(p, &cs);
        prop_assume!(f.degree().unwrap_or(0) >= 1);
        let pts = lifts(p, 2);
        let (x, y) = (&pts[i % pts.len()], &pts[j % pts.len()]);
        prop_assume!(x != y);
        let v = eq_one_holds(&f, x, y).unwrap();
        if v.status == Status::Fails && v.rhs_exp.is_some_and(|r| r != Valuation::Infinite) {
            prop_assert!(!isometry_certificate(&f).unwrap().is_valid());
        }
    }

    #[test]
    fn cross_ratio_follows_pointwise(
        (f, quad) in small_primes().prop_flat_map(|p| (polynomial(p, 3), [integral(p), integral(p), integral(p), integral(p)]))
    ) {
        let mut all_hold = true;
        for a in 0..4 {
            for b in a + 1..4 {
                if quad[a] == quad[b] {
                    return Ok(());
                }
                all_hold &= eq_one_holds(&f, &quad[a], &quad[b]).unwrap().status == Status::Holds;
            }
        }
        if all_hold {
            prop_assert!(cross_ratio_preserved(&f, &quad).unwrap().holds);
        }
    }

    #[test]
    fn certificate_matches_exhaustive_unit_exponents(
        (ints, p) in small_primes().prop_flat_map(|p| ((-20i64..20, -20i64..20, -20i64..20, -20i64..20), Just(p)))
    ) {
        let (d, a, b, c) = ints;
        let f = Polynomial::from_integers(p, &[d, a, b, c * p.get() as i64]);
        prop_assume!(f.degree().unwrap_or(0) >= 1);
        let pts = lifts(p, 2);
        let mut all_zero = true;
        'scan: for (i, x) in pts.iter().enumerate() {
            for y in &pts[i + 1..] {
                let v = eq_one_holds(&f, x, y).unwrap();
                if v.lhs_exp != Some(Valuation::Finite(0)) || v.rhs_exp != Some(Valuation::Finite(0)) {
                    all_zero = false;
                    break 'scan;
                }
            }
        }
        prop_assert_eq!(isometry_certificate(&f).unwrap().is_valid(), all_zero);
    }

    #[test]
    fn normalization_postconditions(
        (a, b, c, m, p) in primes().prop_flat_map(|p| (unit(p), -30i64..30, -30i64..30, -2i64..3, Just(p)))
    ) {
        let f = Polynomial::from_integers(p, &[0, a, c * p.get() as i64])
            .scale(&PadicNumber::prime_power(p, m));
        let f = &f + &Polynomial::from_integers(p, &[b]);
        let n = normalize_to_gauss_fixing(&f).unwrap();
        let s = HPoint::gauss(p);
        prop_assert_eq!(n.h.induced_image(&s).unwrap(), s);
        prop_assert_eq!(reduce_polynomial(&n.h).unwrap().reduced.to_string(), "z");
        prop_assert!(isometry_certificate(&n.h).unwrap().is_valid());
    }

    #[test]
    fn certified_maps_act_isometrically_on_the_ball(
        (f, pa, pb) in primes().prop_flat_map(|p| (injective(p), inner(p), inner(p)))
    ) {
        prop_assume!(isometry_certificate(&f).map(|c| c.is_valid()).unwrap_or(false));
        let d = pa.distance(&pb).unwrap();
        let (fa, fb) = (f.induced_image(&pa).unwrap(), f.induced_image(&pb).unwrap());
        prop_assert_eq!(fa.distance(&fb).unwrap(), d);
    }
}

/// A ball inside the closed unit ball.
fn inner(p: Prime) -> impl Strategy<Value = HPoint> {
    (integral(p), radius()).prop_map(|(c, r)| HPoint::new(c, if r > RadiusExp::ZERO { -r } else { r }).unwrap())
}

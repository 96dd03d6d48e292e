#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ultrametric::analytic::Polynomial;
use ultrametric::hyperspace::{HPoint, Homography};
use ultrametric::padic::{PadicNumber, Prime, RadiusExp};

pub fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p^e · a / b` with small `a`, `b`.
pub fn padic(p: Prime, e: i64, a: i64, b: i64) -> PadicNumber {
    &PadicNumber::prime_power(p, e) * &PadicNumber::rational(p, a, b).unwrap()
}

pub fn primes() -> impl Strategy<Value = Prime> {
    prop_oneof![Just(2u64), Just(3), Just(5), Just(7)].prop_map(prime)
}

pub fn number(p: Prime, emin: i64, emax: i64) -> impl Strategy<Value = PadicNumber> {
    (emin..=emax, -60i64..=60, 1i64..=30).prop_map(move |(e, a, b)| padic(p, e, a, b))
}

/// `p^e · a / b` with `e ≥ 0` and `b` prime to `p`.
pub fn integral(p: Prime) -> impl Strategy<Value = PadicNumber> {
    (0i64..=6, -60i64..=60, 1i64..=30).prop_map(move |(e, a, b)| {
        let b = if b % p.get() as i64 == 0 { b + 1 } else { b };
        padic(p, e, a, b)
    })
}

pub fn radius() -> impl Strategy<Value = RadiusExp> {
    (1i64..=4).prop_flat_map(|d| (-6 * d..=6 * d).prop_map(move |n| RadiusExp::new(n, d)))
}

pub fn point(p: Prime) -> impl Strategy<Value = HPoint> {
    (number(p, -4, 4), radius()).prop_map(|(c, r)| HPoint::new(c, r).unwrap())
}

pub fn homography(p: Prime) -> impl Strategy<Value = Homography> {
    (number(p, -2, 2), number(p, -2, 2), number(p, -2, 2), number(p, -2, 2))
        .prop_filter_map("singular", |(a, b, c, d)| Homography::new(a, b, c, d).ok())
}

/// Integer polynomial with `deg` in `1..=max_deg` and nonzero leading coefficient.
pub fn polynomial(p: Prime, max_deg: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(-30i64..=30, 2..=max_deg + 1).prop_filter_map("constant", move |mut cs| {
        if *cs.last().unwrap() == 0 {
            *cs.last_mut().unwrap() = 1;
        }
        Some(Polynomial::from_integers(p, &cs))
    })
}

pub fn rand_number<R: Rng>(rng: &mut R, p: Prime, emin: i64, emax: i64) -> PadicNumber {
    padic(p, rng.gen_range(emin..=emax), rng.gen_range(-60..=60), rng.gen_range(1..=30))
}

pub fn rand_radius<R: Rng>(rng: &mut R) -> RadiusExp {
    let d = rng.gen_range(1..=4);
    RadiusExp::new(rng.gen_range(-6 * d..=6 * d), d)
}

pub fn rand_point<R: Rng>(rng: &mut R, p: Prime) -> HPoint {
    HPoint::new(rand_number(rng, p, -4, 4), rand_radius(rng)).unwrap()
}

pub fn rand_homography<R: Rng>(rng: &mut R, p: Prime) -> Homography {
    loop {
        let [a, b, c, d] = [(); 4].map(|_| rand_number(rng, p, -2, 2));
        if let Ok(h) = Homography::new(a, b, c, d) {
            return h;
        }
    }
}

/// A `p`-adic integer below `p^digits`, optionally shifted into a ball.
pub fn rand_integer<R: Rng>(rng: &mut R, p: Prime, digits: u32) -> PadicNumber {
    let bound = (p.get() as i64).pow(digits);
    PadicNumber::integer(p, rng.gen_range(0..bound))
}

//! Seeded random codes for the property suites.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use rkcodes::chainring::RkPoly;
use rkcodes::code::{CyclicCode, TorsionTower};
use rkcodes::gfp::{factor_xn_minus_1, FpPoly, PrimeParams};
use rkcodes::structure::chain_tower;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Parameters with `p` from `primes`, `k <= k_max`, `n <= n_max`.
pub fn params(rng: &mut ChaCha8Rng, primes: &[u64], k_max: usize, n_max: usize, coprime: bool) -> PrimeParams {
    loop {
        let p = *primes.choose(rng).expect("nonempty prime list");
        let k = rng.gen_range(1..=k_max);
        let n = rng.gen_range(1..=n_max);
        if coprime && (n as u64).is_multiple_of(p) {
            continue;
        }
        return PrimeParams::new(p, k, n).expect("sampled parameters are valid");
    }
}

/// A uniformly random divisor chain of `x^n - 1` for coprime `n`.
pub fn chain(rng: &mut ChaCha8Rng, params: PrimeParams) -> TorsionTower {
    let factors: Vec<FpPoly> = factor_xn_minus_1(&params).into_iter().map(|f| f.poly).collect();
    let levels: Vec<usize> = factors.iter().map(|_| rng.gen_range(0..=params.k())).collect();
    chain_tower(params, &factors, &levels)
}

pub fn fp_poly(rng: &mut ChaCha8Rng, p: u32, len: usize) -> FpPoly {
    FpPoly::new(p, (0..len).map(|_| rng.gen_range(0..p)).collect())
}

/// `u^v` times a random polynomial, `v` uniform in `0..k`, with a random
/// divisor of `x^n - 1` as the leading layer half of the time.
pub fn generator(rng: &mut ChaCha8Rng, params: PrimeParams) -> RkPoly {
    let (p, k, n) = (params.p(), params.k(), params.n());
    let v = rng.gen_range(0..k);
    let mut layers: Vec<FpPoly> = (0..k).map(|_| fp_poly(rng, p, n)).collect();
    if rng.gen_bool(0.5) {
        layers[0] = divisor(rng, params);
    }
    RkPoly::from_layers(params, layers).mul_u(v)
}

/// A random monic divisor of `x^n - 1`.
pub fn divisor(rng: &mut ChaCha8Rng, params: PrimeParams) -> FpPoly {
    factor_xn_minus_1(&params)
        .into_iter()
        .map(|f| f.poly.pow(rng.gen_range(0..=f.multiplicity as u64)))
        .fold(FpPoly::one(params.p()), |acc, f| &acc * &f)
}

/// A code from one to three random generators.
pub fn code(rng: &mut ChaCha8Rng, params: PrimeParams) -> CyclicCode {
    let count = rng.gen_range(1..=3);
    let gens = (0..count).map(|_| generator(rng, params)).collect();
    CyclicCode::from_generators(params, gens).expect("generators share parameters")
}

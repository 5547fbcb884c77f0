//! Factorization of `x^n - 1` over `F_p` and its lattice of monic divisors.
//!
//! Writing `n = p^a * m` with `p` not dividing `m`, the Frobenius identity
//! gives `x^n - 1 = (x^m - 1)^(p^a)`, and `x^m - 1` is squarefree. The
//! squarefree part is split by distinct-degree factorization followed by
//! equal-degree splitting. The splitting draws from a fixed-seed generator,
//! so the output (sorted, unique by factorization) never depends on it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FpPoly, PrimeParams};
use crate::error::{Error, Result};

pub const DEFAULT_DIVISOR_CAP: u64 = 1 << 20;

/// One irreducible monic factor with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub poly: FpPoly,
    pub multiplicity: usize,
}

/// Irreducible factorization of `x^n - 1`, sorted by degree then coefficients.
pub fn factor_xn_minus_1(params: &PrimeParams) -> Vec<Factor> {
    let p = params.p();
    let mut m = params.n();
    let mut power = 1usize;
    while m.is_multiple_of(p as usize) {
        m /= p as usize;
        power *= p as usize;
    }
    let mut irreducibles = factor_squarefree(&FpPoly::xn_minus_1(p, m));
    irreducibles.sort();
    irreducibles.into_iter().map(|poly| Factor { poly, multiplicity: power }).collect()
}

/// All monic divisors of `x^n - 1`, capped at [`DEFAULT_DIVISOR_CAP`].
pub fn divisors_xn_minus_1(params: &PrimeParams) -> Result<Vec<FpPoly>> {
    divisors_xn_minus_1_capped(params, DEFAULT_DIVISOR_CAP)
}

pub fn divisors_xn_minus_1_capped(params: &PrimeParams, cap: u64) -> Result<Vec<FpPoly>> {
    let factors = factor_xn_minus_1(params);
    let count = factors.iter().map(|f| f.multiplicity as u128 + 1).product::<u128>();
    if count > cap as u128 {
        return Err(Error::DivisorLatticeTooLarge { count, cap });
    }
    let p = params.p();
    let mut divisors = vec![FpPoly::one(p)];
    for f in &factors {
        let powers: Vec<FpPoly> = (0..=f.multiplicity as u64).map(|e| f.poly.pow(e)).collect();
        divisors = divisors.iter().flat_map(|d| powers.iter().map(move |pw| d * pw)).collect();
    }
    divisors.sort();
    divisors.dedup();
    Ok(divisors)
}

fn mul_rem(a: &FpPoly, b: &FpPoly, modulus: &FpPoly) -> FpPoly {
    (a * b).rem(modulus).expect("nonzero modulus")
}

fn pow_rem(base: &FpPoly, mut exp: u64, modulus: &FpPoly) -> FpPoly {
    let p = base.modulus();
    let mut acc = FpPoly::one(p).rem(modulus).expect("nonzero modulus");
    let mut b = base.rem(modulus).expect("nonzero modulus");
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_rem(&acc, &b, modulus);
        }
        exp >>= 1;
        if exp > 0 {
            b = mul_rem(&b, &b, modulus);
        }
    }
    acc
}

/// Irreducible factors of a monic squarefree polynomial.
fn factor_squarefree(f: &FpPoly) -> Vec<FpPoly> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = FpPoly::x(p);
    let mut frob = x.clone();
    let mut d = 1usize;
    while rest.degree().or(0) >= 2 * d {
        // frob = x^(p^d) mod rest
        frob = pow_rem(&frob, p as u64, &rest);
        let g = FpPoly::gcd(&rest, &(&frob - &x));
        if !g.is_one() {
            out.extend(split_equal_degree(&g, d));
            rest = rest.div_exact(&g).expect("gcd divides");
            frob = frob.rem(&rest).expect("nonzero");
        }
        d += 1;
    }
    if rest.degree().or(0) > 0 {
        out.push(rest);
    }
    out
}

/// Splits a product of distinct monic irreducibles all of degree `d`.
fn split_equal_degree(g: &FpPoly, d: usize) -> Vec<FpPoly> {
    let deg = g.degree().or(0);
    if deg == d {
        return vec![g.monic()];
    }
    let p = g.modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ ((p as u64) << 16) ^ deg as u64);
    loop {
        let a = FpPoly::new(p, (0..deg).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().or(0) == 0 {
            continue;
        }
        let probe = if p == 2 {
            // absolute trace a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(g).expect("nonzero");
            let mut acc = t.clone();
            for _ in 1..d {
                t = mul_rem(&t, &t, g);
                acc = &acc + &t;
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
            let mut norm = FpPoly::one(p);
            let mut conj = a.rem(g).expect("nonzero");
            for i in 0..d {
                norm = mul_rem(&norm, &conj, g);
                if i + 1 < d {
                    conj = pow_rem(&conj, p as u64, g);
                }
            }
            let half = pow_rem(&norm, (p as u64 - 1) / 2, g);
            &half - &FpPoly::one(p)
        };
        let h = FpPoly::gcd(g, &probe);
        let hd = h.degree().or(0);
        if hd > 0 && hd < deg {
            let other = g.div_exact(&h).expect("gcd divides");
            let mut parts = split_equal_degree(&h, d);
            parts.extend(split_equal_degree(&other, d));
            return parts;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: u64, n: usize) -> PrimeParams {
        PrimeParams::new(p, 1, n).unwrap()
    }

    fn poly(p: u32, c: &[i64]) -> FpPoly {
        FpPoly::from_signed(p, c)
    }

    /// Independent oracle: every monic polynomial of degree `d`, tested
    /// for irreducibility by trial division against all lower-degree monics.
    fn irreducibles_by_sieve(p: u32, max_deg: usize) -> Vec<FpPoly> {
        let mut irreducible: Vec<FpPoly> = Vec::new();
        for d in 1..=max_deg {
            let count = (p as usize).pow(d as u32);
            for idx in 0..count {
                let mut coeffs = Vec::with_capacity(d + 1);
                let mut v = idx;
                for _ in 0..d {
                    coeffs.push((v % p as usize) as u32);
                    v /= p as usize;
                }
                coeffs.push(1);
                let cand = FpPoly::new(p, coeffs);
                if irreducible.iter().filter(|q| 2 * q.degree().or(0) <= d).all(|q| !q.divides(&cand)) {
                    irreducible.push(cand);
                }
            }
        }
        irreducible
    }

    fn trial_division_factor(p: u32, n: usize) -> Vec<(FpPoly, usize)> {
        let mut f = FpPoly::xn_minus_1(p, n);
        let mut out = Vec::new();
        for q in irreducibles_by_sieve(p, n) {
            let mut mult = 0;
            while q.divides(&f) {
                f = f.div_exact(&q).unwrap();
                mult += 1;
            }
            if mult > 0 {
                out.push((q, mult));
            }
        }
        assert!(f.is_one());
        out.sort();
        out
    }

    #[test]
    fn x5_minus_1_over_f3() {
        let f = factor_xn_minus_1(&params(3, 5));
        assert_eq!(
            f,
            vec![
                Factor { poly: poly(3, &[-1, 1]), multiplicity: 1 },
                Factor { poly: poly(3, &[1, 1, 1, 1, 1]), multiplicity: 1 },
            ]
        );
    }

    #[test]
    fn x9_minus_1_over_f3_is_ninth_power() {
        let f = factor_xn_minus_1(&params(3, 9));
        assert_eq!(f, vec![Factor { poly: poly(3, &[2, 1]), multiplicity: 9 }]);
    }

    #[test]
    fn x3_minus_1_over_f2() {
        let f = factor_xn_minus_1(&params(2, 3));
        assert_eq!(
            f,
            vec![
                Factor { poly: poly(2, &[1, 1]), multiplicity: 1 },
                Factor { poly: poly(2, &[1, 1, 1]), multiplicity: 1 },
            ]
        );
    }

    #[test]
    fn agrees_with_trial_division_oracle() {
        for (p, max_n) in [(2u32, 12usize), (3, 9), (5, 6), (7, 4)] {
            for n in 1..=max_n {
                let got: Vec<(FpPoly, usize)> =
                    factor_xn_minus_1(&params(p as u64, n)).into_iter().map(|f| (f.poly, f.multiplicity)).collect();
                assert_eq!(got, trial_division_factor(p, n), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn product_and_multiplicities_at_scale() {
        for p in [2u64, 3, 5, 7, 11, 13, 65521] {
            for n in [1usize, 2, 6, 15, 21, 31, 48, 63, 64] {
                let prm = params(p, n);
                let factors = factor_xn_minus_1(&prm);
                let mut prod = FpPoly::one(p as u32);
                for f in &factors {
                    assert_eq!(f.poly.degree(), f.poly.monic().degree());
                    prod = &prod * &f.poly.pow(f.multiplicity as u64);
                }
                assert_eq!(prod, prm.xn_minus_1(), "p={p} n={n}");
                let all_simple = factors.iter().all(|f| f.multiplicity == 1);
                assert_eq!(all_simple, prm.is_coprime());
                let mut sorted = factors.clone();
                sorted.sort_by(|a, b| a.poly.cmp(&b.poly));
                assert_eq!(sorted, factors);
            }
        }
    }

    #[test]
    fn frobenius_multiplies_multiplicities() {
        for (p, m) in [(2u64, 3usize), (2, 5), (3, 4), (5, 6), (3, 7)] {
            let base = factor_xn_minus_1(&params(p, m));
            let lifted = factor_xn_minus_1(&params(p, m * p as usize));
            let expect: Vec<Factor> =
                base.into_iter().map(|f| Factor { poly: f.poly, multiplicity: f.multiplicity * p as usize }).collect();
            assert_eq!(lifted, expect);
        }
    }

    #[test]
    fn divisor_examples() {
        let d = divisors_xn_minus_1(&params(3, 5)).unwrap();
        assert_eq!(d, vec![FpPoly::one(3), poly(3, &[2, 1]), poly(3, &[1, 1, 1, 1, 1]), FpPoly::xn_minus_1(3, 5)]);
        let d = divisors_xn_minus_1(&params(2, 1)).unwrap();
        assert_eq!(d, vec![FpPoly::one(2), poly(2, &[1, 1])]);
        let d = divisors_xn_minus_1(&params(2, 4)).unwrap();
        let expect: Vec<FpPoly> = (0..=4).map(|e| poly(2, &[1, 1]).pow(e)).collect();
        assert_eq!(d, expect);
    }

    #[test]
    fn divisor_cap() {
        // x^63 - 1 over F_2 has 13 irreducible factors
        let err = divisors_xn_minus_1_capped(&params(2, 63), 1000).unwrap_err();
        assert_eq!(err, Error::DivisorLatticeTooLarge { count: 8192, cap: 1000 });
    }

    #[test]
    fn divisor_lattice_closed_under_gcd_and_lcm() {
        for (p, n) in [(2u64, 6usize), (3, 8), (5, 4), (2, 7)] {
            let prm = params(p, n);
            let divs = divisors_xn_minus_1(&prm).unwrap();
            for a in &divs {
                assert!(a.divides(&prm.xn_minus_1()));
                for b in &divs {
                    assert!(divs.binary_search(&FpPoly::gcd(a, b)).is_ok());
                    assert!(divs.binary_search(&FpPoly::lcm(a, b)).is_ok());
                }
            }
        }
    }
}

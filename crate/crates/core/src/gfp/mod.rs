//! Prime field arithmetic, dense polynomials over `F_p`, and the
//! factorization and divisor lattice of `x^n - 1`.

mod factor;
mod field;
mod poly;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use factor::{divisors_xn_minus_1, divisors_xn_minus_1_capped, factor_xn_minus_1, Factor, DEFAULT_DIVISOR_CAP};
pub use field::{add_mod, inv_mod, is_prime, mul_mod, neg_mod, pow_mod, sub_mod};
pub use poly::FpPoly;

pub const MAX_P: u32 = 1 << 16;
pub const MAX_K: usize = 8;
pub const MAX_N: usize = 64;

/// The triple `(p, k, n)`: residue field `F_p`, nilpotency index of `u`,
/// and code length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeParams {
    p: u32,
    k: usize,
    n: usize,
}

impl PrimeParams {
    pub fn new(p: u64, k: usize, n: usize) -> Result<Self> {
        if p < 2 || p > MAX_P as u64 {
            return Err(Error::InvalidParams(format!("p must lie in [2, {MAX_P}], got {p}")));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 || k > MAX_K {
            return Err(Error::InvalidParams(format!("k must lie in [1, {MAX_K}], got {k}")));
        }
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidParams(format!("n must lie in [1, {MAX_N}], got {n}")));
        }
        Ok(Self { p: p as u32, k, n })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Same field and length, different nilpotency index.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        Self::new(self.p as u64, k, self.n)
    }

    pub fn with_n(&self, n: usize) -> Result<Self> {
        Self::new(self.p as u64, self.k, n)
    }

    /// `gcd(n, p) == 1`, i.e. `x^n - 1` is squarefree over `F_p`.
    pub fn is_coprime(&self) -> bool {
        !self.n.is_multiple_of(self.p as usize)
    }

    /// `x^n - 1` over `F_p`.
    pub fn xn_minus_1(&self) -> FpPoly {
        FpPoly::xn_minus_1(self.p, self.n)
    }
}

impl fmt::Display for PrimeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} k={} n={}", self.p, self.k, self.n)
    }
}

/// Polynomial degree with the zero polynomial at `-inf`, below every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// Degree as an integer, with the zero polynomial mapped to `zero_as`.
    pub fn or(self, zero_as: usize) -> usize {
        self.finite().unwrap_or(zero_as)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Minimum Hamming weight of the cyclic code `<gen>` in `F_p[x]/(x^n - 1)`,
/// by exhaustive search over its `p^(n - deg gen)` codewords.
pub fn fp_cyclic_min_weight(gen: &FpPoly, params: &PrimeParams, budget: u64) -> Result<usize> {
    let n = params.n();
    let xn1 = params.xn_minus_1();
    if gen.modulus() != params.p() {
        return Err(Error::ParamMismatch(format!("generator over F_{}", gen.modulus())));
    }
    if !gen.divides(&xn1) {
        return Err(Error::InvalidParams(format!("{gen} does not divide x^{n} - 1")));
    }
    let gen = gen.monic();
    if gen == xn1 {
        return Err(Error::ZeroCode);
    }
    let dim = n - gen.degree().or(0);
    crate::weight::check_budget(params.p(), dim, budget)?;
    let basis: Vec<Vec<u32>> = (0..dim).map(|i| gen.shift(i).to_dense(n)).collect();
    crate::weight::min_block_weight(params.p(), &basis, 1, budget)
}

//! Closed-form minimum distances for codes of length `p^l` whose top torsion
//! generator is a power of `x - 1`.
//!
//! `t` is written in base `p` with exactly `l` digits `b_{l-1} ... b_0`. When
//! the leading digit is nonzero the digit string falls into one of three
//! classes, and the distance is a product over the leading run of nonzero
//! digits. Everything here is checked against exhaustive search in the tests;
//! the formulas are reproduced as stated, not corrected.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::CyclicCode;
use crate::error::{Error, Result};
use crate::gfp::{fp_cyclic_min_weight, FpPoly, PrimeParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PAdicClass {
    /// Leading `q` digits nonzero, all remaining digits zero, `q < l`.
    ZeroExpansion(usize),
    /// Leading `q` digits nonzero, the next one zero, some later digit nonzero.
    NonZeroExpansion(usize),
    /// All `l` digits nonzero.
    FullExpansion,
}

impl fmt::Display for PAdicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PAdicClass::ZeroExpansion(q) => write!(f, "zero expansion (q={q})"),
            PAdicClass::NonZeroExpansion(q) => write!(f, "non-zero expansion (q={q})"),
            PAdicClass::FullExpansion => f.write_str("full expansion"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PAdicExpansion {
    pub m: u64,
    pub p: u32,
    pub l: usize,
    /// `b_{l-1}, ..., b_0`, most significant first.
    pub digits: Vec<u32>,
    pub class: PAdicClass,
}

impl PAdicExpansion {
    /// `b_{l-i}` for `1 <= i <= l`.
    pub fn leading(&self, i: usize) -> u32 {
        self.digits[i - 1]
    }

    /// The leading run of nonzero digits.
    pub fn leading_run(&self) -> &[u32] {
        let q = match self.class {
            PAdicClass::ZeroExpansion(q) | PAdicClass::NonZeroExpansion(q) => q,
            PAdicClass::FullExpansion => self.l,
        };
        &self.digits[..q]
    }

    pub fn value(&self) -> u64 {
        self.digits.iter().fold(0, |acc, &d| acc * self.p as u64 + d as u64)
    }
}

fn checked_pow(p: u32, l: usize) -> Option<u64> {
    (p as u64).checked_pow(u32::try_from(l).ok()?)
}

/// Base-`p` digits of `m` with exactly `l` places, most significant first.
fn digits(m: u64, p: u32, l: usize) -> Vec<u32> {
    let mut out = vec![0u32; l];
    let mut rest = m;
    for slot in out.iter_mut().rev() {
        *slot = (rest % p as u64) as u32;
        rest /= p as u64;
    }
    out
}

pub fn classify_p_adic(m: u64, p: u32, l: usize) -> Result<PAdicExpansion> {
    let bound = checked_pow(p, l).ok_or_else(|| Error::OutOfRange(format!("{p}^{l} overflows")))?;
    if l == 0 || m == 0 || m >= bound {
        return Err(Error::OutOfRange(format!("need 0 < m < {p}^{l}, got m = {m}")));
    }
    let digits = digits(m, p, l);
    if digits[0] == 0 {
        return Err(Error::LeadingDigitZero);
    }
    let q = digits.iter().take_while(|&&d| d != 0).count();
    let class = if q == l {
        PAdicClass::FullExpansion
    } else if digits[q..].iter().all(|&d| d == 0) {
        PAdicClass::ZeroExpansion(q)
    } else {
        PAdicClass::NonZeroExpansion(q)
    };
    Ok(PAdicExpansion { m, p, l, digits, class })
}

/// The stated minimum distance of `<(x - 1)^t>` at length `p^l`.
///
/// `t <= p^{l-1}` gives 2 without classifying. Otherwise the product of
/// `b + 1` over the leading nonzero run, doubled for a non-zero expansion.
pub fn distance_power_length(p: u32, l: usize, t: u64) -> Result<usize> {
    let n = checked_pow(p, l).ok_or_else(|| Error::OutOfRange(format!("{p}^{l} overflows")))?;
    if l == 0 || t == 0 || t >= n {
        return Err(Error::OutOfRange(format!("need 0 < t < {p}^{l} = {n}, got t = {t}")));
    }
    if t <= n / p as u64 {
        return Ok(2);
    }
    let exp = classify_p_adic(t, p, l)?;
    let product: usize = exp.leading_run().iter().map(|&b| b as usize + 1).product();
    Ok(match exp.class {
        PAdicClass::NonZeroExpansion(_) => 2 * product,
        _ => product,
    })
}

/// `l` with `n = p^l`, if any.
pub fn exact_power(n: usize, p: u32) -> Option<usize> {
    let mut l = 0;
    let mut acc = 1usize;
    while acc < n {
        acc = acc.checked_mul(p as usize)?;
        l += 1;
    }
    (acc == n).then_some(l)
}

/// `t` with `g = (x - 1)^t`, found by repeated division.
pub fn power_of_x_minus_1(g: &FpPoly) -> Option<u64> {
    if g.is_zero() {
        return None;
    }
    let xm1 = FpPoly::x_minus_1(g.modulus());
    let mut rest = g.monic();
    let mut t = 0;
    while !rest.is_one() {
        let (q, r) = rest.divmod(&xm1).ok()?;
        if !r.is_zero() {
            return None;
        }
        rest = q;
        t += 1;
    }
    Some(t)
}

/// Distance of a code from the closed form, through its top torsion
/// generator `ĝ_{k-1} = (x - 1)^t`.
pub fn distance_via_theorem(code: &CyclicCode) -> Result<usize> {
    let params = code.params();
    let (p, n) = (params.p(), params.n());
    let l = exact_power(n, p)
        .filter(|&l| l >= 1)
        .ok_or_else(|| Error::ClosedFormInapplicable(format!("n = {n} is not a power of p = {p}")))?;
    if code.is_zero() {
        return Err(Error::ClosedFormInapplicable("zero code".into()));
    }
    let top = code.torsion_tower().top().clone();
    let t = power_of_x_minus_1(&top)
        .ok_or_else(|| Error::ClosedFormInapplicable(format!("top torsion generator {top} is not a power of x - 1")))?;
    if t == 0 {
        return Err(Error::ClosedFormInapplicable("top torsion generator is 1".into()));
    }
    distance_power_length(p, l, t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductCheck {
    pub lhs: usize,
    pub rhs: usize,
    pub equal: bool,
}

/// Compares `d(<(x^{p^{l-1}} - 1)^b h>)` at length `p^l` with
/// `(b + 1) d(<h>)` at length `p^{l-1}`, both by exhaustive search.
pub fn lemma_product_check(p: u32, l: usize, b: u32, h: &FpPoly, budget: u64) -> Result<ProductCheck> {
    if b == 0 || b >= p {
        return Err(Error::OutOfRange(format!("need 1 <= b < p = {p}, got b = {b}")));
    }
    if l == 0 {
        return Err(Error::OutOfRange("need l >= 1".into()));
    }
    let short = checked_pow(p, l - 1).ok_or_else(|| Error::OutOfRange(format!("{p}^{} overflows", l - 1)))?;
    let long = short * p as u64;
    let short_params = PrimeParams::new(p as u64, 1, short as usize)?;
    let long_params = PrimeParams::new(p as u64, 1, long as usize)?;
    let xs1 = short_params.xn_minus_1();
    if h.monic() == xs1 {
        return Err(Error::OutOfRange(format!("h must differ from x^{short} - 1")));
    }
    let d_short = fp_cyclic_min_weight(h, &short_params, budget)?;
    let g = &xs1.pow(b as u64) * h;
    let lhs = fp_cyclic_min_weight(&g, &long_params, budget)?;
    let rhs = (b as usize + 1) * d_short;
    Ok(ProductCheck { lhs, rhs, equal: lhs == rhs })
}

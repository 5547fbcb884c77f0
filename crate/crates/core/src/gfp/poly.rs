use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{add_mod, inv_mod, mul_mod, neg_mod, sub_mod};
use super::Degree;
use crate::error::{Error, Result};

/// Dense polynomial over `F_p`, lowest degree first.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and two equal polynomials have identical storage.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl FpPoly {
    /// Builds a polynomial from arbitrary integers, reducing each modulo `p`.
    pub fn new(p: u32, coeffs: Vec<u32>) -> Self {
        let mut coeffs = coeffs;
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        let mut poly = Self { p, coeffs };
        poly.trim();
        poly
    }

    /// Builds from signed integers so that `x - 1` can be written as `[-1, 1]`.
    pub fn from_signed(p: u32, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u32).collect();
        Self::new(p, coeffs)
    }

    pub fn zero(p: u32) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u32, c: u32) -> Self {
        Self::new(p, vec![c])
    }

    pub fn x(p: u32) -> Self {
        Self::monomial(p, 1, 1)
    }

    pub fn monomial(p: u32, c: u32, e: usize) -> Self {
        let mut coeffs = vec![0; e + 1];
        coeffs[e] = c;
        Self::new(p, coeffs)
    }

    /// `x^n - 1`.
    pub fn xn_minus_1(p: u32, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = p - 1;
        coeffs[n] = 1;
        Self::new(p, coeffs)
    }

    /// `x - 1`.
    pub fn x_minus_1(p: u32) -> Self {
        Self::new(p, vec![p - 1, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    #[inline]
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            len => Degree::Finite(len - 1),
        }
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lead(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(self.p, other.p, "polynomials over different prime fields");
    }

    pub fn scale(&self, c: u32) -> Self {
        let c = c % self.p;
        Self::new(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect())
    }

    /// Multiplies by `x^e`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; e];
        coeffs.extend_from_slice(&self.coeffs);
        Self { p: self.p, coeffs }
    }

    /// Scales to leading coefficient one. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match inv_mod(self.lead(), self.p) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.p);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Long division: `self = divisor * q + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_same_field(divisor);
        if divisor.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let p = self.p;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(p), self.clone()));
        }
        let inv_lead = inv_mod(divisor.lead(), p).expect("nonzero lead in a field");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = mul_mod(rem[i + dd], inv_lead, p);
            if c == 0 {
                continue;
            }
            quot[i] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = sub_mod(rem[i + j], mul_mod(c, b, p), p);
            }
        }
        rem.truncate(dd);
        Ok((Self::new(p, quot), Self::new(p, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        self.divmod(divisor).map(|(_, r)| r)
    }

    /// Exact quotient; errors when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divmod(divisor)?;
        if !r.is_zero() {
            return Err(Error::Invariant(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }

    /// `self | other`. The zero polynomial divides only zero.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic gcd together with Bézout cofactors: `g = s*a + t*b`.
    pub fn xgcd(a: &Self, b: &Self) -> Result<(Self, Self, Self)> {
        a.check_same_field(b);
        let p = a.p;
        if a.is_zero() && b.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = inv_mod(r0.lead(), p).expect("nonzero gcd");
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    /// Monic gcd; `gcd(0, 0)` is reported as zero.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        match Self::xgcd(a, b) {
            Ok((g, _, _)) => g,
            Err(_) => Self::zero(a.p),
        }
    }

    /// Monic lcm of two nonzero polynomials.
    pub fn lcm(a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() {
            return Self::zero(a.p);
        }
        let g = Self::gcd(a, b);
        (&a.div_exact(&g).expect("gcd divides") * b).monic()
    }

    /// Reduction modulo `x^n - 1`: exponents fold cyclically.
    pub fn reduce_cyclic(&self, n: usize) -> Self {
        if self.coeffs.len() <= n {
            return self.clone();
        }
        let mut out = vec![0u32; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = add_mod(out[i % n], c, self.p);
        }
        Self::new(self.p, out)
    }

    /// Product modulo `x^n - 1`.
    pub fn mul_cyclic(&self, other: &Self, n: usize) -> Self {
        self.check_same_field(other);
        let p = self.p;
        let mut out = vec![0u32; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let idx = (i + j) % n;
                out[idx] = add_mod(out[idx], mul_mod(a, b, p), p);
            }
        }
        Self::new(p, out)
    }

    /// Dense vector of the first `len` coefficients.
    pub fn to_dense(&self, len: usize) -> Vec<u32> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    /// Canonical list order: degree first, then coefficients lowest first.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.p.cmp(&other.p).then(self.degree().cmp(&other.degree())).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FpPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl Add for &FpPoly {
    type Output = FpPoly;

    fn add(self, rhs: &FpPoly) -> FpPoly {
        self.check_same_field(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| add_mod(self.coeff(i), rhs.coeff(i), self.p)).collect();
        FpPoly::new(self.p, coeffs)
    }
}

impl Sub for &FpPoly {
    type Output = FpPoly;

    fn sub(self, rhs: &FpPoly) -> FpPoly {
        self.check_same_field(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| sub_mod(self.coeff(i), rhs.coeff(i), self.p)).collect();
        FpPoly::new(self.p, coeffs)
    }
}

impl Neg for &FpPoly {
    type Output = FpPoly;

    fn neg(self) -> FpPoly {
        FpPoly::new(self.p, self.coeffs.iter().map(|&c| neg_mod(c, self.p)).collect())
    }
}

impl Mul for &FpPoly {
    type Output = FpPoly;

    fn mul(self, rhs: &FpPoly) -> FpPoly {
        self.check_same_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u32; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
            }
        }
        FpPoly::new(p, out)
    }
}

/// Renders highest degree first, e.g. `x^4 + 2x + 1`; zero renders as `0`.
impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (c, e) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (c, 1) => write!(f, "{c}x")?,
                (1, e) => write!(f, "x^{e}")?,
                (c, e) => write!(f, "{c}x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly[p={}]({})", self.p, self)
    }
}

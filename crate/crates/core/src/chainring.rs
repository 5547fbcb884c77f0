//! Arithmetic in `R_k = F_p[u]/(u^k)`, in `R_k[x]`, and in the cyclic quotient
//! `R_k[x]/(x^n - 1)`.
//!
//! Elements are stored layer-major: layer `j` holds the coefficient of `u^j`.
//! Truncation to `R_j` keeps the first `j` layers and multiplication by `u`
//! shifts layers up by one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::gfp::{add_mod, inv_mod, mul_mod, neg_mod, sub_mod, Degree, FpPoly, PrimeParams};

/// An element `a_0 + a_1 u + ... + a_{k-1} u^{k-1}` of `R_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RkElem {
    params: PrimeParams,
    layers: Vec<u32>,
}

impl RkElem {
    pub fn new(params: PrimeParams, layers: &[u32]) -> Self {
        let p = params.p();
        let mut l = vec![0u32; params.k()];
        for (dst, &src) in l.iter_mut().zip(layers) {
            *dst = src % p;
        }
        Self { params, layers: l }
    }

    pub fn zero(params: PrimeParams) -> Self {
        Self::new(params, &[])
    }

    pub fn one(params: PrimeParams) -> Self {
        Self::new(params, &[1])
    }

    /// `u^j`, zero once `j >= k`.
    pub fn u_pow(params: PrimeParams, j: usize) -> Self {
        let mut l = vec![0u32; params.k()];
        if j < params.k() {
            l[j] = 1;
        }
        Self { params, layers: l }
    }

    pub fn params(&self) -> PrimeParams {
        self.params
    }

    pub fn layers(&self) -> &[u32] {
        &self.layers
    }

    pub fn is_zero(&self) -> bool {
        self.layers.iter().all(|&c| c == 0)
    }

    pub fn is_unit(&self) -> bool {
        self.layers[0] != 0
    }

    /// Index of the lowest nonzero layer; `k` for zero.
    pub fn u_valuation(&self) -> usize {
        self.layers.iter().position(|&c| c != 0).unwrap_or(self.params.k())
    }

    /// Inverse of a unit: `a_0^{-1} * sum_i (-a_0^{-1} N)^i` where `N` is the
    /// nilpotent part.
    pub fn inverse(&self) -> Result<Self> {
        let p = self.params.p();
        let a0_inv = inv_mod(self.layers[0], p).ok_or(Error::NotAUnit)?;
        let mut nil = self.clone();
        nil.layers[0] = 0;
        let step = nil.scale(neg_mod(a0_inv, p));
        let mut term = Self::one(self.params);
        let mut sum = Self::one(self.params);
        for _ in 1..self.params.k() {
            term = &term * &step;
            sum = &sum + &term;
        }
        Ok(sum.scale(a0_inv))
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.params.p();
        Self { params: self.params, layers: self.layers.iter().map(|&a| mul_mod(a, c % p, p)).collect() }
    }
}

impl Add for &RkElem {
    type Output = RkElem;

    fn add(self, rhs: &RkElem) -> RkElem {
        let p = self.params.p();
        RkElem {
            params: self.params,
            layers: self.layers.iter().zip(&rhs.layers).map(|(&a, &b)| add_mod(a, b, p)).collect(),
        }
    }
}

impl Sub for &RkElem {
    type Output = RkElem;

    fn sub(self, rhs: &RkElem) -> RkElem {
        let p = self.params.p();
        RkElem {
            params: self.params,
            layers: self.layers.iter().zip(&rhs.layers).map(|(&a, &b)| sub_mod(a, b, p)).collect(),
        }
    }
}

impl Mul for &RkElem {
    type Output = RkElem;

    fn mul(self, rhs: &RkElem) -> RkElem {
        let p = self.params.p();
        let k = self.params.k();
        let mut out = vec![0u32; k];
        for (i, &a) in self.layers.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.layers[..k - i].iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
            }
        }
        RkElem { params: self.params, layers: out }
    }
}

impl fmt::Display for RkElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let layers: Vec<FpPoly> = self.layers.iter().map(|&c| FpPoly::constant(self.params.p(), c)).collect();
        write!(f, "{}", RkPoly::from_layers(self.params, layers))
    }
}

/// A polynomial over `R_k`, stored as `k` polynomials over `F_p` (its u-layers).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RkPoly {
    params: PrimeParams,
    layers: Vec<FpPoly>,
}

impl RkPoly {
    /// Takes up to `k` layers; missing layers are zero.
    pub fn from_layers(params: PrimeParams, layers: Vec<FpPoly>) -> Self {
        assert!(layers.len() <= params.k(), "more than k u-layers");
        let p = params.p();
        let mut layers = layers;
        for l in &layers {
            assert_eq!(l.modulus(), p, "layer over the wrong prime field");
        }
        layers.resize(params.k(), FpPoly::zero(p));
        Self { params, layers }
    }

    pub fn zero(params: PrimeParams) -> Self {
        Self::from_layers(params, Vec::new())
    }

    pub fn one(params: PrimeParams) -> Self {
        Self::from_fp(params, FpPoly::one(params.p()))
    }

    /// Embeds an `F_p` polynomial in layer zero.
    pub fn from_fp(params: PrimeParams, g: FpPoly) -> Self {
        Self::from_layers(params, vec![g])
    }

    /// `u^j * g`.
    pub fn u_times(params: PrimeParams, j: usize, g: FpPoly) -> Self {
        let mut layers = vec![FpPoly::zero(params.p()); params.k()];
        if j < params.k() {
            layers[j] = g;
        }
        Self { params, layers }
    }

    /// `x^n - 1` as an element of `R_k[x]`.
    pub fn xn_minus_1(params: PrimeParams) -> Self {
        Self::from_fp(params, params.xn_minus_1())
    }

    pub fn params(&self) -> PrimeParams {
        self.params
    }

    pub fn layers(&self) -> &[FpPoly] {
        &self.layers
    }

    pub fn layer(&self, j: usize) -> &FpPoly {
        &self.layers[j]
    }

    pub fn into_layers(self) -> Vec<FpPoly> {
        self.layers
    }

    pub fn is_zero(&self) -> bool {
        self.layers.iter().all(FpPoly::is_zero)
    }

    /// Maximum of the layer degrees.
    pub fn degree(&self) -> Degree {
        self.layers.iter().map(FpPoly::degree).max().unwrap_or(Degree::NegInf)
    }

    /// Coefficient of `x^i` as an element of `R_k`.
    pub fn coeff(&self, i: usize) -> RkElem {
        let l: Vec<u32> = self.layers.iter().map(|g| g.coeff(i)).collect();
        RkElem { params: self.params, layers: l }
    }

    /// Coefficient at the degree; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> RkElem {
        match self.degree() {
            Degree::NegInf => RkElem::zero(self.params),
            Degree::Finite(d) => self.coeff(d),
        }
    }

    /// Lowest nonzero u-layer; `k` for zero.
    pub fn u_valuation(&self) -> usize {
        self.layers.iter().position(|g| !g.is_zero()).unwrap_or(self.params.k())
    }

    /// Multiplies by `u^j`: shifts layers up and drops those past `k`.
    pub fn mul_u(&self, j: usize) -> Self {
        let k = self.params.k();
        let p = self.params.p();
        let layers = (0..k).map(|i| if i >= j { self.layers[i - j].clone() } else { FpPoly::zero(p) }).collect();
        Self { params: self.params, layers }
    }

    pub fn scale_elem(&self, c: &RkElem) -> Self {
        let constant =
            RkPoly::from_layers(self.params, c.layers.iter().map(|&v| FpPoly::constant(self.params.p(), v)).collect());
        self * &constant
    }

    /// Multiplies by `x^e` modulo `x^n - 1`.
    pub fn shift_cyclic(&self, e: usize) -> Self {
        let n = self.params.n();
        let layers = self.layers.iter().map(|g| g.shift(e % n).reduce_cyclic(n)).collect();
        Self { params: self.params, layers }
    }

    /// Reduction modulo `x^n - 1`.
    pub fn reduce_cyclic(&self) -> Self {
        let n = self.params.n();
        Self { params: self.params, layers: self.layers.iter().map(|g| g.reduce_cyclic(n)).collect() }
    }

    pub fn is_reduced(&self) -> bool {
        self.degree() < Degree::Finite(self.params.n())
    }

    /// Product in `R_k[x]/(x^n - 1)`.
    pub fn mul_mod(&self, other: &Self) -> Self {
        self.check_params(other);
        let n = self.params.n();
        let k = self.params.k();
        let p = self.params.p();
        let mut layers = vec![FpPoly::zero(p); k];
        for (i, a) in self.layers.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.layers[..k - i].iter().enumerate() {
                let prod = a.mul_cyclic(b, n);
                layers[i + j] = &layers[i + j] + &prod;
            }
        }
        Self { params: self.params, layers }
    }

    fn check_params(&self, other: &Self) {
        assert_eq!(self.params, other.params, "R_k polynomials with different parameters");
    }

    /// Division by a divisor with unit leading coefficient:
    /// `self = divisor * q + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        if self.params != divisor.params {
            return Err(Error::ParamMismatch(format!("{} vs {}", self.params, divisor.params)));
        }
        let lead = divisor.leading_coeff();
        if !lead.is_unit() {
            return Err(Error::NonUnitLeading);
        }
        let lead_inv = lead.inverse()?;
        let db = divisor.degree().or(0);
        let mut q = Self::zero(self.params);
        let mut r = self.clone();
        while let Degree::Finite(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = &r.coeff(dr) * &lead_inv;
            let term = RkPoly::from_layers(
                self.params,
                c.layers.iter().map(|&v| FpPoly::monomial(self.params.p(), v, dr - db)).collect(),
            );
            r = &r - &(&term * divisor);
            q = &q + &term;
            debug_assert!(r.degree() < Degree::Finite(dr));
        }
        Ok((q, r))
    }

    /// `self | other` in `R_k[x]`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        other.divmod(self).map(|(_, r)| r.is_zero())
    }

    /// Image under the truncation `R_k -> R_j`, keeping layers `0..j`.
    pub fn reduce_to_subring(&self, j: usize) -> Result<Self> {
        if j == 0 || j >= self.params.k() {
            return Err(Error::OutOfRange(format!("subring index {j} must lie in [1, {})", self.params.k())));
        }
        Ok(Self { params: self.params.with_k(j)?, layers: self.layers[..j].to_vec() })
    }

    /// Coordinate vector of length `k*n`: coordinate `i`, layer `j` at `i*k + j`.
    /// Assumes the polynomial is reduced modulo `x^n - 1`.
    pub fn to_vector(&self) -> Vec<u32> {
        let k = self.params.k();
        let n = self.params.n();
        let mut v = vec![0u32; k * n];
        for (j, g) in self.layers.iter().enumerate() {
            for (i, &c) in g.coeffs().iter().enumerate() {
                debug_assert!(i < n, "unreduced polynomial");
                v[i * k + j] = c;
            }
        }
        v
    }

    pub fn from_vector(params: PrimeParams, v: &[u32]) -> Self {
        let k = params.k();
        let n = params.n();
        assert_eq!(v.len(), k * n);
        let layers = (0..k).map(|j| FpPoly::new(params.p(), (0..n).map(|i| v[i * k + j]).collect())).collect();
        Self { params, layers }
    }

    /// Number of nonzero `R_k` coordinates.
    pub fn hamming_weight(&self) -> usize {
        let n = self.params.n().max(self.degree().or(0) + 1);
        (0..n).filter(|&i| self.layers.iter().any(|g| g.coeff(i) != 0)).count()
    }

    /// Layers rendered in the semicolon grammar, e.g. `x^2 + 1; 1`.
    pub fn layer_string(&self) -> String {
        self.layers.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
    }
}

impl Add for &RkPoly {
    type Output = RkPoly;

    fn add(self, rhs: &RkPoly) -> RkPoly {
        self.check_params(rhs);
        RkPoly { params: self.params, layers: self.layers.iter().zip(&rhs.layers).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &RkPoly {
    type Output = RkPoly;

    fn sub(self, rhs: &RkPoly) -> RkPoly {
        self.check_params(rhs);
        RkPoly { params: self.params, layers: self.layers.iter().zip(&rhs.layers).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &RkPoly {
    type Output = RkPoly;

    fn neg(self) -> RkPoly {
        RkPoly { params: self.params, layers: self.layers.iter().map(|a| -a).collect() }
    }
}

/// Product in `R_k[x]` (no cyclic reduction).
impl Mul for &RkPoly {
    type Output = RkPoly;

    fn mul(self, rhs: &RkPoly) -> RkPoly {
        self.check_params(rhs);
        let k = self.params.k();
        let mut layers = vec![FpPoly::zero(self.params.p()); k];
        for (i, a) in self.layers.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.layers[..k - i].iter().enumerate() {
                layers[i + j] = &layers[i + j] + &(a * b);
            }
        }
        RkPoly { params: self.params, layers }
    }
}

/// Renders as `g + u(p_1) + u^2(p_2)`, skipping zero layers.
impl fmt::Display for RkPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, g) in self.layers.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let prefix = match j {
                0 => String::new(),
                1 => "u".to_string(),
                j => format!("u^{j}"),
            };
            parts.push(match (j, g.is_one()) {
                (0, _) => g.to_string(),
                (_, true) => prefix,
                _ => format!("{prefix}({g})"),
            });
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl fmt::Debug for RkPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RkPoly[{}]({})", self.params, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn prm(p: u64, k: usize, n: usize) -> PrimeParams {
        PrimeParams::new(p, k, n).unwrap()
    }

    fn fp(p: u32, c: &[i64]) -> FpPoly {
        FpPoly::from_signed(p, c)
    }

    fn rk(params: PrimeParams, layers: &[&[i64]]) -> RkPoly {
        RkPoly::from_layers(params, layers.iter().map(|c| fp(params.p(), c)).collect())
    }

    #[test]
    fn inverse_examples() {
        let r2 = prm(2, 2, 1);
        let e = RkElem::new(r2, &[1, 1]);
        assert_eq!(e.inverse().unwrap(), e);

        for p in [2u64, 3, 5, 7] {
            let r3 = prm(p, 3, 1);
            let one_minus_u = RkElem::new(r3, &[1, p as u32 - 1]);
            assert_eq!(one_minus_u.inverse().unwrap(), RkElem::new(r3, &[1, 1, 1]));
        }

        let r = prm(3, 2, 1);
        assert_eq!(RkElem::new(r, &[2, 1]).inverse().unwrap(), RkElem::new(r, &[2, 2]));
        assert_eq!(RkElem::new(r, &[0, 1]).inverse(), Err(Error::NotAUnit));
    }

    #[test]
    fn inverse_matches_exhaustive_search() {
        let r = prm(3, 3, 1);
        let all: Vec<RkElem> = (0..27u32).map(|v| RkElem::new(r, &[v % 3, (v / 3) % 3, v / 9])).collect();
        for e in all.iter().filter(|e| e.is_unit()) {
            let brute = all.iter().find(|f| (e * *f) == RkElem::one(r)).unwrap();
            assert_eq!(&e.inverse().unwrap(), brute);
        }
    }

    #[test]
    fn valuation_examples() {
        let r4 = prm(3, 4, 1);
        let e = &RkElem::u_pow(r4, 2) * &RkElem::new(r4, &[1, 1]);
        assert_eq!(e.u_valuation(), 2);
        assert_eq!(RkElem::zero(r4).u_valuation(), 4);
        assert_eq!(RkElem::new(prm(5, 2, 1), &[3, 1]).u_valuation(), 0);
    }

    #[test]
    fn mul_mod_examples() {
        let params = prm(2, 2, 4);
        let a = rk(params, &[&[1, 0, 1], &[1]]);
        assert!(a.mul_mod(&a).is_zero());
        assert_eq!(a.mul_mod(&RkPoly::one(params)), a);
        let top = RkPoly::u_times(params, 1, FpPoly::one(2));
        assert!(top.mul_u(1).is_zero());
    }

    #[test]
    fn divmod_examples() {
        let params = prm(2, 2, 4);
        let b = rk(params, &[&[1, 0, 1], &[1]]);
        let (q, r) = RkPoly::xn_minus_1(params).divmod(&b).unwrap();
        assert_eq!(q, b);
        assert!(r.is_zero());

        let f = rk(params, &[&[1, 1, 0, 1], &[0, 1]]);
        let (q, r) = f.divmod(&RkPoly::one(params)).unwrap();
        assert_eq!(q, f);
        assert!(r.is_zero());

        let r4 = prm(3, 4, 5);
        let b = RkPoly::from_fp(r4, FpPoly::x_minus_1(3));
        let (q, r) = RkPoly::xn_minus_1(r4).divmod(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, RkPoly::from_fp(r4, fp(3, &[1, 1, 1, 1, 1])));
    }

    #[test]
    fn divides_examples() {
        let params = prm(2, 2, 4);
        let b = rk(params, &[&[1, 0, 1], &[1]]);
        assert!(b.divides(&RkPoly::xn_minus_1(params)).unwrap());
        assert!(RkPoly::one(params).divides(&b).unwrap());

        let params = prm(2, 2, 2);
        let b = rk(params, &[&[0, 1], &[1]]);
        let a = RkPoly::xn_minus_1(params);
        let (q, r) = a.divmod(&b).unwrap();
        assert_eq!(&(&b * &q) + &r, a);
        assert_eq!(r, RkPoly::one(params));
        assert!(!b.divides(&a).unwrap());
    }

    #[test]
    fn nilpotent_leading_coefficient_rejected() {
        let params = prm(3, 2, 4);
        let b = rk(params, &[&[1], &[0, 0, 1]]);
        assert_eq!(RkPoly::xn_minus_1(params).divmod(&b), Err(Error::NonUnitLeading));
    }

    #[test]
    fn subring_reduction() {
        let params = prm(5, 2, 4);
        let g = fp(5, &[1, 0, 1]);
        let a = RkPoly::from_layers(params, vec![g.clone(), fp(5, &[3, 1])]);
        assert_eq!(a.reduce_to_subring(1).unwrap(), RkPoly::from_fp(prm(5, 1, 4), g));

        let r3 = prm(2, 3, 3);
        let e = rk(r3, &[&[1], &[1], &[1]]);
        assert_eq!(e.reduce_to_subring(2).unwrap(), rk(prm(2, 2, 3), &[&[1], &[1]]));
        assert!(e.reduce_to_subring(3).is_err());
        assert!(e.reduce_to_subring(0).is_err());
    }

    #[test]
    fn display_forms() {
        let params = prm(2, 2, 4);
        assert_eq!(rk(params, &[&[1, 0, 1], &[1]]).to_string(), "x^2 + 1 + u");
        let r4 = prm(3, 4, 5);
        let g = RkPoly::u_times(r4, 3, FpPoly::x_minus_1(3));
        assert_eq!(g.to_string(), "u^3(x + 2)");
        assert_eq!(g.layer_string(), "0; 0; 0; x + 2");
    }

    fn arb_poly(p: u32, k: usize, n: usize) -> impl Strategy<Value = RkPoly> {
        prop::collection::vec(0u32..p, k * n)
            .prop_map(move |v| RkPoly::from_vector(PrimeParams::new(p as u64, k, n).unwrap(), &v))
    }

    fn arb_elem(p: u32, k: usize) -> impl Strategy<Value = RkElem> {
        prop::collection::vec(0u32..p, k).prop_map(move |v| RkElem::new(PrimeParams::new(p as u64, k, 1).unwrap(), &v))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(3, 3, 4), b in arb_poly(3, 3, 4), c in arb_poly(3, 3, 4)) {
            prop_assert_eq!(a.mul_mod(&b).mul_mod(&c), a.mul_mod(&b.mul_mod(&c)));
            prop_assert_eq!(a.mul_mod(&(&b + &c)), &a.mul_mod(&b) + &a.mul_mod(&c));
            prop_assert_eq!(a.mul_mod(&b), b.mul_mod(&a));
        }

        #[test]
        fn truncation_is_a_homomorphism(a in arb_poly(5, 3, 3), b in arb_poly(5, 3, 3), j in 1usize..3) {
            let lhs = a.mul_mod(&b).reduce_to_subring(j).unwrap();
            let rhs = a.reduce_to_subring(j).unwrap().mul_mod(&b.reduce_to_subring(j).unwrap());
            prop_assert_eq!(lhs, rhs);
            let lhs = (&a + &b).reduce_to_subring(j).unwrap();
            let rhs = &a.reduce_to_subring(j).unwrap() + &b.reduce_to_subring(j).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn valuation_is_additive(a in arb_elem(3, 4), b in arb_elem(3, 4)) {
            let k = 4;
            prop_assert_eq!((&a * &b).u_valuation(), (a.u_valuation() + b.u_valuation()).min(k));
        }

        #[test]
        fn division_remultiplies(
            a in prop::collection::vec(prop::collection::vec(0u32..3, 0..9), 3),
            b in prop::collection::vec(prop::collection::vec(0u32..3, 0..5), 3),
            lead in 1u32..3,
            extra in 0usize..4,
        ) {
            let params = PrimeParams::new(3, 3, 8).unwrap();
            let a = RkPoly::from_layers(params, a.into_iter().map(|c| FpPoly::new(3, c)).collect());
            let mut bl: Vec<FpPoly> = b.into_iter().map(|c| FpPoly::new(3, c)).collect();
            // force a unit leading coefficient at degree d
            let d = bl.iter().map(|g| g.degree().or(0)).max().unwrap() + extra;
            for (j, g) in bl.iter_mut().enumerate() {
                let mut c = g.to_dense(d + 1);
                c[d] = if j == 0 { lead } else { c[d] };
                *g = FpPoly::new(3, c);
            }
            let b = RkPoly::from_layers(params, bl);
            let (q, r) = a.divmod(&b).unwrap();
            prop_assert_eq!(&(&b * &q) + &r, a);
            prop_assert!(r.degree() < b.degree());
        }
    }
}

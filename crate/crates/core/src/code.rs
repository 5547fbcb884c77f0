//! Cyclic codes as ideals of `R_k[x]/(x^n - 1)`.
//!
//! A code is stored with its generators and its *footprint*: the reduced
//! row-echelon basis of the code as an `F_p`-subspace of `F_p^{kn}`. Column
//! `i*k + j` holds layer `j` of coordinate `i`, so multiplying by `u` shifts
//! within a block of `k` columns and multiplying by `x` rotates the blocks.
//! Equality, ordering and hashing all go through the footprint.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::chainring::RkPoly;
use crate::error::{Error, Result};
use crate::gfp::{fp_cyclic_min_weight, mul_mod, FpPoly, PrimeParams};
use crate::linalg::Echelon;
use crate::weight::min_block_weight;

#[derive(Debug, Clone)]
pub struct CyclicCode {
    params: PrimeParams,
    generators: Vec<RkPoly>,
    footprint: Echelon,
}

/// The torsion generators `ĝ_0, ..., ĝ_{k-1}` of a code.
///
/// `ĝ_i` is the monic generator of the `F_p` cyclic code
/// `Tor_i(C) = { v : u^i v ∈ C + u^{i+1} R_{k,n} }`. The zero code over `F_p`
/// is generated by `x^n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorsionTower {
    pub gens: Vec<FpPoly>,
}

impl TorsionTower {
    /// `deg ĝ_i` for each level, with `deg(x^n - 1) = n`.
    pub fn degrees(&self) -> Vec<usize> {
        self.gens.iter().map(|g| g.degree().or(0)).collect()
    }

    /// Whether `ĝ_{k-1} | ... | ĝ_0 | x^n - 1`.
    pub fn is_chain(&self, xn1: &FpPoly) -> bool {
        let mut above = xn1;
        for g in &self.gens {
            if !g.divides(above) {
                return false;
            }
            above = g;
        }
        true
    }

    /// `sum_i (n - deg ĝ_i)`, the `F_p`-dimension the tower predicts.
    pub fn predicted_dim(&self, n: usize) -> usize {
        self.degrees().iter().map(|d| n - d).sum()
    }

    pub fn top(&self) -> &FpPoly {
        self.gens.last().expect("k >= 1")
    }
}

fn shift_vector(v: &[u32], k: usize) -> Vec<u32> {
    let len = v.len();
    let mut out = vec![0u32; len];
    for (idx, &c) in v.iter().enumerate() {
        out[(idx + k) % len] = c;
    }
    out
}

fn u_times_vector(v: &[u32], k: usize) -> Vec<u32> {
    let mut out = vec![0u32; v.len()];
    for (idx, &c) in v.iter().enumerate() {
        if idx % k + 1 < k {
            out[idx + 1] = c;
        }
    }
    out
}

/// Inserts the `F_p`-spanning set `{x^i u^j g}` of the ideal `<g>`.
fn insert_ideal_span(e: &mut Echelon, g: &RkPoly) {
    let params = g.params();
    let k = params.k();
    let mut uj = g.to_vector();
    for _ in 0..k {
        if uj.iter().all(|&c| c == 0) {
            break;
        }
        let mut v = uj.clone();
        for _ in 0..params.n() {
            e.insert(v.clone());
            v = shift_vector(&v, k);
        }
        uj = u_times_vector(&uj, k);
    }
}

impl CyclicCode {
    /// The ideal generated by `gens`, each reduced modulo `x^n - 1` first.
    pub fn from_generators(params: PrimeParams, gens: Vec<RkPoly>) -> Result<Self> {
        let mut footprint = Echelon::empty(params.p(), params.k() * params.n());
        let mut reduced = Vec::with_capacity(gens.len());
        for g in gens {
            if g.params() != params {
                return Err(Error::ParamMismatch(format!("generator over {} in a code over {}", g.params(), params)));
            }
            let g = g.reduce_cyclic();
            insert_ideal_span(&mut footprint, &g);
            reduced.push(g);
        }
        let code = Self { params, generators: reduced, footprint };
        debug_assert!(code.is_ideal());
        Ok(code)
    }

    /// Wraps an `F_p`-subspace that must already be an ideal. Generators are
    /// picked greedily from the echelon rows.
    pub fn from_footprint(params: PrimeParams, footprint: Echelon) -> Result<Self> {
        if footprint.ncols() != params.k() * params.n() || footprint.modulus() != params.p() {
            return Err(Error::ParamMismatch("footprint shape does not match parameters".into()));
        }
        let mut code = Self { params, generators: Vec::new(), footprint };
        if !code.is_ideal() {
            return Err(Error::Invariant("subspace is not closed under x and u".into()));
        }
        let mut span = Echelon::empty(params.p(), params.k() * params.n());
        for row in code.footprint.rows() {
            if !span.contains(row) {
                let g = RkPoly::from_vector(params, row);
                insert_ideal_span(&mut span, &g);
                code.generators.push(g);
            }
        }
        debug_assert!(span.same_space(&code.footprint));
        Ok(code)
    }

    pub fn zero(params: PrimeParams) -> Self {
        Self::from_generators(params, Vec::new()).expect("no generators")
    }

    pub fn whole(params: PrimeParams) -> Self {
        Self::from_generators(params, vec![RkPoly::one(params)]).expect("matching params")
    }

    pub fn params(&self) -> PrimeParams {
        self.params
    }

    pub fn generators(&self) -> &[RkPoly] {
        &self.generators
    }

    pub fn footprint(&self) -> &Echelon {
        &self.footprint
    }

    /// `F_p`-dimension, i.e. `log_p |C|`.
    pub fn dim(&self) -> usize {
        self.footprint.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Flattened footprint rows; the canonical sort key among equal dimensions.
    pub fn footprint_key(&self) -> Vec<u32> {
        self.footprint.rows().iter().flatten().copied().collect()
    }

    /// Whether the footprint is closed under multiplication by `x` and by `u`.
    pub fn is_ideal(&self) -> bool {
        let k = self.params.k();
        self.footprint
            .rows()
            .iter()
            .all(|r| self.footprint.contains(&shift_vector(r, k)) && self.footprint.contains(&u_times_vector(r, k)))
    }

    pub fn contains(&self, w: &RkPoly) -> bool {
        w.params() == self.params && self.footprint.contains(&w.reduce_cyclic().to_vector())
    }

    /// Whether `self ⊆ other`.
    pub fn is_subcode_of(&self, other: &Self) -> bool {
        self.params == other.params && other.footprint.contains_space(&self.footprint)
    }

    /// The echelon form used to read off torsion codes and lifted generators.
    pub fn structural_echelon(&self) -> StructuralEchelon {
        StructuralEchelon::new(self)
    }

    pub fn torsion_tower(&self) -> TorsionTower {
        let se = self.structural_echelon();
        let xn1 = self.params.xn_minus_1();
        let gens = (0..self.params.k())
            .map(|i| se.torsion_basis(i).iter().fold(xn1.clone(), |acc, v| FpPoly::gcd(&acc, v)))
            .collect();
        let tower = TorsionTower { gens };
        debug_assert!(tower.is_chain(&xn1));
        tower
    }

    /// `C^⊥` under the `R_k`-valued inner product `sum_i v_i c_i`.
    pub fn dual(&self) -> Result<Self> {
        let k = self.params.k();
        let n = self.params.n();
        let p = self.params.p();
        // one F_p equation per (basis row, u-layer of the inner product)
        let mut system = Echelon::empty(p, k * n);
        for c in self.footprint.rows() {
            for m in 0..k {
                let mut eq = vec![0u32; k * n];
                for i in 0..n {
                    for a in 0..=m {
                        eq[i * k + a] = c[i * k + (m - a)];
                    }
                }
                system.insert(eq);
            }
        }
        let basis = Echelon::from_rows(p, k * n, system.nullspace());
        let dual = Self::from_footprint(self.params, basis)?;
        debug_assert!(dual.orthogonal_to(self));
        Ok(dual)
    }

    /// Whether every codeword of `self` is orthogonal to every codeword of `other`.
    pub fn orthogonal_to(&self, other: &Self) -> bool {
        let k = self.params.k();
        let p = self.params.p();
        self.footprint.rows().iter().all(|a| {
            other.footprint.rows().iter().all(|b| {
                (0..k).all(|m| {
                    let mut s = 0u64;
                    for (ab, bb) in a.chunks(k).zip(b.chunks(k)) {
                        for x in 0..=m {
                            s += mul_mod(ab[x], bb[m - x], p) as u64;
                        }
                    }
                    s.is_multiple_of(p as u64)
                })
            })
        })
    }

    /// Minimum Hamming distance by enumerating all `p^dim` codewords.
    pub fn min_distance_bruteforce(&self, budget: u64) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        min_block_weight(self.params.p(), self.footprint.rows(), self.params.k(), budget)
    }

    /// Minimum Hamming distance through the top torsion code: the weight of
    /// `C` equals the weight of the `F_p` cyclic code `<ĝ_{k-1}>`.
    pub fn min_distance(&self, budget: u64) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        let tower = self.torsion_tower();
        fp_cyclic_min_weight(tower.top(), &self.params, budget)
    }
}

impl PartialEq for CyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params && self.footprint.same_space(&other.footprint)
    }
}

impl Eq for CyclicCode {}

impl Hash for CyclicCode {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.params.hash(state);
        self.footprint.rows().hash(state);
    }
}

impl PartialOrd for CyclicCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by dimension, then footprint.
impl Ord for CyclicCode {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim().cmp(&other.dim()).then_with(|| self.footprint_key().cmp(&other.footprint_key())).then_with(|| {
            (self.params.p(), self.params.k(), self.params.n()).cmp(&(
                other.params.p(),
                other.params.k(),
                other.params.n(),
            ))
        })
    }
}

/// Echelon form of a code in layer-major column order with degrees descending
/// inside each layer: column `j*n + (n-1-d)` holds the coefficient of `u^j x^d`.
///
/// Rows whose pivot falls in layer `i` span the codewords with zero layers
/// below `i`, modulo those that also vanish at layer `i`. Their layer-`i` parts
/// therefore span `Tor_i`, and the remaining layers come out reduced against
/// every deeper level.
#[derive(Debug, Clone)]
pub struct StructuralEchelon {
    params: PrimeParams,
    echelon: Echelon,
}

impl StructuralEchelon {
    fn new(code: &CyclicCode) -> Self {
        let params = code.params;
        let rows = code.footprint.rows().iter().map(|r| Self::permute(params, r));
        let echelon = Echelon::from_rows(params.p(), params.k() * params.n(), rows);
        Self { params, echelon }
    }

    fn permute(params: PrimeParams, v: &[u32]) -> Vec<u32> {
        let (k, n) = (params.k(), params.n());
        let mut out = vec![0u32; k * n];
        for i in 0..n {
            for j in 0..k {
                out[j * n + (n - 1 - i)] = v[i * k + j];
            }
        }
        out
    }

    fn to_poly(&self, v: &[u32]) -> RkPoly {
        let (k, n, p) = (self.params.k(), self.params.n(), self.params.p());
        let layers = (0..k).map(|j| FpPoly::new(p, (0..n).map(|d| v[j * n + (n - 1 - d)]).collect())).collect();
        RkPoly::from_layers(self.params, layers)
    }

    fn level_rows(&self, level: usize) -> impl Iterator<Item = (&Vec<u32>, usize)> {
        let n = self.params.n();
        self.echelon
            .rows()
            .iter()
            .zip(self.echelon.pivots())
            .filter(move |(_, &pc)| pc / n == level)
            .map(|(r, &pc)| (r, pc))
    }

    /// An `F_p` basis of `Tor_level`.
    pub fn torsion_basis(&self, level: usize) -> Vec<FpPoly> {
        self.level_rows(level).map(|(r, _)| self.to_poly(r).layer(level).clone()).collect()
    }

    /// The codeword with zero layers below `level`, layer `level` equal to
    /// `target`, and higher layers reduced against deeper levels. `None` if
    /// `target ∉ Tor_level`.
    pub fn lift(&self, level: usize, target: &FpPoly) -> Option<RkPoly> {
        let (k, n, p) = (self.params.k(), self.params.n(), self.params.p());
        let mut acc = vec![0u32; k * n];
        for (row, pc) in self.level_rows(level) {
            let d = n - 1 - (pc - level * n);
            let c = target.coeff(d);
            if c == 0 {
                continue;
            }
            for (a, &r) in acc.iter_mut().zip(row) {
                *a = (*a + mul_mod(c, r, p)) % p;
            }
        }
        let lifted = self.to_poly(&acc);
        (lifted.layer(level) == target && lifted.u_valuation() >= level).then_some(lifted)
    }
}

/// The JSON interchange document for a code:
/// `{"p":..,"k":..,"n":..,"generators":[[[d_0,..,d_{k-1}], ...n entries], ...]}`
/// where `d_j` is the `u^j` digit of a coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeDocument {
    pub p: u64,
    pub k: usize,
    pub n: usize,
    pub generators: Vec<Vec<Vec<u32>>>,
}

impl CodeDocument {
    pub fn from_generators(params: PrimeParams, gens: &[RkPoly]) -> Self {
        let (k, n) = (params.k(), params.n());
        let generators = gens
            .iter()
            .map(|g| {
                let v = g.reduce_cyclic().to_vector();
                (0..n).map(|i| v[i * k..(i + 1) * k].to_vec()).collect()
            })
            .collect();
        Self { p: params.p() as u64, k, n, generators }
    }

    pub fn from_code(code: &CyclicCode) -> Self {
        Self::from_generators(code.params(), code.generators())
    }

    pub fn params(&self) -> Result<PrimeParams> {
        PrimeParams::new(self.p, self.k, self.n)
    }

    /// Validated generators.
    pub fn generator_polys(&self) -> Result<Vec<RkPoly>> {
        let params = self.params()?;
        let (k, n, p) = (params.k(), params.n(), params.p());
        self.generators
            .iter()
            .enumerate()
            .map(|(gi, entries)| {
                if entries.len() > n {
                    let nonzero_tail = entries[n..].iter().any(|d| d.iter().any(|&c| c != 0));
                    if nonzero_tail {
                        return Err(Error::Document(format!(
                            "generator {gi} has degree >= n = {n}; reduce modulo x^n - 1 first"
                        )));
                    }
                }
                if entries.len() != n {
                    return Err(Error::Document(format!(
                        "generator {gi} has {} coefficient entries, expected n = {n}",
                        entries.len()
                    )));
                }
                let mut v = vec![0u32; k * n];
                for (i, digits) in entries.iter().enumerate() {
                    if digits.len() != k {
                        return Err(Error::Document(format!(
                            "generator {gi}, coefficient {i}: expected {k} u-digits, got {}",
                            digits.len()
                        )));
                    }
                    for (j, &d) in digits.iter().enumerate() {
                        if d >= p {
                            return Err(Error::Document(format!(
                                "generator {gi}, coefficient {i}: digit {d} not in [0, {p})"
                            )));
                        }
                        v[i * k + j] = d;
                    }
                }
                Ok(RkPoly::from_vector(params, &v))
            })
            .collect()
    }

    pub fn to_code(&self) -> Result<CyclicCode> {
        CyclicCode::from_generators(self.params()?, self.generator_polys()?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    /// Compact canonical serialization, fields in declaration order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::DEFAULT_BUDGET;

    fn prm(p: u64, k: usize, n: usize) -> PrimeParams {
        PrimeParams::new(p, k, n).unwrap()
    }

    fn fp(p: u32, c: &[i64]) -> FpPoly {
        FpPoly::from_signed(p, c)
    }

    fn rk(params: PrimeParams, layers: &[&[i64]]) -> RkPoly {
        RkPoly::from_layers(params, layers.iter().map(|c| fp(params.p(), c)).collect())
    }

    fn u_pow(params: PrimeParams, j: usize, g: FpPoly) -> RkPoly {
        RkPoly::u_times(params, j, g)
    }

    fn g1() -> FpPoly {
        FpPoly::x_minus_1(3)
    }

    fn g2() -> FpPoly {
        fp(3, &[1, 1, 1, 1, 1])
    }

    /// Every codeword of a small code, by enumerating `R_k` multipliers of
    /// each generator independently of the echelon machinery.
    fn ideal_by_enumeration(params: PrimeParams, gens: &[RkPoly]) -> std::collections::BTreeSet<Vec<u32>> {
        let (k, n, p) = (params.k(), params.n(), params.p());
        let mut set = std::collections::BTreeSet::new();
        set.insert(vec![0u32; k * n]);
        for g in gens {
            let mut next = set.clone();
            for idx in 0..(p as u64).pow((k * n) as u32) {
                let mut v = vec![0u32; k * n];
                let mut rest = idx;
                for c in v.iter_mut() {
                    *c = (rest % p as u64) as u32;
                    rest /= p as u64;
                }
                let prod = RkPoly::from_vector(params, &v).mul_mod(g).to_vector();
                for s in &set {
                    next.insert(s.iter().zip(&prod).map(|(a, b)| (a + b) % p).collect());
                }
            }
            set = next;
        }
        set
    }

    #[test]
    fn construction_examples() {
        for (p, k, n) in [(2, 1, 3), (3, 4, 5), (5, 2, 4)] {
            let params = prm(p, k, n);
            assert_eq!(CyclicCode::whole(params).dim(), k * n);
            let top = CyclicCode::from_generators(params, vec![u_pow(params, k - 1, FpPoly::one(p as u32))]).unwrap();
            assert_eq!(top.dim(), n);
        }
        let params = prm(2, 2, 4);
        let c = CyclicCode::from_generators(params, vec![rk(params, &[&[1, 0, 1], &[1]])]).unwrap();
        assert_eq!(c.dim(), 4);
        assert!(c.is_ideal());
    }

    #[test]
    fn footprint_matches_enumerated_ideal() {
        let params = prm(2, 2, 3);
        let gens = vec![rk(params, &[&[1, 1], &[0, 1]])];
        let code = CyclicCode::from_generators(params, gens.clone()).unwrap();
        let words = ideal_by_enumeration(params, &gens);
        assert_eq!(words.len() as u64, 2u64.pow(code.dim() as u32));
        for w in &words {
            assert!(code.footprint().contains(w));
        }
    }

    #[test]
    fn parameter_mismatch() {
        let a = prm(3, 2, 5);
        let b = prm(3, 3, 5);
        let err = CyclicCode::from_generators(a, vec![RkPoly::one(b)]).unwrap_err();
        assert!(matches!(err, Error::ParamMismatch(_)));
    }

    #[test]
    fn membership_examples() {
        let params = prm(3, 4, 5);
        let g = rk(params, &[&[2, 1], &[0, 1]]);
        let c = CyclicCode::from_generators(params, vec![g.clone()]).unwrap();
        assert!(c.contains(&g.shift_cyclic(1)));

        let c1 = CyclicCode::from_generators(params, vec![RkPoly::from_fp(params, g1())]).unwrap();
        assert!(c1.contains(&u_pow(params, 1, g1())));

        let cu = CyclicCode::from_generators(params, vec![u_pow(params, 1, FpPoly::one(3))]).unwrap();
        assert!(!cu.contains(&RkPoly::one(params)));
    }

    #[test]
    fn torsion_examples() {
        let params = prm(3, 4, 5);
        let c =
            CyclicCode::from_generators(params, vec![RkPoly::from_fp(params, g1()), u_pow(params, 1, FpPoly::one(3))])
                .unwrap();
        let one = FpPoly::one(3);
        assert_eq!(c.torsion_tower().gens, vec![g1(), one.clone(), one.clone(), one.clone()]);

        let params3 = prm(3, 3, 5);
        let c = CyclicCode::from_generators(params3, vec![u_pow(params3, 2, one.clone())]).unwrap();
        let xn1 = params3.xn_minus_1();
        assert_eq!(c.torsion_tower().gens, vec![xn1.clone(), xn1, one]);

        let zero = CyclicCode::zero(params);
        assert!(zero.torsion_tower().gens.iter().all(|g| *g == params.xn_minus_1()));
    }

    #[test]
    fn coprime_chain_tower_is_read_back() {
        // x^7 - 1 over F_2 = (x+1)(x^3+x+1)(x^3+x^2+1)
        let params = prm(2, 3, 7);
        let f1 = fp(2, &[1, 1]);
        let f2 = fp(2, &[1, 1, 0, 1]);
        let chain = vec![&f1 * &f2, f1.clone(), FpPoly::one(2)];
        let h = RkPoly::from_layers(params, chain.clone());
        let c = CyclicCode::from_generators(params, vec![h]).unwrap();
        assert_eq!(c.torsion_tower().gens, chain);
        assert_eq!(c.dim(), c.torsion_tower().predicted_dim(7));
    }

    #[test]
    fn canonical_equality_of_aliases() {
        let params = prm(3, 4, 5);
        let a =
            CyclicCode::from_generators(params, vec![RkPoly::from_fp(params, g1()), u_pow(params, 1, g2())]).unwrap();
        let b =
            CyclicCode::from_generators(params, vec![RkPoly::from_fp(params, g1()), u_pow(params, 1, FpPoly::one(3))])
                .unwrap();
        assert_eq!(a, b);
        assert_ne!(a, CyclicCode::from_generators(params, vec![RkPoly::from_fp(params, g1())]).unwrap());
    }

    #[test]
    fn dual_examples() {
        let params = prm(2, 2, 2);
        let cu = CyclicCode::from_generators(params, vec![u_pow(params, 1, FpPoly::one(2))]).unwrap();
        let d = cu.dual().unwrap();
        assert_eq!(d, cu);
        assert_eq!(cu.dim() + d.dim(), 4);

        let whole = CyclicCode::whole(params);
        assert!(whole.dual().unwrap().is_zero());
        assert_eq!(CyclicCode::zero(params).dual().unwrap(), whole);

        let params = prm(3, 3, 5);
        let c =
            CyclicCode::from_generators(params, vec![rk(params, &[&[2, 1], &[1]]), u_pow(params, 2, g2())]).unwrap();
        let d = c.dual().unwrap();
        assert_eq!(c.dim() + d.dim(), 15);
        assert_eq!(d.dual().unwrap(), c);
    }

    #[test]
    fn dual_matches_brute_force_orthogonality() {
        let params = prm(2, 2, 2);
        let cu = CyclicCode::from_generators(params, vec![u_pow(params, 1, FpPoly::one(2))]).unwrap();
        let members = ideal_by_enumeration(params, &[u_pow(params, 1, FpPoly::one(2))]);
        let dual = cu.dual().unwrap();
        // all 16 words of R_2^2, orthogonality checked with ring arithmetic
        for idx in 0..16u32 {
            let v: Vec<u32> = (0..4).map(|b| (idx >> b) & 1).collect();
            let vp = RkPoly::from_vector(params, &v);
            let orth = members.iter().all(|c| {
                let cp = RkPoly::from_vector(params, c);
                let mut s = crate::chainring::RkElem::zero(params);
                for i in 0..2 {
                    s = &s + &(&vp.coeff(i) * &cp.coeff(i));
                }
                s.is_zero()
            });
            assert_eq!(orth, dual.footprint().contains(&v));
        }
    }

    #[test]
    fn distance_examples() {
        let small = prm(2, 2, 3);
        assert_eq!(CyclicCode::whole(small).min_distance_bruteforce(DEFAULT_BUDGET), Ok(1));
        let params = prm(3, 4, 5);
        let c = CyclicCode::from_generators(params, vec![u_pow(params, 3, g2())]).unwrap();
        assert_eq!(c.min_distance_bruteforce(DEFAULT_BUDGET), Ok(5));
        assert_eq!(c.min_distance(DEFAULT_BUDGET), Ok(5));

        let c = CyclicCode::from_generators(params, vec![RkPoly::from_fp(params, g1())]).unwrap();
        assert_eq!(c.min_distance(DEFAULT_BUDGET), Ok(2));
        let top = CyclicCode::from_generators(params, vec![u_pow(params, 3, FpPoly::one(3))]).unwrap();
        assert_eq!(top.min_distance(DEFAULT_BUDGET), Ok(1));

        let zero = CyclicCode::zero(params);
        assert_eq!(zero.min_distance(DEFAULT_BUDGET), Err(Error::ZeroCode));
        assert_eq!(zero.min_distance_bruteforce(DEFAULT_BUDGET), Err(Error::ZeroCode));
        assert!(matches!(CyclicCode::whole(params).min_distance_bruteforce(1000), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn repeated_root_distances() {
        let p9 = prm(3, 2, 9);
        let xm1 = FpPoly::x_minus_1(3);
        let c = CyclicCode::from_generators(p9, vec![u_pow(p9, 1, xm1.pow(2))]).unwrap();
        assert_eq!(c.min_distance_bruteforce(DEFAULT_BUDGET), Ok(2));
        // (x-1)^6 = x^6 + x^3 + 1 is a weight-3 multiple of (x-1)^4
        let c = CyclicCode::from_generators(p9, vec![RkPoly::from_fp(p9, xm1.pow(4))]).unwrap();
        assert_eq!(c.min_distance(DEFAULT_BUDGET), Ok(3));
        assert_eq!(c.min_distance_bruteforce(DEFAULT_BUDGET), Ok(3));
    }

    #[test]
    fn document_roundtrip_and_validation() {
        let params = prm(3, 2, 3);
        let g = rk(params, &[&[1, 2], &[0, 0, 1]]);
        let doc = CodeDocument::from_generators(params, std::slice::from_ref(&g));
        let text = doc.to_json();
        assert_eq!(text, r#"{"p":3,"k":2,"n":3,"generators":[[[1,0],[2,0],[0,1]]]}"#);
        let back = CodeDocument::parse(&text).unwrap();
        assert_eq!(back.generator_polys().unwrap(), vec![g]);

        let bad_digit = r#"{"p":3,"k":2,"n":3,"generators":[[[3,0],[0,0],[0,0]]]}"#;
        assert!(CodeDocument::parse(bad_digit).unwrap().to_code().is_err());
        let too_long = r#"{"p":3,"k":2,"n":3,"generators":[[[1,0],[0,0],[0,0],[1,0]]]}"#;
        let err = CodeDocument::parse(too_long).unwrap().to_code().unwrap_err();
        assert!(err.to_string().contains("degree >= n"));
        let extra = r#"{"p":3,"k":2,"n":3,"generators":[],"note":1}"#;
        assert!(CodeDocument::parse(extra).is_err());
        let not_prime = r#"{"p":4,"k":2,"n":3,"generators":[]}"#;
        assert!(CodeDocument::parse(not_prime).unwrap().to_code().is_err());
    }
}

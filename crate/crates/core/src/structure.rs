//! Generator towers, canonical generators, ranks and minimal spanning sets.
//!
//! Level `i` of a code is *present* when `ĝ_i ≠ ĝ_{i-1}` (with
//! `ĝ_{-1} = x^n - 1`), i.e. when `Tor_i` is strictly larger than `Tor_{i-1}`.
//! Each present level contributes one lifted generator `G_i`: the codeword of
//! u-valuation `i` whose `u^i` layer is `ĝ_i` and whose higher layers `j` are
//! reduced below `deg ĝ_j`. The lifted generators of the present levels
//! generate the code and are unique under that reduction.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chainring::RkPoly;
use crate::code::{CyclicCode, TorsionTower};
use crate::error::{Error, Result};
use crate::gfp::{factor_xn_minus_1, FpPoly, PrimeParams};
use crate::linalg::Echelon;

/// Which presentation shape a code admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ShapeTag {
    /// `gcd(n, p) = 1`: a single generator `ĝ_0 + u ĝ_1 + ... + u^{k-1} ĝ_{k-1}`.
    Principal,
    /// Non-coprime length, one generator dividing `x^n - 1` in `R_k`.
    PrincipalDividing,
    /// Non-coprime length, levels `0` and `k-1` present only.
    TwoGenerator,
    /// Everything else, including the zero code.
    FullTower,
}

impl fmt::Display for ShapeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ShapeTag::Principal => "principal",
            ShapeTag::PrincipalDividing => "principal-dividing",
            ShapeTag::TwoGenerator => "two-generator",
            ShapeTag::FullTower => "full-tower",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub tower: TorsionTower,
    /// `lifted_gens[i]` is `G_i`, or `None` when level `i` adds nothing.
    pub lifted_gens: Vec<Option<RkPoly>>,
    pub shape: ShapeTag,
}

impl CanonicalForm {
    /// The present levels with their lifted generators.
    pub fn present(&self) -> impl Iterator<Item = (usize, &RkPoly)> {
        self.lifted_gens.iter().enumerate().filter_map(|(i, g)| g.as_ref().map(|g| (i, g)))
    }

    pub fn present_levels(&self) -> Vec<usize> {
        self.present().map(|(i, _)| i).collect()
    }

    pub fn generators(&self) -> Vec<RkPoly> {
        self.present().map(|(_, g)| g.clone()).collect()
    }
}

fn present_levels(tower: &TorsionTower, xn1: &FpPoly) -> Vec<bool> {
    let mut above = xn1;
    tower
        .gens
        .iter()
        .map(|g| {
            let present = g != above;
            above = g;
            present
        })
        .collect()
}

pub fn canonical_form(code: &CyclicCode) -> CanonicalForm {
    let params = code.params();
    let xn1 = params.xn_minus_1();
    let tower = code.torsion_tower();
    let se = code.structural_echelon();
    let lifted_gens: Vec<Option<RkPoly>> = present_levels(&tower, &xn1)
        .into_iter()
        .enumerate()
        .map(|(i, present)| present.then(|| se.lift(i, &tower.gens[i]).expect("ĝ_i lies in Tor_i")))
        .collect();

    let levels: Vec<usize> = (0..params.k()).filter(|&i| lifted_gens[i].is_some()).collect();
    let k = params.k();
    let shape = if code.is_zero() {
        ShapeTag::FullTower
    } else if params.is_coprime() {
        ShapeTag::Principal
    } else if levels == [0] {
        ShapeTag::PrincipalDividing
    } else if k >= 2 && levels == [0, k - 1] {
        ShapeTag::TwoGenerator
    } else {
        ShapeTag::FullTower
    };

    let form = CanonicalForm { tower, lifted_gens, shape };
    let rebuilt = CyclicCode::from_generators(params, form.generators()).expect("matching params");
    assert!(rebuilt == *code, "lifted generators must reconstruct the code");
    form
}

/// Result of the freeness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Freeness {
    pub free: bool,
    /// The single generator of a free nonzero code.
    pub witness: Option<RkPoly>,
}

/// A code is free iff every torsion generator is the same polynomial. The zero
/// code counts as free of rank zero and has no witness.
pub fn is_free(code: &CyclicCode) -> Freeness {
    let form = canonical_form(code);
    let free = form.tower.gens.windows(2).all(|w| w[0] == w[1]);
    if !free || code.is_zero() {
        return Freeness { free, witness: None };
    }
    let witness = form.lifted_gens[0].clone().expect("level 0 present for a free nonzero code");
    let xn1 = RkPoly::xn_minus_1(code.params());
    assert!(witness.divides(&xn1).unwrap_or(false), "free generator must divide x^n - 1 in R_k");
    Freeness { free, witness: Some(witness) }
}

/// The single generator `ĝ_0 + u ĝ_1 + ... + u^{k-1} ĝ_{k-1}` of a code of
/// length coprime to `p`.
pub fn collapse_coprime(code: &CyclicCode) -> Result<RkPoly> {
    let params = code.params();
    if !params.is_coprime() {
        return Err(Error::NotCoprime("collapse requires n coprime to p"));
    }
    let tower = code.torsion_tower();
    let h = RkPoly::from_layers(params, tower.gens).reduce_cyclic();
    let single = CyclicCode::from_generators(params, vec![h.clone()])?;
    if single != *code {
        return Err(Error::Invariant("collapsed generator does not regenerate the code".into()));
    }
    Ok(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstraintKind {
    /// `ĝ_{k-1} | ... | ĝ_0 | x^n - 1`; must hold.
    Chain,
    /// `ĝ_j | m_{i,j} · prod_{s=i}^{j-1} (x^n - 1)/ĝ_s`, with a separate
    /// quotient for every level crossed.
    Mixed,
    /// The conditions exactly as printed for the matching shape, with the
    /// repeated quotient `(x^n - 1)/g`.
    Literal,
    /// Achieved degree of a reduced mixing layer.
    DegreeBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintEntry {
    pub kind: ConstraintKind,
    pub statement: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintReport {
    pub entries: Vec<ConstraintEntry>,
}

impl ConstraintReport {
    fn push(&mut self, kind: ConstraintKind, statement: String, holds: bool) {
        self.entries.push(ConstraintEntry { kind, statement, holds });
    }

    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn of_kind(&self, kind: ConstraintKind) -> impl Iterator<Item = &ConstraintEntry> {
        self.entries.iter().filter(move |e| e.kind == kind)
    }
}

fn paren(poly: &FpPoly) -> String {
    if poly.weight() > 1 {
        format!("({poly})")
    } else {
        poly.to_string()
    }
}

/// Divisibility and degree conditions satisfied by the canonical generators.
///
/// Chain conditions are asserted. Mixed, literal and degree-bound entries are
/// reported as found.
pub fn verify_constraints(form: &CanonicalForm, params: PrimeParams) -> ConstraintReport {
    let mut report = ConstraintReport::default();
    if form.lifted_gens.iter().all(Option::is_none) {
        return report;
    }
    let k = params.k();
    let n = params.n();
    let p = params.p();
    let xn1 = params.xn_minus_1();
    let gens = &form.tower.gens;
    let quot = |g: &FpPoly| xn1.div_exact(g).expect("torsion generators divide x^n - 1");
    let divides_cyclic = |d: &FpPoly, f: &FpPoly| d.divides(&f.reduce_cyclic(n)) || f.reduce_cyclic(n).is_zero();

    let mut above = &xn1;
    let mut above_name = format!("x^{n} - 1");
    for (i, g) in gens.iter().enumerate() {
        let holds = g.divides(above);
        assert!(holds, "torsion generators must form a divisor chain");
        report.push(ConstraintKind::Chain, format!("ĝ_{i} = {g} divides {above_name}"), holds);
        above = g;
        above_name = format!("ĝ_{i}");
    }

    for (i, gi) in form.present() {
        let mut factor = FpPoly::one(p);
        for j in i + 1..k {
            factor = factor.mul_cyclic(&quot(&gens[j - 1]), n);
            let m = gi.layer(j);
            let quotients: Vec<String> = (i..j).map(|s| format!("(x^{n} - 1)/ĝ_{s}")).collect();
            report.push(
                ConstraintKind::Mixed,
                format!("ĝ_{j} divides m_{{{i},{j}}} · {} with m_{{{i},{j}}} = {}", quotients.join(" · "), paren(m)),
                divides_cyclic(&gens[j], &m.mul_cyclic(&factor, n)),
            );
        }
    }

    // p_j are the mixing layers of the level-0 generator
    let g = &gens[0];
    let g_quot = quot(g);
    let p_layer = |j: usize| -> FpPoly {
        form.lifted_gens[0].as_ref().map(|g0| g0.layer(j).clone()).unwrap_or_else(|| FpPoly::zero(p))
    };
    match form.shape {
        ShapeTag::Principal => {
            for (i, gi) in form.present() {
                for j in i + 1..k {
                    report.push(
                        ConstraintKind::Literal,
                        format!("mixing layer m_{{{i},{j}}} vanishes"),
                        gi.layer(j).is_zero(),
                    );
                }
            }
        }
        ShapeTag::PrincipalDividing => {
            let g0 = form.lifted_gens[0].as_ref().expect("level 0 present");
            report.push(
                ConstraintKind::Literal,
                "G_0 divides x^n - 1 in R_k".into(),
                g0.divides(&RkPoly::xn_minus_1(params)).unwrap_or(false),
            );
            for j in 1..k {
                let (dj, dprev) = (g0.layer(j).degree(), g0.layer(j - 1).degree());
                report.push(
                    ConstraintKind::Literal,
                    format!("deg p_{j} = {dj} < deg p_{} = {dprev}", j - 1),
                    dj < dprev || g0.layer(j).is_zero(),
                );
            }
        }
        ShapeTag::TwoGenerator => {
            let top = &gens[k - 1];
            let g0 = form.lifted_gens[0].as_ref().expect("level 0 present");
            if k >= 2 {
                let r2 = params.with_k(2).expect("k = 2 is valid");
                let g_r2 = RkPoly::from_layers(r2, vec![g0.layer(0).clone(), g0.layer(1).clone()]);
                report.push(
                    ConstraintKind::Literal,
                    "g + u p_1 divides x^n - 1 in R_2".into(),
                    g_r2.divides(&RkPoly::xn_minus_1(r2)).unwrap_or(false),
                );
            }
            report.push(
                ConstraintKind::Literal,
                format!("g divides p_1 · (x^{n} - 1)/g with p_1 = {}", paren(&p_layer(1))),
                divides_cyclic(g, &p_layer(1).mul_cyclic(&g_quot, n)),
            );
            let mut power = FpPoly::one(p);
            for j in 1..k {
                power = power.mul_cyclic(&g_quot, n);
                let pj = p_layer(j);
                report.push(
                    ConstraintKind::Literal,
                    format!("a_{} divides p_{j} · ((x^{n} - 1)/g)^{j} with p_{j} = {}", k - 1, paren(&pj)),
                    divides_cyclic(top, &pj.mul_cyclic(&power, n)),
                );
            }
            let dp = p_layer(k - 1).degree();
            report.push(
                ConstraintKind::Literal,
                format!("deg p_{} = {dp} < deg a_{} = {}", k - 1, k - 1, top.degree()),
                dp < top.degree(),
            );
        }
        ShapeTag::FullTower => {
            if k >= 2 {
                let a = &gens[k - 2];
                let p1 = p_layer(1);
                report.push(
                    ConstraintKind::Literal,
                    format!("a_{} divides p_1 · (x^{n} - 1)/g with p_1 = {}", k - 2, paren(&p1)),
                    divides_cyclic(a, &p1.mul_cyclic(&g_quot, n)),
                );
            }
        }
    }

    for (i, gi) in form.present() {
        for (j, gj) in gens.iter().enumerate().take(k).skip(i + 1) {
            let d = gi.layer(j).degree();
            let bound = gj.degree();
            report.push(
                ConstraintKind::DegreeBound,
                format!("deg m_{{{i},{j}}} = {d} < deg ĝ_{j} = {bound}"),
                d < bound,
            );
        }
    }
    report
}

/// `n - deg ĝ_{k-1}`, or 0 for the zero code.
pub fn rank(code: &CyclicCode) -> usize {
    if code.is_zero() {
        return 0;
    }
    let tower = code.torsion_tower();
    code.params().n() - tower.top().degree().or(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningSet {
    pub elements: Vec<RkPoly>,
}

impl SpanningSet {
    pub fn cardinality(&self) -> usize {
        self.elements.len()
    }
}

/// `F_p` echelon of the `R_k`-module spanned by `elements`.
pub fn rk_span(params: PrimeParams, elements: &[RkPoly]) -> Echelon {
    let mut e = Echelon::empty(params.p(), params.k() * params.n());
    for el in elements {
        for s in 0..params.k() {
            e.insert(el.mul_u(s).to_vector());
        }
    }
    e
}

/// `{ x^j G_i : j < deg ĝ_{i-1} - deg ĝ_i }`, with `ĝ_{-1} = x^n - 1`.
pub fn minimal_spanning_set(code: &CyclicCode) -> Result<SpanningSet> {
    if code.is_zero() {
        return Err(Error::ZeroCode);
    }
    let params = code.params();
    let form = canonical_form(code);
    let degs = form.tower.degrees();
    let mut elements = Vec::new();
    for (i, g) in form.present() {
        let above = if i == 0 { params.n() } else { degs[i - 1] };
        for j in 0..above - degs[i] {
            elements.push(g.shift_cyclic(j));
        }
    }
    let span = rk_span(params, &elements);
    if !span.same_space(code.footprint()) {
        return Err(Error::Invariant("spanning set does not span the code".into()));
    }
    for skip in 0..elements.len() {
        let rest: Vec<RkPoly> =
            elements.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, e)| e.clone()).collect();
        if rk_span(params, &rest).rank() >= span.rank() {
            return Err(Error::Invariant(format!("spanning element {skip} is redundant")));
        }
    }
    Ok(SpanningSet { elements })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CardinalityCheck {
    /// `log_p |C|` from the footprint.
    pub lhs: usize,
    /// The exponent predicted from the tower degrees.
    pub rhs: usize,
    pub equal: bool,
    pub formula: String,
}

/// Compares `dim C` with `sum_i (n - deg ĝ_i)`. For `k = 2` this is
/// `2n - r - t`, and `2n - 2r` when the code is free.
pub fn cardinality_formula_check(code: &CyclicCode) -> CardinalityCheck {
    let params = code.params();
    let n = params.n();
    let tower = code.torsion_tower();
    let degs = tower.degrees();
    let rhs = tower.predicted_dim(n);
    let formula = if params.k() == 2 {
        let (r, t) = (degs[0], degs[1]);
        if r == t {
            format!("2n - 2r with n = {n}, r = {r}")
        } else {
            format!("2n - r - t with n = {n}, r = {r}, t = {t}")
        }
    } else {
        let terms: Vec<String> = degs.iter().map(|d| format!("({n} - {d})")).collect();
        terms.join(" + ")
    };
    let lhs = code.dim();
    CardinalityCheck { lhs, rhs, equal: lhs == rhs, formula }
}

/// Default cap on the number of divisor chains visited by enumeration.
pub const DEFAULT_CHAIN_CAP: u64 = 1 << 16;

/// Number of divisor chains `ĝ_{k-1} | ... | ĝ_0 | x^n - 1` for coprime length.
pub fn coprime_chain_count(params: PrimeParams) -> u128 {
    let m = factor_xn_minus_1(&params).len();
    let mut acc: u128 = 1;
    for _ in 0..m {
        acc = acc.saturating_mul(params.k() as u128 + 1);
    }
    acc
}

/// The tower of the chain in which factor `f` divides `ĝ_i` exactly when
/// `i < levels[f]`.
pub fn chain_tower(params: PrimeParams, factors: &[FpPoly], levels: &[usize]) -> TorsionTower {
    let p = params.p();
    let gens = (0..params.k())
        .map(|i| factors.iter().zip(levels).filter(|(_, &lv)| i < lv).fold(FpPoly::one(p), |acc, (f, _)| &acc * f))
        .collect();
    TorsionTower { gens }
}

/// Every cyclic code of coprime length, one per divisor chain, sorted by
/// dimension and footprint with the zero code last.
pub fn enumerate_coprime(params: PrimeParams, chain_cap: u64) -> Result<Vec<CyclicCode>> {
    if !params.is_coprime() {
        return Err(Error::NotCoprime("enumeration implemented for coprime case only"));
    }
    let count = coprime_chain_count(params);
    if count > chain_cap as u128 {
        return Err(Error::DivisorLatticeTooLarge { count, cap: chain_cap });
    }
    let factors: Vec<FpPoly> = factor_xn_minus_1(&params).into_iter().map(|f| f.poly).collect();
    let base = params.k() + 1;
    let mut codes: Vec<CyclicCode> = (0..count as u64)
        .into_par_iter()
        .map(|idx| {
            let mut rest = idx as usize;
            let levels: Vec<usize> = factors
                .iter()
                .map(|_| {
                    let lv = rest % base;
                    rest /= base;
                    lv
                })
                .collect();
            let tower = chain_tower(params, &factors, &levels);
            let gens = tower
                .gens
                .into_iter()
                .enumerate()
                .filter(|(_, g)| *g != params.xn_minus_1())
                .map(|(i, g)| RkPoly::u_times(params, i, g))
                .collect();
            CyclicCode::from_generators(params, gens)
        })
        .collect::<Result<_>>()?;
    codes.sort();
    codes.dedup();
    let zero_at = codes.iter().position(CyclicCode::is_zero);
    if let Some(at) = zero_at {
        let zero = codes.remove(at);
        codes.push(zero);
    }
    Ok(codes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfp::DEFAULT_DIVISOR_CAP;

    fn prm(p: u64, k: usize, n: usize) -> PrimeParams {
        PrimeParams::new(p, k, n).unwrap()
    }

    fn fp(p: u32, c: &[i64]) -> FpPoly {
        FpPoly::from_signed(p, c)
    }

    fn g1() -> FpPoly {
        fp(3, &[2, 1])
    }

    fn g2() -> FpPoly {
        fp(3, &[1, 1, 1, 1, 1])
    }

    fn code(params: PrimeParams, gens: Vec<RkPoly>) -> CyclicCode {
        CyclicCode::from_generators(params, gens).unwrap()
    }

    fn x2_1_u() -> (PrimeParams, RkPoly) {
        let params = prm(2, 2, 4);
        (params, RkPoly::from_layers(params, vec![fp(2, &[1, 0, 1]), FpPoly::one(2)]))
    }

    #[test]
    fn canonical_form_examples() {
        let params = prm(3, 4, 5);
        let c = code(params, vec![RkPoly::from_fp(params, g1())]);
        let form = canonical_form(&c);
        assert_eq!(form.shape, ShapeTag::Principal);
        assert_eq!(form.tower.gens, vec![g1(); 4]);
        assert_eq!(form.generators(), vec![RkPoly::from_fp(params, g1())]);

        let zero = canonical_form(&CyclicCode::zero(params));
        assert_eq!(zero.shape, ShapeTag::FullTower);
        assert!(zero.generators().is_empty());
        assert!(zero.tower.gens.iter().all(|g| *g == params.xn_minus_1()));

        let (params, h) = x2_1_u();
        let form = canonical_form(&code(params, vec![h.clone()]));
        assert_eq!(form.shape, ShapeTag::PrincipalDividing);
        assert_eq!(form.tower.gens, vec![fp(2, &[1, 0, 1]); 2]);
        assert_eq!(form.generators(), vec![h]);
    }

    #[test]
    fn two_generator_and_full_tower_shapes() {
        let (params, h) = x2_1_u();
        let c = code(params, vec![h, RkPoly::u_times(params, 1, fp(2, &[1, 1]))]);
        assert_eq!(canonical_form(&c).shape, ShapeTag::TwoGenerator);

        let params = prm(3, 3, 9);
        let xm1 = FpPoly::x_minus_1(3);
        let c = code(
            params,
            vec![
                RkPoly::from_fp(params, xm1.pow(5)),
                RkPoly::u_times(params, 1, xm1.pow(3)),
                RkPoly::u_times(params, 2, xm1.clone()),
            ],
        );
        let form = canonical_form(&c);
        assert_eq!(form.shape, ShapeTag::FullTower);
        assert_eq!(form.present_levels(), vec![0, 1, 2]);
    }

    #[test]
    fn freeness_examples() {
        let (params, h) = x2_1_u();
        let f = is_free(&code(params, vec![h.clone()]));
        assert!(f.free);
        assert_eq!(f.witness, Some(h));

        let params = prm(3, 4, 5);
        let c = code(params, vec![RkPoly::from_fp(params, g1()), RkPoly::u_times(params, 1, FpPoly::one(3))]);
        assert!(!is_free(&c).free);

        let f = is_free(&CyclicCode::whole(params));
        assert!(f.free);
        assert_eq!(f.witness, Some(RkPoly::one(params)));
    }

    #[test]
    fn collapse_examples() {
        let params = prm(3, 2, 5);
        let c = code(params, vec![RkPoly::from_fp(params, g2()), RkPoly::u_times(params, 1, FpPoly::one(3))]);
        let h = collapse_coprime(&c).unwrap();
        assert_eq!(h, RkPoly::from_layers(params, vec![g2(), FpPoly::one(3)]));

        let h = collapse_coprime(&CyclicCode::whole(params)).unwrap();
        assert_eq!(h, RkPoly::from_layers(params, vec![FpPoly::one(3); 2]));

        let c = code(params, vec![RkPoly::from_fp(params, g1()), RkPoly::u_times(params, 1, g1())]);
        assert_eq!(collapse_coprime(&c).unwrap(), RkPoly::from_layers(params, vec![g1(), g1()]));

        let (params, h) = x2_1_u();
        let err = collapse_coprime(&code(params, vec![h])).unwrap_err();
        assert_eq!(err.to_string(), "collapse requires n coprime to p");
    }

    #[test]
    fn constraint_examples() {
        let params = prm(3, 4, 5);
        for c in enumerate_coprime(params, DEFAULT_DIVISOR_CAP).unwrap() {
            let report = verify_constraints(&canonical_form(&c), params);
            assert!(report.all_hold());
        }
        assert!(verify_constraints(&canonical_form(&CyclicCode::zero(params)), params).entries.is_empty());

        let (params, h) = x2_1_u();
        let c = code(params, vec![h, RkPoly::u_times(params, 1, fp(2, &[1, 1]))]);
        let form = canonical_form(&c);
        assert_eq!(form.lifted_gens[0].as_ref().unwrap().layer(1), &FpPoly::one(2));
        let report = verify_constraints(&form, params);
        assert_eq!(report.of_kind(ConstraintKind::Chain).count(), 2);
        assert!(report.all_hold(), "{report:#?}");
        assert!(report.of_kind(ConstraintKind::Literal).any(|e| e.statement.starts_with("g divides p_1")));
    }

    #[test]
    fn rank_examples() {
        let params = prm(3, 4, 5);
        assert_eq!(rank(&code(params, vec![RkPoly::from_fp(params, g1())])), 4);
        let c = code(params, vec![RkPoly::from_fp(params, g2()), RkPoly::u_times(params, 3, FpPoly::one(3))]);
        assert_eq!(rank(&c), 5);
        assert_eq!(rank(&CyclicCode::whole(params)), 5);
        assert_eq!(rank(&CyclicCode::zero(params)), 0);
    }

    #[test]
    fn spanning_set_examples() {
        let params = prm(3, 4, 5);
        let c = code(params, vec![RkPoly::from_fp(params, g1()), RkPoly::u_times(params, 1, FpPoly::one(3))]);
        let s = minimal_spanning_set(&c).unwrap();
        let mut expected: Vec<RkPoly> = (0..4).map(|j| RkPoly::from_fp(params, g1().shift(j))).collect();
        expected.push(RkPoly::u_times(params, 1, FpPoly::one(3)));
        assert_eq!(s.elements, expected);

        let (params, h) = x2_1_u();
        let s = minimal_spanning_set(&code(params, vec![h.clone()])).unwrap();
        assert_eq!(s.elements, vec![h.clone(), h.shift_cyclic(1)]);

        let params = prm(2, 3, 6);
        let s = minimal_spanning_set(&CyclicCode::whole(params)).unwrap();
        let monomials: Vec<RkPoly> = (0..6).map(|j| RkPoly::from_fp(params, FpPoly::monomial(2, 1, j))).collect();
        assert_eq!(s.elements, monomials);
        assert_eq!(minimal_spanning_set(&CyclicCode::zero(params)), Err(Error::ZeroCode));
    }

    #[test]
    fn cardinality_examples() {
        let (params, h) = x2_1_u();
        let c = cardinality_formula_check(&code(params, vec![h.clone()]));
        assert_eq!((c.lhs, c.rhs, c.equal), (4, 4, true));
        assert!(c.formula.starts_with("2n - 2r"));

        let c = cardinality_formula_check(&code(params, vec![h, RkPoly::u_times(params, 1, fp(2, &[1, 1]))]));
        assert_eq!((c.lhs, c.rhs, c.equal), (5, 5, true));
        assert!(c.formula.starts_with("2n - r - t"));

        let c = cardinality_formula_check(&CyclicCode::whole(params));
        assert_eq!((c.lhs, c.rhs), (8, 8));
    }

    #[test]
    fn enumeration_examples() {
        let params = prm(3, 4, 5);
        let codes = enumerate_coprime(params, DEFAULT_CHAIN_CAP).unwrap();
        assert_eq!(codes.len(), 25);
        assert!(codes.last().unwrap().is_zero());
        assert!(codes[..24].iter().all(|c| !c.is_zero()));
        assert!(codes[..24].windows(2).all(|w| w[0] < w[1]));

        let params = prm(2, 2, 1);
        let codes = enumerate_coprime(params, DEFAULT_CHAIN_CAP).unwrap();
        assert_eq!(codes.len(), 3);
        assert_eq!(codes[0], code(params, vec![RkPoly::u_times(params, 1, FpPoly::one(2))]));
        assert_eq!(codes[1], CyclicCode::whole(params));

        let params = prm(2, 1, 3);
        let codes = enumerate_coprime(params, DEFAULT_CHAIN_CAP).unwrap();
        assert_eq!(codes.len(), 4);

        let err = enumerate_coprime(prm(3, 2, 9), DEFAULT_CHAIN_CAP).unwrap_err();
        assert_eq!(err.to_string(), "enumeration implemented for coprime case only");
        assert!(matches!(enumerate_coprime(prm(2, 8, 63), 1000), Err(Error::DivisorLatticeTooLarge { .. })));
    }

    #[test]
    fn enumerated_chains_collapse_to_single_generators() {
        for (p, k, n) in [(3, 4, 5), (2, 3, 7), (5, 2, 6)] {
            let params = prm(p, k, n);
            for c in enumerate_coprime(params, DEFAULT_CHAIN_CAP).unwrap() {
                let h = collapse_coprime(&c).unwrap();
                assert_eq!(code(params, vec![h]), c);
                assert_eq!(rank(&c), if c.is_zero() { 0 } else { minimal_spanning_set(&c).unwrap().cardinality() });
            }
        }
    }
}

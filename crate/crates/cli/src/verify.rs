//! Property suites: every structural shortcut against its exhaustive oracle.

use std::fmt::Write as _;

use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use rkcodes::chainring::RkPoly;
use rkcodes::code::{CodeDocument, CyclicCode};
use rkcodes::distance::{distance_power_length, lemma_product_check};
use rkcodes::gfp::{divisors_xn_minus_1, fp_cyclic_min_weight, FpPoly, PrimeParams};
use rkcodes::structure::{
    canonical_form, collapse_coprime, enumerate_coprime, is_free, minimal_spanning_set, rank, verify_constraints,
    ConstraintKind, DEFAULT_CHAIN_CAP,
};
use rkcodes::weight::codeword_count;
use rkcodes::Error;

use crate::args::Suite;
use crate::sample;

const MAX_LISTED_FAILURES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub detail: String,
    /// Code document reproducing the failure, when one applies.
    pub reproducer: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
}

impl PropertyResult {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), passed: 0, failed: 0, skipped: 0, failures: Vec::new() }
    }

    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String, reproducer: impl FnOnce() -> Option<String>) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED_FAILURES {
                self.failures.push(Failure { detail: detail(), reproducer: reproducer() });
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub budget: u64,
    pub properties: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.properties.iter().all(PropertyResult::ok)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ =
            writeln!(s, "suite: {}  seed: {}  trials: {}  budget: {}", self.suite, self.seed, self.trials, self.budget);
        for p in &self.properties {
            let status = if p.ok() { "PASS" } else { "FAIL" };
            let _ = write!(s, "[{status}] {}: {} passed, {} failed", p.name, p.passed, p.failed);
            if p.skipped > 0 {
                let _ = write!(s, ", {} skipped (budget)", p.skipped);
            }
            s.push('\n');
            for f in &p.failures {
                let _ = writeln!(s, "    {}", f.detail);
                if let Some(r) = &f.reproducer {
                    let _ = writeln!(s, "    reproducer: {r}");
                }
            }
        }
        let failed = self.properties.iter().filter(|p| !p.ok()).count();
        let _ = writeln!(s, "{} properties, {} failed", self.properties.len(), failed);
        s
    }
}

fn doc(code: &CyclicCode) -> Option<String> {
    Some(CodeDocument::from_code(code).to_json())
}

fn fp_code_doc(p: u32, n: usize, g: &FpPoly) -> Option<String> {
    let params = PrimeParams::new(p as u64, 1, n).ok()?;
    Some(CodeDocument::from_generators(params, &[RkPoly::from_fp(params, g.clone())]).to_json())
}

/// Criterion-sized parameter ranges used by the randomized properties.
const GENERAL_PRIMES: [u64; 3] = [2, 3, 5];

fn random_general(rng: &mut ChaCha8Rng) -> CyclicCode {
    let params = sample::params(rng, &GENERAL_PRIMES, 4, 10, false);
    sample::code(rng, params)
}

/// `⟨ĝ_0, u ĝ_1, ...⟩` and `⟨Σ u^i ĝ_i⟩` agree for random coprime chains and
/// for every enumerated code of length 5 over `Z_3[u]/(u^4)`.
pub fn coprime_collapse(trials: usize, seed: u64) -> PropertyResult {
    let mut res = PropertyResult::new("coprime collapse");
    let mut rng = sample::rng(seed);
    let check_tower = |res: &mut PropertyResult, params: PrimeParams, gens: &[FpPoly]| {
        let xn1 = params.xn_minus_1();
        let multi: Vec<RkPoly> = gens
            .iter()
            .enumerate()
            .filter(|(_, g)| **g != xn1)
            .map(|(i, g)| RkPoly::u_times(params, i, g.clone()))
            .collect();
        let single = RkPoly::from_layers(params, gens.to_vec()).reduce_cyclic();
        let a = CyclicCode::from_generators(params, multi).expect("shared params");
        let b = CyclicCode::from_generators(params, vec![single.clone()]).expect("shared params");
        res.check(a == b, || format!("{params}: <{single}> differs from the multi-generator code"), || doc(&a));
    };
    for _ in 0..trials {
        let params = sample::params(&mut rng, &GENERAL_PRIMES, 4, 8, true);
        let tower = sample::chain(&mut rng, params);
        check_tower(&mut res, params, &tower.gens);
    }
    let params = PrimeParams::new(3, 4, 5).expect("valid");
    for code in enumerate_coprime(params, DEFAULT_CHAIN_CAP).expect("coprime") {
        let tower = code.torsion_tower();
        check_tower(&mut res, params, &tower.gens);
        res.check(collapse_coprime(&code).is_ok(), || format!("{params}: collapse failed"), || doc(&code));
    }
    res
}

/// Canonical generators rebuild the code, and the chain and mixed divisibility
/// conditions hold.
pub fn canonical_reconstruction(trials: usize, seed: u64) -> Vec<PropertyResult> {
    let mut rebuild = PropertyResult::new("canonical reconstruction");
    let mut mixed = PropertyResult::new("mixed divisibility");
    let mut rng = sample::rng(seed ^ 0x5eed_0001);
    for _ in 0..trials {
        let code = random_general(&mut rng);
        let form = canonical_form(&code);
        let rebuilt = CyclicCode::from_generators(code.params(), form.generators()).expect("shared params");
        rebuild.check(rebuilt == code, || format!("{}: reconstruction differs", code.params()), || doc(&code));
        let report = verify_constraints(&form, code.params());
        for e in report.of_kind(ConstraintKind::Mixed) {
            mixed.check(e.holds, || format!("{}: {}", code.params(), e.statement), || doc(&code));
        }
    }
    vec![rebuild, mixed]
}

/// A free nonzero code built as `<d + u r_1 + ...>` from a divisor `d`, if the
/// draw happens to be free.
fn random_free_candidate(rng: &mut ChaCha8Rng) -> CyclicCode {
    let params = sample::params(rng, &GENERAL_PRIMES, 4, 10, false);
    let d = sample::divisor(rng, params);
    let mut layers = vec![d];
    for _ in 1..params.k() {
        let len = rand::Rng::gen_range(rng, 0..=params.n());
        layers.push(sample::fp_poly(rng, params.p(), len));
    }
    CyclicCode::from_generators(params, vec![RkPoly::from_layers(params, layers)]).expect("shared params")
}

/// Codes with equal torsion generators have a single generator dividing
/// `x^n - 1` in `R_k` and dimension `k (n - deg ĝ_0)`.
pub fn freeness(min_free: usize, seed: u64) -> PropertyResult {
    let mut res = PropertyResult::new("freeness witness");
    let mut rng = sample::rng(seed ^ 0x5eed_0002);
    let known = {
        let params = PrimeParams::new(2, 2, 4).expect("valid");
        let h = RkPoly::from_layers(params, vec![FpPoly::new(2, vec![1, 0, 1]), FpPoly::one(2)]);
        CyclicCode::from_generators(params, vec![h]).expect("shared params")
    };
    let check = |res: &mut PropertyResult, code: &CyclicCode| {
        let params = code.params();
        let f = is_free(code);
        let tower = code.torsion_tower();
        let Some(w) = f.witness.clone() else {
            res.check(false, || format!("{params}: free code without witness"), || doc(code));
            return;
        };
        let divides = w.divides(&RkPoly::xn_minus_1(params)).unwrap_or(false);
        let principal = CyclicCode::from_generators(params, vec![w.clone()]).expect("shared params") == *code;
        let dim_ok = code.dim() == params.k() * (params.n() - tower.gens[0].degree().or(0));
        res.check(
            f.free && divides && principal && dim_ok,
            || format!("{params}: witness {w} divides={divides} principal={principal} dim_ok={dim_ok}"),
            || doc(code),
        );
    };
    check(&mut res, &known);
    let mut attempts = 0usize;
    while res.passed + res.failed < min_free && attempts < 200 * min_free {
        attempts += 1;
        let code = random_free_candidate(&mut rng);
        if code.is_zero() || !is_free(&code).free {
            continue;
        }
        check(&mut res, &code);
    }
    res
}

pub fn rank_properties(trials: usize, seed: u64) -> Vec<PropertyResult> {
    let mut dim = PropertyResult::new("dimension formula");
    let mut rk = PropertyResult::new("rank and spanning set");
    let mut k2 = PropertyResult::new("k=2 cardinality");
    let mut rng = sample::rng(seed ^ 0x5eed_0003);
    let run = |code: &CyclicCode, dim: &mut PropertyResult, rk: &mut PropertyResult, k2: &mut PropertyResult| {
        let params = code.params();
        let n = params.n();
        let tower = code.torsion_tower();
        let degs = tower.degrees();
        dim.check(
            code.dim() == tower.predicted_dim(n),
            || format!("{params}: dim {} vs tower {:?}", code.dim(), degs),
            || doc(code),
        );
        if code.is_zero() {
            rk.check(rank(code) == 0, || format!("{params}: zero code rank {}", rank(code)), || doc(code));
        } else {
            let expected = n - degs[params.k() - 1];
            match minimal_spanning_set(code) {
                Ok(set) => rk.check(
                    rank(code) == expected && set.cardinality() == expected,
                    || format!("{params}: rank {} spanning {} expected {expected}", rank(code), set.cardinality()),
                    || doc(code),
                ),
                Err(e) => rk.check(false, || format!("{params}: {e}"), || doc(code)),
            }
        }
        if params.k() == 2 {
            let (r, t) = (degs[0], degs[1]);
            let (formula, expected) = if r == t { ("2n - 2r", 2 * n - 2 * r) } else { ("2n - r - t", 2 * n - r - t) };
            k2.check(
                code.dim() == expected,
                || format!("{params}: dim {} vs {formula} = {expected}", code.dim()),
                || doc(code),
            );
        }
    };
    for _ in 0..trials {
        let code = random_general(&mut rng);
        run(&code, &mut dim, &mut rk, &mut k2);
        let p2 = sample::params(&mut rng, &GENERAL_PRIMES, 2, 10, false);
        let p2 = p2.with_k(2).expect("k = 2 is valid");
        let code = sample::code(&mut rng, p2);
        run(&code, &mut dim, &mut rk, &mut k2);
    }
    vec![dim, rk, k2]
}

/// Closed form against exhaustive search for every `0 < t < p^l`.
pub fn closed_form_sweep(p: u32, l: usize, budget: u64) -> PropertyResult {
    let n = (p as usize).pow(l as u32);
    let mut res = PropertyResult::new(format!("closed form n={n} (p={p}, l={l})"));
    let params = PrimeParams::new(p as u64, 1, n).expect("valid sweep parameters");
    let xm1 = FpPoly::x_minus_1(p);
    for t in 1..n as u64 {
        let g = xm1.pow(t);
        match fp_cyclic_min_weight(&g, &params, budget) {
            Ok(d) => {
                let formula = distance_power_length(p, l, t).expect("t in range");
                res.check(
                    formula == d,
                    || format!("t={t}: closed form {formula}, exhaustive {d}"),
                    || fp_code_doc(p, n, &g),
                );
            }
            Err(Error::BudgetExceeded { .. }) => res.skipped += 1,
            Err(e) => res.check(false, || format!("t={t}: {e}"), || fp_code_doc(p, n, &g)),
        }
    }
    res
}

/// For `t <= p^{l-1}` the exhaustive distance is 2; over each sweep it never
/// decreases as `t` grows.
pub fn sweep_sanity(sweeps: &[(u32, usize)], budget: u64) -> Vec<PropertyResult> {
    let mut case1 = PropertyResult::new("distance 2 below p^(l-1)");
    let mut mono = PropertyResult::new("monotone in t");
    for &(p, l) in sweeps {
        let n = (p as usize).pow(l as u32);
        let params = PrimeParams::new(p as u64, 1, n).expect("valid sweep parameters");
        let xm1 = FpPoly::x_minus_1(p);
        let mut prev: Option<usize> = None;
        for t in 1..n as u64 {
            let g = xm1.pow(t);
            let Ok(d) = fp_cyclic_min_weight(&g, &params, budget) else {
                prev = None;
                continue;
            };
            if t <= (n / p as usize) as u64 {
                case1.check(d == 2, || format!("n={n} t={t}: exhaustive {d}"), || fp_code_doc(p, n, &g));
            }
            if let Some(before) = prev {
                mono.check(before <= d, || format!("n={n} t={t}: {before} then {d}"), || fp_code_doc(p, n, &g));
            }
            prev = Some(d);
        }
    }
    vec![case1, mono]
}

/// The product law at `l = 2` for every admissible `(p, b, h)`.
pub fn product_law(primes: &[u32], budget: u64) -> PropertyResult {
    let mut res = PropertyResult::new("product law (l=2)");
    for &p in primes {
        let short = PrimeParams::new(p as u64, 1, p as usize).expect("valid");
        let xs1 = short.xn_minus_1();
        for h in divisors_xn_minus_1(&short).expect("small lattice") {
            if h == xs1 {
                continue;
            }
            for b in 1..p {
                let g = &xs1.pow(b as u64) * &h;
                match lemma_product_check(p, 2, b, &h, budget) {
                    Ok(c) => res.check(
                        c.equal,
                        || format!("p={p} b={b} h={h}: exhaustive {} vs (b+1)d(h) = {}", c.lhs, c.rhs),
                        || fp_code_doc(p, p as usize * p as usize, &g),
                    ),
                    Err(Error::BudgetExceeded { .. }) => res.skipped += 1,
                    Err(e) => res.check(false, || format!("p={p} b={b} h={h}: {e}"), || None),
                }
            }
        }
    }
    res
}

/// Torsion shortcut against full enumeration on random codes of dimension at
/// most 16 whose enumeration fits the budget.
pub fn torsion_shortcut(trials: usize, seed: u64, budget: u64) -> PropertyResult {
    let mut res = PropertyResult::new("torsion distance");
    let mut rng = sample::rng(seed ^ 0x5eed_0004);
    let mut draws = 0usize;
    while res.passed + res.failed < trials && draws < 100 * trials.max(1) {
        draws += 1;
        let code = random_general(&mut rng);
        let params = code.params();
        if code.is_zero() || code.dim() > 16 || codeword_count(params.p(), code.dim()) > budget as u128 {
            continue;
        }
        let fast = code.min_distance(budget);
        let slow = code.min_distance_bruteforce(budget);
        res.check(
            fast.is_ok() && fast == slow,
            || format!("{params}: torsion {fast:?}, exhaustive {slow:?}"),
            || doc(&code),
        );
    }
    res
}

pub fn dual_properties(trials: usize, seed: u64) -> Vec<PropertyResult> {
    let mut card = PropertyResult::new("dual cardinality");
    let mut twice = PropertyResult::new("double dual");
    let mut closed = PropertyResult::new("dual closure");
    let mut rng = sample::rng(seed ^ 0x5eed_0005);
    for _ in 0..trials {
        let params = sample::params(&mut rng, &[2, 3], 3, 6, false);
        let code = sample::code(&mut rng, params);
        let dual = match code.dual() {
            Ok(d) => d,
            Err(e) => {
                closed.check(false, || format!("{params}: {e}"), || doc(&code));
                continue;
            }
        };
        let kn = params.k() * params.n();
        card.check(
            code.dim() + dual.dim() == kn,
            || format!("{params}: {} + {} != {kn}", code.dim(), dual.dim()),
            || doc(&code),
        );
        closed.check(dual.is_ideal(), || format!("{params}: dual not shift-closed"), || doc(&code));
        let back = dual.dual();
        twice.check(back.as_ref() == Ok(&code), || format!("{params}: double dual differs"), || doc(&code));
    }
    vec![card, twice, closed]
}

pub const SWEEPS: [(u32, usize); 4] = [(2, 2), (2, 3), (3, 2), (3, 3)];

pub fn run_suite(suite: Suite, trials: usize, seed: u64, budget: u64) -> VerifyReport {
    let mut props = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Generators {
        props.push(coprime_collapse(trials, seed));
        props.extend(canonical_reconstruction(trials, seed));
        props.push(freeness(100.max(trials / 2), seed));
    }
    if all || suite == Suite::Rank {
        props.extend(rank_properties(trials, seed));
    }
    if all || suite == Suite::Distance {
        for (p, l) in SWEEPS {
            props.push(closed_form_sweep(p, l, budget));
        }
        props.extend(sweep_sanity(&SWEEPS, budget));
        props.push(product_law(&[2, 3], budget));
        props.push(torsion_shortcut(trials, seed, budget));
    }
    if all || suite == Suite::Dual {
        props.extend(dual_properties(trials, seed));
    }
    let name = format!("{suite:?}").to_lowercase();
    VerifyReport { suite: name, seed, trials, budget, properties: props }
}

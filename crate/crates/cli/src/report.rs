//! The per-code analysis report and its text rendering.

use std::fmt::Write as _;

use serde::Serialize;

use rkcodes::code::{CodeDocument, CyclicCode};
use rkcodes::distance::distance_via_theorem;
use rkcodes::structure::{
    canonical_form, is_free, minimal_spanning_set, rank, verify_constraints, ConstraintEntry, ConstraintKind,
};
use rkcodes::Error;

use crate::args::DistanceMode;
use crate::error::CliResult;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamsEcho {
    pub p: u32,
    pub k: usize,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerLevel {
    pub level: usize,
    pub generator: String,
    pub coeffs: Vec<u32>,
    pub degree: usize,
    /// Whether this level contributes a lifted generator.
    pub present: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanningSummary {
    pub size: usize,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceSummary {
    pub value: Option<usize>,
    pub method: Option<String>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualSummary {
    pub log_size: usize,
    pub self_dual: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub params: ParamsEcho,
    /// Canonical lifted generators as a code document.
    pub code: CodeDocument,
    pub tower: Vec<TowerLevel>,
    pub shape: String,
    pub free: bool,
    pub witness: Option<String>,
    pub rank: usize,
    pub spanning_set: SpanningSummary,
    pub log_size: usize,
    pub distance: DistanceSummary,
    pub dual: DualSummary,
    pub constraints: Vec<ConstraintEntry>,
}

fn summary(value: usize, method: &str, note: Option<String>) -> DistanceSummary {
    DistanceSummary { value: Some(value), method: Some(method.into()), note }
}

/// Distance by the requested method. In auto mode the closed form is tried
/// first and cross-checked by the torsion search whenever that fits the
/// budget; a disagreement reports the searched value.
pub fn compute_distance(code: &CyclicCode, mode: DistanceMode, budget: u64) -> CliResult<DistanceSummary> {
    if code.is_zero() {
        return Ok(DistanceSummary { value: None, method: None, note: Some("undefined (zero code)".into()) });
    }
    Ok(match mode {
        DistanceMode::ClosedForm => summary(distance_via_theorem(code)?, "closed-form", None),
        DistanceMode::Torsion => summary(code.min_distance(budget)?, "torsion", None),
        DistanceMode::BruteForce => summary(code.min_distance_bruteforce(budget)?, "brute-force", None),
        DistanceMode::Auto => match distance_via_theorem(code) {
            Ok(closed) => match code.min_distance(budget) {
                Ok(t) if t == closed => summary(closed, "closed-form", Some("confirmed by torsion search".into())),
                Ok(t) => summary(
                    t,
                    "torsion",
                    Some(format!("closed form gives {closed}, exhaustive torsion search gives {t}")),
                ),
                Err(Error::BudgetExceeded { .. }) => {
                    summary(closed, "closed-form", Some("unverified: torsion search exceeds budget".into()))
                }
                Err(e) => return Err(e.into()),
            },
            Err(Error::ClosedFormInapplicable(_)) => match code.min_distance(budget) {
                Ok(t) => summary(t, "torsion", None),
                Err(Error::BudgetExceeded { .. }) => {
                    summary(code.min_distance_bruteforce(budget)?, "brute-force", None)
                }
                Err(e) => return Err(e.into()),
            },
            Err(e) => return Err(e.into()),
        },
    })
}

pub fn analyze(code: &CyclicCode, mode: DistanceMode, budget: u64) -> CliResult<AnalysisReport> {
    let params = code.params();
    let form = canonical_form(code);
    let freeness = is_free(code);
    let spanning = if code.is_zero() {
        SpanningSummary { size: 0, elements: Vec::new() }
    } else {
        let set = minimal_spanning_set(code)?;
        SpanningSummary { size: set.cardinality(), elements: set.elements.iter().map(|e| e.to_string()).collect() }
    };
    let tower = form
        .tower
        .gens
        .iter()
        .enumerate()
        .map(|(i, g)| TowerLevel {
            level: i,
            generator: g.to_string(),
            coeffs: g.coeffs().to_vec(),
            degree: g.degree().or(0),
            present: form.lifted_gens[i].is_some(),
        })
        .collect();
    let dual = code.dual()?;
    let distance = compute_distance(code, mode, budget)?;
    Ok(AnalysisReport {
        params: ParamsEcho { p: params.p(), k: params.k(), n: params.n() },
        code: CodeDocument::from_generators(params, &form.generators()),
        tower,
        shape: form.shape.to_string(),
        free: freeness.free,
        witness: freeness.witness.map(|w| w.to_string()),
        rank: rank(code),
        spanning_set: spanning,
        log_size: code.dim(),
        distance,
        dual: DualSummary { log_size: dual.dim(), self_dual: dual == *code },
        constraints: verify_constraints(&form, params).entries,
    })
}

fn kind_label(kind: ConstraintKind) -> &'static str {
    match kind {
        ConstraintKind::Chain => "chain",
        ConstraintKind::Mixed => "mixed",
        ConstraintKind::Literal => "literal",
        ConstraintKind::DegreeBound => "degree",
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl AnalysisReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let ParamsEcho { p, k, n } = self.params;
        let _ = writeln!(s, "code of length {n} over Z_{p}[u]/(u^{k})  (p={p} k={k} n={n})");
        let _ = writeln!(s, "tower:");
        for t in &self.tower {
            let mark = if t.present { "" } else { "  (no new generator)" };
            let _ = writeln!(s, "  ĝ_{} = {}  [deg {}]{mark}", t.level, t.generator, t.degree);
        }
        let _ = writeln!(s, "shape: {}", self.shape);
        let _ = writeln!(s, "free: {}", yes_no(self.free));
        if let Some(w) = &self.witness {
            let _ = writeln!(s, "witness: {w}");
        }
        let _ = writeln!(s, "rank: {}", self.rank);
        let _ = writeln!(s, "spanning set ({}):", self.spanning_set.size);
        for e in &self.spanning_set.elements {
            let _ = writeln!(s, "  {e}");
        }
        let _ = writeln!(s, "log_{p} |C|: {}", self.log_size);
        match (&self.distance.value, &self.distance.method) {
            (Some(v), Some(m)) => {
                let _ = write!(s, "distance: {v} ({m})");
            }
            _ => {
                let _ = write!(s, "distance: undefined");
            }
        }
        if let Some(note) = &self.distance.note {
            let _ = write!(s, "  [{note}]");
        }
        s.push('\n');
        let _ = writeln!(s, "dual: log_{p} |C^⊥| = {}, self-dual: {}", self.dual.log_size, yes_no(self.dual.self_dual));
        let _ = writeln!(s, "constraints:");
        if self.constraints.is_empty() {
            let _ = writeln!(s, "  (none)");
        }
        for c in &self.constraints {
            let status = if c.holds { "ok  " } else { "FAIL" };
            let _ = writeln!(s, "  [{status}] {:<7} {}", kind_label(c.kind), c.statement);
        }
        let _ = writeln!(s, "generators (json): {}", self.code.to_json());
        s
    }
}

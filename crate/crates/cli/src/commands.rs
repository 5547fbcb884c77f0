//! Command implementations. Each returns its full stdout so output is
//! emitted once and stays byte-stable.

use std::fmt::Write as _;

use serde::Serialize;

use rkcodes::code::{CodeDocument, CyclicCode};
use rkcodes::gfp::{factor_xn_minus_1, PrimeParams};
use rkcodes::structure::{collapse_coprime, enumerate_coprime, rank, DEFAULT_CHAIN_CAP};

use crate::args::{Cli, CodeSource, Command, DistanceMode, Format};
use crate::catalogue;
use crate::error::{CliError, CliResult, EXIT_OK, EXIT_PROPERTY_FAILURE};
use crate::grammar::parse_rk_poly;
use crate::report::{analyze, AnalysisReport};
use crate::verify::{run_suite, VerifyReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorEntry {
    pub poly: String,
    pub coeffs: Vec<u32>,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub p: u32,
    pub n: usize,
    pub factors: Vec<FactorEntry>,
}

pub fn factor(p: u64, n: usize) -> CliResult<FactorReport> {
    let params = PrimeParams::new(p, 1, n)?;
    let factors = factor_xn_minus_1(&params)
        .into_iter()
        .map(|f| FactorEntry {
            poly: f.poly.to_string(),
            coeffs: f.poly.coeffs().to_vec(),
            multiplicity: f.multiplicity,
        })
        .collect();
    Ok(FactorReport { p: params.p(), n, factors })
}

impl FactorReport {
    pub fn render_text(&self) -> String {
        let product: String = self
            .factors
            .iter()
            .map(|f| match f.multiplicity {
                1 => format!("({})", f.poly),
                m => format!("({})^{m}", f.poly),
            })
            .collect();
        let mut s = format!("x^{} - 1 = {product} over F_{}\n", self.n, self.p);
        for f in &self.factors {
            let _ = writeln!(s, "  {}  multiplicity {}", f.poly, f.multiplicity);
        }
        s
    }
}

pub fn load_code(source: &CodeSource) -> CliResult<CyclicCode> {
    if let Some(path) = &source.code_file {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })?;
        return Ok(CodeDocument::parse(&text)?.to_code()?);
    }
    let (Some(p), Some(k), Some(n)) = (source.p, source.k, source.n) else {
        return Err(CliError::Usage("give --code-file, or --p, --k, --n and at least one --gen".into()));
    };
    if source.generator.is_empty() {
        return Err(CliError::Usage("at least one --gen is required".into()));
    }
    let params = PrimeParams::new(p, k, n)?;
    let gens = source.generator.iter().map(|g| parse_rk_poly(g, params)).collect::<CliResult<Vec<_>>>()?;
    Ok(CyclicCode::from_generators(params, gens)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumeratedCode {
    pub index: usize,
    /// Collapsed single generator `Σ u^i ĝ_i`.
    pub generator: String,
    pub code: CodeDocument,
    pub rank: usize,
    pub log_size: usize,
    pub distance: Option<usize>,
    /// Label in the reference list, when the parameters have one.
    pub reference: Option<String>,
    pub zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub p: u32,
    pub k: usize,
    pub n: usize,
    pub codes: Vec<EnumeratedCode>,
    pub nonzero_count: usize,
    /// Nonzero codes not in the reference list, when one exists.
    pub surplus: Option<Vec<String>>,
    /// Reference entries with no matching code.
    pub missing: Option<Vec<String>>,
}

pub fn enumerate(p: u64, k: usize, n: usize, include_zero: bool, budget: u64) -> CliResult<EnumerationReport> {
    let params = PrimeParams::new(p, k, n)?;
    if !params.is_coprime() {
        return Err(CliError::Usage(format!(
            "enumeration implemented for coprime case only: gcd(n = {n}, p = {p}) != 1"
        )));
    }
    let codes = enumerate_coprime(params, DEFAULT_CHAIN_CAP)?;
    let reference = if catalogue::is_catalogue_params(params) { Some(catalogue::reference_codes()?) } else { None };
    let mut out = Vec::new();
    for (i, code) in codes.iter().enumerate() {
        if code.is_zero() && !include_zero {
            continue;
        }
        let h = collapse_coprime(code)?;
        let distance = if code.is_zero() {
            None
        } else {
            match code.min_distance(budget) {
                Ok(d) => Some(d),
                Err(rkcodes::Error::BudgetExceeded { .. }) => None,
                Err(e) => return Err(e.into()),
            }
        };
        out.push(EnumeratedCode {
            index: i + 1,
            generator: h.to_string(),
            code: CodeDocument::from_generators(params, &[h]),
            rank: rank(code),
            log_size: code.dim(),
            distance,
            reference: reference.as_ref().and_then(|r| catalogue::lookup(r, code)).map(str::to_string),
            zero: code.is_zero(),
        });
    }
    let nonzero_count = codes.iter().filter(|c| !c.is_zero()).count();
    let (surplus, missing) = match &reference {
        Some(r) => {
            let surplus =
                out.iter().filter(|c| !c.zero && c.reference.is_none()).map(|c| c.generator.clone()).collect();
            let missing = r.iter().filter(|(_, rc)| !codes.contains(rc)).map(|(label, _)| label.clone()).collect();
            (Some(surplus), Some(missing))
        }
        None => (None, None),
    };
    Ok(EnumerationReport { p: params.p(), k, n, codes: out, nonzero_count, surplus, missing })
}

impl EnumerationReport {
    pub fn render_text(&self) -> String {
        let mut s = format!("cyclic codes of length {} over Z_{}[u]/(u^{})\n", self.n, self.p, self.k);
        for c in &self.codes {
            let d = match (c.zero, c.distance) {
                (true, _) => "-".to_string(),
                (false, Some(d)) => d.to_string(),
                (false, None) => "?".to_string(),
            };
            let tag = match (&c.reference, &self.surplus, c.zero) {
                (_, _, true) => "  [zero code]".to_string(),
                (Some(label), _, _) => format!("  [listed {label}]"),
                (None, Some(_), _) => "  [surplus]".to_string(),
                (None, None, _) => String::new(),
            };
            let _ = writeln!(
                s,
                "{:>4}  rank {:>2}  log|C| {:>3}  d {:>2}  <{}>{tag}",
                c.index, c.rank, c.log_size, d, c.generator
            );
        }
        match (&self.surplus, &self.missing) {
            (Some(surplus), Some(missing)) => {
                let listed = self.nonzero_count - surplus.len();
                let _ = writeln!(
                    s,
                    "{} nonzero codes ({listed} in the reference list, {} surplus, {} reference entries missing)",
                    self.nonzero_count,
                    surplus.len(),
                    missing.len()
                );
            }
            _ => {
                let _ = writeln!(s, "{} nonzero codes", self.nonzero_count);
            }
        }
        s
    }
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Text => text(value),
        Format::Json => json(value),
    }
}

fn failure(e: CliError) -> Outcome {
    Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() }
}

pub fn analyze_source(source: &CodeSource, mode: DistanceMode, budget: u64) -> CliResult<AnalysisReport> {
    analyze(&load_code(source)?, mode, budget)
}

pub fn verify(suite: crate::args::Suite, trials: usize, seed: u64, budget: u64) -> VerifyReport {
    run_suite(suite, trials, seed, budget)
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Factor { p, n, format } => match factor(p, n) {
            Ok(r) => Outcome::ok(render(format, &r, FactorReport::render_text)),
            Err(e) => failure(e),
        },
        Command::Analyze { source, distance_mode, budget, format } => {
            match analyze_source(&source, distance_mode, budget) {
                Ok(r) => Outcome::ok(render(format, &r, AnalysisReport::render_text)),
                Err(e) => failure(e),
            }
        }
        Command::Enumerate { p, k, n, include_zero, budget, format } => {
            match enumerate(p, k, n, include_zero, budget) {
                Ok(r) => Outcome::ok(render(format, &r, EnumerationReport::render_text)),
                Err(e) => failure(e),
            }
        }
        Command::Verify { suite, trials, seed, budget, format } => {
            let report = verify(suite, trials, seed, budget);
            let code = if report.all_pass() { EXIT_OK } else { EXIT_PROPERTY_FAILURE };
            Outcome { stdout: render(format, &report, VerifyReport::render_text), stderr: String::new(), code }
        }
    }
}

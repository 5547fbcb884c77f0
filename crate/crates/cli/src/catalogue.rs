//! The reference list of nonzero cyclic codes of length 5 over
//! `Z_3[u]/(u^4)`, with `g1 = x - 1` and `g2 = x^4 + x^3 + x^2 + x + 1`.
//!
//! Entries are kept as generator strings and parsed like user input.

use rkcodes::{CyclicCode, PrimeParams};

use crate::error::CliResult;
use crate::grammar::parse_rk_poly;

pub const CATALOGUE_PARAMS: (u64, usize, usize) = (3, 4, 5);

const G1: &str = "x - 1";
const G2: &str = "x^4 + x^3 + x^2 + x + 1";

fn u_times(j: usize, g: &str) -> String {
    let mut layers = vec!["0"; j];
    layers.push(g);
    layers.join("; ")
}

/// `(label, generators)` for each listed code.
pub fn reference_entries() -> Vec<(String, Vec<String>)> {
    let mut out = Vec::new();
    let single = |label: &str, j: usize, g: &str| (label.to_string(), vec![u_times(j, g)]);
    out.push(single("<1>", 0, "1"));
    out.push(single("<g1>", 0, G1));
    out.push(single("<g2>", 0, G2));
    for j in 1..4 {
        let u = if j == 1 { "u".to_string() } else { format!("u^{j}") };
        out.push(single(&format!("<{u}>"), j, "1"));
        out.push(single(&format!("<{u} g1>"), j, G1));
        out.push(single(&format!("<{u} g2>"), j, G2));
    }
    for j in 1..4 {
        let u = if j == 1 { "u".to_string() } else { format!("u^{j}") };
        for (name, g) in [("g1", G1), ("g2", G2)] {
            out.push((format!("<{name}, {u}>"), vec![g.to_string(), u_times(j, "1")]));
        }
    }
    for (name, g) in [("g1", G1), ("g2", G2)] {
        out.push((format!("<u {name}, u^2>"), vec![u_times(1, g), u_times(2, "1")]));
    }
    for (name, g) in [("g1", G1), ("g2", G2)] {
        out.push((format!("<u^2 {name}, u^3>"), vec![u_times(2, g), u_times(3, "1")]));
    }
    out
}

pub fn catalogue_params() -> PrimeParams {
    let (p, k, n) = CATALOGUE_PARAMS;
    PrimeParams::new(p, k, n).expect("valid parameters")
}

pub fn is_catalogue_params(params: PrimeParams) -> bool {
    (params.p() as u64, params.k(), params.n()) == CATALOGUE_PARAMS
}

/// Parsed reference codes with their labels.
pub fn reference_codes() -> CliResult<Vec<(String, CyclicCode)>> {
    let params = catalogue_params();
    reference_entries()
        .into_iter()
        .map(|(label, gens)| {
            let polys = gens.iter().map(|g| parse_rk_poly(g, params)).collect::<CliResult<Vec<_>>>()?;
            Ok((label, CyclicCode::from_generators(params, polys)?))
        })
        .collect()
}

/// Label of the reference entry equal to `code`, if any.
pub fn lookup<'a>(reference: &'a [(String, CyclicCode)], code: &CyclicCode) -> Option<&'a str> {
    reference.iter().find(|(_, c)| c == code).map(|(l, _)| l.as_str())
}

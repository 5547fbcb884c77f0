use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "rkcodes", version, about = "Cyclic codes over Z_p[u]/(u^k)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistanceMode {
    Auto,
    ClosedForm,
    Torsion,
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Generators,
    Rank,
    Distance,
    Dual,
    All,
}

/// `N` or `2^N`.
pub fn parse_budget(s: &str) -> Result<u64, String> {
    let s = s.trim();
    if let Some(exp) = s.strip_prefix("2^") {
        let e: u32 = exp.parse().map_err(|_| format!("bad exponent in budget {s:?}"))?;
        return 1u64.checked_shl(e).filter(|_| e < 64).ok_or_else(|| format!("budget 2^{e} too large"));
    }
    s.parse().map_err(|_| format!("budget must be an integer or 2^N, got {s:?}"))
}

#[derive(Debug, Clone, clap::Args)]
pub struct CodeSource {
    /// JSON code document
    #[arg(long, conflicts_with_all = ["p", "k", "n", "generator"])]
    pub code_file: Option<PathBuf>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Generator as `;`-separated u-layers, e.g. "x^2+1; 1" (repeatable)
    #[arg(long = "gen", value_name = "POLY")]
    pub generator: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor x^n - 1 over F_p
    Factor {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tower, shape, rank, spanning set, distance and dual of one code
    Analyze {
        #[command(flatten)]
        source: CodeSource,
        #[arg(long, value_enum, default_value_t = DistanceMode::Auto)]
        distance_mode: DistanceMode,
        #[arg(long, value_parser = parse_budget, default_value = "2^24")]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Every cyclic code of length n over R_k when gcd(n, p) = 1
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        include_zero: bool,
        #[arg(long, value_parser = parse_budget, default_value = "2^24")]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run property suites against exhaustive oracles
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse_budget, default_value = "2^24")]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

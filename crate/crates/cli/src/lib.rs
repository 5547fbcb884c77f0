//! Command-line front end for the `rkcodes` library: factor `x^n - 1`,
//! analyze a code, enumerate coprime-length codes, and run property suites.

pub mod args;
pub mod catalogue;
pub mod commands;
pub mod error;
pub mod grammar;
pub mod report;
pub mod sample;
pub mod verify;

pub use args::Cli;
pub use commands::{run, Outcome};

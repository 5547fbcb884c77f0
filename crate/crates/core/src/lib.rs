//! Cyclic codes over the finite chain rings `R_k = F_p[u]/(u^k)`.
//!
//! A cyclic code of length `n` over `R_k` is an ideal of `R_k[x]/(x^n - 1)`.
//! This crate builds such codes from generators, keeps a canonical `F_p`
//! echelon basis of each one, and derives their generator towers, ranks,
//! minimal spanning sets, duals, and minimum Hamming distances. Every
//! structural shortcut has a brute-force counterpart that it can be checked
//! against.

pub mod chainring;
pub mod code;
pub mod distance;
pub mod error;
pub mod gfp;
pub mod linalg;
pub mod structure;
pub mod weight;

pub use chainring::{RkElem, RkPoly};
pub use code::{CodeDocument, CyclicCode, TorsionTower};
pub use error::{Error, Result};
pub use gfp::{Degree, FpPoly, PrimeParams};
pub use structure::{CanonicalForm, ShapeTag};

//! Exhaustive minimum Hamming weight of an `F_p`-linear code.
//!
//! Codewords are visited in modular p-ary Gray order: between consecutive
//! states exactly one coefficient moves by +1, so each step adds one basis row
//! and the weight is maintained incrementally. The top coefficients are fixed
//! per task and the tasks run on the rayon pool; the minimum is independent of
//! how the work is split.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gfp::{add_mod, mul_mod};

/// Default codeword budget for brute-force searches.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// Number of codewords `p^dim`, saturating.
pub fn codeword_count(p: u32, dim: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..dim {
        acc = acc.saturating_mul(p as u128);
    }
    acc
}

pub fn check_budget(p: u32, dim: usize, budget: u64) -> Result<()> {
    let required = codeword_count(p, dim);
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

type SparseRow = Vec<(usize, u32)>;

struct Search {
    p: u32,
    ncols: usize,
    block: usize,
    rows: Vec<SparseRow>,
}

struct State {
    v: Vec<u32>,
    block_nz: Vec<u16>,
    weight: usize,
}

impl State {
    fn new(ncols: usize, block: usize) -> Self {
        Self { v: vec![0; ncols], block_nz: vec![0; ncols / block], weight: 0 }
    }

    #[inline]
    fn add_row(&mut self, row: &[(usize, u32)], times: u32, p: u32, block: usize) {
        for &(col, val) in row {
            let old = self.v[col];
            let new = add_mod(old, mul_mod(val, times, p), p);
            self.v[col] = new;
            let b = col / block;
            if old == 0 && new != 0 {
                if self.block_nz[b] == 0 {
                    self.weight += 1;
                }
                self.block_nz[b] += 1;
            } else if old != 0 && new == 0 {
                self.block_nz[b] -= 1;
                if self.block_nz[b] == 0 {
                    self.weight -= 1;
                }
            }
        }
    }
}

impl Search {
    /// Minimum weight over `prefix * top_rows + span(low_rows)`, skipping the
    /// zero word when the prefix is zero.
    fn run_prefix(&self, low: usize, prefix: u64, best: &AtomicUsize) -> usize {
        let p = self.p;
        let mut st = State::new(self.ncols, self.block);
        let mut rest = prefix;
        for row in &self.rows[low..] {
            let digit = (rest % p as u64) as u32;
            rest /= p as u64;
            if digit != 0 {
                st.add_row(row, digit, p, self.block);
            }
        }
        let mut local = usize::MAX;
        if prefix != 0 {
            local = st.weight;
        }
        let mut counter = vec![0u32; low];
        'steps: loop {
            if local <= 1 || best.load(Ordering::Relaxed) <= 1 {
                break;
            }
            // increment the odometer; the digit where the carry stops is the
            // Gray digit that moves
            let mut j = 0;
            loop {
                if j == low {
                    break 'steps;
                }
                counter[j] += 1;
                if counter[j] == p {
                    counter[j] = 0;
                    j += 1;
                } else {
                    break;
                }
            }
            st.add_row(&self.rows[j], 1, p, self.block);
            if st.weight < local && st.weight > 0 {
                local = st.weight;
            }
        }
        best.fetch_min(local, Ordering::Relaxed);
        local
    }
}

/// Minimum number of nonzero blocks over all nonzero combinations of `basis`.
///
/// Columns are grouped into consecutive blocks of `block` entries; a block
/// counts as one coordinate if any entry is nonzero. The rows must be linearly
/// independent (an echelon basis).
pub fn min_block_weight(p: u32, basis: &[Vec<u32>], block: usize, budget: u64) -> Result<usize> {
    let dim = basis.len();
    if dim == 0 {
        return Err(Error::ZeroCode);
    }
    check_budget(p, dim, budget)?;
    let ncols = basis[0].len();
    assert!(block > 0 && ncols.is_multiple_of(block), "block size must divide the width");
    let rows: Vec<SparseRow> =
        basis.iter().map(|r| r.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect()).collect();
    let search = Search { p, ncols, block, rows };

    // fix enough top coefficients to give the pool a few hundred tasks
    let mut top = 0usize;
    while top < dim && codeword_count(p, top + 1) <= 512 {
        top += 1;
    }
    if dim - top < 4 {
        top = 0;
    }
    let low = dim - top;
    let tasks = codeword_count(p, top) as u64;
    let best = AtomicUsize::new(usize::MAX);
    let min =
        (0..tasks).into_par_iter().map(|prefix| search.run_prefix(low, prefix, &best)).min().unwrap_or(usize::MAX);
    let overall = min.min(best.load(Ordering::Relaxed));
    debug_assert!(overall != usize::MAX);
    Ok(overall)
}

//! Reduced row-echelon forms over `F_p`.
//!
//! Pivots are the first nonzero column of each row, scaled to one, with every
//! other entry of a pivot column cleared. Rows are kept sorted by pivot, so
//! two echelons span the same space iff their rows are identical.

use crate::gfp::{inv_mod, mul_mod, neg_mod, sub_mod};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Echelon {
    p: u32,
    ncols: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

/// `dst -= c * src` over `F_p`.
#[inline]
fn axpy(dst: &mut [u32], c: u32, src: &[u32], p: u32) {
    if c == 0 {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        if s != 0 {
            *d = sub_mod(*d, mul_mod(c, s, p), p);
        }
    }
}

impl Echelon {
    pub fn empty(p: u32, ncols: usize) -> Self {
        Self { p, ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows<I>(p: u32, ncols: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut e = Self::empty(p, ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Clears every pivot column of `v`; the remainder is zero iff `v` lies
    /// in the row space.
    pub fn reduce(&self, v: &mut [u32]) {
        debug_assert_eq!(v.len(), self.ncols);
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                axpy(v, c, row, self.p);
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&c| c == 0)
    }

    /// Adds `v` to the spanning set. Returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        assert_eq!(v.len(), self.ncols, "row width mismatch");
        let p = self.p;
        for c in v.iter_mut() {
            *c %= p;
        }
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = inv_mod(v[pc], p).expect("nonzero pivot");
        for c in v.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                axpy(row, c, &v, p);
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }

    /// Whether `self` and `other` have the same row space.
    pub fn same_space(&self, other: &Self) -> bool {
        self.p == other.p && self.ncols == other.ncols && self.rows == other.rows
    }

    /// Whether the row space of `other` lies inside that of `self`.
    pub fn contains_space(&self, other: &Self) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Basis of `{ x : row . x = 0 for every row }`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let mut is_pivot = vec![false; self.ncols];
        for &pc in &self.pivots {
            is_pivot[pc] = true;
        }
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![0u32; self.ncols];
                x[f] = 1;
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    x[pc] = neg_mod(row[f], self.p);
                }
                x
            })
            .collect()
    }

    /// Coordinates of `v` in terms of the rows, if `v` lies in the span.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let coords: Vec<u32> = self.pivots.iter().map(|&pc| v[pc]).collect();
        let mut w = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&coords) {
            axpy(&mut w, c, row, self.p);
        }
        w.iter().all(|&c| c == 0).then_some(coords)
    }
}

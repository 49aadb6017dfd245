//! Independent ℤ/2 homology by Gaussian elimination on boundary matrices.
//!
//! This module does not share any code path with the AT-model algorithms;
//! it is the reference every AT-model is compared against.

use std::collections::HashMap;
use std::fmt;

use crate::chain::CellId;
use crate::complex::GradedChainComplex;
use crate::error::Result;

/// Matrices with this many rows or columns (or more) use sparse elimination.
pub const DENSE_LIMIT: usize = 4096;

/// Betti numbers b₀..b₃ over ℤ/2.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Betti(pub [usize; 4]);

impl Betti {
    pub fn b(&self, q: usize) -> usize {
        self.0[q]
    }

    /// (b₀, b₁, b₂).
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for Betti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])?;
        if self.0[3] != 0 {
            write!(f, " b3={}", self.0[3])?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    /// Dense below [`DENSE_LIMIT`], sparse above.
    Auto,
    Dense,
    Sparse,
}

/// Betti numbers of `cx`: bᵩ = dim ker ∂ᵩ − rank ∂ᵩ₊₁.
///
/// Fails with an integrity error when ∂∂ ≠ 0.
pub fn betti_oracle(cx: &GradedChainComplex) -> Result<Betti> {
    betti_with(cx, RankMethod::Auto)
}

pub fn betti_with(cx: &GradedChainComplex, method: RankMethod) -> Result<Betti> {
    cx.check_boundary_squared()?;
    let by_dim: Vec<Vec<CellId>> = (0..4).map(|q| cx.cells_of_dim(q)).collect();
    // rank[q] = rank of ∂_q : C_q → C_{q-1}
    let mut rank = [0usize; 5];
    for q in 1..4 {
        let rows: HashMap<CellId, usize> = by_dim[q - 1]
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();
        let columns: Vec<Vec<usize>> = by_dim[q]
            .iter()
            .map(|&c| {
                let mut col: Vec<usize> = cx.boundary(c).iter().map(|f| rows[&f]).collect();
                col.sort_unstable();
                col
            })
            .collect();
        rank[q] = column_rank(&columns, by_dim[q - 1].len(), method);
    }
    let mut b = [0usize; 4];
    for q in 0..4 {
        b[q] = by_dim[q].len() - rank[q] - rank[q + 1];
    }
    Ok(Betti(b))
}

/// Rank over ℤ/2 of the matrix whose columns are given as sorted row-index lists.
pub fn column_rank(columns: &[Vec<usize>], n_rows: usize, method: RankMethod) -> usize {
    let dense = match method {
        RankMethod::Dense => true,
        RankMethod::Sparse => false,
        RankMethod::Auto => n_rows < DENSE_LIMIT && columns.len() < DENSE_LIMIT,
    };
    if dense {
        dense_rank(columns, n_rows)
    } else {
        sparse_rank(columns)
    }
}

fn dense_rank(columns: &[Vec<usize>], n_rows: usize) -> usize {
    let words = n_rows.div_ceil(64).max(1);
    // basis[p] holds a reduced vector whose highest set bit is p
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; n_rows];
    let mut rank = 0;
    for col in columns {
        let mut v = vec![0u64; words];
        for &r in col {
            v[r / 64] ^= 1u64 << (r % 64);
        }
        while let Some(p) = highest_bit(&v) {
            match &basis[p] {
                Some(b) => {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x ^= y;
                    }
                }
                None => {
                    basis[p] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn highest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

fn sparse_rank(columns: &[Vec<usize>]) -> usize {
    let mut pivots: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut rank = 0;
    for col in columns {
        let mut col = col.clone();
        while let Some(&low) = col.last() {
            match pivots.get(&low) {
                Some(p) => col = xor_sorted(&col, p),
                None => {
                    pivots.insert(low, col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn xor_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

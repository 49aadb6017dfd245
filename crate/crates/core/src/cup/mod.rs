//! Cup products of 1-dimensional cohomology classes, read off an AT-model.
//!
//! For generators α₁, α₂ of H₁ the product is the H₂-chain
//! Σ_k (α₁f ⌣ α₂f)(g(β_k)) β_k over the 2-generators β_k. On a square
//! (vᵢ,vⱼ,vₖ,vₗ), vᵢ<vⱼ<vₖ<vₗ, the cubical cochain is
//!
//! ```text
//! ⟨α₁,f(vᵢ,vⱼ)⟩⟨α₂,f(vⱼ,vₗ)⟩ + ⟨α₁,f(vᵢ,vₖ)⟩⟨α₂,f(vₖ,vₗ)⟩
//! ```
//!
//! and on a triangle (vᵢ,vⱼ,vₖ) the simplicial one is
//! ⟨α₁,f(vᵢ,vⱼ)⟩⟨α₂,f(vⱼ,vₖ)⟩.

mod equivalence;
mod simplicial;

use std::fmt;

use crate::atmodel::ATModel;
use crate::chain::{CellId, Chain};
use crate::complex::GradedChainComplex;
use crate::error::{Error, Result};
use crate::homology::{column_rank, RankMethod};

pub use equivalence::{
    equivalence_check_2d, equivalence_check_rank, Equivalence2d, Mismatch, RankEquivalence,
};
pub use simplicial::{triangulate_kq, Simplex, SimplicialComplex};

/// Which cochain formula to evaluate on 2-cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CupKind {
    Cubical,
    Simplicial,
}

fn edge_between(cx: &GradedChainComplex, cell: CellId, a: CellId, b: CellId) -> Result<CellId> {
    let want = Chain::from_cells(0, [a, b]);
    cx.boundary(cell)
        .iter()
        .find(|&e| cx.boundary(e) == &want)
        .ok_or_else(|| {
            Error::usage(format!(
                "2-cell {cell} has no edge between {a} and {b} (vertex ordering property violated)"
            ))
        })
}

/// Whether the generator `alpha` appears in f(edge).
fn hits(m: &ATModel, alpha: CellId, edge: CellId) -> bool {
    m.f_map().get(edge).is_some_and(|v| v.contains(alpha))
}

/// Value of α₁f ⌣ α₂f on one 2-cell.
pub fn cochain_on_cell(
    cx: &GradedChainComplex,
    m: &ATModel,
    kind: CupKind,
    a1: CellId,
    a2: CellId,
    cell: CellId,
) -> Result<bool> {
    let v = cx.vertices(cell);
    match kind {
        CupKind::Cubical => {
            if v.len() != 4 || cx.boundary(cell).len() != 4 {
                return Err(Error::usage(format!("2-cell {cell} is not a square")));
            }
            let ij = edge_between(cx, cell, v[0], v[1])?;
            let ik = edge_between(cx, cell, v[0], v[2])?;
            let jl = edge_between(cx, cell, v[1], v[3])?;
            let kl = edge_between(cx, cell, v[2], v[3])?;
            let first = hits(m, a1, ij) && hits(m, a2, jl);
            let second = hits(m, a1, ik) && hits(m, a2, kl);
            Ok(first ^ second)
        }
        CupKind::Simplicial => {
            if v.len() != 3 || cx.boundary(cell).len() != 3 {
                return Err(Error::usage(format!("2-cell {cell} is not a triangle")));
            }
            let ij = edge_between(cx, cell, v[0], v[1])?;
            let jk = edge_between(cx, cell, v[1], v[2])?;
            Ok(hits(m, a1, ij) && hits(m, a2, jk))
        }
    }
}

/// α₁f ⌣ α₂f extended linearly to a 2-chain.
pub fn cochain_on_chain(
    cx: &GradedChainComplex,
    m: &ATModel,
    kind: CupKind,
    a1: CellId,
    a2: CellId,
    chain: &Chain,
) -> Result<bool> {
    if chain.dim() != 2 {
        return Err(Error::usage("cup cochains are evaluated on 2-chains"));
    }
    let mut acc = false;
    for c in chain.iter() {
        acc ^= cochain_on_cell(cx, m, kind, a1, a2, c)?;
    }
    Ok(acc)
}

fn check_h1(cx: &GradedChainComplex, m: &ATModel, a: CellId) -> Result<()> {
    if cx.try_dim(a)? != 1 || !m.is_generator(a) {
        return Err(Error::usage(format!(
            "{a} is not a 1-dimensional generator"
        )));
    }
    Ok(())
}

/// The product α₁ ⌣ α₂ as a chain of 2-generators.
pub fn cup_product(
    cx: &GradedChainComplex,
    m: &ATModel,
    kind: CupKind,
    a1: CellId,
    a2: CellId,
) -> Result<Chain> {
    check_h1(cx, m, a1)?;
    check_h1(cx, m, a2)?;
    let mut out = Vec::new();
    for beta in m.generators(2) {
        if cochain_on_chain(cx, m, kind, a1, a2, &m.g(beta, 2))? {
            out.push(beta);
        }
    }
    Ok(Chain::from_cells(2, out))
}

/// Cubical cup product. Every square met while evaluating on the
/// representative 2-cycles must satisfy the vertex-ordering property,
/// otherwise a usage error is returned.
pub fn cup_cubical(cx: &GradedChainComplex, m: &ATModel, a1: CellId, a2: CellId) -> Result<Chain> {
    cup_product(cx, m, CupKind::Cubical, a1, a2)
}

/// Simplicial cup product on a complex whose 2-cells are triangles.
pub fn cup_simplicial(
    cx: &GradedChainComplex,
    m: &ATModel,
    a1: CellId,
    a2: CellId,
) -> Result<Chain> {
    cup_product(cx, m, CupKind::Simplicial, a1, a2)
}

/// All products of pairs of 1-generators, as a 0/1 matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupMatrix {
    /// 1-generators in increasing id order.
    pub h1: Vec<CellId>,
    /// 2-generators in increasing id order; these index the columns.
    pub h2: Vec<CellId>,
    /// Unordered pairs (i ≤ j) of 1-generators; these index the rows.
    pub rows: Vec<(CellId, CellId)>,
    /// `entries[r][c]` is the coefficient of `h2[c]` in the product of `rows[r]`.
    pub entries: Vec<Vec<bool>>,
    pub rank: usize,
    /// Pairs whose product changed when the arguments were swapped.
    pub asymmetries: Vec<(CellId, CellId)>,
}

impl CupMatrix {
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(|&b| !b))
    }

    /// The product of a pair as a chain of 2-generators.
    pub fn product(&self, a1: CellId, a2: CellId) -> Option<Chain> {
        let key = (a1.min(a2), a1.max(a2));
        let r = self.rows.iter().position(|&p| p == key)?;
        Some(Chain::from_cells(
            2,
            self.h2
                .iter()
                .zip(&self.entries[r])
                .filter(|(_, &b)| b)
                .map(|(&c, _)| c),
        ))
    }

    /// Rows with at least one nonzero entry.
    pub fn nonzero_rows(&self) -> Vec<(CellId, CellId)> {
        self.rows
            .iter()
            .zip(&self.entries)
            .filter(|(_, e)| e.iter().any(|&b| b))
            .map(|(&p, _)| p)
            .collect()
    }
}

impl fmt::Display for CupMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>16}", "")?;
        for b in &self.h2 {
            write!(f, " {:>8}", b.to_string())?;
        }
        writeln!(f)?;
        for ((a, b), row) in self.rows.iter().zip(&self.entries) {
            write!(f, "{:>16}", format!("{a} ⌣ {b}"))?;
            for &e in row {
                write!(f, " {:>8}", u8::from(e))?;
            }
            writeln!(f)?;
        }
        write!(f, "rank {}", self.rank)
    }
}

/// The cup-product matrix of an AT-model.
pub fn cup_matrix(cx: &GradedChainComplex, m: &ATModel, kind: CupKind) -> Result<CupMatrix> {
    let h1: Vec<CellId> = m.generators(1).collect();
    let h2: Vec<CellId> = m.generators(2).collect();
    let reps: Vec<Chain> = h2.iter().map(|&b| m.g(b, 2)).collect();
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    let mut asymmetries = Vec::new();
    for (i, &a) in h1.iter().enumerate() {
        for &b in &h1[i..] {
            let row = reps
                .iter()
                .map(|g| cochain_on_chain(cx, m, kind, a, b, g))
                .collect::<Result<Vec<bool>>>()?;
            if a != b {
                let swapped = reps
                    .iter()
                    .map(|g| cochain_on_chain(cx, m, kind, b, a, g))
                    .collect::<Result<Vec<bool>>>()?;
                if swapped != row {
                    asymmetries.push((a, b));
                }
            }
            rows.push((a, b));
            entries.push(row);
        }
    }
    let as_columns: Vec<Vec<usize>> = entries
        .iter()
        .map(|r: &Vec<bool>| {
            r.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let rank = column_rank(&as_columns, h2.len(), RankMethod::Auto);
    Ok(CupMatrix {
        h1,
        h2,
        rows,
        entries,
        rank,
        asymmetries,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The cup-product ranks differ, so the spaces are not homotopy equivalent.
    NotHomotopyEquivalent,
    /// Equal ranks: this invariant cannot tell the spaces apart.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NotHomotopyEquivalent => "not homotopy equivalent",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

pub fn discriminate(a: &CupMatrix, b: &CupMatrix) -> Verdict {
    if a.rank != b.rank {
        Verdict::NotHomotopyEquivalent
    } else {
        Verdict::Inconclusive
    }
}

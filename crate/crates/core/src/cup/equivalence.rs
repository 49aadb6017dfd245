//! Comparing the cubical and simplicial cup products.

use std::collections::BTreeMap;

use super::{cochain_on_chain, cup_matrix, triangulate_kq, CupKind, CupMatrix};
use crate::atmodel::{
    atmodel_incremental, subdivide_atmodel, verify_atmodel, ATModel, AxiomReport, Subdivision,
};
use crate::chain::{CellId, Chain};
use crate::complex::GradedChainComplex;
use crate::error::{Error, Result};
use crate::homology::{betti_oracle, Betti};

/// A triple (α₁, α₂, β) on which the two products disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub a1: CellId,
    pub a2: CellId,
    pub beta: CellId,
    pub cubical: bool,
    pub simplicial: bool,
}

#[derive(Clone, Debug)]
pub struct Equivalence2d {
    /// The fully subdivided complex, with every square cut into two triangles.
    pub triangulated: GradedChainComplex,
    pub model: ATModel,
    /// Image of each 2-generator of the cubical model.
    pub h: BTreeMap<CellId, CellId>,
    pub subdivisions: usize,
    /// Subdivision steps (1-based) whose transferred model failed an axiom.
    pub invalid_steps: Vec<(usize, AxiomReport)>,
    pub comparisons: usize,
    pub mismatches: Vec<Mismatch>,
}

impl Equivalence2d {
    pub fn holds(&self) -> bool {
        self.invalid_steps.is_empty() && self.mismatches.is_empty()
    }
}

/// Cuts every square (vᵢ,vⱼ,vₖ,vₗ) of a 2-dimensional cubical complex along
/// (vᵢ,vₗ), transferring the AT-model `m` at each step, then compares the
/// cubical products on `q` with the simplicial products on the result for
/// every pair of 1-generators and every 2-generator. With `verify_steps`
/// the axioms are checked after every subdivision.
pub fn equivalence_check_2d(
    q: &GradedChainComplex,
    m: &ATModel,
    verify_steps: bool,
) -> Result<Equivalence2d> {
    if q.max_dim().unwrap_or(0) > 2 {
        return Err(Error::usage(
            "the subdivision comparison needs a complex of dimension ≤ 2",
        ));
    }
    let mut p = q.clone();
    let mut model = m.clone();
    let mut h: BTreeMap<CellId, CellId> = m.generators(2).map(|b| (b, b)).collect();
    let mut invalid_steps = Vec::new();
    let squares = q.cells_of_dim(2);
    for (step, &s) in squares.iter().enumerate() {
        let v = q.vertices(s);
        if v.len() != 4 {
            return Err(Error::usage(format!("2-cell {s} is not a square")));
        }
        let ij = super::edge_between(q, s, v[0], v[1])?;
        let jl = super::edge_between(q, s, v[1], v[3])?;
        let split = Subdivision {
            alpha: s,
            first_part: Chain::from_cells(1, [ij, jl]),
            cut_boundary: Chain::from_cells(0, [v[0], v[3]]),
        };
        let (next, next_model, cells) = subdivide_atmodel(&p, &model, &split)?;
        if let Some(img) = h.get_mut(&s) {
            *img = cells.first;
        }
        if verify_steps {
            let report = verify_atmodel(&next, &next_model);
            if !report.is_valid() {
                invalid_steps.push((step + 1, report));
            }
        }
        p = next;
        model = next_model;
    }
    let h1: Vec<CellId> = m.generators(1).collect();
    let mut comparisons = 0;
    let mut mismatches = Vec::new();
    for &a1 in &h1 {
        for &a2 in &h1 {
            for (&beta, &image) in &h {
                let cubical = cochain_on_chain(q, m, CupKind::Cubical, a1, a2, &m.g(beta, 2))?;
                let simplicial =
                    cochain_on_chain(&p, &model, CupKind::Simplicial, a1, a2, &model.g(image, 2))?;
                comparisons += 1;
                if cubical != simplicial {
                    mismatches.push(Mismatch {
                        a1,
                        a2,
                        beta,
                        cubical,
                        simplicial,
                    });
                }
            }
        }
    }
    Ok(Equivalence2d {
        triangulated: p,
        model,
        h,
        subdivisions: squares.len(),
        invalid_steps,
        comparisons,
        mismatches,
    })
}

/// Cup-product ranks of a cubical complex and of its triangulation, each
/// from its own AT-model.
#[derive(Clone, Debug)]
pub struct RankEquivalence {
    pub cubical: CupMatrix,
    pub simplicial: CupMatrix,
    pub betti_cubical: Betti,
    pub betti_simplicial: Betti,
    pub generators_cubical: [usize; 4],
    pub generators_simplicial: [usize; 4],
    pub simplices: usize,
}

impl RankEquivalence {
    pub fn holds(&self) -> bool {
        self.cubical.rank == self.simplicial.rank
            && self.betti_cubical == self.betti_simplicial
            && self.generators_cubical == self.betti_cubical.0
            && self.generators_simplicial == self.betti_simplicial.0
    }
}

pub fn equivalence_check_rank(q: &GradedChainComplex) -> Result<RankEquivalence> {
    let cubical_model = atmodel_incremental(q)?;
    let cubical = cup_matrix(q, &cubical_model, CupKind::Cubical)?;
    let kq = triangulate_kq(q)?;
    let simplicial_model = atmodel_incremental(kq.chain())?;
    let simplicial = cup_matrix(kq.chain(), &simplicial_model, CupKind::Simplicial)?;
    Ok(RankEquivalence {
        cubical,
        simplicial,
        betti_cubical: betti_oracle(q)?,
        betti_simplicial: betti_oracle(kq.chain())?,
        generators_cubical: cubical_model.generator_counts(),
        generators_simplicial: simplicial_model.generator_counts(),
        simplices: kq.chain().len(),
    })
}

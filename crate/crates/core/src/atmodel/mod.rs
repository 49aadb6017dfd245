//! AT-models: a chain contraction (f, g, φ) of a complex onto a set H of
//! homology generators.
//!
//! For a complex with boundary ∂ an AT-model satisfies
//!
//! ```text
//! f g = id     φ∂ + ∂φ = id + g f     f∂ = 0     ∂g = 0
//! φφ = 0       fφ = 0                 φg = 0
//! ```
//!
//! `f` sends a cell to a chain of generators, `g` sends a generator to a
//! representative cycle, and `φ` (degree +1) is the chain homotopy.

mod boundary;
mod engine;
mod extend;
mod reduction;
mod subdivide;

use std::collections::BTreeSet;
use std::fmt;

use crate::chain::{CellId, Chain, ChainMap, Dim};
use crate::complex::GradedChainComplex;
use crate::error::{Error, Result};

pub use boundary::{atmodel_boundary, SpanningForest};
pub use engine::{atmodel_incremental, atmodel_incremental_with, KillRule};
pub use extend::{atmodel_extend, Extension};
pub use reduction::{face_reduction, FaceReduction};
pub use subdivide::{subdivide_atmodel, Subdivision, SubdivisionCells};

/// Generators with the three maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ATModel {
    generators: [BTreeSet<CellId>; 4],
    f: ChainMap,
    g: ChainMap,
    phi: ChainMap,
}

impl Default for ATModel {
    fn default() -> Self {
        ATModel {
            generators: Default::default(),
            f: ChainMap::new(0),
            g: ChainMap::new(0),
            phi: ChainMap::new(1),
        }
    }
}

impl ATModel {
    /// Assembles a model from explicit data. No axiom is checked; use
    /// [`verify_atmodel`] for that.
    pub fn from_parts(
        cx: &GradedChainComplex,
        generators: impl IntoIterator<Item = CellId>,
        f: ChainMap,
        g: ChainMap,
        phi: ChainMap,
    ) -> Result<Self> {
        if f.degree() != 0 || g.degree() != 0 || phi.degree() != 1 {
            return Err(Error::usage("f and g must have degree 0 and φ degree 1"));
        }
        let mut sets: [BTreeSet<CellId>; 4] = Default::default();
        for c in generators {
            let d = cx.try_dim(c)?;
            sets[d as usize].insert(c);
        }
        Ok(ATModel {
            generators: sets,
            f,
            g,
            phi,
        })
    }

    /// Generators of dimension `q`, in increasing id order.
    pub fn generators(&self, q: Dim) -> impl Iterator<Item = CellId> + '_ {
        self.generators
            .get(q as usize)
            .into_iter()
            .flat_map(|s| s.iter().copied())
    }

    pub fn all_generators(&self) -> impl Iterator<Item = CellId> + '_ {
        self.generators.iter().flat_map(|s| s.iter().copied())
    }

    pub fn is_generator(&self, cell: CellId) -> bool {
        self.generators.iter().any(|s| s.contains(&cell))
    }

    /// |H_q| for q = 0..=3.
    pub fn generator_counts(&self) -> [usize; 4] {
        [0, 1, 2, 3].map(|q| self.generators[q].len())
    }

    pub fn f_map(&self) -> &ChainMap {
        &self.f
    }

    pub fn g_map(&self) -> &ChainMap {
        &self.g
    }

    pub fn phi_map(&self) -> &ChainMap {
        &self.phi
    }

    /// f on a cell of dimension `dim`.
    pub fn f(&self, cell: CellId, dim: Dim) -> Chain {
        self.f.value(cell, dim)
    }

    /// φ on a cell of dimension `dim`.
    pub fn phi(&self, cell: CellId, dim: Dim) -> Chain {
        self.phi.value(cell, dim)
    }

    /// The representative cycle of a generator.
    pub fn g(&self, generator: CellId, dim: Dim) -> Chain {
        self.g.value(generator, dim)
    }

    pub(crate) fn g_map_mut(&mut self) -> &mut ChainMap {
        &mut self.g
    }

    pub(crate) fn into_parts(self) -> ([BTreeSet<CellId>; 4], ChainMap, ChainMap, ChainMap) {
        (self.generators, self.f, self.g, self.phi)
    }

    pub(crate) fn from_raw(
        generators: [BTreeSet<CellId>; 4],
        f: ChainMap,
        g: ChainMap,
        phi: ChainMap,
    ) -> Self {
        ATModel {
            generators,
            f,
            g,
            phi,
        }
    }
}

/// The identities checked by [`verify_atmodel`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// Every cell mentioned by the model exists with the right dimension.
    WellFormed,
    FG,
    Homotopy,
    FBoundary,
    BoundaryG,
    PhiPhi,
    FPhi,
    PhiG,
    /// f(a) = a and a ∈ g(a) for every generator a.
    Normalized,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::WellFormed,
        Axiom::FG,
        Axiom::Homotopy,
        Axiom::FBoundary,
        Axiom::BoundaryG,
        Axiom::PhiPhi,
        Axiom::FPhi,
        Axiom::PhiG,
        Axiom::Normalized,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Axiom::WellFormed => "well-formed",
            Axiom::FG => "fg = id",
            Axiom::Homotopy => "φ∂ + ∂φ = id + gf",
            Axiom::FBoundary => "f∂ = 0",
            Axiom::BoundaryG => "∂g = 0",
            Axiom::PhiPhi => "φφ = 0",
            Axiom::FPhi => "fφ = 0",
            Axiom::PhiG => "φg = 0",
            Axiom::Normalized => "f(a) = a, a ∈ g(a)",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// First cell (in increasing id order) where the identity fails.
    pub first_violation: Option<CellId>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Outcome of [`verify_atmodel`], one entry per [`Axiom`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn get(&self, axiom: Axiom) -> &AxiomCheck {
        self.checks
            .iter()
            .find(|c| c.axiom == axiom)
            .expect("every axiom is checked")
    }

    /// All seven identities hold and the model is well formed.
    pub fn is_valid(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.axiom != Axiom::Normalized)
            .all(AxiomCheck::passed)
    }

    /// Valid and additionally normalized.
    pub fn is_normalized(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match c.first_violation {
                None => writeln!(f, "  ok    {}", c.axiom)?,
                Some(cell) => writeln!(f, "  FAIL  {} (first at {cell})", c.axiom)?,
            }
        }
        Ok(())
    }
}

/// Checks every AT-model identity on every cell of `cx` and every
/// generator of `m`.
pub fn verify_atmodel(cx: &GradedChainComplex, m: &ATModel) -> AxiomReport {
    let mut first: [Option<CellId>; 9] = [None; 9];
    let mut flag = |axiom: Axiom, cell: CellId| {
        let slot = &mut first[axiom as usize];
        if slot.is_none_or(|c| cell < c) {
            *slot = Some(cell);
        }
    };

    let well_formed = well_formed_violation(cx, m);
    if let Some(cell) = well_formed {
        flag(Axiom::WellFormed, cell);
    } else {
        for gen in m.all_generators() {
            let q = cx.dim(gen);
            let g = m.g(gen, q);
            if m.f.apply(&g) != Chain::singleton(q, gen) {
                flag(Axiom::FG, gen);
            }
            if !cx.boundary_of(&g).is_zero() {
                flag(Axiom::BoundaryG, gen);
            }
            if !m.phi.apply(&g).is_zero() {
                flag(Axiom::PhiG, gen);
            }
            if m.f(gen, q) != Chain::singleton(q, gen) || !g.contains(gen) {
                flag(Axiom::Normalized, gen);
            }
        }
        for id in cx.ids() {
            let q = cx.dim(id);
            let bd = cx.boundary(id);
            let phi = m.phi(id, q);
            let mut lhs = m.phi.apply(bd);
            lhs.add_assign(&cx.boundary_of(&phi));
            let mut rhs = Chain::singleton(q, id);
            rhs.add_assign(&m.g.apply(&m.f(id, q)));
            if lhs != rhs {
                flag(Axiom::Homotopy, id);
            }
            if !m.f.apply(bd).is_zero() {
                flag(Axiom::FBoundary, id);
            }
            if !m.phi.apply(&phi).is_zero() {
                flag(Axiom::PhiPhi, id);
            }
            if !m.f.apply(&phi).is_zero() {
                flag(Axiom::FPhi, id);
            }
        }
    }
    AxiomReport {
        checks: Axiom::ALL
            .iter()
            .map(|&axiom| AxiomCheck {
                axiom,
                first_violation: first[axiom as usize],
            })
            .collect(),
    }
}

fn well_formed_violation(cx: &GradedChainComplex, m: &ATModel) -> Option<CellId> {
    let mut worst: Option<CellId> = None;
    let mut note = |c: CellId| {
        if worst.is_none_or(|w| c < w) {
            worst = Some(c);
        }
    };
    for (q, set) in m.generators.iter().enumerate() {
        for &gen in set {
            if cx.cell(gen).map(|c| c.dim()) != Some(q as Dim) {
                note(gen);
            }
        }
    }
    let check_map = |map: &ChainMap, keys_in_h: bool, note: &mut dyn FnMut(CellId)| {
        for (key, value) in map.iter() {
            let Some(cell) = cx.cell(key) else {
                note(key);
                continue;
            };
            if value.dim() != cell.dim() + map.degree()
                || (keys_in_h && !m.is_generator(key))
                || value
                    .iter()
                    .any(|v| cx.cell(v).map(|c| c.dim()) != Some(value.dim()))
            {
                note(key);
            }
        }
    };
    check_map(&m.f, false, &mut note);
    check_map(&m.g, true, &mut note);
    check_map(&m.phi, false, &mut note);
    for (key, value) in m.f.iter() {
        if value.iter().any(|v| !m.is_generator(v)) {
            note(key);
        }
    }
    worst
}

/// The cocycle σ* f of a generator σ: its value on a chain c is ⟨σ, f(c)⟩.
#[derive(Clone, Copy, Debug)]
pub struct CocycleEvaluator<'a> {
    generator: CellId,
    dim: Dim,
    model: &'a ATModel,
}

impl<'a> CocycleEvaluator<'a> {
    pub fn new(cx: &GradedChainComplex, model: &'a ATModel, generator: CellId) -> Result<Self> {
        if !model.is_generator(generator) {
            return Err(Error::usage(format!("{generator} is not a generator")));
        }
        Ok(CocycleEvaluator {
            generator,
            dim: cx.try_dim(generator)?,
            model,
        })
    }

    pub fn generator(&self) -> CellId {
        self.generator
    }

    /// Value on a single cell.
    pub fn on_cell(&self, cell: CellId) -> bool {
        self.model
            .f
            .get(cell)
            .is_some_and(|v| v.contains(self.generator))
    }

    pub fn eval(&self, c: &Chain) -> Result<bool> {
        if c.dim() != self.dim {
            return Err(Error::usage(format!(
                "cocycle of dimension {} evaluated on a {}-chain",
                self.dim,
                c.dim()
            )));
        }
        Ok(c.iter().filter(|&mu| self.on_cell(mu)).count() % 2 == 1)
    }
}

/// Σ_{μ ∈ c} ⟨σ, f(μ)⟩ mod 2.
pub fn cocycle_eval(
    cx: &GradedChainComplex,
    sigma: CellId,
    m: &ATModel,
    c: &Chain,
) -> Result<bool> {
    CocycleEvaluator::new(cx, m, sigma)?.eval(c)
}

//! The incremental AT-model algorithm: cells are added one at a time in a
//! filtration order, each either creating a new generator or killing one.

use std::collections::BTreeSet;

use super::ATModel;
use crate::chain::{CellId, Chain, ChainMap, Dim};
use crate::complex::GradedChainComplex;
use crate::error::Result;

/// Which generator of f∂(c) dies when a cell c is absorbed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum KillRule {
    /// The smallest cell id.
    Min,
    /// The largest cell id, i.e. the most recently created generator when
    /// cells are processed in (dimension, id) order.
    #[default]
    Youngest,
}

impl KillRule {
    fn pick(self, chain: &Chain) -> CellId {
        match self {
            KillRule::Min => chain.min_cell(),
            KillRule::Youngest => chain.cells().last().copied(),
        }
        .expect("nonzero chain")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Absorbed {
    Created,
    Killed(CellId),
}

/// Mutable AT-model under construction, indexed by cell id, with a reverse
/// index from generators to the cells whose f contains them.
pub(crate) struct Builder {
    dims: Vec<Dim>,
    f: Vec<Chain>,
    phi: Vec<Chain>,
    preimage: Vec<BTreeSet<CellId>>,
    pub(crate) generators: [BTreeSet<CellId>; 4],
}

impl Builder {
    pub(crate) fn new(cx: &GradedChainComplex) -> Self {
        let n = cx.id_bound();
        let mut dims = vec![-1; n];
        for id in cx.ids() {
            dims[id.index()] = cx.dim(id);
        }
        Builder {
            f: dims.iter().map(|&d| Chain::zero(d)).collect(),
            phi: dims.iter().map(|&d| Chain::zero(d + 1)).collect(),
            dims,
            preimage: vec![BTreeSet::new(); n],
            generators: Default::default(),
        }
    }

    /// Starts from an existing model on a subcomplex of `cx`.
    pub(crate) fn from_model(cx: &GradedChainComplex, m: &ATModel) -> Self {
        let mut b = Builder::new(cx);
        for (cell, v) in m.f_map().iter() {
            b.set_f(cell, v.clone());
        }
        for (cell, v) in m.phi_map().iter() {
            b.phi[cell.index()] = v.clone();
        }
        for gen in m.all_generators() {
            b.generators[cx.dim(gen) as usize].insert(gen);
        }
        b
    }

    pub(crate) fn phi(&self, cell: CellId) -> &Chain {
        &self.phi[cell.index()]
    }

    pub(crate) fn set_f(&mut self, cell: CellId, value: Chain) {
        let old = std::mem::replace(&mut self.f[cell.index()], value);
        for x in old.iter() {
            self.preimage[x.index()].remove(&cell);
        }
        for x in self.f[cell.index()].iter() {
            self.preimage[x.index()].insert(cell);
        }
    }

    fn add_f(&mut self, cell: CellId, delta: &Chain) {
        self.f[cell.index()].add_assign(delta);
        for x in delta.iter() {
            let pre = &mut self.preimage[x.index()];
            if !pre.remove(&cell) {
                pre.insert(cell);
            }
        }
    }

    pub(crate) fn set_phi(&mut self, cell: CellId, value: Chain) {
        self.phi[cell.index()] = value;
    }

    pub(crate) fn f_of(&self, chain: &Chain) -> Chain {
        let mut out = Chain::zero(chain.dim());
        for c in chain.iter() {
            out.add_assign(&self.f[c.index()]);
        }
        out
    }

    pub(crate) fn phi_of(&self, chain: &Chain) -> Chain {
        let mut out = Chain::zero(chain.dim() + 1);
        for c in chain.iter() {
            out.add_assign(&self.phi[c.index()]);
        }
        out
    }

    pub(crate) fn make_generator(&mut self, cell: CellId) {
        let d = self.dims[cell.index()];
        self.set_f(cell, Chain::singleton(d, cell));
        self.generators[d as usize].insert(cell);
    }

    /// Kills generator `a` using the nonzero chain `fb` = f∂(c).
    pub(crate) fn kill(&mut self, cx: &GradedChainComplex, c: CellId, a: CellId, fb: &Chain) {
        let mut w = self.phi_of(cx.boundary(c));
        w.toggle(c);
        let targets: Vec<CellId> = self.preimage[a.index()].iter().copied().collect();
        for b in targets {
            self.add_f(b, fb);
            self.phi[b.index()].add_assign(&w);
        }
        self.generators[self.dims[a.index()] as usize].remove(&a);
        self.set_f(c, Chain::zero(self.dims[c.index()]));
        self.phi[c.index()] = Chain::zero(self.dims[c.index()] + 1);
    }

    pub(crate) fn absorb(
        &mut self,
        cx: &GradedChainComplex,
        c: CellId,
        rule: KillRule,
    ) -> Absorbed {
        let fb = self.f_of(cx.boundary(c));
        if fb.is_zero() {
            self.make_generator(c);
            Absorbed::Created
        } else {
            let a = rule.pick(&fb);
            self.kill(cx, c, a, &fb);
            Absorbed::Killed(a)
        }
    }

    /// g(σ) = σ + φ∂(σ) on every generator.
    pub(crate) fn representative(&self, cx: &GradedChainComplex, gen: CellId) -> Chain {
        let mut g = self.phi_of(cx.boundary(gen));
        g.toggle(gen);
        g
    }

    pub(crate) fn finish(self, cx: &GradedChainComplex) -> ATModel {
        let mut g = ChainMap::new(0);
        for set in &self.generators {
            for &gen in set {
                g.set(gen, self.representative(cx, gen));
            }
        }
        self.finish_with_g(g)
    }

    pub(crate) fn finish_with_g(self, g: ChainMap) -> ATModel {
        let mut f = ChainMap::new(0);
        let mut phi = ChainMap::new(1);
        for (i, v) in self.f.into_iter().enumerate() {
            f.set(CellId(i as u32), v);
        }
        for (i, v) in self.phi.into_iter().enumerate() {
            phi.set(CellId(i as u32), v);
        }
        ATModel::from_raw(self.generators, f, g, phi)
    }
}

/// AT-model of an arbitrary complex, adding cells in (dimension, id) order
/// and killing the youngest generator.
pub fn atmodel_incremental(cx: &GradedChainComplex) -> Result<ATModel> {
    atmodel_incremental_with(cx, KillRule::Youngest)
}

pub fn atmodel_incremental_with(cx: &GradedChainComplex, rule: KillRule) -> Result<ATModel> {
    cx.check_boundary_squared()?;
    let mut b = Builder::new(cx);
    for c in cx.ids_by_dim() {
        b.absorb(cx, c, rule);
    }
    Ok(b.finish(cx))
}

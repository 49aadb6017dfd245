//! Transferring an AT-model across the subdivision of one cell α into two
//! cells α₁, α₂ separated by a new cell e.

use std::collections::BTreeSet;

use super::ATModel;
use crate::chain::{CellId, Chain, ChainMap};
use crate::complex::GradedChainComplex;
use crate::error::{Error, Result};

/// How to cut a cell α of dimension q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub alpha: CellId,
    /// The facets of α that bound the first piece (the chain A, so that
    /// ∂α₁ = A + e). The remaining facets B bound the second piece.
    pub first_part: Chain,
    /// Boundary of the new (q−1)-cell e. Must equal ∂A.
    pub cut_boundary: Chain,
}

/// Identifiers of the cells created by a subdivision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubdivisionCells {
    pub cut: CellId,
    pub first: CellId,
    pub second: CellId,
}

fn vertex_closure(p: &GradedChainComplex, chain: &Chain) -> Vec<CellId> {
    let mut out = BTreeSet::new();
    for c in chain.iter() {
        if p.dim(c) == 0 {
            out.insert(c);
        } else {
            out.extend(p.vertices(c).iter().copied());
        }
    }
    out.into_iter().collect()
}

/// Subdivides α and returns the new complex, the transferred AT-model and
/// the new cells.
///
/// α is replaced by α₁ + α₂ everywhere it appears in a boundary, in φ or
/// in a representative cycle, and by α₁ in values of f. If α is a
/// generator, α₁ takes its place. New cells take fresh ids, so the
/// surviving cells keep theirs.
pub fn subdivide_atmodel(
    p: &GradedChainComplex,
    m: &ATModel,
    split: &Subdivision,
) -> Result<(GradedChainComplex, ATModel, SubdivisionCells)> {
    let alpha = split.alpha;
    let q = p.try_dim(alpha)?;
    if q < 1 {
        return Err(Error::usage(
            "only cells of dimension ≥ 1 can be subdivided",
        ));
    }
    let bd_alpha = p.boundary(alpha).clone();
    let a = &split.first_part;
    if a.dim() != q - 1 || a.is_zero() || !a.iter().all(|c| bd_alpha.contains(c)) {
        return Err(Error::usage(
            "the first part must be a nonempty set of facets of α",
        ));
    }
    let mut b = bd_alpha.clone();
    b.add_assign(a);
    if b.is_zero() {
        return Err(Error::usage("the second part is empty"));
    }
    if split.cut_boundary.dim() != q - 2 || p.boundary_chain(a)? != split.cut_boundary {
        return Err(Error::usage("∂A differs from the boundary of the cut"));
    }
    let alpha_in_h = m.is_generator(alpha);
    if alpha_in_h && (m.f(alpha, q) != Chain::singleton(q, alpha) || !m.g(alpha, q).contains(alpha))
    {
        return Err(Error::usage("α is a generator but f(α) ≠ α or α ∉ g(α)"));
    }

    // the new complex
    let mut next = p.clone();
    let cut_vertices = vertex_closure(p, &split.cut_boundary);
    let cut = next.add_cell(q - 1, split.cut_boundary.clone(), cut_vertices)?;
    let mut bd_first = a.clone();
    bd_first.toggle(cut);
    let mut bd_second = b.clone();
    bd_second.toggle(cut);
    let first = next.add_cell(q, bd_first, vertex_closure(p, a))?;
    let second = next.add_cell(q, bd_second, vertex_closure(p, &b))?;
    for tau in p.ids().filter(|&t| p.boundary(t).contains(alpha)) {
        let bd = next.boundary_mut(tau);
        bd.toggle(alpha);
        bd.toggle(first);
        bd.toggle(second);
    }
    next.remove(alpha);

    let into_first = |mut x: Chain| {
        if x.contains(alpha) {
            x.toggle(alpha);
            x.toggle(first);
        }
        x
    };
    let into_both = |mut x: Chain| {
        if x.contains(alpha) {
            x.toggle(alpha);
            x.toggle(first);
            x.toggle(second);
        }
        x
    };

    let (generators, f, g, phi) = m.clone().into_parts();

    let mut f2 = ChainMap::new(0);
    for (sigma, v) in f.iter().filter(|(s, _)| *s != alpha) {
        f2.set(sigma, into_first(v.clone()));
    }
    f2.set(first, into_first(f.value(alpha, q)));
    f2.set(cut, f.apply(a));

    let mut phi2 = ChainMap::new(1);
    for (sigma, v) in phi.iter().filter(|(s, _)| *s != alpha) {
        phi2.set(sigma, into_both(v.clone()));
    }
    phi2.set(first, phi.value(alpha, q));
    let mut phi_cut = phi.apply(&b);
    phi_cut.toggle(second);
    phi2.set(cut, into_both(phi_cut));

    let mut g2 = ChainMap::new(0);
    for (gamma, v) in g.iter() {
        let key = if gamma == alpha { first } else { gamma };
        g2.set(key, into_both(v.clone()));
    }

    let mut generators = generators;
    if alpha_in_h {
        generators[q as usize].remove(&alpha);
        generators[q as usize].insert(first);
    }
    Ok((
        next,
        ATModel::from_raw(generators, f2, g2, phi2),
        SubdivisionCells { cut, first, second },
    ))
}

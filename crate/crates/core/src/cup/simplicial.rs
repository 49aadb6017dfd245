//! Triangulation of a cubical complex by monotone vertex paths.

use std::collections::{BTreeMap, BTreeSet};

use crate::chain::{CellId, Chain, Dim};
use crate::complex::GradedChainComplex;
use crate::error::{Error, Result};

/// A simplex as its strictly increasing list of vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(pub Vec<CellId>);

impl Simplex {
    pub fn dim(&self) -> Dim {
        self.0.len() as Dim - 1
    }

    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        let count = if n > 1 { n } else { 0 };
        (0..count).map(move |skip| {
            Simplex(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }
}

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    chain: GradedChainComplex,
    /// Simplices keyed by vertices of the source complex.
    simplices: BTreeMap<Simplex, CellId>,
    /// Source vertex of each vertex cell, by position.
    source_vertices: Vec<CellId>,
}

impl SimplicialComplex {
    pub fn chain(&self) -> &GradedChainComplex {
        &self.chain
    }

    pub fn into_chain(self) -> GradedChainComplex {
        self.chain
    }

    /// Cell of the simplex spanned by the given source vertices.
    pub fn cell(&self, vertices: &[CellId]) -> Option<CellId> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        self.simplices.get(&Simplex(key)).copied()
    }

    pub fn simplices(&self) -> impl Iterator<Item = (&Simplex, CellId)> {
        self.simplices.iter().map(|(s, &c)| (s, c))
    }

    /// The simplex of a cell, in source vertex ids.
    pub fn simplex(&self, cell: CellId) -> Simplex {
        Simplex(
            self.chain
                .vertices(cell)
                .iter()
                .map(|v| self.source_vertices[v.index()])
                .collect(),
        )
    }
}

/// Edges among the faces of `cell`, as vertex pairs.
fn edges_of(q: &GradedChainComplex, cell: CellId) -> BTreeSet<(CellId, CellId)> {
    let mut out = BTreeSet::new();
    let mut stack = vec![cell];
    let mut seen = BTreeSet::new();
    while let Some(c) = stack.pop() {
        if !seen.insert(c) {
            continue;
        }
        match q.dim(c) {
            1 => {
                let v = q.vertices(c);
                out.insert((v[0], v[1]));
            }
            d if d > 1 => stack.extend(q.boundary(c).iter()),
            _ => {}
        }
    }
    out
}

/// Increasing vertex paths of length `dim` from the least to the greatest
/// vertex of a cell, each giving one top simplex.
fn monotone_paths(q: &GradedChainComplex, cell: CellId) -> Result<Vec<Vec<CellId>>> {
    let d = q.dim(cell) as usize;
    let verts = q.vertices(cell);
    if d == 0 {
        return Ok(vec![verts.to_vec()]);
    }
    let (first, last) = (verts[0], verts[verts.len() - 1]);
    let mut next: BTreeMap<CellId, Vec<CellId>> = BTreeMap::new();
    for (a, b) in edges_of(q, cell) {
        next.entry(a).or_default().push(b);
    }
    let mut out = Vec::new();
    let mut stack = vec![vec![first]];
    while let Some(path) = stack.pop() {
        let tip = *path.last().expect("nonempty");
        if path.len() == d + 1 {
            if tip == last {
                out.push(path);
            }
            continue;
        }
        for &n in next.get(&tip).map(Vec::as_slice).unwrap_or(&[]) {
            let mut p = path.clone();
            p.push(n);
            stack.push(p);
        }
    }
    if out.is_empty() {
        return Err(Error::usage(format!(
            "cell {cell} has no increasing vertex path of length {d}"
        )));
    }
    out.sort();
    Ok(out)
}

/// Triangulates every d-cell of a cubical complex into the d! simplices
/// given by increasing edge paths from its least to its greatest vertex. A
/// single voxel yields 8 vertices, 19 edges, 18 triangles and 6 tetrahedra.
/// Vertices keep their relative order.
pub fn triangulate_kq(q: &GradedChainComplex) -> Result<SimplicialComplex> {
    let mut all: BTreeSet<Simplex> = BTreeSet::new();
    for c in q.ids() {
        for path in monotone_paths(q, c)? {
            let mut stack = vec![Simplex(path)];
            while let Some(s) = stack.pop() {
                if all.contains(&s) {
                    continue;
                }
                stack.extend(s.facets());
                all.insert(s);
            }
        }
    }
    let source_vertices = q.cells_of_dim(0);
    let position: BTreeMap<CellId, CellId> = source_vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, CellId(i as u32)))
        .collect();
    let mut ordered: Vec<&Simplex> = all.iter().collect();
    ordered.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
    let mut chain = GradedChainComplex::new();
    let mut simplices = BTreeMap::new();
    for s in ordered {
        let bd = Chain::from_cells(s.dim() - 1, s.facets().map(|f| simplices[&f]));
        let verts = s.0.iter().map(|v| position[v]).collect();
        let id = chain.add_cell(s.dim(), bd, verts)?;
        simplices.insert(s.clone(), id);
    }
    Ok(SimplicialComplex {
        chain,
        simplices,
        source_vertices,
    })
}

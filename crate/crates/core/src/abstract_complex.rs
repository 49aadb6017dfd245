//! Cubical complexes given combinatorially, with vertices labelled by
//! integers. Squares are 4-tuples (vᵢ, vⱼ, vₖ, vₗ) with vᵢ < vⱼ < vₖ < vₗ
//! and boundary edges (vᵢ,vⱼ), (vᵢ,vₖ), (vⱼ,vₗ), (vₖ,vₗ), so the
//! vertex-ordering property holds by construction. Identifications such as
//! those of a torus are expressed simply by reusing labels.

use std::collections::BTreeMap;

use crate::chain::{CellId, Chain};
use crate::complex::GradedChainComplex;
use crate::error::{Error, Result};

pub type Square = [usize; 4];

#[derive(Clone, Debug)]
pub struct AbstractCubicalComplex {
    chain: GradedChainComplex,
    vertices: Vec<CellId>,
    edges: BTreeMap<(usize, usize), CellId>,
    squares: BTreeMap<Square, CellId>,
    cubes: Vec<CellId>,
}

/// The four boundary edges of a square.
pub fn square_edges(s: &Square) -> [(usize, usize); 4] {
    [(s[0], s[1]), (s[0], s[2]), (s[1], s[3]), (s[2], s[3])]
}

impl AbstractCubicalComplex {
    /// Vertices `0..n_vertices`, the edges of the given squares plus
    /// `extra_edges`, and the squares. Vertex ids follow the labels, then
    /// edges and squares follow in lexicographic order.
    pub fn new(
        n_vertices: usize,
        extra_edges: &[(usize, usize)],
        squares: &[Square],
    ) -> Result<Self> {
        let mut edge_keys = BTreeMap::new();
        for &(a, b) in extra_edges {
            if a >= b || b >= n_vertices {
                return Err(Error::usage(format!(
                    "edge ({a},{b}) must join two labels a < b < {n_vertices}"
                )));
            }
            edge_keys.insert((a, b), ());
        }
        let mut square_keys = BTreeMap::new();
        for s in squares {
            if !(s[0] < s[1] && s[1] < s[2] && s[2] < s[3]) || s[3] >= n_vertices {
                return Err(Error::usage(format!(
                    "square {s:?} is not a strictly increasing tuple of labels"
                )));
            }
            if square_keys.insert(*s, ()).is_some() {
                return Err(Error::usage(format!("square {s:?} listed twice")));
            }
            for e in square_edges(s) {
                edge_keys.insert(e, ());
            }
        }
        let mut cx = GradedChainComplex::new();
        let vertices: Vec<CellId> = (0..n_vertices)
            .map(|i| {
                let id = CellId(i as u32);
                cx.add_cell(0, Chain::zero(-1), vec![id]).expect("vertex")
            })
            .collect();
        let mut edges = BTreeMap::new();
        for (a, b) in edge_keys.into_keys() {
            let (va, vb) = (vertices[a], vertices[b]);
            let id = cx.add_cell(1, Chain::from_cells(0, [va, vb]), vec![va, vb])?;
            edges.insert((a, b), id);
        }
        let mut square_ids = BTreeMap::new();
        for s in square_keys.into_keys() {
            let bd = Chain::from_cells(1, square_edges(&s).iter().map(|e| edges[e]));
            let id = cx.add_cell(2, bd, s.iter().map(|&v| vertices[v]).collect())?;
            square_ids.insert(s, id);
        }
        Ok(AbstractCubicalComplex {
            chain: cx,
            vertices,
            edges,
            squares: square_ids,
            cubes: Vec::new(),
        })
    }

    /// Adds a 3-cell bounded by the listed squares, which must form a cycle.
    pub fn add_cube(&mut self, facets: &[Square]) -> Result<CellId> {
        let cells = facets
            .iter()
            .map(|s| {
                self.square(s)
                    .ok_or_else(|| Error::usage(format!("unknown square {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let bd = Chain::from_cells(2, cells);
        if !self.chain.boundary_chain(&bd)?.is_zero() {
            return Err(Error::usage("the facets of a 3-cell must form a cycle"));
        }
        let mut verts: Vec<CellId> = facets
            .iter()
            .flat_map(|s| s.iter().map(|&v| self.vertices[v]))
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let id = self.chain.add_cell(3, bd, verts)?;
        self.cubes.push(id);
        Ok(id)
    }

    pub fn chain(&self) -> &GradedChainComplex {
        &self.chain
    }

    pub fn into_chain(self) -> GradedChainComplex {
        self.chain
    }

    pub fn vertex(&self, label: usize) -> CellId {
        self.vertices[label]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Edge between two labels, in either order.
    pub fn edge(&self, a: usize, b: usize) -> Option<CellId> {
        self.edges.get(&(a.min(b), a.max(b))).copied()
    }

    /// Square with the given labels, in any order.
    pub fn square(&self, labels: &Square) -> Option<CellId> {
        let mut key = *labels;
        key.sort_unstable();
        self.squares.get(&key).copied()
    }

    pub fn squares(&self) -> impl Iterator<Item = (&Square, CellId)> {
        self.squares.iter().map(|(k, v)| (k, *v))
    }

    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), CellId)> + '_ {
        self.edges.iter().map(|(k, v)| (*k, *v))
    }

    /// Human-readable name of a cell in terms of vertex labels.
    pub fn label(&self, id: CellId) -> String {
        let labels: Vec<String> = self
            .chain
            .vertices(id)
            .iter()
            .map(|v| format!("v{}", v.0))
            .collect();
        if labels.len() == 1 {
            labels[0].clone()
        } else {
            format!("({})", labels.join(","))
        }
    }
}

/// Labels of an n×m grid with opposite sides identified such that every
/// square satisfies the vertex-ordering property: (0,0) gets 0, the rest of
/// row 0 gets 1..n−1, the rest of column 0 the next labels, and the
/// interior points the remaining ones ordered by (j, i).
pub fn torus_labels(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut label = vec![vec![0; m]; n];
    let mut next = 1;
    for row in label.iter_mut().skip(1) {
        row[0] = next;
        next += 1;
    }
    for cell in label[0].iter_mut().skip(1) {
        *cell = next;
        next += 1;
    }
    for j in 1..m {
        for row in label.iter_mut().skip(1) {
            row[j] = next;
            next += 1;
        }
    }
    label
}

/// Squares of the n×m torus (n, m ≥ 3) under [`torus_labels`].
pub fn torus_squares(n: usize, m: usize) -> Vec<Square> {
    let l = torus_labels(n, m);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..m {
            let mut s = [
                l[i][j],
                l[(i + 1) % n][j],
                l[i][(j + 1) % m],
                l[(i + 1) % n][(j + 1) % m],
            ];
            s.sort_unstable();
            out.push(s);
        }
    }
    out
}

/// The n×m cubical torus.
pub fn torus(n: usize, m: usize) -> Result<AbstractCubicalComplex> {
    if n < 3 || m < 3 {
        return Err(Error::usage("a cubical torus needs at least 3×3 squares"));
    }
    AbstractCubicalComplex::new(n * m, &[], &torus_squares(n, m))
}

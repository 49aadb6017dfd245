//! Graded chain complexes with an explicit, mutable boundary map.

use crate::chain::{CellId, Chain, Dim};
use crate::error::{Error, Result};

/// One cell: its dimension, its boundary, and (optionally) its vertices.
///
/// Vertex lists are sorted by `CellId`; the id order of 0-cells is the
/// vertex order used by the cup-product formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    dim: Dim,
    boundary: Chain,
    vertices: Vec<CellId>,
}

impl Cell {
    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn boundary(&self) -> &Chain {
        &self.boundary
    }

    pub fn vertices(&self) -> &[CellId] {
        &self.vertices
    }
}

/// Cells graded by dimension together with a boundary map.
///
/// Identifiers are indices into an arena. Removing a cell leaves a hole, so
/// identifiers stay stable for the whole lifetime of a complex and across
/// subcomplexes derived from it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedChainComplex {
    cells: Vec<Option<Cell>>,
    live: usize,
}

impl GradedChainComplex {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a cell. The boundary must be a chain of dimension `dim - 1`
    /// over cells already present with that dimension.
    pub fn add_cell(&mut self, dim: Dim, boundary: Chain, vertices: Vec<CellId>) -> Result<CellId> {
        if !(0..=3).contains(&dim) {
            return Err(Error::usage(format!(
                "cell dimension {dim} out of range 0..=3"
            )));
        }
        if boundary.dim() != dim - 1 {
            return Err(Error::usage(format!(
                "boundary of a {dim}-cell must have dimension {}, got {}",
                dim - 1,
                boundary.dim()
            )));
        }
        for c in boundary.iter() {
            match self.cell(c) {
                Some(cell) if cell.dim == dim - 1 => {}
                Some(cell) => {
                    return Err(Error::usage(format!(
                        "facet {c} has dimension {}, expected {}",
                        cell.dim,
                        dim - 1
                    )))
                }
                None => return Err(Error::UnknownCell(c)),
            }
        }
        let mut vertices = vertices;
        vertices.sort_unstable();
        let id = CellId(self.cells.len() as u32);
        self.cells.push(Some(Cell {
            dim,
            boundary,
            vertices,
        }));
        self.live += 1;
        Ok(id)
    }

    /// Builds a complex whose cell `i` is `cells[i]`. Facets may appear
    /// later in the list than the cells they bound.
    pub fn from_cells(cells: Vec<(Dim, Chain, Vec<CellId>)>) -> Result<Self> {
        let live = cells.len();
        let out = GradedChainComplex {
            cells: cells
                .into_iter()
                .map(|(dim, boundary, mut vertices)| {
                    vertices.sort_unstable();
                    Some(Cell {
                        dim,
                        boundary,
                        vertices,
                    })
                })
                .collect(),
            live,
        };
        for id in out.ids() {
            let dim = out.dim(id);
            if !(0..=3).contains(&dim) || out.boundary(id).dim() != dim - 1 {
                return Err(Error::usage(format!(
                    "cell {id} has an ill-graded boundary"
                )));
            }
            for f in out.boundary(id).iter() {
                match out.cell(f) {
                    Some(c) if c.dim == dim - 1 => {}
                    Some(_) => {
                        return Err(Error::usage(format!(
                            "facet {f} of {id} has the wrong dimension"
                        )))
                    }
                    None => return Err(Error::UnknownCell(f)),
                }
            }
        }
        Ok(out)
    }

    pub fn cell(&self, id: CellId) -> Option<&Cell> {
        self.cells.get(id.index()).and_then(|c| c.as_ref())
    }

    pub fn contains(&self, id: CellId) -> bool {
        self.cell(id).is_some()
    }

    pub fn try_dim(&self, id: CellId) -> Result<Dim> {
        self.cell(id).map(|c| c.dim).ok_or(Error::UnknownCell(id))
    }

    /// Dimension of a cell known to be present.
    ///
    /// Panics if the cell is absent.
    pub fn dim(&self, id: CellId) -> Dim {
        self.cell(id)
            .unwrap_or_else(|| panic!("cell {id} not in complex"))
            .dim
    }

    /// Boundary of a cell known to be present.
    pub fn boundary(&self, id: CellId) -> &Chain {
        &self
            .cell(id)
            .unwrap_or_else(|| panic!("cell {id} not in complex"))
            .boundary
    }

    pub fn vertices(&self, id: CellId) -> &[CellId] {
        self.cell(id).map(|c| c.vertices.as_slice()).unwrap_or(&[])
    }

    /// Number of live cells.
    pub fn len(&self) -> usize {
        self.live
    }

    pub fn is_empty(&self) -> bool {
        self.live == 0
    }

    /// One past the largest identifier ever allocated.
    pub fn id_bound(&self) -> usize {
        self.cells.len()
    }

    /// Live cells in increasing id order.
    pub fn ids(&self) -> impl Iterator<Item = CellId> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_some())
            .map(|(i, _)| CellId(i as u32))
    }

    pub fn cells_of_dim(&self, dim: Dim) -> Vec<CellId> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.as_ref().is_some_and(|c| c.dim == dim))
            .map(|(i, _)| CellId(i as u32))
            .collect()
    }

    /// Live cells sorted by (dimension, id).
    pub fn ids_by_dim(&self) -> Vec<CellId> {
        let mut ids: Vec<CellId> = self.ids().collect();
        ids.sort_by_key(|&id| (self.dim(id), id));
        ids
    }

    /// Cell counts per dimension 0..=3.
    pub fn counts(&self) -> [usize; 4] {
        let mut out = [0; 4];
        for c in self.cells.iter().flatten() {
            out[c.dim as usize] += 1;
        }
        out
    }

    pub fn max_dim(&self) -> Option<Dim> {
        self.cells.iter().flatten().map(|c| c.dim).max()
    }

    /// Boundary of a chain, extended by linearity.
    pub fn boundary_chain(&self, chain: &Chain) -> Result<Chain> {
        let mut out = Chain::zero(chain.dim() - 1);
        for c in chain.iter() {
            let cell = self.cell(c).ok_or(Error::UnknownCell(c))?;
            if cell.dim != chain.dim() {
                return Err(Error::usage(format!(
                    "cell {c} has dimension {} inside a {}-chain",
                    cell.dim,
                    chain.dim()
                )));
            }
            out.add_assign(&cell.boundary);
        }
        Ok(out)
    }

    /// Boundary of a chain whose cells are known to be present.
    pub(crate) fn boundary_of(&self, chain: &Chain) -> Chain {
        let mut out = Chain::zero(chain.dim() - 1);
        for c in chain.iter() {
            out.add_assign(self.boundary(c));
        }
        out
    }

    /// Checks ∂∘∂ = 0 cell by cell.
    pub fn check_boundary_squared(&self) -> Result<()> {
        for id in self.ids() {
            let bb = self.boundary_of(self.boundary(id));
            if !bb.is_zero() {
                return Err(Error::integrity(format!("∂∂({id}) = {bb} is not zero")));
            }
        }
        Ok(())
    }

    /// For every live cell, the cells whose boundary contains it.
    pub fn coboundaries(&self) -> Vec<Vec<CellId>> {
        let mut cob = vec![Vec::new(); self.cells.len()];
        for id in self.ids() {
            for f in self.boundary(id).iter() {
                cob[f.index()].push(id);
            }
        }
        cob
    }

    /// The subcomplex on `keep`, with identifiers preserved. Fails if the
    /// selection is not closed under taking facets.
    pub fn restrict(&self, keep: impl Fn(CellId) -> bool) -> Result<GradedChainComplex> {
        let mut cells = vec![None; self.cells.len()];
        let mut live = 0;
        for id in self.ids() {
            if keep(id) {
                cells[id.index()] = self.cells[id.index()].clone();
                live += 1;
            }
        }
        let out = GradedChainComplex { cells, live };
        for id in out.ids() {
            if let Some(f) = out.boundary(id).iter().find(|&f| !out.contains(f)) {
                return Err(Error::usage(format!(
                    "selection is not face-closed: {id} has facet {f} outside it"
                )));
            }
        }
        Ok(out)
    }

    pub(crate) fn boundary_mut(&mut self, id: CellId) -> &mut Chain {
        &mut self.cells[id.index()].as_mut().expect("live cell").boundary
    }

    pub(crate) fn remove(&mut self, id: CellId) -> Option<Cell> {
        let removed = self.cells.get_mut(id.index()).and_then(|c| c.take());
        if removed.is_some() {
            self.live -= 1;
        }
        removed
    }
}

//! ℤ/2 chains and sparse chain maps.
//!
//! A [`Chain`] is a finite formal sum of cells with coefficients in ℤ/2,
//! i.e. a set of [`CellId`]s. Every chain carries the dimension of its
//! cells, so the zero chain of dimension 1 and the zero chain of dimension
//! 2 are different values. Cells are kept sorted, which makes iteration
//! deterministic and addition a linear merge.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Dimension of a cell or chain. Chains of dimension `-1` appear as the
/// boundary of a vertex.
pub type Dim = i8;

/// Opaque identifier of a cell, unique within one complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellId(pub u32);

impl CellId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A homogeneous ℤ/2 chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain {
    dim: Dim,
    cells: Vec<CellId>,
}

impl Chain {
    pub fn zero(dim: Dim) -> Self {
        Chain {
            dim,
            cells: Vec::new(),
        }
    }

    pub fn singleton(dim: Dim, cell: CellId) -> Self {
        Chain {
            dim,
            cells: vec![cell],
        }
    }

    /// Builds a chain from cells, reducing multiplicities mod 2.
    pub fn from_cells(dim: Dim, cells: impl IntoIterator<Item = CellId>) -> Self {
        let mut cells: Vec<CellId> = cells.into_iter().collect();
        cells.sort_unstable();
        let mut out = Vec::with_capacity(cells.len());
        let mut i = 0;
        while i < cells.len() {
            let mut j = i;
            while j < cells.len() && cells[j] == cells[i] {
                j += 1;
            }
            if (j - i) % 2 == 1 {
                out.push(cells[i]);
            }
            i = j;
        }
        Chain { dim, cells: out }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[CellId] {
        &self.cells
    }

    pub fn iter(&self) -> impl Iterator<Item = CellId> + '_ {
        self.cells.iter().copied()
    }

    pub fn contains(&self, cell: CellId) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    /// The smallest cell of the chain, used wherever a canonical pick is needed.
    pub fn min_cell(&self) -> Option<CellId> {
        self.cells.first().copied()
    }

    /// Toggles one cell (adds it mod 2).
    pub fn toggle(&mut self, cell: CellId) {
        match self.cells.binary_search(&cell) {
            Ok(pos) => {
                self.cells.remove(pos);
            }
            Err(pos) => self.cells.insert(pos, cell),
        }
    }

    /// `self + other`, failing on a dimension mismatch.
    pub fn checked_add(&self, other: &Chain) -> Result<Chain> {
        if self.dim != other.dim {
            return Err(Error::usage(format!(
                "cannot add chains of dimension {} and {}",
                self.dim, other.dim
            )));
        }
        Ok(Chain {
            dim: self.dim,
            cells: symmetric_difference(&self.cells, &other.cells),
        })
    }

    /// In-place addition. Panics on a dimension mismatch; internal
    /// algorithms only ever add chains they built with matching dimensions.
    pub fn add_assign(&mut self, other: &Chain) {
        assert_eq!(
            self.dim, other.dim,
            "chain dimension mismatch ({} vs {})",
            self.dim, other.dim
        );
        if other.cells.is_empty() {
            return;
        }
        if other.cells.len() == 1 {
            self.toggle(other.cells[0]);
            return;
        }
        self.cells = symmetric_difference(&self.cells, &other.cells);
    }

    /// Scalar product ⟨self, other⟩: parity of the common support.
    pub fn dot(&self, other: &Chain) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::usage(format!(
                "scalar product of chains of dimension {} and {}",
                self.dim, other.dim
            )));
        }
        Ok(self.dot_unchecked(other))
    }

    pub(crate) fn dot_unchecked(&self, other: &Chain) -> bool {
        let (small, large) = if self.cells.len() <= other.cells.len() {
            (&self.cells, &other.cells)
        } else {
            (&other.cells, &self.cells)
        };
        let mut parity = false;
        if small.len() * 8 < large.len() {
            for c in small {
                if large.binary_search(c).is_ok() {
                    parity = !parity;
                }
            }
            return parity;
        }
        let (mut i, mut j) = (0, 0);
        while i < small.len() && j < large.len() {
            match small[i].cmp(&large[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    parity = !parity;
                    i += 1;
                    j += 1;
                }
            }
        }
        parity
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cells.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn symmetric_difference(a: &[CellId], b: &[CellId]) -> Vec<CellId> {
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

/// Mod-2 sum of two chains of equal dimension.
pub fn chain_add(a: &Chain, b: &Chain) -> Result<Chain> {
    a.checked_add(b)
}

/// ⟨a, b⟩ ∈ ℤ/2.
pub fn scalar_product(a: &Chain, b: &Chain) -> Result<bool> {
    a.dot(b)
}

/// A sparse linear map on chains, given by its values on cells.
///
/// Cells without an entry map to zero. `degree` is the shift in dimension
/// (0 for projections and inclusions, +1 for a chain homotopy).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    degree: Dim,
    entries: BTreeMap<CellId, Chain>,
}

impl ChainMap {
    pub fn new(degree: Dim) -> Self {
        ChainMap {
            degree,
            entries: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> Dim {
        self.degree
    }

    pub fn get(&self, cell: CellId) -> Option<&Chain> {
        self.entries.get(&cell)
    }

    /// Value on a single cell of dimension `dim`, zero when absent.
    pub fn value(&self, cell: CellId, dim: Dim) -> Chain {
        self.entries
            .get(&cell)
            .cloned()
            .unwrap_or_else(|| Chain::zero(dim + self.degree))
    }

    /// Sets the value on a cell; zero values are not stored.
    pub fn set(&mut self, cell: CellId, value: Chain) {
        if value.is_zero() {
            self.entries.remove(&cell);
        } else {
            self.entries.insert(cell, value);
        }
    }

    pub fn remove(&mut self, cell: CellId) -> Option<Chain> {
        self.entries.remove(&cell)
    }

    /// Adds `delta` to the value on `cell`.
    pub fn add_to(&mut self, cell: CellId, delta: &Chain) {
        if delta.is_zero() {
            return;
        }
        match self.entries.get_mut(&cell) {
            Some(v) => {
                v.add_assign(delta);
                if v.is_zero() {
                    self.entries.remove(&cell);
                }
            }
            None => {
                self.entries.insert(cell, delta.clone());
            }
        }
    }

    /// Linear extension to chains.
    pub fn apply(&self, chain: &Chain) -> Chain {
        let mut out = Chain::zero(chain.dim() + self.degree);
        for c in chain.iter() {
            if let Some(v) = self.entries.get(&c) {
                out.add_assign(v);
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (CellId, &Chain)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

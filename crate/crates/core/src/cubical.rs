//! Elementary cubes in ℤ³, cubical complexes built from voxel sets, and the
//! boundary subcomplex ∂Q.
//!
//! A voxel at lattice point `p` is the unit cube with minimal vertex `p`.
//! Vertices are ordered lexicographically on `(x, y, z)`, and cell ids are
//! assigned in lexicographic `(base, extent)` order, so the id order of the
//! 0-cells is exactly the lexicographic vertex order.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::chain::{CellId, Chain, Dim};
use crate::complex::GradedChainComplex;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point3 {
    pub x: i32,
    pub y: i32,
    pub z: i32,
}

impl Point3 {
    pub const fn new(x: i32, y: i32, z: i32) -> Self {
        Point3 { x, y, z }
    }

    pub fn coord(&self, axis: usize) -> i32 {
        match axis {
            0 => self.x,
            1 => self.y,
            2 => self.z,
            _ => panic!("axis {axis} out of range"),
        }
    }

    /// The point moved by `delta` along `axis` (0 = x, 1 = y, 2 = z).
    pub fn shifted(&self, axis: usize, delta: i32) -> Point3 {
        let mut p = *self;
        match axis {
            0 => p.x += delta,
            1 => p.y += delta,
            2 => p.z += delta,
            _ => panic!("axis {axis} out of range"),
        }
        p
    }

    /// The six face neighbours.
    pub fn neighbors6(&self) -> impl Iterator<Item = Point3> + '_ {
        (0..3).flat_map(move |a| [self.shifted(a, -1), self.shifted(a, 1)])
    }

    /// The 26 neighbours sharing at least a corner.
    pub fn neighbors26(&self) -> impl Iterator<Item = Point3> + '_ {
        (-1..=1).flat_map(move |dx| {
            (-1..=1).flat_map(move |dy| {
                (-1..=1).filter_map(move |dz| {
                    if dx == 0 && dy == 0 && dz == 0 {
                        None
                    } else {
                        Some(Point3::new(self.x + dx, self.y + dy, self.z + dz))
                    }
                })
            })
        })
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Bit of the extent mask for each axis.
pub const AXIS_BITS: [u8; 3] = [1, 2, 4];

/// A unit cube of dimension 0..=3: a base point plus the set of axes it
/// extends along.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementaryCube {
    pub base: Point3,
    pub extent: u8,
}

impl ElementaryCube {
    pub fn new(base: Point3, extent: u8) -> Result<Self> {
        if extent > 7 {
            return Err(Error::usage(format!(
                "extent mask {extent:#b} has more than 3 axes"
            )));
        }
        Ok(ElementaryCube { base, extent })
    }

    pub const fn vertex(p: Point3) -> Self {
        ElementaryCube { base: p, extent: 0 }
    }

    pub const fn voxel(p: Point3) -> Self {
        ElementaryCube { base: p, extent: 7 }
    }

    pub fn dim(&self) -> Dim {
        self.extent.count_ones() as Dim
    }

    pub fn axes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..3).filter(move |&a| self.extent & AXIS_BITS[a] != 0)
    }

    /// Base plus the full extent.
    pub fn max_vertex(&self) -> Point3 {
        self.axes().fold(self.base, |p, a| p.shifted(a, 1))
    }

    /// The 2^dim vertices in lexicographic order.
    pub fn vertices(&self) -> Vec<Point3> {
        let axes: Vec<usize> = self.axes().collect();
        let mut out: Vec<Point3> = (0..(1u32 << axes.len()))
            .map(|mask| {
                axes.iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .fold(self.base, |p, (_, &a)| p.shifted(a, 1))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// The 2·dim facets: for each extended axis, the lower and upper face.
    pub fn facets(&self) -> Vec<ElementaryCube> {
        let mut out = Vec::with_capacity(2 * self.dim() as usize);
        for a in self.axes() {
            let extent = self.extent & !AXIS_BITS[a];
            out.push(ElementaryCube {
                base: self.base,
                extent,
            });
            out.push(ElementaryCube {
                base: self.base.shifted(a, 1),
                extent,
            });
        }
        out
    }

    /// All faces, including the cube itself.
    pub fn faces(&self) -> Vec<ElementaryCube> {
        let axes: Vec<usize> = self.axes().collect();
        let mut out = Vec::new();
        // each extended axis is either kept, collapsed low, or collapsed high
        let mut choice = vec![0u8; axes.len()];
        loop {
            let mut base = self.base;
            let mut extent = 0u8;
            for (i, &a) in axes.iter().enumerate() {
                match choice[i] {
                    0 => extent |= AXIS_BITS[a],
                    1 => {}
                    _ => base = base.shifted(a, 1),
                }
            }
            out.push(ElementaryCube { base, extent });
            let mut i = 0;
            while i < choice.len() && choice[i] == 2 {
                choice[i] = 0;
                i += 1;
            }
            if i == choice.len() {
                break;
            }
            choice[i] += 1;
        }
        out.sort_unstable();
        out
    }

    /// For a square, the lattice points of the two voxels sharing it.
    pub fn incident_voxels(&self) -> Option<[Point3; 2]> {
        if self.dim() != 2 {
            return None;
        }
        let normal = (0..3).find(|&a| self.extent & AXIS_BITS[a] == 0)?;
        Some([self.base.shifted(normal, -1), self.base])
    }

    /// For any cube, the lattice points of the voxels containing it.
    pub fn containing_voxels(&self) -> Vec<Point3> {
        let free: Vec<usize> = (0..3)
            .filter(|&a| self.extent & AXIS_BITS[a] == 0)
            .collect();
        (0..(1u32 << free.len()))
            .map(|mask| {
                free.iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .fold(self.base, |p, (_, &a)| p.shifted(a, -1))
            })
            .collect()
    }
}

impl fmt::Display for ElementaryCube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.base.x, self.base.y, self.base.z)?;
        if self.extent != 0 {
            write!(f, "+")?;
            for (a, name) in ["x", "y", "z"].iter().enumerate() {
                if self.extent & AXIS_BITS[a] != 0 {
                    write!(f, "{name}")?;
                }
            }
        }
        Ok(())
    }
}

/// The ordered vertex list of a cube (same as [`ElementaryCube::vertices`]).
pub fn cube_vertices(c: &ElementaryCube) -> Vec<Point3> {
    c.vertices()
}

/// A cubical complex in ℤ³: a face-closed set of elementary cubes with the
/// corresponding chain complex.
#[derive(Clone, Debug)]
pub struct CubicalComplex {
    chain: GradedChainComplex,
    cubes: Vec<ElementaryCube>,
    index: HashMap<ElementaryCube, CellId>,
}

impl CubicalComplex {
    /// Face closure of the given cubes.
    pub fn from_cubes(cubes: impl IntoIterator<Item = ElementaryCube>) -> Result<Self> {
        let mut all = BTreeSet::new();
        for c in cubes {
            all.extend(c.faces());
        }
        let cubes: Vec<ElementaryCube> = all.into_iter().collect();
        let index: HashMap<ElementaryCube, CellId> = cubes
            .iter()
            .enumerate()
            .map(|(i, c)| (*c, CellId(i as u32)))
            .collect();
        let cells = cubes
            .iter()
            .map(|c| {
                let boundary = Chain::from_cells(c.dim() - 1, c.facets().iter().map(|f| index[f]));
                let vertices = c
                    .vertices()
                    .iter()
                    .map(|&p| index[&ElementaryCube::vertex(p)])
                    .collect();
                (c.dim(), boundary, vertices)
            })
            .collect();
        let chain = GradedChainComplex::from_cells(cells)?;
        Ok(CubicalComplex {
            chain,
            cubes,
            index,
        })
    }

    pub fn chain(&self) -> &GradedChainComplex {
        &self.chain
    }

    pub fn into_chain(self) -> GradedChainComplex {
        self.chain
    }

    /// Geometry of a cell. Valid for every id ever allocated in this
    /// complex or in complexes derived from it.
    pub fn cube(&self, id: CellId) -> ElementaryCube {
        self.cubes[id.index()]
    }

    pub fn id_of(&self, cube: &ElementaryCube) -> Option<CellId> {
        self.index
            .get(cube)
            .copied()
            .filter(|&id| self.chain.contains(id))
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// The boundary of a cube as a chain of this complex.
    pub fn facets_chain(&self, id: CellId) -> Chain {
        self.chain.boundary(id).clone()
    }

    /// The subcomplex ∂Q for the voxel set `voxels` (which must be the set
    /// this complex was built from). Cell ids are preserved.
    pub fn boundary_subcomplex(&self, voxels: &HashSet<Point3>) -> Result<CubicalComplex> {
        let mut keep = HashSet::new();
        for id in self.chain.cells_of_dim(2) {
            let cube = self.cube(id);
            let [a, b] = cube.incident_voxels().expect("square");
            if voxels.contains(&a) != voxels.contains(&b) {
                for face in cube.faces() {
                    keep.insert(self.index[&face]);
                }
            }
        }
        let chain = self.chain.restrict(|id| keep.contains(&id))?;
        Ok(CubicalComplex {
            chain,
            cubes: self.cubes.clone(),
            index: self.index.clone(),
        })
    }

    /// Whether a square of this complex is shared by a voxel of `voxels`
    /// and a voxel outside it.
    pub fn is_exposed_square(&self, id: CellId, voxels: &HashSet<Point3>) -> bool {
        match self.cube(id).incident_voxels() {
            Some([a, b]) => voxels.contains(&a) != voxels.contains(&b),
            None => false,
        }
    }
}

/// The cubical complex Q of a voxel set: all voxels with all their faces.
pub fn complex_from_voxels(voxels: &[Point3]) -> Result<CubicalComplex> {
    if voxels.is_empty() {
        return Err(Error::usage(
            "cannot build a cubical complex from an empty voxel set",
        ));
    }
    CubicalComplex::from_cubes(voxels.iter().map(|&p| ElementaryCube::voxel(p)))
}

/// The boundary subcomplex ∂Q of a voxel set, with the cell ids of
/// [`complex_from_voxels`]. An empty voxel set gives an empty complex.
pub fn boundary_subcomplex(voxels: &[Point3]) -> Result<CubicalComplex> {
    if voxels.is_empty() {
        return Ok(CubicalComplex {
            chain: GradedChainComplex::new(),
            cubes: Vec::new(),
            index: HashMap::new(),
        });
    }
    let q = complex_from_voxels(voxels)?;
    let set: HashSet<Point3> = voxels.iter().copied().collect();
    q.boundary_subcomplex(&set)
}

/// First 2-cell violating the vertex-ordering property: a square
/// (vᵢ,vⱼ,vₖ,vₗ), vᵢ<vⱼ<vₖ<vₗ, must have exactly the edges (vᵢ,vⱼ),
/// (vᵢ,vₖ), (vⱼ,vₗ), (vₖ,vₗ) in its boundary.
pub fn p1_violation(cx: &GradedChainComplex) -> Option<CellId> {
    for id in cx.cells_of_dim(2) {
        let v = cx.vertices(id);
        if v.len() != 4 {
            return Some(id);
        }
        let mut expected = vec![(v[0], v[1]), (v[0], v[2]), (v[1], v[3]), (v[2], v[3])];
        expected.sort_unstable();
        let mut actual: Vec<(CellId, CellId)> = cx
            .boundary(id)
            .iter()
            .filter_map(|e| match cx.vertices(e) {
                [a, b] => Some((*a, *b)),
                _ => None,
            })
            .collect();
        actual.sort_unstable();
        if actual != expected || cx.boundary(id).len() != 4 {
            return Some(id);
        }
    }
    None
}

pub fn check_p1(cx: &GradedChainComplex) -> bool {
    p1_violation(cx).is_none()
}

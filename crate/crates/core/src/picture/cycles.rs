//! Drawing representative cycles as sets of foreground voxels.

use std::collections::BTreeSet;

use super::Picture3D;
use crate::atmodel::ATModel;
use crate::chain::{CellId, Chain};
use crate::complex::GradedChainComplex;
use crate::cubical::{CubicalComplex, Point3};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoxelCycle {
    pub generator: CellId,
    pub dim: u8,
    /// All voxels, sorted.
    pub voxels: Vec<Point3>,
    /// For a 1-generator, the voxels of each simple cycle in walking order.
    pub loops: Vec<Vec<Point3>>,
    /// Whether some edge had to be given an arbitrary boundary voxel.
    pub fallback: bool,
}

/// Projects representative cycles supported in ∂Q back to the picture.
pub struct CycleProjector<'a> {
    geometry: &'a CubicalComplex,
    dq: &'a GradedChainComplex,
    picture: &'a Picture3D,
    cofaces: Vec<Vec<CellId>>,
}

fn six_adjacent(a: Point3, b: Point3) -> bool {
    (a.x - b.x).abs() + (a.y - b.y).abs() + (a.z - b.z).abs() == 1
}

impl<'a> CycleProjector<'a> {
    /// `geometry` is Q, `dq` its boundary subcomplex and `picture` the
    /// picture Q was built from.
    pub fn new(
        geometry: &'a CubicalComplex,
        dq: &'a GradedChainComplex,
        picture: &'a Picture3D,
    ) -> Self {
        CycleProjector {
            geometry,
            dq,
            picture,
            cofaces: dq.coboundaries(),
        }
    }

    fn in_dq(&self, cell: CellId) -> Result<()> {
        if self.dq.contains(cell) {
            Ok(())
        } else {
            Err(Error::usage(format!(
                "representative cycle leaves ∂Q at cell {cell}"
            )))
        }
    }

    /// The foreground voxel of a square of ∂Q.
    fn square_voxel(&self, square: CellId) -> Result<Point3> {
        let pair = self
            .geometry
            .cube(square)
            .incident_voxels()
            .ok_or_else(|| Error::usage(format!("cell {square} is not a square")))?;
        match pair.map(|v| self.picture.get(v)) {
            [true, false] => Ok(pair[0]),
            [false, true] => Ok(pair[1]),
            _ => Err(Error::usage(format!(
                "square {square} is not on the picture boundary"
            ))),
        }
    }

    fn common_square(&self, a: CellId, b: CellId) -> Option<CellId> {
        let fa = &self.cofaces[a.index()];
        self.cofaces[b.index()]
            .iter()
            .filter(|s| fa.contains(s))
            .min()
            .copied()
    }

    pub fn project(&self, m: &ATModel, sigma: CellId) -> Result<VoxelCycle> {
        if !m.is_generator(sigma) {
            return Err(Error::usage(format!("{sigma} is not a generator")));
        }
        let dim = self
            .dq
            .try_dim(sigma)
            .map_err(|_| Error::usage(format!("generator {sigma} is not a cell of ∂Q")))?;
        let g = m.g(sigma, dim);
        for c in g.iter() {
            self.in_dq(c)?;
        }
        let mut out = VoxelCycle {
            generator: sigma,
            dim: dim as u8,
            voxels: Vec::new(),
            loops: Vec::new(),
            fallback: false,
        };
        match dim {
            0 => {
                let v = g
                    .min_cell()
                    .ok_or_else(|| Error::usage("empty representative cycle"))?;
                let square = self.cofaces[v.index()]
                    .iter()
                    .flat_map(|&e| self.cofaces[e.index()].iter().copied())
                    .min()
                    .ok_or_else(|| Error::usage(format!("vertex {v} lies on no square of ∂Q")))?;
                out.voxels.push(self.square_voxel(square)?);
            }
            1 => {
                for cycle in self.simple_cycles(&g)? {
                    let (voxels, fallback) = self.walk(&cycle)?;
                    out.fallback |= fallback;
                    out.voxels.extend(voxels.iter().copied());
                    out.loops.push(voxels);
                }
            }
            2 => {
                for s in g.iter() {
                    out.voxels.push(self.square_voxel(s)?);
                }
            }
            _ => {
                return Err(Error::usage(
                    "only generators of dimension ≤ 2 can be drawn",
                ))
            }
        }
        out.voxels.sort_unstable();
        out.voxels.dedup();
        Ok(out)
    }

    /// Splits a 1-cycle into simple cycles, each as edges in walking order.
    fn simple_cycles(&self, g: &Chain) -> Result<Vec<Vec<CellId>>> {
        if !self.dq.boundary_chain(g)?.is_zero() {
            return Err(Error::usage("representative 1-chain is not a cycle"));
        }
        let mut unused: BTreeSet<CellId> = g.iter().collect();
        let mut cycles = Vec::new();
        while let Some(&e0) = unused.first() {
            let mut path_vertices = vec![self.dq.vertices(e0)[0]];
            let mut path_edges: Vec<CellId> = Vec::new();
            let mut cur = path_vertices[0];
            loop {
                let e = self.cofaces[cur.index()]
                    .iter()
                    .copied()
                    .filter(|e| unused.contains(e))
                    .min()
                    .ok_or_else(|| Error::integrity("walk along a 1-cycle got stuck"))?;
                unused.remove(&e);
                let ends = self.dq.vertices(e);
                let w = if ends[0] == cur { ends[1] } else { ends[0] };
                path_edges.push(e);
                if let Some(pos) = path_vertices.iter().position(|&v| v == w) {
                    cycles.push(path_edges.split_off(pos));
                    path_vertices.truncate(pos + 1);
                    if path_edges.is_empty() {
                        break;
                    }
                } else {
                    path_vertices.push(w);
                }
                cur = w;
            }
        }
        Ok(cycles)
    }

    /// Voxels for the edges of one simple cycle, with the fallback flag.
    fn walk(&self, cycle: &[CellId]) -> Result<(Vec<Point3>, bool)> {
        let k = cycle.len();
        let mut assigned: Vec<Option<Point3>> = vec![None; k];
        for i in 0..k {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            if let Some(s) = self.common_square(a, b) {
                let v = self.square_voxel(s)?;
                assigned[i].get_or_insert(v);
                assigned[(i + 1) % k].get_or_insert(v);
            }
        }
        let mut fallback = false;
        for i in 0..k {
            if assigned[i].is_some() {
                continue;
            }
            let mut candidates: Vec<Point3> = self
                .geometry
                .cube(cycle[i])
                .containing_voxels()
                .into_iter()
                .filter(|&v| self.picture.is_boundary_voxel(v))
                .collect();
            candidates.sort_unstable();
            let near = |anchor: Option<Point3>| {
                anchor.and_then(|w| {
                    candidates
                        .iter()
                        .copied()
                        .find(|&v| v == w || six_adjacent(v, w))
                })
            };
            let choice = near(assigned[(i + 1) % k])
                .or_else(|| near(assigned[(i + k - 1) % k]))
                .or_else(|| {
                    fallback = true;
                    candidates.first().copied()
                })
                .ok_or_else(|| {
                    Error::usage(format!("edge {} lies on no boundary voxel", cycle[i]))
                })?;
            assigned[i] = Some(choice);
        }
        let mut voxels: Vec<Point3> = assigned.into_iter().map(|v| v.expect("assigned")).collect();
        voxels.dedup();
        if voxels.len() > 1 && voxels.first() == voxels.last() {
            voxels.pop();
        }
        Ok((voxels, fallback))
    }
}

/// Voxels drawing the representative cycle of the generator `sigma`.
pub fn cycle_to_voxels(
    geometry: &CubicalComplex,
    dq: &GradedChainComplex,
    m: &ATModel,
    sigma: CellId,
    picture: &Picture3D,
) -> Result<VoxelCycle> {
    CycleProjector::new(geometry, dq, picture).project(m, sigma)
}

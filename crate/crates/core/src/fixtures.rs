//! Small spaces with known homology and cup products.

use crate::abstract_complex::{torus, AbstractCubicalComplex, Square};
use crate::atmodel::SpanningForest;
use crate::cubical::Point3;
use crate::error::Result;

/// The boundary of the unit cube, vertex (x,y,z) labelled 4x + 2y + z so
/// that labels follow the lexicographic order of the coordinates.
pub fn hollow_cube() -> AbstractCubicalComplex {
    AbstractCubicalComplex::new(8, &[], &hollow_cube_faces()).expect("valid faces")
}

pub fn hollow_cube_faces() -> [Square; 6] {
    [
        [0, 1, 2, 3],
        [0, 1, 4, 5],
        [0, 2, 4, 6],
        [1, 3, 5, 7],
        [2, 3, 6, 7],
        [4, 5, 6, 7],
    ]
}

/// Edges (as label pairs) of the spanning tree used with the 3×3 torus.
pub const TORUS_TREE: [(usize, usize); 8] = [
    (0, 1),
    (1, 2),
    (0, 3),
    (3, 4),
    (1, 5),
    (5, 7),
    (5, 6),
    (7, 8),
];

/// The 3×3 cubical torus together with the spanning tree [`TORUS_TREE`]
/// rooted at v0.
pub fn example_torus() -> (AbstractCubicalComplex, SpanningForest) {
    let t = torus(3, 3).expect("3×3 torus");
    let edges: Vec<_> = TORUS_TREE
        .iter()
        .map(|&(a, b)| t.edge(a, b).expect("tree edge"))
        .collect();
    let forest =
        SpanningForest::from_edges(t.chain(), &[t.vertex(0)], &edges).expect("spanning tree");
    (t, forest)
}

/// The n×m cubical torus, n, m ≥ 3.
pub fn cubical_torus(n: usize, m: usize) -> Result<AbstractCubicalComplex> {
    torus(n, m)
}

fn p(x: i32, y: i32, z: i32) -> Point3 {
    Point3::new(x, y, z)
}

/// A solid block of voxels [0,nx)×[0,ny)×[0,nz).
pub fn block(nx: i32, ny: i32, nz: i32) -> Vec<Point3> {
    let mut out = Vec::new();
    for z in 0..nz {
        for y in 0..ny {
            for x in 0..nx {
                out.push(p(x, y, z));
            }
        }
    }
    out
}

/// A 3×3×3 block with its centre voxel removed: a thick hollow sphere.
pub fn hollow_block() -> Vec<Point3> {
    block(3, 3, 3)
        .into_iter()
        .filter(|&v| v != p(1, 1, 1))
        .collect()
}

/// A 3×3×1 ring of eight voxels: a solid torus.
pub fn solid_torus() -> Vec<Point3> {
    block(3, 3, 1)
        .into_iter()
        .filter(|&v| v != p(1, 1, 0))
        .collect()
}

/// The perimeter of a `size`×`size` square of voxels starting at `origin`
/// and spanned by the axes `u` and `v`.
pub fn square_ring(origin: Point3, u: usize, v: usize, size: i32) -> Vec<Point3> {
    let mut out = Vec::new();
    for a in 0..size {
        for b in 0..size {
            if a == 0 || b == 0 || a == size - 1 || b == size - 1 {
                out.push(origin.shifted(u, a).shifted(v, b));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Two linked rings of side 5.
pub fn linked_rings() -> Vec<Point3> {
    let mut out = square_ring(p(0, 0, 2), 0, 1, 5);
    out.extend(square_ring(p(2, 2, 0), 0, 2, 5));
    out.sort_unstable();
    out
}

/// Two unlinked rings of side 5, same shapes as [`linked_rings`].
pub fn unlinked_rings() -> Vec<Point3> {
    let mut out = square_ring(p(0, 0, 2), 0, 1, 5);
    out.extend(square_ring(p(6, 2, 0), 0, 2, 5));
    out.sort_unstable();
    out
}

/// A chain of `n` rings of side 7, each linked with its neighbours only.
pub fn ring_chain(n: usize) -> Vec<Point3> {
    let mut out = Vec::new();
    for k in 0..n as i32 {
        if k % 2 == 0 {
            out.extend(square_ring(p(4 * k, 0, 3), 0, 1, 7));
        } else {
            out.extend(square_ring(p(4 * k, 3, 0), 0, 2, 7));
        }
    }
    out.sort_unstable();
    out
}

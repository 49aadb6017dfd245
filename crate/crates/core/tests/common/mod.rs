#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use cubical_ring::abstract_complex::{AbstractCubicalComplex, Square};
use cubical_ring::atmodel::ATModel;
use cubical_ring::fixtures::TORUS_TREE;
use cubical_ring::{CellId, Chain, ChainMap, GradedChainComplex, Point3};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Voxels of an n×n×n box, each present with probability `density`.
pub fn random_voxels(rng: &mut impl Rng, n: i32, density: f64) -> Vec<Point3> {
    let mut out = Vec::new();
    for z in 0..n {
        for y in 0..n {
            for x in 0..n {
                if rng.gen_bool(density) {
                    out.push(Point3::new(x, y, z));
                }
            }
        }
    }
    out
}

/// Nonempty random voxel set in a box of side at most `max_side`.
pub fn random_nonempty_voxels(rng: &mut impl Rng, max_side: i32) -> Vec<Point3> {
    loop {
        let n = rng.gen_range(1..=max_side);
        let density = rng.gen_range(0.2..0.9);
        let v = random_voxels(rng, n, density);
        if !v.is_empty() {
            return v;
        }
    }
}

/// A random abstract cubical 2-complex with between 1 and `max_squares` squares.
pub fn random_square_complex(rng: &mut impl Rng, max_squares: usize) -> AbstractCubicalComplex {
    let n_vertices = rng.gen_range(4..=12);
    let labels: Vec<usize> = (0..n_vertices).collect();
    let possible = n_vertices * (n_vertices - 1) * (n_vertices - 2) * (n_vertices - 3) / 24;
    let wanted = rng.gen_range(1..=max_squares.min(possible));
    let mut squares: BTreeSet<Square> = BTreeSet::new();
    while squares.len() < wanted {
        let mut s: Vec<usize> = labels.choose_multiple(rng, 4).copied().collect();
        s.sort_unstable();
        squares.insert([s[0], s[1], s[2], s[3]]);
    }
    let squares: Vec<Square> = squares.into_iter().collect();
    AbstractCubicalComplex::new(n_vertices, &[], &squares).expect("valid squares")
}

/// The AT-model of the 3×3 torus as tabulated by hand: f, g and H are
/// written down directly and φ is found by exhaustive search over 2-chains.
pub fn torus_table_model(t: &AbstractCubicalComplex) -> ATModel {
    let cx = t.chain();
    let v = |i: usize| t.vertex(i);
    let e = |a: usize, b: usize| t.edge(a, b).expect("edge");
    let b1 = e(0, 2);
    let b2 = e(0, 4);
    let c = t.square(&[0, 2, 4, 8]).expect("square");
    let squares = cx.cells_of_dim(2);

    let mut f = ChainMap::new(0);
    for i in 0..9 {
        f.set(v(i), Chain::singleton(0, v(0)));
    }
    for (a, b) in [(0, 2), (3, 6), (4, 8)] {
        f.set(e(a, b), Chain::singleton(1, b1));
    }
    for (a, b) in [(0, 4), (1, 7), (2, 8)] {
        f.set(e(a, b), Chain::singleton(1, b2));
    }
    f.set(c, Chain::singleton(2, c));

    let mut g = ChainMap::new(0);
    g.set(v(0), Chain::singleton(0, v(0)));
    g.set(b1, Chain::from_cells(1, [e(0, 1), e(1, 2), b1]));
    g.set(b2, Chain::from_cells(1, [e(0, 3), e(3, 4), b2]));
    g.set(c, Chain::from_cells(2, squares.iter().copied()));

    // vertices: the path to v0 in the spanning tree
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in &TORUS_TREE {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let mut phi = ChainMap::new(1);
    let mut path: BTreeMap<usize, Chain> = BTreeMap::from([(0, Chain::zero(1))]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[&x] {
            if !path.contains_key(&y) {
                let mut p = path[&x].clone();
                p.toggle(e(x, y));
                path.insert(y, p);
                queue.push_back(y);
            }
        }
    }
    for (i, p) in &path {
        phi.set(v(*i), p.clone());
    }

    // edges: the 2-chain x avoiding c with ∂x = e + gf(e) + φ∂(e)
    let partial = ATModel::from_parts(cx, [v(0), b1, b2, c], f.clone(), g.clone(), phi.clone())
        .expect("degrees");
    for edge in cx.cells_of_dim(1) {
        let mut rhs = Chain::singleton(1, edge);
        for h in partial.f(edge, 1).iter() {
            rhs.add_assign(&partial.g(h, 1));
        }
        rhs.add_assign(&partial.phi_map().apply(cx.boundary(edge)));
        let x = solve_boundary(cx, &squares, &rhs, c).expect("φ exists");
        phi.set(edge, x);
    }
    ATModel::from_parts(cx, [v(0), b1, b2, c], f, g, phi).expect("degrees")
}

/// A 2-chain avoiding `avoid` whose boundary is `rhs`, by brute force.
fn solve_boundary(
    cx: &GradedChainComplex,
    squares: &[CellId],
    rhs: &Chain,
    avoid: CellId,
) -> Option<Chain> {
    let free: Vec<CellId> = squares.iter().copied().filter(|&s| s != avoid).collect();
    (0u32..1 << free.len()).find_map(|mask| {
        let x = Chain::from_cells(
            2,
            free.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &s)| s),
        );
        (cx.boundary_chain(&x).ok()? == *rhs).then_some(x)
    })
}

/// Whether a voxel set is connected under 26-adjacency.
pub fn is_26_connected(voxels: &[Point3]) -> bool {
    let Some(&start) = voxels.first() else {
        return true;
    };
    let set: BTreeSet<Point3> = voxels.iter().copied().collect();
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for n in p.neighbors26() {
            if set.contains(&n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len() == set.len()
}

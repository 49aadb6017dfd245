//! AT-model of a 2-dimensional complex (the boundary surface ∂Q) driven by a
//! spanning forest of its 1-skeleton.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::engine::{Builder, KillRule};
use super::ATModel;
use crate::chain::{CellId, Chain};
use crate::complex::GradedChainComplex;
use crate::error::{Error, Result};

/// A rooted spanning forest of the 1-skeleton: one tree per connected
/// component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningForest {
    roots: Vec<CellId>,
    /// vertex → (parent vertex, tree edge)
    parent: BTreeMap<CellId, (CellId, CellId)>,
    /// Vertices in breadth-first order, each tree after the previous one.
    order: Vec<CellId>,
}

fn edge_ends(cx: &GradedChainComplex, e: CellId) -> Result<(CellId, CellId)> {
    match cx.boundary(e).cells() {
        [a, b] => Ok((*a, *b)),
        _ => Err(Error::usage(format!(
            "edge {e} does not have two distinct endpoints"
        ))),
    }
}

fn adjacency(cx: &GradedChainComplex) -> Result<BTreeMap<CellId, Vec<(CellId, CellId)>>> {
    let mut adj: BTreeMap<CellId, Vec<(CellId, CellId)>> = cx
        .cells_of_dim(0)
        .into_iter()
        .map(|v| (v, Vec::new()))
        .collect();
    for e in cx.cells_of_dim(1) {
        let (a, b) = edge_ends(cx, e)?;
        adj.get_mut(&a).expect("vertex").push((b, e));
        adj.get_mut(&b).expect("vertex").push((a, e));
    }
    for list in adj.values_mut() {
        list.sort_unstable();
    }
    Ok(adj)
}

impl SpanningForest {
    /// Breadth-first forest, rooted at the smallest vertex of each
    /// component, visiting neighbours in increasing id order.
    pub fn bfs(cx: &GradedChainComplex) -> Result<Self> {
        let adj = adjacency(cx)?;
        let mut parent = BTreeMap::new();
        let mut roots = Vec::new();
        let mut order = Vec::new();
        let mut seen = BTreeSet::new();
        for &start in adj.keys() {
            if !seen.insert(start) {
                continue;
            }
            roots.push(start);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &(w, e) in &adj[&v] {
                    if seen.insert(w) {
                        parent.insert(w, (v, e));
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok(SpanningForest {
            roots,
            parent,
            order,
        })
    }

    /// A forest given by its roots and tree edges. Fails unless the edges
    /// form a forest spanning the 1-skeleton with exactly one root in each
    /// connected component.
    pub fn from_edges(cx: &GradedChainComplex, roots: &[CellId], edges: &[CellId]) -> Result<Self> {
        let vertices = cx.cells_of_dim(0);
        let mut tree_adj: BTreeMap<CellId, Vec<(CellId, CellId)>> =
            vertices.iter().map(|&v| (v, Vec::new())).collect();
        let edge_set: BTreeSet<CellId> = edges.iter().copied().collect();
        if edge_set.len() != edges.len() {
            return Err(Error::usage("tree edge listed twice"));
        }
        for &e in &edge_set {
            if cx.try_dim(e)? != 1 {
                return Err(Error::usage(format!("tree edge {e} is not an edge")));
            }
            let (a, b) = edge_ends(cx, e)?;
            tree_adj.get_mut(&a).expect("vertex").push((b, e));
            tree_adj.get_mut(&b).expect("vertex").push((a, e));
        }
        for list in tree_adj.values_mut() {
            list.sort_unstable();
        }
        let mut parent = BTreeMap::new();
        let mut order = Vec::new();
        let mut seen = BTreeSet::new();
        let mut used_edges = 0;
        for &root in roots {
            if cx.try_dim(root)? != 0 {
                return Err(Error::usage(format!("root {root} is not a vertex")));
            }
            if !seen.insert(root) {
                return Err(Error::usage(format!(
                    "root {root} lies in a tree that already has a root"
                )));
            }
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &(w, e) in &tree_adj[&v] {
                    if parent.get(&v).is_some_and(|&(_, pe)| pe == e) {
                        continue;
                    }
                    if !seen.insert(w) {
                        return Err(Error::usage(format!(
                            "tree edges contain a cycle through {e}, or two roots share a tree"
                        )));
                    }
                    parent.insert(w, (v, e));
                    used_edges += 1;
                    queue.push_back(w);
                }
            }
        }
        if let Some(v) = vertices.iter().find(|v| !seen.contains(v)) {
            return Err(Error::usage(format!(
                "vertex {v} is not reached from any root"
            )));
        }
        debug_assert_eq!(used_edges, edge_set.len());
        let forest = SpanningForest {
            roots: roots.to_vec(),
            parent,
            order,
        };
        let components = SpanningForest::bfs(cx)?.roots.len();
        if components != forest.roots.len() {
            return Err(Error::usage(format!(
                "{} roots given for {components} connected components",
                forest.roots.len()
            )));
        }
        Ok(forest)
    }

    pub fn roots(&self) -> &[CellId] {
        &self.roots
    }

    /// The parent vertex and connecting tree edge of a non-root vertex.
    pub fn parent(&self, v: CellId) -> Option<(CellId, CellId)> {
        self.parent.get(&v).copied()
    }

    pub fn tree_edges(&self) -> BTreeSet<CellId> {
        self.parent.values().map(|&(_, e)| e).collect()
    }

    /// Root of the tree containing `v`.
    pub fn root_of(&self, mut v: CellId) -> CellId {
        while let Some((p, _)) = self.parent(v) {
            v = p;
        }
        v
    }

    /// Checks that this forest belongs to `cx`.
    fn validate(&self, cx: &GradedChainComplex) -> Result<()> {
        let vertices = cx.cells_of_dim(0);
        if vertices.len() != self.order.len() {
            return Err(Error::usage(
                "spanning forest does not cover the vertices of the complex",
            ));
        }
        for &v in &vertices {
            match self.parent(v) {
                None if self.roots.contains(&v) => {}
                None => {
                    return Err(Error::usage(format!(
                        "vertex {v} has no parent and is not a root"
                    )))
                }
                Some((p, e)) => {
                    if cx.try_dim(e)? != 1 || cx.boundary(e) != &Chain::from_cells(0, [v, p]) {
                        return Err(Error::usage(format!(
                            "tree edge {e} does not join {v} and its parent"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// AT-model of a 2-complex from a spanning forest of its 1-skeleton.
///
/// Vertices are contracted to the roots along the trees, squares with a
/// single unused edge absorb that edge, and the remaining squares either
/// become 2-generators or kill a 1-generator. Whenever a choice is free the
/// smallest cell id is taken, except when several squares can absorb an
/// edge: the one with the largest id goes first.
pub fn atmodel_boundary(cx: &GradedChainComplex, forest: &SpanningForest) -> Result<ATModel> {
    if cx.max_dim().is_some_and(|d| d > 2) {
        return Err(Error::usage(
            "boundary AT-model needs a complex without 3-cells",
        ));
    }
    forest.validate(cx)?;
    let mut b = Builder::new(cx);

    // vertices and tree edges
    let mut root_of: BTreeMap<CellId, CellId> = BTreeMap::new();
    let tree = forest.tree_edges();
    for &v in &forest.order {
        match forest.parent(v) {
            None => {
                root_of.insert(v, v);
                b.make_generator(v);
            }
            Some((p, e)) => {
                let root = root_of[&p];
                root_of.insert(v, root);
                b.set_f(v, Chain::singleton(0, root));
                let mut phi = b.phi(p).clone();
                phi.toggle(e);
                b.set_phi(v, phi);
            }
        }
    }

    // squares absorbing free edges
    let cob = cx.coboundaries();
    let squares = cx.cells_of_dim(2);
    let mut free_edges: BTreeSet<CellId> = cx
        .cells_of_dim(1)
        .into_iter()
        .filter(|e| !tree.contains(e))
        .collect();
    let mut free_count: BTreeMap<CellId, usize> = squares
        .iter()
        .map(|&s| {
            (
                s,
                cx.boundary(s)
                    .iter()
                    .filter(|e| free_edges.contains(e))
                    .count(),
            )
        })
        .collect();
    let mut candidates: BTreeSet<CellId> = free_count
        .iter()
        .filter(|(_, &n)| n == 1)
        .map(|(&s, _)| s)
        .collect();
    let use_edge = |a: CellId,
                    free_edges: &mut BTreeSet<CellId>,
                    free_count: &mut BTreeMap<CellId, usize>,
                    candidates: &mut BTreeSet<CellId>| {
        free_edges.remove(&a);
        for s in &cob[a.index()] {
            if let Some(n) = free_count.get_mut(s) {
                *n -= 1;
                match *n {
                    1 => {
                        candidates.insert(*s);
                    }
                    0 => {
                        candidates.remove(s);
                    }
                    _ => {}
                }
            }
        }
    };
    while let Some(&first_free) = free_edges.first() {
        if let Some(&c) = candidates.last() {
            candidates.remove(&c);
            free_count.remove(&c);
            let a = cx
                .boundary(c)
                .iter()
                .find(|e| free_edges.contains(e))
                .expect("candidate square has one free edge");
            let mut rest = cx.boundary(c).clone();
            rest.toggle(a);
            let f = b.f_of(&rest);
            let mut phi = b.phi_of(&rest);
            phi.toggle(c);
            b.set_f(a, f);
            b.set_phi(a, phi);
            use_edge(a, &mut free_edges, &mut free_count, &mut candidates);
        } else {
            b.make_generator(first_free);
            use_edge(
                first_free,
                &mut free_edges,
                &mut free_count,
                &mut candidates,
            );
        }
    }

    // remaining squares
    for c in free_count.into_keys() {
        b.absorb(cx, c, KillRule::Min);
    }
    Ok(b.finish(cx))
}

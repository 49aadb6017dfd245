//! Face reduction: cancel interior cells in pairs (σ, σ′), σ′ a facet of σ,
//! rewriting the boundaries that mention σ′ so homology is unchanged.

use std::collections::BTreeSet;

use crate::chain::CellId;
use crate::complex::GradedChainComplex;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FaceReduction {
    /// The reduced complex K. Every cell of ∂Q is still present with its
    /// original boundary.
    pub complex: GradedChainComplex,
    /// Number of (σ, σ′) pairs removed.
    pub pairs: usize,
    /// Number of scans over the interior cells, including the last one
    /// that found nothing.
    pub passes: usize,
}

/// Reduces `q` by cancelling pairs of cells outside `dq`.
///
/// Each pass scans the surviving interior cells by decreasing dimension
/// and increasing id and pairs each one with its smallest interior facet,
/// if any. Passes repeat until one removes nothing.
pub fn face_reduction(q: &GradedChainComplex, dq: &GradedChainComplex) -> Result<FaceReduction> {
    if let Some(c) = dq.ids().find(|&c| !q.contains(c)) {
        return Err(Error::usage(format!(
            "cell {c} of the boundary is not a cell of Q"
        )));
    }
    let mut k = q.clone();
    let mut cob: Vec<BTreeSet<CellId>> = q
        .coboundaries()
        .into_iter()
        .map(|v| v.into_iter().collect())
        .collect();
    let interior_by_dim: Vec<Vec<CellId>> = (0..4)
        .map(|d| {
            q.cells_of_dim(d)
                .into_iter()
                .filter(|&c| !dq.contains(c))
                .collect()
        })
        .collect();

    let mut pairs = 0;
    let mut passes = 0;
    loop {
        passes += 1;
        let mut changed = false;
        for d in (1..4).rev() {
            for &sigma in &interior_by_dim[d] {
                if !k.contains(sigma) {
                    continue;
                }
                let Some(facet) = k.boundary(sigma).iter().find(|&c| !dq.contains(c)) else {
                    continue;
                };
                cancel(&mut k, &mut cob, sigma, facet);
                pairs += 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(FaceReduction {
        complex: k,
        pairs,
        passes,
    })
}

fn cancel(k: &mut GradedChainComplex, cob: &mut [BTreeSet<CellId>], sigma: CellId, facet: CellId) {
    let bd = k.boundary(sigma).clone();
    let others: Vec<CellId> = cob[facet.index()]
        .iter()
        .copied()
        .filter(|&c| c != sigma)
        .collect();
    for c in others {
        k.boundary_mut(c).add_assign(&bd);
        for x in bd.iter() {
            let set = &mut cob[x.index()];
            if !set.remove(&c) {
                set.insert(c);
            }
        }
    }
    for tau in std::mem::take(&mut cob[sigma.index()]) {
        k.boundary_mut(tau).toggle(sigma);
    }
    for x in bd.iter() {
        cob[x.index()].remove(&sigma);
    }
    debug_assert!(cob[facet.index()].is_empty());
    for x in k.boundary(facet).clone().iter() {
        cob[x.index()].remove(&facet);
    }
    k.remove(sigma);
    k.remove(facet);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Chain;
    use crate::cubical::{complex_from_voxels, ElementaryCube, Point3};
    use crate::homology::betti_oracle;
    use std::collections::HashSet;

    fn block(n: i32) -> Vec<Point3> {
        (0..n)
            .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| Point3::new(x, y, z))))
            .collect()
    }

    fn reduce(voxels: &[Point3]) -> (GradedChainComplex, GradedChainComplex, FaceReduction) {
        let q = complex_from_voxels(voxels).unwrap();
        let set: HashSet<Point3> = voxels.iter().copied().collect();
        let dq = q.boundary_subcomplex(&set).unwrap();
        let r = face_reduction(q.chain(), dq.chain()).unwrap();
        (q.into_chain(), dq.into_chain(), r)
    }

    #[test]
    fn single_voxel_keeps_its_cube() {
        let (q, dq, r) = reduce(&[Point3::new(0, 0, 0)]);
        assert_eq!(r.pairs, 0);
        assert_eq!(r.complex.len(), q.len());
        assert_eq!(r.complex.len(), dq.len() + 1);
    }

    #[test]
    fn two_cubes_sharing_a_square() {
        let a = Point3::new(0, 0, 0);
        let b = Point3::new(1, 0, 0);
        let (q, dq, r) = reduce(&[a, b]);
        let geo = complex_from_voxels(&[a, b]).unwrap();
        let ca = geo.id_of(&ElementaryCube::voxel(a)).unwrap();
        let cb = geo.id_of(&ElementaryCube::voxel(b)).unwrap();
        assert_eq!(r.pairs, 1);
        // the surviving cube is bounded by the ten outer squares
        let survivor = if r.complex.contains(ca) { ca } else { cb };
        assert!(!r.complex.contains(if survivor == ca { cb } else { ca }));
        let expected = Chain::from_cells(2, q.boundary(ca).iter().chain(q.boundary(cb).iter()));
        assert_eq!(expected.len(), 10);
        assert_eq!(r.complex.boundary(survivor), &expected);
        assert!(r.complex.boundary(survivor).iter().all(|s| dq.contains(s)));
    }

    #[test]
    fn solid_block_keeps_homology_and_boundary() {
        let (q, dq, r) = reduce(&block(3));
        let k = &r.complex;
        k.check_boundary_squared().unwrap();
        assert_eq!(betti_oracle(k).unwrap(), betti_oracle(&q).unwrap());
        assert_eq!(betti_oracle(k).unwrap().triple(), (1, 0, 0));
        for c in dq.ids() {
            assert_eq!(k.boundary(c), dq.boundary(c));
        }
        assert_eq!(k.len() - dq.len(), 1);
    }

    #[test]
    fn interior_cells_end_up_bounded_by_the_surface() {
        let vox: Vec<Point3> = block(3)
            .into_iter()
            .filter(|&p| p != Point3::new(1, 1, 1))
            .collect();
        let (q, dq, r) = reduce(&vox);
        let k = &r.complex;
        for c in k.ids().filter(|&c| !dq.contains(c)) {
            assert!(k.boundary(c).iter().all(|x| dq.contains(x)));
        }
        assert_eq!(betti_oracle(k).unwrap(), betti_oracle(&q).unwrap());
    }

    #[test]
    fn rejects_foreign_boundary() {
        let q = complex_from_voxels(&[Point3::new(0, 0, 0)]).unwrap();
        let other = complex_from_voxels(&block(2)).unwrap();
        assert!(face_reduction(q.chain(), other.chain()).is_err());
    }
}

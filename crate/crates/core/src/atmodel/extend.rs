//! Extending an AT-model of ∂Q to the reduced complex K ⊇ ∂Q.

use super::engine::Builder;
use super::{verify_atmodel, ATModel, AxiomReport};
use crate::chain::ChainMap;
use crate::complex::GradedChainComplex;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Extension {
    pub model: ATModel,
    /// Whether the representative cycles inherited from ∂Q failed
    /// verification and were recomputed as g(σ) = σ + φ∂(σ).
    pub g_recomputed: bool,
    pub report: AxiomReport,
}

/// Adds the cells of K that are not in ∂Q, by increasing dimension and id,
/// to an AT-model of ∂Q.
///
/// Each added cell must kill a generator: the smallest cell of f∂(σᵢ)
/// leaves H and f, φ are updated on every earlier cell, ∂Q included. The
/// representative cycles of the surviving generators are kept from the
/// model of ∂Q, so they stay supported in ∂Q.
pub fn atmodel_extend(
    dq: &GradedChainComplex,
    model: &ATModel,
    k: &GradedChainComplex,
) -> Result<Extension> {
    for c in dq.ids() {
        if !k.contains(c) || k.boundary(c) != dq.boundary(c) {
            return Err(Error::usage(format!(
                "cell {c} of ∂Q is not a cell of K with the same boundary"
            )));
        }
    }
    let mut b = Builder::from_model(k, model);
    let added: Vec<_> = k
        .ids_by_dim()
        .into_iter()
        .filter(|&c| !dq.contains(c))
        .collect();
    for sigma in added {
        let fb = b.f_of(k.boundary(sigma));
        let Some(a) = fb.min_cell() else {
            return Err(Error::integrity(format!(
                "adding {sigma} to K creates a new cycle (f∂ is zero)"
            )));
        };
        b.kill(k, sigma, a, &fb);
    }
    let mut kept = ChainMap::new(0);
    for set in &b.generators {
        for &gen in set {
            kept.set(gen, model.g(gen, k.dim(gen)));
        }
    }
    let mut extended = b.finish_with_g(kept);
    let mut report = verify_atmodel(k, &extended);
    let mut g_recomputed = false;
    if !report.is_valid() {
        let gens: Vec<_> = extended.all_generators().collect();
        for gen in gens {
            let mut g = extended.phi_map().apply(k.boundary(gen));
            g.toggle(gen);
            extended.g_map_mut().set(gen, g);
        }
        report = verify_atmodel(k, &extended);
        g_recomputed = true;
    }
    Ok(Extension {
        model: extended,
        g_recomputed,
        report,
    })
}

//! Picture → Q → ∂Q → AT-model of ∂Q → K → AT-model of K → cup products.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::atmodel::{
    atmodel_boundary, atmodel_extend, face_reduction, verify_atmodel, ATModel, Axiom, AxiomReport,
    Extension, FaceReduction, SpanningForest,
};
use crate::complex::GradedChainComplex;
use crate::cubical::{complex_from_voxels, CubicalComplex, Point3};
use crate::cup::{cup_matrix, equivalence_check_rank, CupKind, CupMatrix};
use crate::error::{Error, Result};
use crate::homology::{betti_oracle, Betti};
use crate::picture::{foreground_components, CycleProjector, Picture3D, VoxelCycle};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StageTimings {
    pub complex: Duration,
    pub boundary_model: Duration,
    pub reduction: Duration,
    pub extension: Duration,
    pub cup: Duration,
}

impl StageTimings {
    pub fn total(&self) -> Duration {
        self.complex + self.boundary_model + self.reduction + self.extension + self.cup
    }

    pub fn stages(&self) -> [(&'static str, Duration); 5] {
        [
            ("complex", self.complex),
            ("boundary_model", self.boundary_model),
            ("reduction", self.reduction),
            ("extension", self.extension),
            ("cup", self.cup),
        ]
    }
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub voxels: Vec<Point3>,
    /// Q, which also holds the geometry of every cell of ∂Q and K.
    pub q: CubicalComplex,
    pub dq: CubicalComplex,
    pub forest: SpanningForest,
    pub boundary_model: ATModel,
    pub reduction: FaceReduction,
    pub extension: Extension,
    pub cup: CupMatrix,
    pub timings: StageTimings,
}

impl Analysis {
    pub fn k(&self) -> &GradedChainComplex {
        &self.reduction.complex
    }

    pub fn model(&self) -> &ATModel {
        &self.extension.model
    }

    /// Betti numbers read off the generators of the final model.
    pub fn betti(&self) -> Betti {
        Betti(self.model().generator_counts())
    }

    /// (|Q|, |∂Q|, |K|).
    pub fn cell_counts(&self) -> (usize, usize, usize) {
        (self.q.len(), self.dq.len(), self.k().len())
    }

    /// Voxel drawings of every generator, in increasing id order.
    pub fn cycles(&self, picture: &Picture3D) -> Result<Vec<VoxelCycle>> {
        let projector = CycleProjector::new(&self.q, self.dq.chain(), picture);
        self.model()
            .all_generators()
            .map(|s| projector.project(self.model(), s))
            .collect()
    }
}

/// Runs the whole pipeline on a nonempty voxel set.
pub fn analyze_voxels(voxels: &[Point3]) -> Result<Analysis> {
    let mut timings = StageTimings::default();
    let t = Instant::now();
    let mut voxels = voxels.to_vec();
    voxels.sort_unstable();
    voxels.dedup();
    let q = complex_from_voxels(&voxels)?;
    let set: HashSet<Point3> = voxels.iter().copied().collect();
    let dq = q.boundary_subcomplex(&set)?;
    timings.complex = t.elapsed();

    let t = Instant::now();
    let forest = SpanningForest::bfs(dq.chain())?;
    let boundary_model = atmodel_boundary(dq.chain(), &forest)?;
    timings.boundary_model = t.elapsed();

    let t = Instant::now();
    let reduction = face_reduction(q.chain(), dq.chain())?;
    timings.reduction = t.elapsed();

    let t = Instant::now();
    let extension = atmodel_extend(dq.chain(), &boundary_model, &reduction.complex)?;
    timings.extension = t.elapsed();

    let t = Instant::now();
    let cup = cup_matrix(&reduction.complex, &extension.model, CupKind::Cubical)?;
    timings.cup = t.elapsed();

    Ok(Analysis {
        voxels,
        q,
        dq,
        forest,
        boundary_model,
        reduction,
        extension,
        cup,
        timings,
    })
}

/// Runs the pipeline on a picture whose foreground is one nonempty
/// 26-connected component.
pub fn analyze_picture(p: &Picture3D) -> Result<Analysis> {
    match foreground_components(p) {
        0 => Err(Error::usage("the picture has an empty foreground")),
        1 => analyze_voxels(&p.foreground()),
        n => Err(Error::Disconnected(n)),
    }
}

/// Outcome of one verification check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// `None` when the check passed, otherwise what failed.
    pub failure: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, failure: Option<String>) -> Self {
        Check {
            name: name.into(),
            failure,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn axiom_checks(stage: &str, report: &AxiomReport) -> Vec<Check> {
    report
        .checks
        .iter()
        .filter(|c| c.axiom != Axiom::Normalized)
        .map(|c| {
            Check::new(
                format!("{stage}: {}", c.axiom.name()),
                c.first_violation
                    .map(|cell| format!("fails first at cell {cell}")),
            )
        })
        .collect()
}

fn boundary_check(name: &str, cx: &GradedChainComplex) -> Check {
    Check::new(
        format!("∂∂ = 0 on {name}"),
        cx.check_boundary_squared().err().map(|e| e.to_string()),
    )
}

/// Checks every stage of an analysis: ∂∂ = 0 on Q, ∂Q and K, the axioms of
/// both AT-models, and with `oracle` the Betti numbers against Gaussian
/// elimination and the cup-product rank against the triangulated complex.
pub fn verify_analysis(a: &Analysis, oracle: bool) -> Vec<Check> {
    let mut out = vec![
        boundary_check("Q", a.q.chain()),
        boundary_check("∂Q", a.dq.chain()),
        boundary_check("K", a.k()),
    ];
    out.extend(axiom_checks(
        "∂Q model",
        &verify_atmodel(a.dq.chain(), &a.boundary_model),
    ));
    out.extend(axiom_checks("K model", &verify_atmodel(a.k(), a.model())));
    let bad_g = a.model().all_generators().find(|&s| {
        a.model()
            .g(s, a.k().dim(s))
            .iter()
            .any(|c| !a.dq.chain().contains(c))
    });
    out.push(Check::new(
        "representative cycles lie in ∂Q",
        bad_g.map(|s| format!("g({s}) leaves ∂Q")),
    ));
    if oracle {
        let expected = betti_oracle(a.q.chain());
        out.push(Check::new(
            "Betti numbers match the oracle",
            match expected {
                Ok(b) if b == a.betti() => None,
                Ok(b) => Some(format!("model gives {}, oracle gives {b}", a.betti())),
                Err(e) => Some(e.to_string()),
            },
        ));
        out.push(match equivalence_check_rank(a.q.chain()) {
            Ok(eq) => {
                let mut failure = None;
                if !eq.holds() {
                    failure = Some(format!(
                        "cubical rank {} vs simplicial rank {} (Betti {} vs {})",
                        eq.cubical.rank, eq.simplicial.rank, eq.betti_cubical, eq.betti_simplicial
                    ));
                } else if eq.cubical.rank != a.cup.rank {
                    failure = Some(format!(
                        "pipeline rank {} vs direct rank {}",
                        a.cup.rank, eq.cubical.rank
                    ));
                }
                Check::new("cup rank matches the triangulation", failure)
            }
            Err(e) => Check::new("cup rank matches the triangulation", Some(e.to_string())),
        });
    }
    out
}

//! Cohomology rings of 3D digital images over ℤ/2.
//!
//! Build a cubical complex from a voxel set, compute an AT-model (a chain
//! contraction onto homology) of its boundary surface, extend it to the
//! whole complex, and evaluate cup products of 1-cocycles on 2-cycles.

pub mod abstract_complex;
pub mod atmodel;
pub mod chain;
pub mod complex;
pub mod cubical;
pub mod cup;
pub mod error;
pub mod fixtures;
pub mod homology;
pub mod picture;
pub mod pipeline;

pub use atmodel::{
    atmodel_boundary, atmodel_extend, atmodel_incremental, cocycle_eval, face_reduction,
    subdivide_atmodel, verify_atmodel, ATModel, Axiom, AxiomReport, SpanningForest,
};
pub use chain::{chain_add, scalar_product, CellId, Chain, ChainMap, Dim};
pub use complex::{Cell, GradedChainComplex};
pub use cubical::{
    boundary_subcomplex, check_p1, complex_from_voxels, cube_vertices, CubicalComplex,
    ElementaryCube, Point3,
};
pub use cup::{
    cup_cubical, cup_matrix, cup_simplicial, discriminate, equivalence_check_2d,
    equivalence_check_rank, triangulate_kq, CupKind, CupMatrix, Verdict,
};
pub use error::{Error, Result};
pub use homology::{betti_oracle, Betti};
pub use picture::{
    complement_picture, cycle_to_voxels, foreground_components, parse_picture,
    serialize_coordinates, serialize_picture, Picture3D, VoxelCycle,
};
pub use pipeline::{analyze_picture, analyze_voxels, verify_analysis, Analysis};

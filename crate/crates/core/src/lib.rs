//! Facet ideals of simplicial complexes.
//!
//! Complexes are stored by their facets as vertex bitmasks over a labelled
//! universe of at most 64 vertices. On top of that the crate provides
//! leaf/joint detection and tree recognition, minimal vertex covers and
//! independent facet sets, localization and grafting, facet and non-face
//! ideals, and two Cohen-Macaulay tests: the unmixedness criterion for trees
//! and a homology oracle applying Reisner's criterion to the Stanley-Reisner
//! complex of the facet ideal.
//!
//! Enumeration and homology run on rayon when the `parallel` feature is on
//! (the default) and sequentially otherwise; results are identical.

pub mod cm;
pub mod complex;
pub mod covers;
pub mod error;
pub mod generate;
pub mod homology;
pub mod ideal;
pub mod io;
pub mod par;
pub mod report;
pub mod transform;
pub mod tree;

pub use cm::{
    artinian_reduction, cm_reisner, cm_reisner_bounded, cm_tree, polarize,
    verify_polarization_roundtrip, ArtinianReduction, HomologyReport, LinkRecord, Polarization,
};
pub use complex::{Complex, Face, VertexUniverse, MAX_VERTICES};
pub use covers::{
    alpha, independence, independence_capped, is_vertex_cover, minimal_vertex_covers, CoverReport,
    IndependenceReport,
};
pub use error::{Error, Result};
pub use generate::{generate, GeneratorConfig, GeneratorMode};
pub use homology::{reduced_homology, ReducedHomology};
pub use ideal::{
    decompose, facet_complex, facet_ideal, nonface_complex, nonface_ideal, verify_intersection,
    verify_intersection_bounded, DecompositionReport, MonomialIdeal,
};
pub use transform::{
    embedded_chain, graft, graft_classes, grafting, is_grafted, localize, localize_labels,
    GraftFailure, GraftResult, GraftingDecomposition, LocalizationKind, LocalizationResult,
};
pub use tree::{
    free_vertices, is_forest, is_forest_all_subcollections, is_joint, is_tree, joints, leaf_report,
    leaves, ForestCertificate, LeafReport,
};

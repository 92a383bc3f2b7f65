//! Extremal graph constructions, clique censuses, and near-r-partite
//! decompositions of dense graphs.
//!
//! The crate is organised around one workflow: build or load a dense graph,
//! count the cliques that obstruct r-partiteness, and either exhibit a copy
//! of a target graph `H` or produce a small edge-deletion set after which
//! the graph splits into `r` parts. Extremal constructions that sit exactly
//! at the relevant degree thresholds live in [`extremal`], brute-force
//! ground truth for small instances in [`oracle`].
//!
//! With the default `parallel` feature the heavy counting loops fan out via
//! rayon; disabling it leaves behaviourally identical sequential code.

pub mod chromatic;
pub mod cliques;
pub mod decompose;
mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod oracle;
pub mod target;

pub use decompose::{
    stability_decompose, DecompositionResult, Floors, Partition, Resolution, Thresholds,
};
pub use error::{Error, Result};
pub use graph::{build_graph, complete_multipartite, Graph, VertexSet};
pub use target::{analyze_target, preset_target, TargetSpec};

//! Writhe-like invariants of reduced alternating link diagrams.
//!
//! A diagram is read from PD or native notation, smoothed into Seifert
//! circles, and summarized by the signed Seifert graph: weights, blocks,
//! Betti numbers, longest cycles and the lock vectors Φ. The [`flips`]
//! module implements the Whitney moves on the graph that these quantities
//! are invariant under, and [`rational`] builds rational links from
//! fractions.

pub mod analysis;
pub mod braid;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod flips;
pub mod graph;
pub mod invariants;
pub mod lock;
pub mod rational;
pub mod seifert;

pub use analysis::{betti, blocks, longest_cycle, two_cuts, Block, BlockDecomposition};
pub use corpus::{bundled, collisions, parse_corpus, CorpusEntry};
pub use diagram::{
    emit_native, emit_pd, mirror, parse_native, parse_pd, reverse_all, reverse_components,
    validate, Arc, Crossing, OrientedDiagram, Sign, ValidationReport,
};
pub use error::{Error, Result};
pub use graph::{MultiEdge, SignedGraph};
pub use invariants::{
    compare, graph_profile, profile, profiles_equal, GraphProfile, InvariantProfile,
};
pub use lock::{find_locks, phi, ClusterVector, Lock, Phi, PhiMode};
pub use seifert::{
    homogeneity_check, is_reduced, seifert_graph, smooth, to_dot, SeifertDecomposition,
};

//! Inputs shared by the benchmarks.

use altwrithe_core::flips::harness::{random_graph, HarnessConfig};
use altwrithe_core::{corpus, parse_pd, OrientedDiagram, SignedGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every diagram of the bundled knot table.
pub fn corpus_diagrams() -> Vec<OrientedDiagram> {
    corpus::bundled()
        .iter()
        .map(|e| parse_pd(&e.pd).expect("bundled entries parse"))
        .collect()
}

/// Harness graphs with exactly `n` vertices.
pub fn graphs(n: usize, count: usize, seed: u64) -> Vec<SignedGraph> {
    let config = HarnessConfig {
        min_vertices: n,
        max_vertices: n,
        ..HarnessConfig::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_graph(&mut rng, &config))
        .collect()
}

//! Random flip walks over random graphs, checking after every step that the
//! graph-level profile, the simple-edge weight multiset, bipartiteness and
//! connectedness are all unchanged.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{walk, FlipMove};
use crate::analysis;
use crate::error::Result;
use crate::graph::SignedGraph;
use crate::invariants::{graph_profile, GraphProfile};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarnessConfig {
    pub min_vertices: usize,
    pub max_vertices: usize,
    /// Weights are drawn from `±[1, max_weight]`.
    pub max_weight: i64,
    pub steps: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            min_vertices: 4,
            max_vertices: 20,
            max_weight: 9,
            steps: 50,
            trials: 1000,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub trial: usize,
    pub step: usize,
    pub flip: String,
    pub fields: Vec<&'static str>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TrialReport {
    pub trial: usize,
    pub vertices: usize,
    pub applied: usize,
    pub skipped: usize,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub trials: usize,
    pub applied: usize,
    pub skipped: usize,
    pub violations: Vec<Violation>,
}

impl HarnessReport {
    pub fn from_trials(trials: impl IntoIterator<Item = TrialReport>) -> Self {
        let mut r = HarnessReport::default();
        for t in trials {
            r.trials += 1;
            r.applied += t.applied;
            r.skipped += t.skipped;
            r.violations.extend(t.violations);
        }
        r
    }
}

/// A connected bipartite graph with sign-uniform blocks and no bridge of
/// absolute weight 1. Weights lean towards 1 so that Type B and C sites
/// (single edges) are common.
pub fn random_graph<R: Rng>(rng: &mut R, config: &HarnessConfig) -> SignedGraph {
    let n = rng.random_range(config.min_vertices.max(2)..=config.max_vertices.max(2));
    let mut colour: Vec<bool> = (0..n).map(|_| rng.random()).collect();
    colour[0] = false;
    colour[1] = true;
    let mut edges: Vec<(usize, usize)> = vec![(0, 1)];
    let mut placed = vec![0, 1];
    for v in 2..n {
        let options: Vec<usize> = placed
            .iter()
            .copied()
            .filter(|&u| colour[u] != colour[v])
            .collect();
        let u = options[rng.random_range(0..options.len())];
        edges.push((u, v));
        placed.push(v);
    }
    let extra = rng.random_range(0..=n);
    for _ in 0..extra {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        let k = (a.min(b), a.max(b));
        if colour[a] != colour[b] && !edges.iter().any(|&(x, y)| (x.min(y), x.max(y)) == k) {
            edges.push(k);
        }
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let (blocks, _) = analysis::biconnected(&adj);
    let mut weighted = Vec::new();
    let max = config.max_weight.max(2);
    for block in blocks {
        let sign = if rng.random() { 1 } else { -1 };
        let bridge = block.len() == 1;
        for (a, b) in block {
            let magnitude = if bridge {
                rng.random_range(2..=max)
            } else if rng.random_bool(0.5) {
                1
            } else {
                rng.random_range(1..=max)
            };
            weighted.push((a, b, sign * magnitude));
        }
    }
    SignedGraph::from_weights(n, &weighted).expect("generated graph is well formed")
}

fn changed_fields(a: &GraphProfile, b: &GraphProfile) -> Vec<&'static str> {
    let checks = [
        ("w_plus", a.w_plus == b.w_plus),
        ("w_minus", a.w_minus == b.w_minus),
        ("xi_plus", a.xi_plus == b.xi_plus),
        ("xi_minus", a.xi_minus == b.xi_minus),
        ("W", a.weights == b.weights),
        ("w_B", a.block_sums == b.block_sums),
        ("W_B", a.block_weights == b.block_weights),
        ("beta", a.betti == b.betti),
        ("beta_hat", a.block_betti == b.block_betti),
        ("gamma", a.block_cycles == b.block_cycles),
    ];
    checks.into_iter().filter(|c| !c.1).map(|c| c.0).collect()
}

/// Trial `index` of the harness; trials are independent, so callers may run
/// them in parallel.
pub fn run_trial(config: &HarnessConfig, index: usize) -> Result<TrialReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let g = random_graph(&mut rng, config);
    let start = graph_profile(&g)?;
    let mut violations = Vec::new();
    let mut step = 0;
    let mut record = |m: &FlipMove, fields: Vec<&'static str>, step: usize| {
        if !fields.is_empty() {
            violations.push(Violation {
                trial: index,
                step,
                flip: m.to_string(),
                fields,
            });
        }
    };
    let outcome = walk(&g, config.steps, &mut rng, |before, m, after| {
        let mut fields = match graph_profile(after) {
            Ok(p) => changed_fields(&start, &p),
            Err(_) => vec!["profile"],
        };
        if after.weight_multiset() != before.weight_multiset() {
            fields.push("edge_multiset");
        }
        if !after.is_bipartite() {
            fields.push("bipartite");
        }
        if !after.is_connected() {
            fields.push("connected");
        }
        record(m, fields, step);
        step += 1;
    })?;
    Ok(TrialReport {
        trial: index,
        vertices: g.vertex_count(),
        applied: outcome.applied,
        skipped: outcome.skipped,
        violations,
    })
}

/// Runs every trial in order.
pub fn run(config: &HarnessConfig) -> Result<HarnessReport> {
    let trials = (0..config.trials)
        .map(|i| run_trial(config, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(HarnessReport::from_trials(trials))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_graphs_meet_the_preconditions() {
        let config = HarnessConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let g = random_graph(&mut rng, &config);
            assert!(g.is_connected());
            assert!(g.is_bipartite());
            assert!(crate::seifert::is_reduced(&g));
            assert!(crate::seifert::homogeneity_check(&g));
            assert!((4..=20).contains(&g.vertex_count()));
        }
    }

    #[test]
    fn small_run_is_clean_and_deterministic() {
        let config = HarnessConfig {
            trials: 20,
            steps: 10,
            seed: 11,
            ..HarnessConfig::default()
        };
        let a = run(&config).unwrap();
        assert!(a.violations.is_empty(), "{:?}", a.violations);
        assert!(a.applied > 0);
        assert_eq!(a, run(&config).unwrap());
    }
}

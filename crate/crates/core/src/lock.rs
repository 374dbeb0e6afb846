//! Locked pairs of Seifert circles and the cluster-vector invariant Φ.
//!
//! Take a cut vertex `v` of the simple representation with two neighbours
//! joined to it by edges of opposite sign. Running once along the hub circle
//! of `v`, the crossings shared with either neighbour fall into maximal runs
//! (clusters) belonging to one neighbour at a time. With four or more runs
//! the pair is locked, and the signed run lengths in cyclic order form its
//! cluster vector.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::analysis;
use crate::graph::SignedGraph;
use crate::seifert::SeifertDecomposition;

/// How cluster vectors are identified.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PhiMode {
    /// Cyclic rotations only.
    #[default]
    Rotation,
    /// Cyclic rotations and reversal.
    RotationReversal,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClusterVector(Vec<i64>);

impl ClusterVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ClusterVector(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negated(&self) -> Self {
        ClusterVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn reversed(&self) -> Self {
        ClusterVector(self.0.iter().rev().copied().collect())
    }

    /// Lexicographically least rotation (integer order, so `-k < k`), also
    /// over the reversed sequence in [`PhiMode::RotationReversal`].
    pub fn canonical(&self, mode: PhiMode) -> Self {
        let best = least_rotation(&self.0);
        match mode {
            PhiMode::Rotation => ClusterVector(best),
            PhiMode::RotationReversal => {
                let rev: Vec<i64> = self.0.iter().rev().copied().collect();
                ClusterVector(best.min(least_rotation(&rev)))
            }
        }
    }

    /// Adjacent entries (cyclically) have opposite signs and none is zero.
    pub fn is_alternating(&self) -> bool {
        let n = self.0.len();
        n.is_multiple_of(2)
            && self.0.iter().all(|&x| x != 0)
            && (0..n).all(|i| self.0[i].signum() != self.0[(i + 1) % n].signum())
    }
}

fn least_rotation(v: &[i64]) -> Vec<i64> {
    (0..v.len().max(1))
        .map(|r| {
            let mut w = v.to_vec();
            if !w.is_empty() {
                w.rotate_left(r);
            }
            w
        })
        .min()
        .unwrap_or_default()
}

impl fmt::Display for ClusterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for ClusterVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

pub fn cyclic_equal(a: &ClusterVector, b: &ClusterVector, mode: PhiMode) -> bool {
    a.len() == b.len() && a.canonical(mode) == b.canonical(mode)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lock {
    pub hub: usize,
    /// (positive-edge neighbour, negative-edge neighbour)
    pub neighbors: (usize, usize),
    pub clusters: ClusterVector,
}

/// Signed run lengths of the crossings shared between `hub` and either
/// neighbour, in traversal order along the hub circle. Crossings shared with
/// `positive` count positively.
pub fn cluster_runs(
    s: &SeifertDecomposition,
    hub: usize,
    positive: usize,
    negative: usize,
) -> ClusterVector {
    let seq: Vec<i64> = s.circles[hub]
        .incident_crossings
        .iter()
        .filter_map(|&c| {
            let other = s.across(c, hub);
            if other == positive {
                Some(1)
            } else if other == negative {
                Some(-1)
            } else {
                None
            }
        })
        .collect();
    if seq.is_empty() {
        return ClusterVector(Vec::new());
    }
    // Start at a run boundary so no run wraps around the end.
    let n = seq.len();
    let Some(start) = (0..n).find(|&i| seq[i] != seq[(i + n - 1) % n]) else {
        return ClusterVector(vec![seq[0] * n as i64]);
    };
    let mut runs: Vec<i64> = Vec::new();
    for i in 0..n {
        let x = seq[(start + i) % n];
        match runs.last_mut() {
            Some(last) if last.signum() == x => *last += x,
            _ => runs.push(x),
        }
    }
    ClusterVector(runs)
}

/// The cluster vector recorded for a lock.
pub fn cluster_vector(lock: &Lock) -> &ClusterVector {
    &lock.clusters
}

/// Every locked neighbour pair around every cut vertex.
pub fn find_locks(s: &SeifertDecomposition, g: &SignedGraph) -> Vec<Lock> {
    let cuts = analysis::blocks_any(g).cut_vertices;
    let adj = g.adjacency();
    let mut locks = Vec::new();
    for hub in cuts {
        let mut pos: Vec<usize> = Vec::new();
        let mut neg: Vec<usize> = Vec::new();
        for &n in &adj[hub] {
            match g.weight(hub, n) {
                Some(w) if w > 0 => pos.push(n),
                Some(w) if w < 0 => neg.push(n),
                _ => {}
            }
        }
        pos.sort_unstable();
        neg.sort_unstable();
        for &p in &pos {
            for &q in &neg {
                let clusters = cluster_runs(s, hub, p, q);
                if clusters.len() >= 4 {
                    locks.push(Lock {
                        hub,
                        neighbors: (p, q),
                        clusters,
                    });
                }
            }
        }
    }
    locks
}

/// Multiset of cluster vectors over all locks, each stored in canonical
/// rotation form and sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Phi {
    vectors: Vec<ClusterVector>,
}

impl Phi {
    pub fn from_vectors(vectors: impl IntoIterator<Item = ClusterVector>) -> Self {
        let mut vectors: Vec<ClusterVector> = vectors
            .into_iter()
            .map(|v| v.canonical(PhiMode::Rotation))
            .collect();
        vectors.sort();
        Phi { vectors }
    }

    pub fn vectors(&self) -> &[ClusterVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Canonical sorted vectors under `mode`.
    pub fn canonical(&self, mode: PhiMode) -> Vec<ClusterVector> {
        let mut v: Vec<ClusterVector> = self.vectors.iter().map(|x| x.canonical(mode)).collect();
        v.sort();
        v
    }

    pub fn equivalent(&self, other: &Phi, mode: PhiMode) -> bool {
        self.canonical(mode) == other.canonical(mode)
    }

    pub fn negated(&self) -> Phi {
        Phi::from_vectors(self.vectors.iter().map(ClusterVector::negated))
    }

    pub fn render(&self, mode: PhiMode) -> String {
        let parts: Vec<String> = self.canonical(mode).iter().map(|v| v.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

pub fn phi(s: &SeifertDecomposition, g: &SignedGraph) -> Phi {
    Phi::from_vectors(find_locks(s, g).into_iter().map(|l| l.clusters))
}

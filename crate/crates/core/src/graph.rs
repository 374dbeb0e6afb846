//! Signed multigraphs and their weighted simple representation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::diagram::Sign;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiEdge {
    /// Crossing id for Seifert graphs; an arbitrary label otherwise.
    pub id: usize,
    pub ends: (usize, usize),
    pub sign: Sign,
}

/// A loopless multigraph on vertices `0..vertex_count` whose edges carry
/// signs, together with its simple representation: one edge per adjacent
/// pair, weighted by sign times multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    vertex_count: usize,
    multi_edges: Vec<MultiEdge>,
    simple: BTreeMap<(usize, usize), i64>,
    multiplicity: BTreeMap<(usize, usize), usize>,
    mixed: BTreeSet<(usize, usize)>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl SignedGraph {
    /// Pairs joined by edges of both signs are recorded (see
    /// [`SignedGraph::mixed_pairs`]) and get the net signed sum as weight.
    pub fn new(vertex_count: usize, multi_edges: Vec<MultiEdge>) -> Result<Self> {
        let mut simple = BTreeMap::new();
        let mut multiplicity = BTreeMap::new();
        let mut signs: BTreeMap<(usize, usize), BTreeSet<Sign>> = BTreeMap::new();
        for e in &multi_edges {
            let (a, b) = e.ends;
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::Graph(format!(
                    "edge {} has an endpoint out of range",
                    e.id
                )));
            }
            if a == b {
                return Err(Error::Graph(format!("edge {} is a loop at {a}", e.id)));
            }
            let k = key(a, b);
            *simple.entry(k).or_insert(0) += e.sign.value();
            *multiplicity.entry(k).or_insert(0) += 1;
            signs.entry(k).or_default().insert(e.sign);
        }
        let mixed = signs
            .into_iter()
            .filter(|(_, s)| s.len() > 1)
            .map(|(k, _)| k)
            .collect();
        let mut multi_edges = multi_edges;
        for e in &mut multi_edges {
            e.ends = key(e.ends.0, e.ends.1);
        }
        multi_edges.sort();
        Ok(SignedGraph {
            vertex_count,
            multi_edges,
            simple,
            multiplicity,
            mixed,
        })
    }

    /// Expands signed simple weights into `|w|` parallel edges each.
    pub fn from_weights(vertex_count: usize, weights: &[(usize, usize, i64)]) -> Result<Self> {
        let mut edges = Vec::new();
        for &(a, b, w) in weights {
            let sign =
                Sign::of(w).ok_or_else(|| Error::Graph(format!("zero weight on {a}-{b}")))?;
            for _ in 0..w.unsigned_abs() {
                edges.push(MultiEdge {
                    id: edges.len(),
                    ends: (a, b),
                    sign,
                });
            }
        }
        SignedGraph::new(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn multi_edges(&self) -> &[MultiEdge] {
        &self.multi_edges
    }

    /// Simple edges keyed by `(min, max)` vertex pair.
    pub fn simple_edges(&self) -> &BTreeMap<(usize, usize), i64> {
        &self.simple
    }

    pub fn simple_edge_count(&self) -> usize {
        self.simple.len()
    }

    pub fn weight(&self, a: usize, b: usize) -> Option<i64> {
        self.simple.get(&key(a, b)).copied()
    }

    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        self.multiplicity.get(&key(a, b)).copied().unwrap_or(0)
    }

    pub fn mixed_pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.mixed
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(a, b) in self.simple.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Sorted multiset of signed simple-edge weights.
    pub fn weight_multiset(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self.simple.values().copied().collect();
        w.sort_unstable();
        w
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.components_without(&[]).len() == 1
    }

    /// Two-colouring check (no odd cycles).
    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency();
        let mut colour = vec![None; self.vertex_count];
        for s in 0..self.vertex_count {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for &u in &adj[v] {
                    match colour[u] {
                        None => {
                            colour[u] = Some(!c);
                            queue.push_back(u);
                        }
                        Some(cu) if cu == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Connected components (sorted vertex lists, sorted by least vertex)
    /// after deleting `removed` and their incident edges.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        components_of(&self.adjacency(), removed)
    }

    /// Copy with every vertex pair's weight negated.
    pub fn negated(&self) -> SignedGraph {
        let edges = self
            .multi_edges
            .iter()
            .map(|e| MultiEdge {
                sign: e.sign.negate(),
                ..*e
            })
            .collect();
        SignedGraph::new(self.vertex_count, edges).expect("negation preserves structure")
    }

    /// Same graph without the multi-edge labelled `id`.
    pub fn without_edge(&self, id: usize) -> SignedGraph {
        let edges = self
            .multi_edges
            .iter()
            .filter(|e| e.id != id)
            .copied()
            .collect();
        SignedGraph::new(self.vertex_count, edges).expect("edge removal preserves structure")
    }
}

/// Components of an adjacency-list graph after deleting `removed`.
pub(crate) fn components_of(adj: &[Vec<usize>], removed: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; adj.len()];
    for &r in removed {
        seen[r] = true;
    }
    let mut out = Vec::new();
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_representation_aggregates_multiplicity() {
        let g = SignedGraph::from_weights(3, &[(0, 1, 3), (2, 1, -2)]).unwrap();
        assert_eq!(g.multi_edges().len(), 5);
        assert_eq!(g.weight(1, 0), Some(3));
        assert_eq!(g.weight(1, 2), Some(-2));
        assert_eq!(g.multiplicity(2, 1), 2);
        assert_eq!(g.weight_multiset(), vec![-2, 3]);
        assert!(g.mixed_pairs().is_empty());
    }

    #[test]
    fn mixed_pairs_are_recorded() {
        let edges = vec![
            MultiEdge {
                id: 0,
                ends: (0, 1),
                sign: Sign::Positive,
            },
            MultiEdge {
                id: 1,
                ends: (1, 0),
                sign: Sign::Negative,
            },
        ];
        let g = SignedGraph::new(2, edges).unwrap();
        assert!(g.mixed_pairs().contains(&(0, 1)));
        assert_eq!(g.multiplicity(0, 1), 2);
    }

    #[test]
    fn bipartite_and_components() {
        let square =
            SignedGraph::from_weights(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap();
        assert!(square.is_bipartite());
        assert!(square.is_connected());
        assert_eq!(square.components_without(&[0, 2]), vec![vec![1], vec![3]]);
        let tri = SignedGraph::from_weights(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        assert!(!tri.is_bipartite());
    }

    #[test]
    fn rejects_loops_and_zero_weights() {
        assert!(SignedGraph::from_weights(2, &[(1, 1, 2)]).is_err());
        assert!(SignedGraph::from_weights(2, &[(0, 1, 0)]).is_err());
        assert!(SignedGraph::from_weights(2, &[(0, 2, 1)]).is_err());
    }
}

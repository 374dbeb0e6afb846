//! Block decomposition, Betti numbers, exact longest cycles and 2-cuts on
//! the simple representation of a signed graph.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Largest block accepted by [`longest_cycle`].
pub const MAX_CYCLE_SEARCH_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Sorted.
    pub vertices: Vec<usize>,
    /// `(min, max, signed weight)`, sorted by pair.
    pub edges: Vec<(usize, usize, i64)>,
    /// `+1`/`-1` when every weight has that sign, `0` when empty or mixed.
    pub sign: i8,
}

impl Block {
    fn from_edges(mut edges: Vec<(usize, usize, i64)>) -> Block {
        edges.sort_unstable();
        let vertices: BTreeSet<usize> = edges.iter().flat_map(|&(a, b, _)| [a, b]).collect();
        let sign = if !edges.is_empty() && edges.iter().all(|e| e.2 > 0) {
            1
        } else if !edges.is_empty() && edges.iter().all(|e| e.2 < 0) {
            -1
        } else {
            0
        };
        Block {
            vertices: vertices.into_iter().collect(),
            edges,
            sign,
        }
    }

    pub fn weight_sum(&self) -> i64 {
        self.edges.iter().map(|e| e.2).sum()
    }

    pub fn betti(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }

    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: BTreeSet<usize>,
}

/// Biconnected components (as edge lists) and articulation points of an
/// arbitrary simple graph given by adjacency lists.
pub(crate) fn biconnected(adj: &[Vec<usize>]) -> (Vec<Vec<(usize, usize)>>, BTreeSet<usize>) {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut comps = Vec::new();
    let mut cuts = BTreeSet::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < adj[v].len() {
                let u = adj[v][top.2];
                top.2 += 1;
                if disc[u] == usize::MAX {
                    edge_stack.push((v, u));
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((u, v, 0));
                } else if u != parent && disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            cuts.insert(p);
                        }
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (p, v) {
                                break;
                            }
                        }
                        comps.push(comp);
                    }
                }
            }
        }
        if root_children > 1 {
            cuts.insert(root);
        }
    }
    (comps, cuts)
}

/// Blocks of the simple representation of a connected graph.
pub fn blocks(g: &SignedGraph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Graph(
            "block decomposition needs a connected graph".into(),
        ));
    }
    Ok(blocks_any(g))
}

pub(crate) fn blocks_any(g: &SignedGraph) -> BlockDecomposition {
    let (comps, cut_vertices) = biconnected(&g.adjacency());
    let mut blocks: Vec<Block> = comps
        .into_iter()
        .map(|edges| {
            Block::from_edges(
                edges
                    .into_iter()
                    .map(|(a, b)| (a, b, g.weight(a, b).expect("edge of g")))
                    .collect(),
            )
        })
        .collect();
    blocks.sort_by(|a, b| a.edges.cmp(&b.edges));
    BlockDecomposition {
        blocks,
        cut_vertices,
    }
}

/// First Betti number of the simple representation, `e - v + c`.
pub fn betti(g: &SignedGraph) -> usize {
    g.simple_edge_count() + g.components_without(&[]).len() - g.vertex_count()
}

/// Exact length of a longest cycle in a block; 0 for a bridge.
///
/// Backtracking over simple paths anchored at their least vertex, pruned by
/// the number of vertices still available.
pub fn longest_cycle(b: &Block) -> Result<usize> {
    let k = b.vertices.len();
    if k > MAX_CYCLE_SEARCH_VERTICES {
        return Err(Error::BlockTooLarge(k));
    }
    if b.edges.len() < 3 {
        return Ok(0);
    }
    let index: BTreeMap<usize, usize> = b
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut adj = vec![0u64; k];
    for &(x, y, _) in &b.edges {
        let (i, j) = (index[&x], index[&y]);
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }

    struct Search<'a> {
        adj: &'a [u64],
        start: usize,
        best: usize,
        full: usize,
    }

    impl Search<'_> {
        fn extend(&mut self, v: usize, visited: u64, len: usize) {
            if self.best == self.full {
                return;
            }
            let above = if self.start + 1 >= 64 {
                0
            } else {
                !0u64 << (self.start + 1)
            };
            let free = above & !visited & mask(self.full);
            if len + free.count_ones() as usize <= self.best {
                return;
            }
            if len >= 3 && self.adj[v] & (1 << self.start) != 0 {
                self.best = self.best.max(len);
            }
            let mut next = self.adj[v] & free;
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                self.extend(u, visited | (1 << u), len + 1);
            }
        }
    }

    fn mask(k: usize) -> u64 {
        if k >= 64 {
            !0
        } else {
            (1u64 << k) - 1
        }
    }

    let mut search = Search {
        adj: &adj,
        start: 0,
        best: 0,
        full: k,
    };
    for s in 0..k {
        if k - s <= search.best {
            break;
        }
        search.start = s;
        search.extend(s, 1 << s, 1);
    }
    Ok(search.best)
}

/// All vertex pairs of a block whose deletion disconnects it.
///
/// For each vertex `u`, the articulation points of the block minus `u` are
/// exactly the partners completing a 2-cut with `u`.
pub fn two_cuts(b: &Block) -> Vec<(usize, usize)> {
    let k = b.vertices.len();
    if k < 4 {
        return Vec::new();
    }
    let index: BTreeMap<usize, usize> = b
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut out = BTreeSet::new();
    for skip in 0..k {
        let mut adj = vec![Vec::new(); k - 1];
        let shrink = |i: usize| if i > skip { i - 1 } else { i };
        for &(x, y, _) in &b.edges {
            let (i, j) = (index[&x], index[&y]);
            if i == skip || j == skip {
                continue;
            }
            adj[shrink(i)].push(shrink(j));
            adj[shrink(j)].push(shrink(i));
        }
        let (_, cuts) = biconnected(&adj);
        for c in cuts {
            let partner = if c >= skip { c + 1 } else { c };
            let (a, z) = (b.vertices[skip], b.vertices[partner]);
            out.insert((a.min(z), a.max(z)));
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize, w: i64) -> SignedGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, w)).collect();
        SignedGraph::from_weights(n, &edges).unwrap()
    }

    #[test]
    fn path_splits_into_bridges() {
        let g = SignedGraph::from_weights(3, &[(0, 1, 2), (1, 2, -2)]).unwrap();
        let d = blocks(&g).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, BTreeSet::from([1]));
        let signs: Vec<i8> = d.blocks.iter().map(|b| b.sign).collect();
        assert_eq!(signs, vec![1, -1]);
    }

    #[test]
    fn example_path_graph() {
        let g = SignedGraph::from_weights(4, &[(0, 1, 6), (1, 2, -5), (2, 3, 8)]).unwrap();
        let d = blocks(&g).unwrap();
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices.len(), 2);
        assert_eq!(betti(&g), 0);
    }

    #[test]
    fn cycle_is_one_block() {
        let g = cycle(4, 1);
        let d = blocks(&g).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
        assert_eq!(betti(&g), 1);
        assert_eq!(longest_cycle(&d.blocks[0]).unwrap(), 4);
    }

    #[test]
    fn single_vertex() {
        let g = SignedGraph::new(1, vec![]).unwrap();
        let d = blocks(&g).unwrap();
        assert!(d.blocks.is_empty());
        assert_eq!(betti(&g), 0);
    }

    #[test]
    fn disconnected_rejected() {
        let g = SignedGraph::from_weights(4, &[(0, 1, 2), (2, 3, 2)]).unwrap();
        assert!(blocks(&g).is_err());
    }

    #[test]
    fn bridge_has_no_cycle() {
        let g = SignedGraph::from_weights(2, &[(0, 1, 3)]).unwrap();
        let d = blocks(&g).unwrap();
        assert_eq!(longest_cycle(&d.blocks[0]).unwrap(), 0);
        assert!(two_cuts(&d.blocks[0]).is_empty());
    }

    #[test]
    fn k23_longest_cycle_is_four() {
        // Every cycle of K_{2,3} alternates sides and the small side has two
        // vertices, so no cycle is longer than 4.
        let mut e = Vec::new();
        for a in 0..2 {
            for b in 2..5 {
                e.push((a, b, 1));
            }
        }
        let g = SignedGraph::from_weights(5, &e).unwrap();
        let d = blocks(&g).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(longest_cycle(&d.blocks[0]).unwrap(), 4);
    }

    #[test]
    fn square_two_cuts_are_diagonals() {
        let g = cycle(4, 1);
        let d = blocks(&g).unwrap();
        assert_eq!(two_cuts(&d.blocks[0]), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn hexagon_two_cuts_are_nonadjacent_pairs() {
        // Brute force over all 15 pairs: removing two adjacent vertices
        // leaves a path, any other pair splits the cycle.
        let g = cycle(6, 1);
        let d = blocks(&g).unwrap();
        let cuts = two_cuts(&d.blocks[0]);
        assert_eq!(cuts.len(), 9);
        for (a, b) in cuts {
            let gap = (b - a).min(6 - (b - a));
            assert!(gap >= 2);
        }
    }

    #[test]
    fn oversize_block_is_rejected() {
        let g = cycle(66, 1);
        let d = blocks(&g).unwrap();
        assert!(matches!(
            longest_cycle(&d.blocks[0]),
            Err(Error::BlockTooLarge(66))
        ));
    }

    #[test]
    fn sixty_four_vertex_cycle() {
        let g = cycle(64, 1);
        let d = blocks(&g).unwrap();
        assert_eq!(longest_cycle(&d.blocks[0]).unwrap(), 64);
    }
}

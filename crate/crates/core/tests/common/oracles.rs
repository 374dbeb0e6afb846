//! Brute-force references for the graph algorithms, plus the random graphs
//! they are checked on.

#![allow(dead_code)]

use altwrithe_core::analysis::Block;
use altwrithe_core::SignedGraph;
use rand::Rng;

/// Connected simple graph on at most `max_n` vertices, all weights +1 or
/// all -1.
pub fn random_connected<R: Rng>(rng: &mut R, max_n: usize) -> SignedGraph {
    let n = rng.random_range(1..=max_n);
    let sign = if rng.random() { 1 } else { -1 };
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    let density: f64 = rng.random_range(0.0..0.6);
    for a in 0..n {
        for b in a + 1..n {
            if !edges.contains(&(a, b)) && rng.random_bool(density) {
                edges.push((a, b));
            }
        }
    }
    let weighted: Vec<_> = edges.into_iter().map(|(a, b)| (a, b, sign)).collect();
    SignedGraph::from_weights(n, &weighted).unwrap()
}

fn local_adjacency(b: &Block) -> Vec<u32> {
    let pos = |v: usize| b.vertices.binary_search(&v).unwrap();
    let mut adj = vec![0u32; b.vertices.len()];
    for &(x, y, _) in &b.edges {
        let (i, j) = (pos(x), pos(y));
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }
    adj
}

/// Longest cycle by dynamic programming over vertex subsets: `reach[mask]`
/// holds the endpoints of simple paths that start at the lowest vertex of
/// `mask` and visit exactly `mask`.
pub fn longest_cycle_dp(b: &Block) -> usize {
    let k = b.vertices.len();
    assert!(k <= 16);
    let adj = local_adjacency(b);
    let mut reach = vec![0u32; 1 << k];
    for s in 0..k {
        reach[1 << s] = 1 << s;
    }
    let mut best = 0;
    for mask in 1usize..1 << k {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        let start = mask.trailing_zeros() as usize;
        let size = mask.count_ones() as usize;
        for (v, &nbrs) in adj.iter().enumerate() {
            if ends & (1 << v) == 0 {
                continue;
            }
            if size >= 3 && nbrs & (1 << start) != 0 {
                best = best.max(size);
            }
            // Extend only by vertices above the start.
            let mut next = nbrs as usize & !mask & !((1 << (start + 1)) - 1);
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[mask | 1 << u] |= 1 << u;
            }
        }
    }
    best
}

/// Pairs whose removal leaves the rest of the block disconnected.
pub fn two_cuts_brute(b: &Block) -> Vec<(usize, usize)> {
    let k = b.vertices.len();
    let adj = local_adjacency(b);
    let mut out = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let alive: u32 = ((1u64 << k) - 1) as u32 & !(1 << i) & !(1 << j);
            if alive == 0 {
                continue;
            }
            let mut seen = 1u32 << alive.trailing_zeros();
            let mut frontier = seen;
            while frontier != 0 {
                let v = frontier.trailing_zeros();
                frontier &= frontier - 1;
                let new = adj[v as usize] & alive & !seen;
                seen |= new;
                frontier |= new;
            }
            if seen != alive {
                out.push((b.vertices[i], b.vertices[j]));
            }
        }
    }
    out
}

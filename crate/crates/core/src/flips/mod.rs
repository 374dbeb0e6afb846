//! Whitney flips of Types A, B and C on abstract signed multigraphs.
//!
//! A flip detaches a dependent subgraph `H` and glues it back with its
//! attachment roles exchanged. Graphs here carry no embedding, so taking the
//! mirror image of `H` is just a relabelling of where it attaches. Vertex
//! ids are kept: every flip maps `0..n` onto `0..n` and every multi-edge
//! keeps its id and sign.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::IndexedRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{components_of, MultiEdge, SignedGraph};

pub mod harness;

/// Largest graph accepted by [`enumerate_moves`].
pub const MAX_FLIP_SEARCH_VERTICES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FlipKind {
    A,
    B,
    C,
}

/// A flip site. `subgraph` is the vertex set of `H`, attachment vertices
/// included, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FlipMove {
    /// `H` is `{v1, v2}`-dependent; it is reattached with `v1`, `v2` swapped.
    A {
        v1: usize,
        v2: usize,
        subgraph: Vec<usize>,
    },
    /// `H` is `v1`-dependent, `v1` and `v2` share the single edge `edge`;
    /// `H` moves from `v1` to `v2`.
    B {
        v1: usize,
        v2: usize,
        edge: usize,
        subgraph: Vec<usize>,
    },
    /// `edge` is the single edge `v0`-`v2`; `H` contains `v0` and is
    /// `v1`-dependent once `edge` is removed. `H` is reattached at `v2`
    /// through its copy of `v0`, and `edge` then joins `v1` to `H`'s copy of
    /// `v1`, which takes over the id `v0`.
    C {
        v0: usize,
        v1: usize,
        v2: usize,
        edge: usize,
        subgraph: Vec<usize>,
    },
}

impl FlipMove {
    pub fn kind(&self) -> FlipKind {
        match self {
            FlipMove::A { .. } => FlipKind::A,
            FlipMove::B { .. } => FlipKind::B,
            FlipMove::C { .. } => FlipKind::C,
        }
    }

    pub fn subgraph(&self) -> &[usize] {
        match self {
            FlipMove::A { subgraph, .. }
            | FlipMove::B { subgraph, .. }
            | FlipMove::C { subgraph, .. } => subgraph,
        }
    }
}

impl fmt::Display for FlipMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlipMove::A { v1, v2, subgraph } => write!(f, "A(v1={v1}, v2={v2}, H={subgraph:?})"),
            FlipMove::B {
                v1,
                v2,
                edge,
                subgraph,
            } => write!(f, "B(v1={v1}, v2={v2}, e={edge}, H={subgraph:?})"),
            FlipMove::C {
                v0,
                v1,
                v2,
                edge,
                subgraph,
            } => write!(f, "C(v0={v0}, v1={v1}, v2={v2}, e={edge}, H={subgraph:?})"),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFlip(msg.into())
}

/// Subgraphs `H` with `H ∩ (G \ H) = cut`: one per component of `G - cut`
/// whose union with the cut is connected.
pub fn dependent_subgraphs(g: &SignedGraph, cut: &[usize]) -> Result<Vec<Vec<usize>>> {
    if cut.is_empty() || cut.len() > 2 || cut.iter().any(|&v| v >= g.vertex_count()) {
        return Err(invalid(format!(
            "{cut:?} is not a vertex set of size 1 or 2"
        )));
    }
    if cut.len() == 2 && cut[0] == cut[1] {
        return Err(invalid("repeated cut vertex"));
    }
    let comps = g.components_without(cut);
    if comps.len() < 2 {
        return Err(Error::NotSeparating(cut.to_vec()));
    }
    let adj = g.adjacency();
    let mut out = Vec::new();
    for comp in comps {
        let mut h: Vec<usize> = comp.iter().chain(cut).copied().collect();
        h.sort_unstable();
        if induced_connected(&adj, &h) {
            out.push(h);
        }
    }
    Ok(out)
}

fn induced_connected(adj: &[Vec<usize>], vs: &[usize]) -> bool {
    let set: BTreeSet<usize> = vs.iter().copied().collect();
    let Some(&start) = vs.first() else {
        return false;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if set.contains(&u) && seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen.len() == set.len()
}

/// `inner` is a union of components of `g - attach`: no simple edge leaves
/// `inner` except towards `attach`.
fn closed_off(adj: &[Vec<usize>], inner: &BTreeSet<usize>, attach: &[usize]) -> bool {
    inner.iter().all(|&v| {
        adj[v]
            .iter()
            .all(|u| inner.contains(u) || attach.contains(u))
    })
}

fn rebuild(g: &SignedGraph, f: impl Fn(&MultiEdge) -> (usize, usize)) -> Result<SignedGraph> {
    let edges = g
        .multi_edges()
        .iter()
        .map(|e| MultiEdge { ends: f(e), ..*e })
        .collect();
    SignedGraph::new(g.vertex_count(), edges)
}

fn split_h(g: &SignedGraph, subgraph: &[usize], attach: &[usize]) -> Result<BTreeSet<usize>> {
    if subgraph.iter().any(|&v| v >= g.vertex_count()) {
        return Err(invalid("subgraph vertex out of range"));
    }
    for a in attach {
        if !subgraph.contains(a) {
            return Err(invalid(format!("H must contain attachment vertex {a}")));
        }
    }
    let inner: BTreeSet<usize> = subgraph
        .iter()
        .copied()
        .filter(|v| !attach.contains(v))
        .collect();
    if inner.is_empty() {
        return Err(invalid("H has no vertex besides its attachments"));
    }
    Ok(inner)
}

/// Type A: swap the two attachments of a `{v1, v2}`-dependent subgraph.
pub fn flip_a(g: &SignedGraph, m: &FlipMove) -> Result<SignedGraph> {
    let FlipMove::A { v1, v2, subgraph } = m else {
        return Err(invalid("not a Type A move"));
    };
    let (v1, v2) = (*v1, *v2);
    if v1 == v2 {
        return Err(invalid("v1 = v2"));
    }
    let inner = split_h(g, subgraph, &[v1, v2])?;
    let adj = g.adjacency();
    if !closed_off(&adj, &inner, &[v1, v2]) || !induced_connected(&adj, subgraph) {
        return Err(invalid(format!("H is not {{{v1},{v2}}}-dependent")));
    }
    // {v1, v2} is a 2-cut iff at least two components of G - {v1, v2}
    // touch both vertices.
    let both = g
        .components_without(&[v1, v2])
        .into_iter()
        .filter(|c| {
            let touches = |t: usize| c.iter().any(|&x| adj[x].contains(&t));
            touches(v1) && touches(v2)
        })
        .count();
    if both < 2 {
        return Err(invalid(format!("{{{v1},{v2}}} is not a 2-cut")));
    }
    let swap = |x: usize| match x {
        x if x == v1 => v2,
        x if x == v2 => v1,
        x => x,
    };
    rebuild(g, |e| {
        let (a, b) = e.ends;
        if inner.contains(&a) {
            (a, swap(b))
        } else if inner.contains(&b) {
            (swap(a), b)
        } else {
            (a, b)
        }
    })
}

/// Type B: move a `v1`-dependent subgraph across the single edge `v1`-`v2`.
pub fn flip_b(g: &SignedGraph, m: &FlipMove) -> Result<SignedGraph> {
    let FlipMove::B {
        v1,
        v2,
        edge,
        subgraph,
    } = m
    else {
        return Err(invalid("not a Type B move"));
    };
    let (v1, v2) = (*v1, *v2);
    check_single_edge(g, *edge, v1, v2)?;
    if subgraph.contains(&v2) {
        return Err(invalid("H contains v2"));
    }
    let inner = split_h(g, subgraph, &[v1])?;
    let adj = g.adjacency();
    if !closed_off(&adj, &inner, &[v1]) || !induced_connected(&adj, subgraph) {
        return Err(invalid(format!("H is not {{{v1}}}-dependent")));
    }
    rebuild(g, |e| {
        let (a, b) = e.ends;
        if inner.contains(&a) && b == v1 {
            (a, v2)
        } else if inner.contains(&b) && a == v1 {
            (v2, b)
        } else {
            (a, b)
        }
    })
}

/// Type C: relocate the single edge `v0`-`v2` to run from `v1` into the
/// flipped subgraph.
pub fn flip_c(g: &SignedGraph, m: &FlipMove) -> Result<SignedGraph> {
    let FlipMove::C {
        v0,
        v1,
        v2,
        edge,
        subgraph,
    } = m
    else {
        return Err(invalid("not a Type C move"));
    };
    let (v0, v1, v2) = (*v0, *v1, *v2);
    if v1 == v0 || v1 == v2 {
        return Err(invalid("v1 must differ from v0 and v2"));
    }
    check_single_edge(g, *edge, v0, v2)?;
    if subgraph.contains(&v2) {
        return Err(invalid("H contains v2"));
    }
    if !subgraph.contains(&v0) {
        return Err(invalid("H does not contain v0"));
    }
    let inner = split_h(g, subgraph, &[v1])?;
    let cut = g.without_edge(*edge);
    let adj = cut.adjacency();
    if !closed_off(&adj, &inner, &[v1]) || !induced_connected(&adj, subgraph) {
        return Err(invalid(format!("H is not {{{v1}}}-dependent in G - e")));
    }
    // Inside H: v0 becomes v2 and v1 becomes a fresh vertex that takes the
    // id v0.
    let relabel = |x: usize| match x {
        x if x == v0 => v2,
        x if x == v1 => v0,
        x => x,
    };
    rebuild(g, |e| {
        let (a, b) = e.ends;
        if e.id == *edge {
            (v0, v1)
        } else if inner.contains(&a) || inner.contains(&b) {
            (relabel(a), relabel(b))
        } else {
            (a, b)
        }
    })
}

fn check_single_edge(g: &SignedGraph, edge: usize, a: usize, b: usize) -> Result<()> {
    if a == b || a >= g.vertex_count() || b >= g.vertex_count() {
        return Err(invalid("edge endpoints must be distinct vertices"));
    }
    if g.multiplicity(a, b) != 1 {
        return Err(invalid(format!(
            "{a} and {b} are joined by {} edges, not one",
            g.multiplicity(a, b)
        )));
    }
    let e = g
        .multi_edges()
        .iter()
        .find(|e| e.id == edge)
        .ok_or_else(|| invalid(format!("no edge {edge}")))?;
    if e.ends != (a.min(b), a.max(b)) {
        return Err(invalid(format!("edge {edge} does not join {a} and {b}")));
    }
    Ok(())
}

/// Applies any move after checking its preconditions.
pub fn apply(g: &SignedGraph, m: &FlipMove) -> Result<SignedGraph> {
    match m.kind() {
        FlipKind::A => flip_a(g, m),
        FlipKind::B => flip_b(g, m),
        FlipKind::C => flip_c(g, m),
    }
}

fn single_edge_id(g: &SignedGraph, a: usize, b: usize) -> Option<usize> {
    let k = (a.min(b), a.max(b));
    (g.multiplicity(a, b) == 1)
        .then(|| g.multi_edges().iter().find(|e| e.ends == k).map(|e| e.id))
        .flatten()
}

fn with(comp: &[usize], extra: &[usize]) -> Vec<usize> {
    let mut h: Vec<usize> = comp.iter().chain(extra).copied().collect();
    h.sort_unstable();
    h
}

/// Every flip site whose `H` is a single component of the relevant vertex
/// deletion. Larger `H` (unions of such components) are valid moves too but
/// are reached by composing these.
pub fn enumerate_moves(g: &SignedGraph) -> Result<Vec<FlipMove>> {
    let n = g.vertex_count();
    if n > MAX_FLIP_SEARCH_VERTICES {
        return Err(Error::Graph(format!(
            "flip search is limited to {MAX_FLIP_SEARCH_VERTICES} vertices, graph has {n}"
        )));
    }
    let adj = g.adjacency();
    let touches = |c: &[usize], t: usize| c.iter().any(|&x| adj[x].contains(&t));
    let mut moves = Vec::new();

    let decomposition = crate::analysis::blocks_any(g);
    let mut pairs = BTreeSet::new();
    for b in &decomposition.blocks {
        pairs.extend(crate::analysis::two_cuts(b));
    }
    for (v1, v2) in pairs {
        let both: Vec<Vec<usize>> = components_of(&adj, &[v1, v2])
            .into_iter()
            .filter(|c| touches(c, v1) && touches(c, v2))
            .collect();
        if both.len() < 2 {
            continue;
        }
        for c in &both {
            moves.push(FlipMove::A {
                v1,
                v2,
                subgraph: with(c, &[v1, v2]),
            });
        }
    }

    for &(a, b) in g.simple_edges().keys() {
        let Some(edge) = single_edge_id(g, a, b) else {
            continue;
        };
        for (v1, v2) in [(a, b), (b, a)] {
            if !decomposition.cut_vertices.contains(&v1) {
                continue;
            }
            for c in components_of(&adj, &[v1]) {
                if !c.contains(&v2) {
                    moves.push(FlipMove::B {
                        v1,
                        v2,
                        edge,
                        subgraph: with(&c, &[v1]),
                    });
                }
            }
        }
        // The edge is single, so deleting it deletes the simple pair.
        let mut rest_adj = adj.clone();
        rest_adj[a].retain(|&x| x != b);
        rest_adj[b].retain(|&x| x != a);
        let (_, cuts) = crate::analysis::biconnected(&rest_adj);
        for (v0, v2) in [(a, b), (b, a)] {
            for &v1 in &cuts {
                if v1 == v0 || v1 == v2 {
                    continue;
                }
                let comps = components_of(&rest_adj, &[v1]);
                let Some(c) = comps.iter().find(|c| c.contains(&v0)) else {
                    continue;
                };
                if c.contains(&v2) || !c.iter().any(|&x| rest_adj[x].contains(&v1)) {
                    continue;
                }
                moves.push(FlipMove::C {
                    v0,
                    v1,
                    v2,
                    edge,
                    subgraph: with(c, &[v1]),
                });
            }
        }
    }
    Ok(moves)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkOutcome {
    pub graph: SignedGraph,
    pub applied: usize,
    /// Steps at which no flip site existed.
    pub skipped: usize,
}

/// `steps` uniformly chosen flips; `on_step` sees each
/// `(before, move, after)`.
pub fn walk<R: Rng>(
    g: &SignedGraph,
    steps: usize,
    rng: &mut R,
    mut on_step: impl FnMut(&SignedGraph, &FlipMove, &SignedGraph),
) -> Result<WalkOutcome> {
    let mut cur = g.clone();
    let (mut applied, mut skipped) = (0, 0);
    for _ in 0..steps {
        let moves = enumerate_moves(&cur)?;
        let Some(m) = moves.choose(rng) else {
            skipped += 1;
            continue;
        };
        let next = apply(&cur, m)?;
        on_step(&cur, m, &next);
        cur = next;
        applied += 1;
    }
    Ok(WalkOutcome {
        graph: cur,
        applied,
        skipped,
    })
}

/// Deterministic walk seeded by `seed`.
pub fn random_flip_walk(g: &SignedGraph, steps: usize, seed: u64) -> Result<WalkOutcome> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    walk(g, steps, &mut rng, |_, _, _| {})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::graph_profile;

    fn w(n: usize, e: &[(usize, usize, i64)]) -> SignedGraph {
        SignedGraph::from_weights(n, e).unwrap()
    }

    #[test]
    fn dependent_subgraphs_of_path_and_square() {
        let path = w(3, &[(0, 1, 2), (1, 2, 2)]);
        assert_eq!(
            dependent_subgraphs(&path, &[1]).unwrap(),
            vec![vec![0, 1], vec![1, 2]]
        );
        let sq = w(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]);
        assert_eq!(
            dependent_subgraphs(&sq, &[0, 2]).unwrap(),
            vec![vec![0, 1, 2], vec![0, 2, 3]]
        );
        assert!(matches!(
            dependent_subgraphs(&sq, &[0, 1]),
            Err(Error::NotSeparating(_))
        ));
    }

    #[test]
    fn type_a_on_symmetric_piece_is_isomorphic() {
        // Three parallel paths between 0 and 2, through 1, 3 and 4.
        let g = w(
            5,
            &[
                (0, 1, 2),
                (1, 2, 3),
                (0, 3, 2),
                (3, 2, 3),
                (0, 4, 1),
                (4, 2, 1),
            ],
        );
        let m = FlipMove::A {
            v1: 0,
            v2: 2,
            subgraph: vec![0, 1, 2],
        };
        let h = flip_a(&g, &m).unwrap();
        assert_eq!(h.weight(1, 2), Some(2));
        assert_eq!(h.weight(0, 1), Some(3));
        assert_eq!(h.weight_multiset(), g.weight_multiset());
        assert_eq!(graph_profile(&h).unwrap(), graph_profile(&g).unwrap());
    }

    #[test]
    fn type_a_needs_a_two_cut() {
        let sq = w(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]);
        let m = FlipMove::A {
            v1: 0,
            v2: 1,
            subgraph: vec![0, 1, 2, 3],
        };
        assert!(flip_a(&sq, &m).is_err());
    }

    #[test]
    fn type_b_moves_pendant_block() {
        // Square 0-1-2-3 with a pendant edge 1-4 of weight 2; 0-1 is single.
        let g = w(5, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (1, 4, 2)]);
        let edge = single_edge_id(&g, 0, 1).unwrap();
        let m = FlipMove::B {
            v1: 1,
            v2: 0,
            edge,
            subgraph: vec![1, 4],
        };
        let h = flip_b(&g, &m).unwrap();
        assert_eq!(h.weight(0, 4), Some(2));
        assert_eq!(h.weight(1, 4), None);
        assert_eq!(graph_profile(&h).unwrap(), graph_profile(&g).unwrap());
        let empty = FlipMove::B {
            v1: 1,
            v2: 0,
            edge,
            subgraph: vec![1],
        };
        assert!(flip_b(&g, &empty).is_err());
    }

    #[test]
    fn type_c_keeps_cycle_edges() {
        // Hexagon with weights 1,2,3,1,2,3; e is the single edge 0-1.
        let g = w(
            6,
            &[
                (0, 1, 1),
                (1, 2, 2),
                (2, 3, 3),
                (3, 4, 1),
                (4, 5, 2),
                (5, 0, 3),
            ],
        );
        let edge = single_edge_id(&g, 0, 1).unwrap();
        // Removing e leaves the path 1-2-3-4-5-0; cut at 3, H = {3,4,5,0}.
        let m = FlipMove::C {
            v0: 0,
            v1: 3,
            v2: 1,
            edge,
            subgraph: vec![0, 3, 4, 5],
        };
        let h = flip_c(&g, &m).unwrap();
        assert_eq!(h.weight_multiset(), g.weight_multiset());
        assert!(h.is_connected());
        assert_eq!(graph_profile(&h).unwrap(), graph_profile(&g).unwrap());
        assert_ne!(h, g);
        let heavy = FlipMove::C {
            v0: 5,
            v1: 3,
            v2: 0,
            edge: g
                .multi_edges()
                .iter()
                .find(|e| e.ends == (0, 5))
                .unwrap()
                .id,
            subgraph: vec![3, 4, 5],
        };
        assert!(flip_c(&g, &heavy).is_err());
    }

    #[test]
    fn trefoil_graph_has_no_sites() {
        let g = w(2, &[(0, 1, 3)]);
        assert!(enumerate_moves(&g).unwrap().is_empty());
        let out = random_flip_walk(&g, 10, 1).unwrap();
        assert_eq!((out.applied, out.skipped), (0, 10));
        assert_eq!(out.graph, g);
    }

    #[test]
    fn zero_step_walk_is_identity() {
        let g = w(4, &[(0, 1, 6), (1, 2, -5), (2, 3, 8)]);
        assert_eq!(random_flip_walk(&g, 0, 7).unwrap().graph, g);
    }

    #[test]
    fn enumerated_moves_apply() {
        let g = w(
            7,
            &[
                (0, 1, 1),
                (1, 2, 2),
                (2, 3, 1),
                (3, 0, 2),
                (0, 5, 1),
                (5, 2, 1),
                (3, 4, 3),
                (4, 6, -2),
            ],
        );
        let moves = enumerate_moves(&g).unwrap();
        assert!(moves.iter().any(|m| m.kind() == FlipKind::A));
        assert!(moves.iter().any(|m| m.kind() == FlipKind::B));
        assert!(moves.iter().any(|m| m.kind() == FlipKind::C));
        let p = graph_profile(&g).unwrap();
        for m in &moves {
            let h = apply(&g, m).unwrap();
            assert_eq!(graph_profile(&h).unwrap(), p, "{m}");
        }
    }
}

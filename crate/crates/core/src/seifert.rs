//! Seifert circles, the Seifert multigraph and its signed simple
//! representation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::analysis;
use crate::diagram::{Arc, OrientedDiagram};
use crate::error::{Error, Result};
use crate::graph::{MultiEdge, SignedGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertCircle {
    pub id: usize,
    /// Crossings in the order met while running once along the circle in
    /// its orientation.
    pub incident_crossings: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertDecomposition {
    pub circles: Vec<SeifertCircle>,
    /// Indexed by crossing id: the circle through the smoothed under-strand
    /// entrance and the circle through the smoothed over-strand entrance.
    pub crossing_assignment: Vec<(usize, usize)>,
}

impl SeifertDecomposition {
    /// The other circle at `crossing`, seen from `circle`.
    pub fn across(&self, crossing: usize, circle: usize) -> usize {
        let (a, b) = self.crossing_assignment[crossing];
        if a == circle {
            b
        } else {
            a
        }
    }
}

/// Smooths every crossing of a connected diagram.
pub fn smooth(d: &OrientedDiagram) -> Result<SeifertDecomposition> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    decompose(d)
}

/// Seifert circles are the orbits of "follow the arc to its head, then turn
/// into the adjacent outgoing slot".
pub(crate) fn decompose(d: &OrientedDiagram) -> Result<SeifertDecomposition> {
    let mut circle_of: BTreeMap<Arc, usize> = BTreeMap::new();
    let mut circles = Vec::new();
    for arc in d.arcs() {
        if circle_of.contains_key(&arc) {
            continue;
        }
        let id = circles.len();
        let mut incident = Vec::new();
        let mut cur = arc;
        loop {
            circle_of.insert(cur, id);
            let Some(ends) = d.arc_ends(cur) else { break };
            let c = &d.crossings()[ends.head.crossing];
            incident.push(c.id);
            cur = c.slots[c.smoothing_exit(ends.head.slot)];
            if cur == arc {
                break;
            }
        }
        circles.push(SeifertCircle {
            id,
            incident_crossings: incident,
        });
    }

    let mut crossing_assignment = Vec::with_capacity(d.crossing_count());
    for c in d.crossings() {
        let a = circle_of[&c.slots[0]];
        let b = circle_of[&c.slots[c.over_in()]];
        if a == b {
            return Err(Error::SelfLoop {
                crossing: c.id,
                circle: a,
            });
        }
        crossing_assignment.push((a, b));
    }
    Ok(SeifertDecomposition {
        circles,
        crossing_assignment,
    })
}

/// Multi-edges keyed by crossing id, sign-conflicts allowed.
fn multigraph(s: &SeifertDecomposition, d: &OrientedDiagram) -> Result<SignedGraph> {
    let edges = d
        .crossings()
        .iter()
        .map(|c| MultiEdge {
            id: c.id,
            ends: s.crossing_assignment[c.id],
            sign: c.sign,
        })
        .collect();
    SignedGraph::new(s.circles.len(), edges)
}

/// One vertex per circle, one signed edge per crossing.
pub fn seifert_graph(s: &SeifertDecomposition, d: &OrientedDiagram) -> Result<SignedGraph> {
    let g = multigraph(s, d)?;
    if let Some(&(a, b)) = g.mixed_pairs().iter().next() {
        return Err(Error::SignConflict(a, b));
    }
    Ok(g)
}

/// No vertex pair mixes signs and every block is sign-uniform.
pub fn homogeneity_check(g: &SignedGraph) -> bool {
    g.mixed_pairs().is_empty() && analysis::blocks_any(g).blocks.iter().all(|b| b.sign != 0)
}

/// No bridge of the simple representation carries a single crossing.
pub fn is_reduced(g: &SignedGraph) -> bool {
    weight_one_bridges(g).is_empty()
}

fn weight_one_bridges(g: &SignedGraph) -> Vec<(usize, usize)> {
    analysis::blocks_any(g)
        .blocks
        .iter()
        .filter(|b| b.is_bridge())
        .map(|b| (b.edges[0].0, b.edges[0].1))
        .filter(|&(a, b)| g.multiplicity(a, b) == 1)
        .collect()
}

/// Crossings that are lone bridges of the Seifert graph. Works for any
/// diagram, alternating or not.
pub(crate) fn nugatory_crossings(d: &OrientedDiagram) -> Vec<usize> {
    let Ok(s) = decompose(d) else {
        return Vec::new();
    };
    let Ok(g) = multigraph(&s, d) else {
        return Vec::new();
    };
    let bridges = weight_one_bridges(&g);
    let mut out: Vec<usize> = g
        .multi_edges()
        .iter()
        .filter(|e| bridges.contains(&e.ends))
        .map(|e| e.id)
        .collect();
    out.sort_unstable();
    out
}

/// Graphviz rendering of the simple representation with sorted, byte-stable
/// output.
pub fn to_dot(g: &SignedGraph) -> String {
    let mut out = String::from("graph seifert {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"{v}\"];");
    }
    for (&(a, b), &w) in g.simple_edges() {
        let _ = writeln!(out, "  {a} -- {b} [label=\"weight={w:+}\"];");
    }
    out.push_str("}\n");
    out
}

//! The invariant profile of a reduced alternating diagram.
//!
//! Weights, block data and cycle lengths come from the signed simple
//! representation of the Seifert graph. Every collection is a multiset,
//! kept sorted so that profiles compare and serialize canonically.

use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::{self, Block};
use crate::diagram::{validate, OrientedDiagram};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::lock::{self, Phi, PhiMode};
use crate::seifert;

/// The flip-invariant quantities computable from the graph alone.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct GraphProfile {
    pub w_plus: i64,
    pub w_minus: i64,
    pub xi_plus: usize,
    pub xi_minus: usize,
    #[serde(rename = "W")]
    pub weights: Vec<i64>,
    #[serde(rename = "w_B")]
    pub block_sums: Vec<i64>,
    #[serde(rename = "W_B")]
    pub block_weights: Vec<Vec<i64>>,
    #[serde(rename = "beta")]
    pub betti: usize,
    #[serde(rename = "beta_hat")]
    pub block_betti: Vec<usize>,
    #[serde(rename = "gamma")]
    pub block_cycles: Vec<usize>,
}

impl GraphProfile {
    pub fn negated(&self) -> GraphProfile {
        let neg = |v: &[i64]| {
            let mut w: Vec<i64> = v.iter().map(|x| -x).collect();
            w.sort_unstable();
            w
        };
        let mut block_weights: Vec<Vec<i64>> = self.block_weights.iter().map(|b| neg(b)).collect();
        block_weights.sort();
        GraphProfile {
            w_plus: -self.w_minus,
            w_minus: -self.w_plus,
            xi_plus: self.xi_minus,
            xi_minus: self.xi_plus,
            weights: neg(&self.weights),
            block_sums: neg(&self.block_sums),
            block_weights,
            betti: self.betti,
            block_betti: self.block_betti.clone(),
            block_cycles: self.block_cycles.clone(),
        }
    }
}

/// Weight, block, Betti and longest-cycle data of a connected signed graph
/// whose blocks are sign-uniform.
pub fn graph_profile(g: &SignedGraph) -> Result<GraphProfile> {
    let decomposition = analysis::blocks(g)?;
    let mut p = GraphProfile::default();
    for &w in g.simple_edges().values() {
        if w > 0 {
            p.w_plus += w;
        } else {
            p.w_minus += w;
        }
    }
    p.weights = g.weight_multiset();
    p.betti = analysis::betti(g);

    let blocks: &[Block] = &decomposition.blocks;
    for b in blocks {
        match b.sign {
            1 => p.xi_plus += 1,
            -1 => p.xi_minus += 1,
            _ => return Err(Error::MixedBlock),
        }
        p.block_sums.push(b.weight_sum());
        let mut w: Vec<i64> = b.edges.iter().map(|e| e.2).collect();
        w.sort_unstable();
        p.block_weights.push(w);
        p.block_betti.push(b.betti());
        p.block_cycles.push(analysis::longest_cycle(b)?);
    }
    p.block_sums.sort_unstable();
    p.block_weights.sort();
    p.block_betti.sort_unstable();
    p.block_cycles.sort_unstable();
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct InvariantProfile {
    pub writhe: i64,
    #[serde(flatten)]
    pub graph: GraphProfile,
    #[serde(skip)]
    pub phi: Phi,
}

impl InvariantProfile {
    /// Profile of the mirror image: signs flipped everywhere.
    pub fn negated(&self) -> InvariantProfile {
        InvariantProfile {
            writhe: -self.writhe,
            graph: self.graph.negated(),
            phi: self.phi.negated(),
        }
    }

    /// `key: value` lines in a fixed order.
    pub fn to_text(&self, mode: PhiMode) -> String {
        let g = &self.graph;
        let list = |v: &[i64]| {
            format!(
                "[{}]",
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        };
        let ulist = |v: &[usize]| {
            format!(
                "[{}]",
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        };
        let mut out = String::new();
        let _ = writeln!(out, "writhe: {}", self.writhe);
        let _ = writeln!(out, "w_plus: {}", g.w_plus);
        let _ = writeln!(out, "w_minus: {}", g.w_minus);
        let _ = writeln!(out, "xi_plus: {}", g.xi_plus);
        let _ = writeln!(out, "xi_minus: {}", g.xi_minus);
        let _ = writeln!(out, "W: {}", list(&g.weights));
        let _ = writeln!(out, "w_B: {}", list(&g.block_sums));
        let _ = writeln!(
            out,
            "W_B: [{}]",
            g.block_weights
                .iter()
                .map(|b| list(b))
                .collect::<Vec<_>>()
                .join(",")
        );
        let _ = writeln!(out, "beta: {}", g.betti);
        let _ = writeln!(out, "beta_hat: {}", ulist(&g.block_betti));
        let _ = writeln!(out, "gamma: {}", ulist(&g.block_cycles));
        let _ = writeln!(out, "phi: {}", self.phi.render(mode));
        out
    }

    /// Structured form with Φ rendered under `mode`.
    pub fn to_json_value(&self, mode: PhiMode) -> ProfileDocument<'_> {
        ProfileDocument {
            profile: self,
            phi: self
                .phi
                .canonical(mode)
                .into_iter()
                .map(|v| v.entries().to_vec())
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ProfileDocument<'a> {
    #[serde(flatten)]
    pub profile: &'a InvariantProfile,
    pub phi: Vec<Vec<i64>>,
}

/// Full profile of a valid diagram; a failed precondition returns the
/// validation report inside [`Error::Invalid`].
pub fn profile(d: &OrientedDiagram) -> Result<InvariantProfile> {
    let report = validate(d);
    if !report.is_valid() {
        return Err(Error::Invalid(Box::new(report)));
    }
    let s = seifert::smooth(d)?;
    let g = seifert::seifert_graph(&s, d)?;
    let graph = graph_profile(&g)?;
    let writhe = d.writhe();
    debug_assert_eq!(writhe, graph.w_plus + graph.w_minus);
    Ok(InvariantProfile {
        writhe,
        graph,
        phi: lock::phi(&s, &g),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldComparison {
    pub field: &'static str,
    pub equal: bool,
}

/// Field-by-field comparison in output order.
pub fn compare(a: &InvariantProfile, b: &InvariantProfile, mode: PhiMode) -> Vec<FieldComparison> {
    let (x, y) = (&a.graph, &b.graph);
    let fields = [
        ("writhe", a.writhe == b.writhe),
        ("w_plus", x.w_plus == y.w_plus),
        ("w_minus", x.w_minus == y.w_minus),
        ("xi_plus", x.xi_plus == y.xi_plus),
        ("xi_minus", x.xi_minus == y.xi_minus),
        ("W", x.weights == y.weights),
        ("w_B", x.block_sums == y.block_sums),
        ("W_B", x.block_weights == y.block_weights),
        ("beta", x.betti == y.betti),
        ("beta_hat", x.block_betti == y.block_betti),
        ("gamma", x.block_cycles == y.block_cycles),
        ("phi", a.phi.equivalent(&b.phi, mode)),
    ];
    fields
        .into_iter()
        .map(|(field, equal)| FieldComparison { field, equal })
        .collect()
}

pub fn profiles_equal(a: &InvariantProfile, b: &InvariantProfile, mode: PhiMode) -> bool {
    compare(a, b, mode).iter().all(|f| f.equal)
}

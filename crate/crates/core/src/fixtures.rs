//! Small diagrams used by tests, benchmarks and the command line.

/// Closed 4-braid whose Seifert graph is the path `6, -5, 8` with two locks.
pub const EXAMPLE_D1: &str = include_str!("../data/example_d1.pd");

/// Same Seifert graph as [`EXAMPLE_D1`], clusters rearranged around the
/// second lock.
pub const EXAMPLE_D2: &str = include_str!("../data/example_d2.pd");

/// Trefoil with an extra kink (crossing 3).
pub const KINKED_TREFOIL: &str = include_str!("../data/kinked_trefoil.pd");

/// A non-alternating knot.
pub const NON_ALTERNATING_8_19: &str = include_str!("../data/non_alternating_8_19.pd");

/// Alternating prime knots up to nine crossings, one `name<TAB>PD` per line.
pub const ALTERNATING_KNOTS: &str = include_str!("../data/alternating_knots_9.tsv");

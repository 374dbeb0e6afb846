use serde::Serialize;

use super::{Crossing, OrientedDiagram};
use crate::seifert;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub connected: bool,
    pub alternating: bool,
    pub reduced: bool,
    pub crossing_count: usize,
    pub component_count: usize,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the preconditions shared by every invariant: a connected,
/// alternating, reduced diagram.
pub fn validate(d: &OrientedDiagram) -> ValidationReport {
    let mut failures = Vec::new();

    let connected = d.is_connected();
    if !connected {
        failures.push("diagram is split (its 4-valent graph is disconnected)".to_string());
    }

    // Alternation fails exactly on an arc that leaves and enters at the same
    // level.
    let mut bad_arcs = Vec::new();
    for arc in d.arcs() {
        if let Some(e) = d.arc_ends(arc) {
            if Crossing::is_under(e.tail.slot) == Crossing::is_under(e.head.slot) {
                bad_arcs.push(arc);
            }
        }
    }
    let alternating = bad_arcs.is_empty();
    if !alternating {
        failures.push(format!(
            "not alternating: arcs {bad_arcs:?} join two {} passes",
            if d.arc_ends(bad_arcs[0])
                .is_some_and(|e| Crossing::is_under(e.head.slot))
            {
                "under"
            } else {
                "over"
            }
        ));
    }

    let nugatory = seifert::nugatory_crossings(d);
    let reduced = nugatory.is_empty();
    if !reduced {
        failures.push(format!(
            "not reduced: crossings {nugatory:?} form weight-1 bridges of the Seifert graph"
        ));
    }

    ValidationReport {
        connected,
        alternating,
        reduced,
        crossing_count: d.crossing_count(),
        component_count: d.component_count(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    #[test]
    fn trefoil_passes() {
        let r = validate(&parse_pd(TREFOIL).unwrap());
        assert!(r.connected && r.alternating && r.reduced);
        assert!(r.is_valid());
        assert_eq!((r.crossing_count, r.component_count), (3, 1));
    }

    #[test]
    fn kinked_trefoil_is_not_reduced() {
        let d = parse_pd(crate::fixtures::KINKED_TREFOIL).unwrap();
        let r = validate(&d);
        assert!(r.connected);
        assert!(r.alternating);
        assert!(!r.reduced);
        assert_eq!(r.failures.len(), 1);
    }

    #[test]
    fn split_union_is_disconnected() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] X[7,10,8,11] X[9,12,10,7] X[11,8,12,9]")
            .unwrap();
        let r = validate(&d);
        assert!(!r.connected);
        assert!(r.alternating && r.reduced);
        assert!(!r.is_valid());
        assert_eq!(r.component_count, 2);
    }

    #[test]
    fn unknot_is_valid() {
        let r = validate(&parse_pd("U").unwrap());
        assert!(r.is_valid());
        assert!(!validate(&parse_pd("U U").unwrap()).connected);
    }

    #[test]
    fn torus_knot_8_19_is_not_alternating() {
        let r = validate(&parse_pd(crate::fixtures::NON_ALTERNATING_8_19).unwrap());
        assert!(r.connected);
        assert!(!r.alternating);
    }
}

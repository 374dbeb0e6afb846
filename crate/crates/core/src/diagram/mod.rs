//! Combinatorial oriented link diagrams.
//!
//! A diagram is a list of crossings, each carrying four arc labels in
//! counterclockwise order starting from the incoming under-strand, plus the
//! arc cycles of its components. Orientation of every arc is recoverable
//! locally from a crossing's slots and sign: slot 0 is the incoming
//! under-arc, slot 2 the outgoing under-arc, and the incoming over-arc sits
//! in slot 3 for a positive crossing and slot 1 for a negative one.

mod native;
mod pd;
mod validate;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use native::{emit_native, parse_native};
pub use pd::{emit_pd, parse_pd};
pub use validate::{validate, ValidationReport};

pub type Arc = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn of(v: i64) -> Option<Sign> {
        match v.signum() {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub id: usize,
    pub slots: [Arc; 4],
    pub sign: Sign,
}

impl Crossing {
    /// Slot through which the over-strand enters.
    pub fn over_in(&self) -> usize {
        match self.sign {
            Sign::Positive => 3,
            Sign::Negative => 1,
        }
    }

    pub fn is_incoming(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in()
    }

    pub fn is_under(slot: usize) -> bool {
        slot.is_multiple_of(2)
    }

    /// Outgoing slot reached from incoming `slot` by the oriented smoothing.
    pub fn smoothing_exit(&self, slot: usize) -> usize {
        debug_assert!(self.is_incoming(slot));
        match (self.sign, slot) {
            (Sign::Positive, 0) => 1,
            (Sign::Positive, _) => 2,
            (Sign::Negative, 0) => 3,
            (Sign::Negative, _) => 2,
        }
    }
}

/// One end of an arc: a crossing index and a slot in `0..4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct End {
    pub crossing: usize,
    pub slot: usize,
}

impl End {
    pub fn through(self) -> End {
        End {
            crossing: self.crossing,
            slot: (self.slot + 2) % 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcEnds {
    pub tail: End,
    pub head: End,
}

#[derive(Clone, Debug)]
pub struct OrientedDiagram {
    crossings: Vec<Crossing>,
    components: Vec<Vec<Arc>>,
    name: Option<String>,
    ends: BTreeMap<Arc, ArcEnds>,
}

impl PartialEq for OrientedDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings
            && self.components == other.components
            && self.name == other.name
    }
}

impl Eq for OrientedDiagram {}

impl OrientedDiagram {
    /// Builds a diagram after checking every structural invariant: arc usage,
    /// orientation consistency between slots, signs and component cycles, and
    /// planarity of the rotation system.
    pub fn new(
        crossings: Vec<Crossing>,
        components: Vec<Vec<Arc>>,
        name: Option<String>,
    ) -> Result<Self> {
        for (i, c) in crossings.iter().enumerate() {
            if c.id != i {
                return Err(Error::Incidence(format!(
                    "crossing at position {i} has id {}",
                    c.id
                )));
            }
        }

        let mut tails: BTreeMap<Arc, Vec<End>> = BTreeMap::new();
        let mut heads: BTreeMap<Arc, Vec<End>> = BTreeMap::new();
        for c in &crossings {
            for (slot, &arc) in c.slots.iter().enumerate() {
                let end = End {
                    crossing: c.id,
                    slot,
                };
                if c.is_incoming(slot) {
                    heads.entry(arc).or_default().push(end);
                } else {
                    tails.entry(arc).or_default().push(end);
                }
            }
        }
        let crossing_arcs: BTreeSet<Arc> = tails.keys().chain(heads.keys()).copied().collect();
        let mut ends = BTreeMap::new();
        for &arc in &crossing_arcs {
            let t = tails.get(&arc).map_or(&[][..], |v| v.as_slice());
            let h = heads.get(&arc).map_or(&[][..], |v| v.as_slice());
            if t.len() + h.len() != 2 {
                return Err(Error::ArcUsage(format!(
                    "arc {arc} appears {} times",
                    t.len() + h.len()
                )));
            }
            if t.len() != 1 {
                return Err(Error::Incidence(format!(
                    "arc {arc} must leave exactly one crossing and enter another"
                )));
            }
            ends.insert(
                arc,
                ArcEnds {
                    tail: t[0],
                    head: h[0],
                },
            );
        }

        let mut seen = BTreeSet::new();
        for comp in &components {
            if comp.is_empty() {
                return Err(Error::Incidence("empty component".into()));
            }
            for &arc in comp {
                if !seen.insert(arc) {
                    return Err(Error::ArcUsage(format!(
                        "arc {arc} listed in more than one component position"
                    )));
                }
            }
            let free = comp.iter().filter(|a| !crossing_arcs.contains(a)).count();
            if free > 0 {
                if comp.len() != 1 {
                    return Err(Error::Incidence(format!(
                        "component {comp:?} mixes crossing-free and crossing arcs"
                    )));
                }
                continue;
            }
            for (i, &arc) in comp.iter().enumerate() {
                let next = comp[(i + 1) % comp.len()];
                if ends[&arc].head.through() != ends[&next].tail {
                    return Err(Error::Incidence(format!(
                        "component cycle breaks between arcs {arc} and {next}"
                    )));
                }
            }
        }
        if let Some(missing) = crossing_arcs.iter().find(|a| !seen.contains(a)) {
            return Err(Error::Incidence(format!(
                "arc {missing} belongs to no component"
            )));
        }

        let mut components = components;
        for comp in &mut components {
            let start = comp
                .iter()
                .enumerate()
                .min_by_key(|(_, &a)| a)
                .map(|(i, _)| i)
                .unwrap_or(0);
            comp.rotate_left(start);
        }
        components.sort();

        let d = OrientedDiagram {
            crossings,
            components,
            name,
            ends,
        };
        d.check_planar()?;
        Ok(d)
    }

    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        OrientedDiagram {
            crossings: Vec::new(),
            components: vec![vec![1]],
            name: None,
            ends: BTreeMap::new(),
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn components(&self) -> &[Vec<Arc>] {
        &self.components
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn arcs(&self) -> Vec<Arc> {
        self.components.iter().flatten().copied().collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Tail and head of a crossing arc; `None` for a crossing-free loop.
    pub fn arc_ends(&self, arc: Arc) -> Option<ArcEnds> {
        self.ends.get(&arc).copied()
    }

    pub fn free_loops(&self) -> usize {
        self.components
            .iter()
            .filter(|c| c.len() == 1 && !self.ends.contains_key(&c[0]))
            .count()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    /// Component index of every crossing arc.
    pub fn component_of(&self) -> BTreeMap<Arc, usize> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |&a| (a, i)))
            .collect()
    }

    /// Connectivity of the underlying 4-valent graph, counting each
    /// crossing-free loop as its own piece.
    pub fn is_connected(&self) -> bool {
        let pieces = self.crossing_pieces();
        let loops = self.free_loops();
        match (self.crossings.is_empty(), loops) {
            (true, l) => l <= 1,
            (false, 0) => pieces.iter().collect::<BTreeSet<_>>().len() == 1,
            (false, _) => false,
        }
    }

    /// Piece label of every crossing under arc adjacency.
    fn crossing_pieces(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.crossings.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let n = p[y];
                p[y] = r;
                y = n;
            }
            r
        }
        for e in self.ends.values() {
            let a = find(&mut parent, e.tail.crossing);
            let b = find(&mut parent, e.head.crossing);
            parent[a] = b;
        }
        (0..self.crossings.len())
            .map(|i| find(&mut parent, i))
            .collect()
    }

    /// Every connected piece of a planar 4-valent diagram with `n` crossings
    /// has `2n` edges and must have `n + 2` faces.
    fn check_planar(&self) -> Result<()> {
        if self.crossings.is_empty() {
            return Ok(());
        }
        // Dart (arc, forward) runs tail -> head; faces are orbits of
        // "arrive at a slot, turn to the next slot counterclockwise, leave".
        let mut at: BTreeMap<End, (Arc, bool)> = BTreeMap::new();
        for (&arc, e) in &self.ends {
            at.insert(e.tail, (arc, true));
            at.insert(e.head, (arc, false));
        }
        let pieces = self.crossing_pieces();
        let mut faces: BTreeMap<usize, usize> = BTreeMap::new();
        let mut visited: BTreeSet<(Arc, bool)> = BTreeSet::new();
        for &arc in self.ends.keys() {
            for dir in [true, false] {
                if visited.contains(&(arc, dir)) {
                    continue;
                }
                let piece = pieces[self.ends[&arc].tail.crossing];
                *faces.entry(piece).or_default() += 1;
                let mut cur = (arc, dir);
                while visited.insert(cur) {
                    let e = self.ends[&cur.0];
                    let arrive = if cur.1 { e.head } else { e.tail };
                    let leave = End {
                        crossing: arrive.crossing,
                        slot: (arrive.slot + 1) % 4,
                    };
                    cur = at[&leave];
                }
            }
        }
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in &pieces {
            *sizes.entry(p).or_default() += 1;
        }
        for (piece, n) in sizes {
            let f = faces.get(&piece).copied().unwrap_or(0);
            if f != n + 2 {
                return Err(Error::Incidence(format!(
                    "crossing incidences are not planar ({n} crossings bound {f} faces, expected {})",
                    n + 2
                )));
            }
        }
        Ok(())
    }
}

/// Swaps over- and under-strands at every crossing.
pub fn mirror(d: &OrientedDiagram) -> OrientedDiagram {
    let crossings = d
        .crossings
        .iter()
        .map(|c| {
            let [a, b, cc, dd] = c.slots;
            let slots = match c.sign {
                Sign::Positive => [dd, a, b, cc],
                Sign::Negative => [b, cc, dd, a],
            };
            Crossing {
                id: c.id,
                slots,
                sign: c.sign.negate(),
            }
        })
        .collect();
    OrientedDiagram::new(crossings, d.components.clone(), d.name.clone())
        .expect("mirror preserves diagram structure")
}

/// Reverses the orientation of every component.
pub fn reverse_all(d: &OrientedDiagram) -> OrientedDiagram {
    let all: Vec<usize> = (0..d.component_count()).collect();
    reverse_components(d, &all)
}

/// Reverses the orientation of the listed components (indices into
/// `d.components()`). Crossings between a reversed and a fixed strand change
/// sign.
pub fn reverse_components(d: &OrientedDiagram, which: &[usize]) -> OrientedDiagram {
    let comp_of = d.component_of();
    let flipped = |arc: Arc| which.contains(&comp_of[&arc]);
    let crossings = d
        .crossings
        .iter()
        .map(|c| {
            let under = flipped(c.slots[0]);
            let over = flipped(c.slots[1]);
            let slots = if under {
                let [a, b, cc, dd] = c.slots;
                [cc, dd, a, b]
            } else {
                c.slots
            };
            let sign = if under != over {
                c.sign.negate()
            } else {
                c.sign
            };
            Crossing {
                id: c.id,
                slots,
                sign,
            }
        })
        .collect();
    let components = d
        .components
        .iter()
        .enumerate()
        .map(|(i, comp)| {
            if which.contains(&i) {
                comp.iter().rev().copied().collect()
            } else {
                comp.clone()
            }
        })
        .collect();
    OrientedDiagram::new(crossings, components, d.name.clone())
        .expect("reversal preserves diagram structure")
}

//! Diagrams drawn from braid words, closed either as a braid closure or as
//! a plat.
//!
//! Strands run left to right at positions `0..strands`, position 0 on top.
//! A letter crosses positions `gen` and `gen + 1`; `top_over` says whether
//! the strand arriving from the upper-left passes over.

use std::collections::BTreeMap;

use crate::diagram::{Arc, Crossing, OrientedDiagram, Sign};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub generator: usize,
    pub top_over: bool,
}

impl Letter {
    pub fn new(generator: usize, top_over: bool) -> Self {
        Letter {
            generator,
            top_over,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    /// Position `j` on the right joins position `j` on the left.
    Braid,
    /// Positions `2m` and `2m + 1` are capped off on both sides.
    Plat,
}

// Corners in counterclockwise order around a crossing.
const NE: usize = 0;
const NW: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Point {
    Corner(usize, usize),
    Left(usize),
    Right(usize),
}

/// Builds the diagram. Components are oriented so the first strand met at
/// the lowest crossing is entered from the left; for braid closures every
/// strand runs left to right. Arcs are numbered consecutively along each
/// component.
pub fn build(strands: usize, word: &[Letter], closure: Closure) -> Result<OrientedDiagram> {
    if strands == 0 || (closure == Closure::Plat && !strands.is_multiple_of(2)) {
        return Err(Error::Graph(format!(
            "cannot close {strands} strands as {closure:?}"
        )));
    }
    if let Some(l) = word.iter().find(|l| l.generator + 1 >= strands) {
        return Err(Error::Graph(format!(
            "generator {} out of range for {strands} strands",
            l.generator
        )));
    }

    let mut link: BTreeMap<Point, Vec<Point>> = BTreeMap::new();
    let mut join = |a: Point, b: Point| {
        link.entry(a).or_default().push(b);
        link.entry(b).or_default().push(a);
    };
    let mut open: Vec<Point> = (0..strands).map(Point::Left).collect();
    for (c, l) in word.iter().enumerate() {
        let i = l.generator;
        join(open[i], Point::Corner(c, NW));
        join(open[i + 1], Point::Corner(c, SW));
        open[i] = Point::Corner(c, NE);
        open[i + 1] = Point::Corner(c, SE);
    }
    for (j, &p) in open.iter().enumerate() {
        join(p, Point::Right(j));
    }
    match closure {
        Closure::Braid => {
            for j in 0..strands {
                join(Point::Right(j), Point::Left(j));
            }
        }
        Closure::Plat => {
            for m in (0..strands).step_by(2) {
                join(Point::Left(m), Point::Left(m + 1));
                join(Point::Right(m), Point::Right(m + 1));
            }
        }
    }

    // Follow boundary points from a corner until the next corner.
    let reach = |from: Point| -> Point {
        let mut prev = from;
        let mut cur = link[&from][0];
        while !matches!(cur, Point::Corner(..)) {
            let nbrs = &link[&cur];
            let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
            prev = cur;
            cur = next;
        }
        cur
    };
    let through = |corner: usize| (corner + 2) % 4;

    let n = word.len();
    let mut slot_arc: Vec<[Arc; 4]> = vec![[0; 4]; n];
    let mut is_head = vec![[false; 4]; n];
    let mut components: Vec<Vec<Arc>> = Vec::new();
    let mut next_arc: Arc = 1;
    for c in 0..n {
        for start in [NW, SW] {
            if slot_arc[c][start] != 0 {
                continue;
            }
            // Enter crossing `c` at `start`, i.e. the arc ending here.
            let mut comp = Vec::new();
            let mut head = (c, start);
            loop {
                let out = (head.0, through(head.1));
                let Point::Corner(nc, ncorner) = reach(Point::Corner(out.0, out.1)) else {
                    unreachable!()
                };
                let arc = next_arc;
                next_arc += 1;
                slot_arc[out.0][out.1] = arc;
                slot_arc[nc][ncorner] = arc;
                is_head[nc][ncorner] = true;
                comp.push(arc);
                head = (nc, ncorner);
                if head == (c, start) {
                    break;
                }
            }
            components.push(comp);
        }
    }
    // Crossing-free loops (an untouched braid position, or a cap joined to
    // a cap).
    let mut seen_free = std::collections::BTreeSet::new();
    for j in 0..strands {
        let mut cur = Point::Left(j);
        if seen_free.contains(&cur) {
            continue;
        }
        let mut prev = cur;
        let mut path = vec![cur];
        let mut touches_corner = false;
        loop {
            let nbrs = &link[&cur];
            let next = if nbrs[0] == prev && nbrs.len() > 1 {
                nbrs[1]
            } else {
                nbrs[0]
            };
            if matches!(next, Point::Corner(..)) {
                touches_corner = true;
                break;
            }
            prev = cur;
            cur = next;
            if cur == Point::Left(j) {
                break;
            }
            path.push(cur);
        }
        if !touches_corner {
            seen_free.extend(path);
            components.push(vec![next_arc]);
            next_arc += 1;
        }
    }

    let crossings = word
        .iter()
        .enumerate()
        .map(|(c, l)| {
            // Under-strand is the one not passing over.
            let under = if l.top_over { [SW, NE] } else { [NW, SE] };
            let in_under = if is_head[c][under[0]] {
                under[0]
            } else {
                under[1]
            };
            let slots = [0, 1, 2, 3].map(|k| slot_arc[c][(in_under + k) % 4]);
            let over_in_slot = (1..4)
                .step_by(2)
                .find(|&k| is_head[c][(in_under + k) % 4])
                .expect("over-strand enters");
            Crossing {
                id: c,
                slots,
                sign: if over_in_slot == 3 {
                    Sign::Positive
                } else {
                    Sign::Negative
                },
            }
        })
        .collect();
    OrientedDiagram::new(crossings, components, None)
}

/// Closed braid of an exponent sequence `(generator, exponent)`; positive
/// exponents give positive crossings.
pub fn closed_braid(strands: usize, runs: &[(usize, i64)]) -> Result<OrientedDiagram> {
    let word: Vec<Letter> = runs
        .iter()
        .flat_map(|&(g, e)| std::iter::repeat_n(Letter::new(g, e > 0), e.unsigned_abs() as usize))
        .collect();
    build(strands, &word, Closure::Braid)
}

//! Planar-diagram (PD) notation.
//!
//! Terms are whitespace separated: `X[a,b,c,d]` lists a crossing's arcs
//! counterclockwise from the incoming under-arc, and `U` stands for a
//! crossing-free unknotted component. Signs are not part of the notation:
//! each component is oriented by its under-passes (slot 0 in, slot 2 out),
//! falling back to increasing arc numbers for a component that never passes
//! under. The crossing is positive when the over-strand enters through slot 3.

use std::collections::BTreeMap;

use super::{Arc, Crossing, End, OrientedDiagram, Sign};
use crate::error::{Error, Result};

enum Term {
    Crossing([Arc; 4]),
    Unknot,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(ch) = self.src[self.pos..].chars().next() {
            if ch.is_whitespace() {
                self.pos += ch.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected '{want}', found '{c}'"))),
            None => Err(self.err(format!("expected '{want}', found end of input"))),
        }
    }

    fn number(&mut self) -> Result<Arc> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a positive arc number"));
        }
        let n: Arc = self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::Syntax {
                position: start,
                message: "arc number out of range".into(),
            })?;
        if n == 0 {
            return Err(Error::Syntax {
                position: start,
                message: "arc numbers must be positive".into(),
            });
        }
        Ok(n)
    }

    fn terms(&mut self) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some('U') => {
                    self.pos += 1;
                    out.push(Term::Unknot);
                }
                Some('X') => {
                    self.pos += 1;
                    self.expect('[')?;
                    let mut slots = [0; 4];
                    for (i, slot) in slots.iter_mut().enumerate() {
                        if i > 0 {
                            self.expect(',')?;
                        }
                        *slot = self.number()?;
                    }
                    self.expect(']')?;
                    out.push(Term::Crossing(slots));
                }
                Some(c) => return Err(self.err(format!("unexpected character '{c}'"))),
            }
        }
    }
}

pub fn parse_pd(text: &str) -> Result<OrientedDiagram> {
    let terms = Lexer { src: text, pos: 0 }.terms()?;
    let mut raw: Vec<[Arc; 4]> = Vec::new();
    let mut unknots = 0usize;
    for t in terms {
        match t {
            Term::Crossing(s) => raw.push(s),
            Term::Unknot => unknots += 1,
        }
    }
    if raw.is_empty() && unknots == 0 {
        return Err(Error::Syntax {
            position: 0,
            message: "empty diagram (use U for the 0-crossing unknot)".into(),
        });
    }

    let mut positions: BTreeMap<Arc, Vec<End>> = BTreeMap::new();
    for (c, slots) in raw.iter().enumerate() {
        for (slot, &arc) in slots.iter().enumerate() {
            positions
                .entry(arc)
                .or_default()
                .push(End { crossing: c, slot });
        }
    }
    let bad: Vec<String> = positions
        .iter()
        .filter(|(_, p)| p.len() != 2)
        .map(|(a, p)| match p.len() {
            1 => format!("arc {a} appears once"),
            n => format!("arc {a} appears {n} times"),
        })
        .collect();
    if !bad.is_empty() {
        return Err(Error::ArcUsage(bad.join(", ")));
    }

    let arc_at = |e: End| raw[e.crossing][e.slot];
    let mut oriented: BTreeMap<Arc, (End, End)> = BTreeMap::new();
    let mut components = Vec::new();
    for (&start, start_pos) in &positions {
        if oriented.contains_key(&start) {
            continue;
        }
        // Walk the strand: (arc, tail, head) with the direction chosen
        // arbitrarily, then fix it below.
        let mut walk: Vec<(Arc, End, End)> = Vec::new();
        let (mut tail, mut head) = (start_pos[0], start_pos[1]);
        let mut arc = start;
        loop {
            walk.push((arc, tail, head));
            let next_tail = head.through();
            let next = arc_at(next_tail);
            let p = &positions[&next];
            let next_head = if p[0] == next_tail { p[1] } else { p[0] };
            if next == start && next_tail == start_pos[0] {
                break;
            }
            if walk.len() > 2 * raw.len() {
                return Err(Error::Incidence(format!(
                    "strand through arc {start} does not close"
                )));
            }
            arc = next;
            tail = next_tail;
            head = next_head;
        }

        let (mut fwd, mut back) = (0, 0);
        for &(_, t, h) in &walk {
            fwd += usize::from(t.slot == 2) + usize::from(h.slot == 0);
            back += usize::from(t.slot == 0) + usize::from(h.slot == 2);
        }
        if fwd > 0 && back > 0 {
            return Err(Error::Incidence(format!(
                "under-passes along the strand through arc {start} disagree on its direction"
            )));
        }
        let reverse = if fwd == 0 && back == 0 {
            let n = walk.len();
            let up = (0..n)
                .filter(|&i| walk[(i + 1) % n].0 == walk[i].0 + 1)
                .count();
            let down = (0..n)
                .filter(|&i| walk[(i + 1) % n].0 + 1 == walk[i].0)
                .count();
            down > up
        } else {
            back > 0
        };
        if reverse {
            walk.reverse();
            for w in &mut walk {
                std::mem::swap(&mut w.1, &mut w.2);
            }
        }
        for &(a, t, h) in &walk {
            oriented.insert(a, (t, h));
        }
        components.push(walk.iter().map(|w| w.0).collect::<Vec<_>>());
    }

    let mut crossings = Vec::with_capacity(raw.len());
    for (c, slots) in raw.iter().enumerate() {
        let over_in = [1usize, 3]
            .into_iter()
            .find(|&s| {
                oriented[&slots[s]].1
                    == End {
                        crossing: c,
                        slot: s,
                    }
            })
            .ok_or_else(|| Error::Incidence(format!("crossing {c} has no incoming over-arc")))?;
        crossings.push(Crossing {
            id: c,
            slots: *slots,
            sign: if over_in == 3 {
                Sign::Positive
            } else {
                Sign::Negative
            },
        });
    }

    let first_free = positions.keys().next_back().copied().unwrap_or(0) + 1;
    components.extend((first_free..).take(unknots).map(|a| vec![a]));
    OrientedDiagram::new(crossings, components, None)
}

pub fn emit_pd(d: &OrientedDiagram) -> String {
    let mut parts: Vec<String> = d
        .crossings()
        .iter()
        .map(|c| {
            format!(
                "X[{},{},{},{}]",
                c.slots[0], c.slots[1], c.slots[2], c.slots[3]
            )
        })
        .collect();
    parts.extend(std::iter::repeat_n("U".to_string(), d.free_loops()));
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_signs_agree() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.components()[0], vec![1, 2, 3, 4, 5, 6]);
        let s = d.crossings()[0].sign;
        assert!(d.crossings().iter().all(|c| c.sign == s));
        assert_eq!(d.writhe().abs(), 3);
    }

    #[test]
    fn unknot_marker() {
        let d = parse_pd("U").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.free_loops(), 1);
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(matches!(parse_pd("  "), Err(Error::Syntax { .. })));
    }

    #[test]
    fn arc_count_errors_name_the_arcs() {
        let err = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,2]").unwrap_err();
        let msg = err.to_string();
        assert!(matches!(err, Error::ArcUsage(_)));
        assert!(msg.contains("arc 2 appears 3 times"), "{msg}");
        assert!(msg.contains("arc 3 appears once"), "{msg}");
    }

    #[test]
    fn syntax_error_reports_position() {
        match parse_pd("X[1,4,2,5] X[3,6;4,1]") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 16),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_pd("X[1,0,2,5]"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_pd("Y[1,2,3,4]"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn emit_then_parse_is_identity() {
        let d = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]").unwrap();
        assert_eq!(parse_pd(&emit_pd(&d)).unwrap(), d);
    }

    #[test]
    fn reversed_numbering_still_orients_by_underpasses() {
        // Trefoil with arc labels running against the orientation.
        let fwd = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        let rev = crate::diagram::reverse_all(&fwd);
        let again = parse_pd(&emit_pd(&rev)).unwrap();
        assert_eq!(again, rev);
    }
}

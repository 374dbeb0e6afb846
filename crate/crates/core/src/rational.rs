//! Rational links from fractions: odd-length continued fractions, the 4-plat
//! diagram, and the palindrome test for strong invertibility of two-component
//! rational links.

use crate::braid::{self, Closure, Letter};
use crate::diagram::{reverse_components, validate, OrientedDiagram, Sign};
use crate::error::{Error, Result};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_fraction(p: u64, q: u64) -> Result<()> {
    let reason = if p == 0 || p >= q {
        "need 0 < p < q"
    } else if gcd(p, q) != 1 {
        "p and q are not coprime"
    } else {
        return Ok(());
    };
    Err(Error::Fraction {
        p,
        q,
        reason: reason.into(),
    })
}

/// `[a1, ..., an]` with odd `n` and positive entries such that
/// `p/q = 1/(a1 + 1/(a2 + ... + 1/an))`.
pub fn odd_continued_fraction(p: u64, q: u64) -> Result<Vec<u64>> {
    check_fraction(p, q)?;
    let mut cf = Vec::new();
    let (mut num, mut den) = (q, p);
    while den != 0 {
        cf.push(num / den);
        (num, den) = (den, num % den);
    }
    if cf.len() % 2 == 0 {
        // The last Euclidean quotient is at least 2 here.
        let last = cf.pop().expect("nonempty");
        cf.extend([last - 1, 1]);
    }
    Ok(cf)
}

/// Reduced `(p, q)` with `p/q = 1/(a1 + 1/(a2 + ...))`.
pub fn eval_continued_fraction(cf: &[u64]) -> Result<(u64, u64)> {
    if cf.is_empty() {
        return Err(Error::ContinuedFraction("empty vector".into()));
    }
    if let Some(i) = cf.iter().position(|&a| a == 0) {
        return Err(Error::ContinuedFraction(format!(
            "entry {i} is not positive"
        )));
    }
    let overflow = || Error::ContinuedFraction("value does not fit in 64 bits".into());
    // x = num/den, evaluated from the bottom up.
    let (mut num, mut den) = (*cf.last().expect("nonempty"), 1u64);
    for &a in cf.iter().rev().skip(1) {
        let next = a
            .checked_mul(num)
            .and_then(|v| v.checked_add(den))
            .ok_or_else(overflow)?;
        (num, den) = (next, num);
    }
    Ok((den, num))
}

/// The 4-plat of an odd-length vector: twist regions alternate between the
/// middle pair of strands (odd positions) and the top pair (even positions),
/// capped off as `(0,1)`, `(2,3)` on both sides.
pub fn four_plat(cf: &[u64]) -> Result<OrientedDiagram> {
    if cf.len().is_multiple_of(2) {
        return Err(Error::ContinuedFraction(format!(
            "length {} is not odd",
            cf.len()
        )));
    }
    eval_continued_fraction(cf)?;
    let word: Vec<Letter> = cf
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| {
            let letter = if i % 2 == 0 {
                Letter::new(1, true)
            } else {
                Letter::new(0, false)
            };
            std::iter::repeat_n(letter, a as usize)
        })
        .collect();
    let d = braid::build(4, &word, Closure::Plat)?;
    let report = validate(&d);
    if !report.is_valid() {
        return Err(Error::Invalid(Box::new(report)));
    }
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalLink {
    pub p: u64,
    pub q: u64,
    pub cf: Vec<u64>,
    pub diagram: OrientedDiagram,
}

impl RationalLink {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        let cf = odd_continued_fraction(p, q)?;
        let diagram = four_plat(&cf)?.with_name(format!("{p}/{q}"));
        Ok(RationalLink { p, q, cf, diagram })
    }

    pub fn components(&self) -> usize {
        self.diagram.component_count()
    }
}

/// The two orientations of a two-component rational link that differ on the
/// second component, ordered so the leftmost crossing between the two
/// components is positive in the first and negative in the second.
pub fn orientation_variants(r: &RationalLink) -> Result<(OrientedDiagram, OrientedDiagram)> {
    if r.components() != 2 {
        return Err(Error::NotTwoComponent { p: r.p, q: r.q });
    }
    let d = &r.diagram;
    let flipped = reverse_components(d, &[1]);
    let comp = d.component_of();
    // Braid letters were numbered left to right.
    let leftmost = d
        .crossings()
        .iter()
        .find(|c| comp[&c.slots[0]] != comp[&c.slots[1]])
        .expect("two components of a connected diagram cross")
        .id;
    if d.crossings()[leftmost].sign == Sign::Positive {
        Ok((d.clone(), flipped))
    } else {
        Ok((flipped, d.clone()))
    }
}

/// Two-component `L(p/q)` is strongly invertible iff its odd continued
/// fraction is a palindrome with odd middle entry.
pub fn is_strongly_invertible(p: u64, q: u64) -> Result<bool> {
    let cf = odd_continued_fraction(p, q)?;
    if !q.is_multiple_of(2) {
        return Err(Error::NotTwoComponent { p, q });
    }
    let palindrome = cf.iter().eq(cf.iter().rev());
    Ok(palindrome && cf[cf.len() / 2] % 2 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansions() {
        assert_eq!(
            odd_continued_fraction(278, 641).unwrap(),
            vec![2, 3, 3, 1, 2, 3, 2]
        );
        assert_eq!(odd_continued_fraction(1, 2).unwrap(), vec![2]);
        assert_eq!(odd_continued_fraction(3, 8).unwrap(), vec![2, 1, 2]);
        // 2/5 = [2,2] has even length.
        assert_eq!(odd_continued_fraction(2, 5).unwrap(), vec![2, 1, 1]);
    }

    #[test]
    fn evaluation() {
        assert_eq!(
            eval_continued_fraction(&[2, 3, 3, 1, 2, 3, 2]).unwrap(),
            (278, 641)
        );
        assert_eq!(eval_continued_fraction(&[2]).unwrap(), (1, 2));
        assert_eq!(eval_continued_fraction(&[2, 1, 2, 1, 2]).unwrap(), (11, 30));
        assert!(eval_continued_fraction(&[2, 0, 1]).is_err());
        assert!(eval_continued_fraction(&[]).is_err());
    }

    #[test]
    fn bad_fractions() {
        assert!(matches!(
            odd_continued_fraction(2, 4),
            Err(Error::Fraction { .. })
        ));
        assert!(matches!(
            odd_continued_fraction(5, 3),
            Err(Error::Fraction { .. })
        ));
        assert!(matches!(
            odd_continued_fraction(0, 3),
            Err(Error::Fraction { .. })
        ));
    }

    #[test]
    fn plats() {
        let d = four_plat(&[2, 3, 3, 1, 2, 3, 2]).unwrap();
        assert_eq!(d.crossing_count(), 16);
        assert_eq!(d.component_count(), 1);
        let d = four_plat(&[2, 1, 2]).unwrap();
        assert_eq!(d.crossing_count(), 5);
        assert_eq!(d.component_count(), 2);
        assert!(matches!(four_plat(&[1]), Err(Error::Invalid(_))));
        assert!(four_plat(&[2, 2]).is_err());
    }

    #[test]
    fn strong_invertibility() {
        assert!(is_strongly_invertible(3, 8).unwrap());
        assert!(!is_strongly_invertible(11, 30).unwrap());
        assert!(!is_strongly_invertible(5, 12).unwrap());
        assert!(!is_strongly_invertible(7, 10).unwrap());
        assert!(matches!(
            is_strongly_invertible(278, 641),
            Err(Error::NotTwoComponent { .. })
        ));
    }

    #[test]
    fn variants_have_opposite_leftmost_signs() {
        let r = RationalLink::new(3, 8).unwrap();
        let (l1, l2) = orientation_variants(&r).unwrap();
        assert_eq!(l1.writhe(), l2.writhe());
        assert_ne!(l1, l2);
        assert!(orientation_variants(&RationalLink::new(278, 641).unwrap()).is_err());
    }
}

//! Named diagram collections: one `name<TAB>pd` entry per line, `#` starts
//! a comment line.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::invariants::{profiles_equal, InvariantProfile};
use crate::lock::PhiMode;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    /// 1-based line number in the source text.
    pub line: usize,
    pub name: String,
    pub pd: String,
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut entries = Vec::new();
    let mut names = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some((name, pd)) = raw.split_once('\t') else {
            return Err(Error::Corpus {
                line,
                message: "expected name<TAB>pd-code".into(),
            });
        };
        let name = name.trim();
        if name.is_empty() {
            return Err(Error::Corpus {
                line,
                message: "empty name".into(),
            });
        }
        if !names.insert(name.to_owned()) {
            return Err(Error::Corpus {
                line,
                message: format!("duplicate name {name}"),
            });
        }
        entries.push(CorpusEntry {
            line,
            name: name.to_owned(),
            pd: pd.trim().to_owned(),
        });
    }
    Ok(entries)
}

/// The alternating prime knots through nine crossings.
pub fn bundled() -> Vec<CorpusEntry> {
    parse_corpus(fixtures::ALTERNATING_KNOTS).expect("bundled corpus parses")
}

/// Every unordered pair of names whose profiles agree in all fields, in
/// input order.
pub fn collisions(profiles: &[(String, InvariantProfile)], mode: PhiMode) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for (i, (a, pa)) in profiles.iter().enumerate() {
        for (b, pb) in &profiles[i + 1..] {
            if profiles_equal(pa, pb, mode) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;
    use crate::invariants::profile;

    #[test]
    fn parses_comments_and_entries() {
        let text = "# knots\n3_1\tX[1,5,2,4] X[3,1,4,6] X[5,3,6,2]\n\n4_1\tX[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]\n";
        let e = parse_corpus(text).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!((e[1].line, e[1].name.as_str()), (4, "4_1"));
    }

    #[test]
    fn rejects_duplicates_and_missing_tabs() {
        assert!(matches!(
            parse_corpus("a\tU\na\tU\n"),
            Err(Error::Corpus { line: 2, .. })
        ));
        assert!(matches!(
            parse_corpus("a U\n"),
            Err(Error::Corpus { line: 1, .. })
        ));
    }

    #[test]
    fn bundled_corpus_is_complete() {
        let e = bundled();
        assert_eq!(e.len(), 73);
        assert_eq!(e.iter().filter(|x| x.name.starts_with("9_")).count(), 41);
    }

    #[test]
    fn duplicate_diagram_collides() {
        let pd = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
        let p = profile(&parse_pd(pd).unwrap()).unwrap();
        let q = profile(&parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]").unwrap()).unwrap();
        let named = vec![
            ("a".to_string(), p.clone()),
            ("b".to_string(), q),
            ("c".to_string(), p),
        ];
        assert_eq!(
            collisions(&named, PhiMode::Rotation),
            vec![("a".to_string(), "c".to_string())]
        );
        assert!(collisions(&named[..2], PhiMode::Rotation).is_empty());
    }
}

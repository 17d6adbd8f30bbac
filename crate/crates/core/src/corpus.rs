//! Named diagram collections.
//!
//! One record per line: `name<TAB>pd`, optionally followed by the expected
//! reduced rank and determinant in further tab-separated columns. Blank lines
//! and lines starting with `#` are skipped. Names must be unique.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::pd::{parse_pd, Diagram};

const BUILTIN: &str = include_str!("../data/corpus.tsv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub diagram: Diagram,
    pub expected_rank: Option<usize>,
    pub expected_det: Option<u64>,
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut out = vec![];
    let mut names = HashSet::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let err = |msg: String| Error::Corpus { line, msg };
        let trimmed = raw.trim_end_matches('\r');
        if trimmed.trim().is_empty() || trimmed.trim_start().starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = trimmed.split('\t').collect();
        if cols.len() < 2 || cols.len() > 4 {
            return Err(err(format!("expected 2 to 4 tab-separated columns, found {}", cols.len())));
        }
        let name = cols[0].trim();
        if name.is_empty() {
            return Err(err("empty name".into()));
        }
        if !names.insert(name.to_string()) {
            return Err(err(format!("duplicate name {name:?}")));
        }
        let diagram = parse_pd(cols[1]).map_err(|e| err(e.to_string()))?;
        let num = |i: usize| -> Result<Option<u64>> {
            match cols.get(i).map(|s| s.trim()) {
                None | Some("") => Ok(None),
                Some(s) => s.parse().map(Some).map_err(|_| err(format!("bad number {s:?}"))),
            }
        };
        let expected_rank = num(2)?.map(|r| r as usize);
        let expected_det = num(3)?;
        out.push(CorpusEntry { name: name.to_string(), diagram, expected_rank, expected_det });
    }
    Ok(out)
}

/// The corpus shipped with the library: unknot diagrams, small knots from the
/// table (several with extra diagrams of the same knot) and 10_124.
pub fn builtin() -> Vec<CorpusEntry> {
    parse_corpus(BUILTIN).expect("builtin corpus parses")
}

pub fn lookup(name: &str) -> Option<CorpusEntry> {
    builtin().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_is_valid() {
        let c = builtin();
        assert!(c.len() >= 25);
        assert!(c.iter().all(|e| e.diagram.is_knot() && e.expected_rank.is_some()));
        assert_eq!(lookup("10_124").unwrap().diagram.crossing_count(), 10);
        assert!(lookup("U").unwrap().diagram.is_crossingless());
    }

    #[test]
    fn optional_columns() {
        let c = parse_corpus("# comment\n\na\tU\nb\tU\t1\nc\tU\t\t1\n").unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!((c[0].expected_rank, c[0].expected_det), (None, None));
        assert_eq!(c[1].expected_rank, Some(1));
        assert_eq!((c[2].expected_rank, c[2].expected_det), (None, Some(1)));
        assert!(parse_corpus("").unwrap().is_empty());
    }

    #[test]
    fn errors_carry_lines() {
        assert!(matches!(parse_corpus("a\tU\na\tU"), Err(Error::Corpus { line: 2, .. })));
        assert!(matches!(parse_corpus("a U"), Err(Error::Corpus { line: 1, .. })));
        assert!(matches!(parse_corpus("a\tPD[X(1,2]"), Err(Error::Corpus { line: 1, .. })));
        assert!(matches!(parse_corpus("a\tU\tx"), Err(Error::Corpus { line: 1, .. })));
    }
}

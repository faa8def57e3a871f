//! Plain-text group formats.
//!
//! ```text
//! group <order>        perm <degree>            mat <p>
//! <order rows of       <one generator per        <one generator per
//!  order indices>       line, degree images>      line: a b c d>
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Parses any of the three formats, chosen by the header keyword.
pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let mut words = header.split_whitespace();
    let keyword = words.next().unwrap_or_default();
    let size: usize = parse_field(words.next(), "header size")?;
    if words.next().is_some() {
        return Err(Error::Parse(format!("trailing tokens in header {header:?}")));
    }
    let rows: Vec<Vec<usize>> = lines
        .map(|line| line.split_whitespace().map(|w| parse_field(Some(w), "entry")).collect())
        .collect::<Result<_>>()?;
    match keyword {
        "group" => {
            if rows.first().and_then(|r| r.first()) != Some(&0) || !is_identity_first(&rows) {
                return Err(Error::Parse("identity must be row and column 0".into()));
            }
            FiniteGroup::from_mult_table(size, &rows)
        }
        "perm" => FiniteGroup::from_perm_generators(size, &rows),
        "mat" => {
            let gens = rows
                .iter()
                .map(|r| match r.as_slice() {
                    &[a, b, c, d] => Ok([a as u64, b as u64, c as u64, d as u64]),
                    _ => Err(Error::Parse(format!("matrix line needs 4 entries, got {}", r.len()))),
                })
                .collect::<Result<Vec<_>>>()?;
            FiniteGroup::from_matrix_generators(size as u64, &gens)
        }
        other => Err(Error::Parse(format!("unknown header keyword {other:?}"))),
    }
}

/// Renders the `group` table format; `parse_group` inverts it exactly.
pub fn write_table(g: &FiniteGroup) -> String {
    let mut out = format!("group {}\n", g.order());
    for a in g.elements() {
        let row: Vec<String> = g.row(a).map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Whitespace-, comma- or newline-separated element indices.
pub fn parse_index_list(text: &str) -> Result<Vec<usize>> {
    content_lines(text)
        .flat_map(|line| line.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|w| !w.is_empty())
        .map(|w| parse_field(Some(w), "element index"))
        .collect()
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_field(word: Option<&str>, what: &str) -> Result<usize> {
    let word = word.ok_or_else(|| Error::Parse(format!("missing {what}")))?;
    word.parse().map_err(|_| Error::Parse(format!("bad {what} {word:?}")))
}

fn is_identity_first(rows: &[Vec<usize>]) -> bool {
    rows.first().is_some_and(|r| r.iter().enumerate().all(|(j, &x)| x == j))
        && rows.iter().enumerate().all(|(i, r)| r.first() == Some(&i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_format() {
        let g = parse_group("group 2\n0 1\n1 0\n").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(write_table(&g), "group 2\n0 1\n1 0\n");
    }

    #[test]
    fn table_identity_must_lead() {
        let err = parse_group("group 3\n1 2 0\n2 0 1\n0 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }

    #[test]
    fn perm_and_matrix_formats() {
        let s3 = parse_group("# S3\nperm 3\n1 2 0\n1 0 2\n").unwrap();
        assert_eq!(s3.order(), 6);
        let sl25 = parse_group("mat 5\n1 1 0 1\n1 0 1 1\n").unwrap();
        assert_eq!(sl25.order(), 120);
        assert!(matches!(parse_group("mat 5\n1 1 0\n").unwrap_err(), Error::Parse(_)));
        assert!(matches!(parse_group("ring 5\n").unwrap_err(), Error::Parse(_)));
        assert!(matches!(parse_group("").unwrap_err(), Error::Parse(_)));
    }

    #[test]
    fn index_lists() {
        assert_eq!(parse_index_list("1,5\n 7\n# c\n2").unwrap(), vec![1, 5, 7, 2]);
        assert!(parse_index_list("x").is_err());
    }
}

//! Plain-text table documents.
//!
//! ```text
//! # comment lines start with '#'
//! 2
//! 0 0
//! 1 1
//! labels: a b
//! subset transversal: 0
//! map proj: 0 0
//! ```
//!
//! Line 1 is the order n, followed by n rows of n entries (row a lists the
//! products a·b). Optional `labels:`, `subset NAME: i,j,k` and
//! `map NAME: v v v` lines follow in any order. Blank lines and comment
//! lines are ignored; the canonical form drops them.

use std::fmt::Write as _;

use thiserror::Error;

use crate::semigroup::{FiniteSemigroup, SemigroupError};
use crate::subset::ElementSubset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: value {value} out of range for order {order}")]
    OutOfRange { line: usize, column: usize, value: usize, order: usize },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// A parsed table with its named subsets and maps, in file order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupDocument {
    pub semigroup: FiniteSemigroup,
    pub subsets: Vec<(String, ElementSubset)>,
    pub maps: Vec<(String, Vec<usize>)>,
}

impl SemigroupDocument {
    pub fn new(semigroup: FiniteSemigroup) -> Self {
        SemigroupDocument { semigroup, subsets: Vec::new(), maps: Vec::new() }
    }

    pub fn subset(&self, name: &str) -> Option<&ElementSubset> {
        self.subsets.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn map(&self, name: &str) -> Option<&[usize]> {
        self.maps.iter().find(|(n, _)| n == name).map(|(_, m)| m.as_slice())
    }

    pub fn with_subset(mut self, name: &str, subset: ElementSubset) -> Self {
        self.subsets.push((name.to_string(), subset));
        self
    }

    pub fn with_map(mut self, name: &str, values: Vec<usize>) -> Self {
        self.maps.push((name.to_string(), values));
        self
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

/// Whitespace-separated tokens with 1-based character columns.
fn tokens(line: &str, offset: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { text: &line[s..i], column: offset + line[..s].chars().count() + 1 });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, column, message: message.into() }
}

fn number(tok: &Token<'_>, line: usize) -> Result<usize, FormatError> {
    tok.text
        .parse()
        .map_err(|_| syntax(line, tok.column, format!("expected a non-negative integer, found `{}`", tok.text)))
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '.'))
}

pub fn parse(text: &str) -> Result<SemigroupDocument, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (first_line, first) = lines.next().ok_or_else(|| syntax(1, 1, "empty document"))?;
    let head = tokens(first, 0);
    if head.len() != 1 {
        return Err(syntax(first_line, head.get(1).map_or(1, |t| t.column), "the first line must be the order alone"));
    }
    let n = number(&head[0], first_line)?;
    if n == 0 {
        return Err(syntax(first_line, head[0].column, "order must be positive"));
    }

    let mut rows = Vec::with_capacity(n);
    let mut last_line = first_line;
    for _ in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| syntax(last_line + 1, 1, format!("expected {n} table rows, found {}", rows.len())))?;
        last_line = ln;
        let toks = tokens(line, 0);
        if toks.len() != n {
            let column = toks.get(n).map_or(line.chars().count() + 1, |t| t.column);
            return Err(syntax(ln, column, format!("expected {n} entries, found {}", toks.len())));
        }
        let mut row = Vec::with_capacity(n);
        for t in &toks {
            let v = number(t, ln)?;
            if v >= n {
                return Err(FormatError::OutOfRange { line: ln, column: t.column, value: v, order: n });
            }
            row.push(v);
        }
        rows.push(row);
    }

    let mut labels = None;
    let mut subsets: Vec<(String, ElementSubset)> = Vec::new();
    let mut maps: Vec<(String, Vec<usize>)> = Vec::new();
    for (ln, line) in lines {
        let Some(colon) = line.find(':') else {
            return Err(syntax(ln, 1, "expected `labels:`, `subset NAME:` or `map NAME:`"));
        };
        let (head, body) = (&line[..colon], &line[colon + 1..]);
        let body_offset = line[..colon + 1].chars().count();
        let head_toks = tokens(head, 0);
        match head_toks.iter().map(|t| t.text).collect::<Vec<_>>().as_slice() {
            ["labels"] => {
                if labels.is_some() {
                    return Err(syntax(ln, 1, "duplicate labels line"));
                }
                let toks = tokens(body, body_offset);
                if toks.len() != n {
                    return Err(syntax(ln, body_offset + 1, format!("expected {n} labels, found {}", toks.len())));
                }
                labels = Some(toks.iter().map(|t| t.text.to_string()).collect::<Vec<_>>());
            }
            ["subset", name] | ["map", name] => {
                if !valid_name(name) {
                    return Err(syntax(ln, head_toks[1].column, format!("invalid name `{name}`")));
                }
                let is_subset = head_toks[0].text == "subset";
                let taken = if is_subset {
                    subsets.iter().any(|(n, _)| n == name)
                } else {
                    maps.iter().any(|(n, _)| n == name)
                };
                if taken {
                    return Err(syntax(ln, head_toks[1].column, format!("duplicate name `{name}`")));
                }
                if is_subset {
                    subsets.push((name.to_string(), parse_subset(body, body_offset, ln, n)?));
                } else {
                    let values = tokens(body, body_offset).iter().map(|t| number(t, ln)).collect::<Result<_, _>>()?;
                    maps.push((name.to_string(), values));
                }
            }
            _ => return Err(syntax(ln, 1, format!("unknown directive `{}`", head.trim()))),
        }
    }

    let semigroup = FiniteSemigroup::validate(&rows, labels)?;
    Ok(SemigroupDocument { semigroup, subsets, maps })
}

fn parse_subset(body: &str, offset: usize, line: usize, n: usize) -> Result<ElementSubset, FormatError> {
    let mut subset = ElementSubset::empty(n);
    if body.trim().is_empty() {
        return Ok(subset);
    }
    let mut pos = 0;
    for part in body.split(',') {
        let lead = part.len() - part.trim_start().len();
        let column = offset + body[..pos + lead].chars().count() + 1;
        let text = part.trim();
        let tok = Token { text, column };
        if text.is_empty() || text.contains(char::is_whitespace) {
            return Err(syntax(line, column, format!("expected an element index, found `{text}`")));
        }
        let v = number(&tok, line)?;
        if v >= n {
            return Err(FormatError::OutOfRange { line, column, value: v, order: n });
        }
        subset.insert(v);
        pos += part.len() + 1;
    }
    Ok(subset)
}

/// The canonical text of a document. Whitespace inside labels is replaced
/// by underscores so the result parses back.
pub fn serialize(doc: &SemigroupDocument) -> String {
    let s = &doc.semigroup;
    let mut out = String::new();
    let _ = writeln!(out, "{}", s.order());
    for a in s.elements() {
        let row: Vec<String> = s.row(a).iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    if let Some(labels) = s.labels() {
        let clean: Vec<String> = labels.iter().map(|l| l.replace(char::is_whitespace, "_")).collect();
        let _ = writeln!(out, "labels: {}", clean.join(" "));
    }
    for (name, subset) in &doc.subsets {
        let items: Vec<String> = subset.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "subset {name}: {}", items.join(","));
    }
    for (name, values) in &doc.maps {
        let items: Vec<String> = values.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "map {name}: {}", items.join(" "));
    }
    out
}

/// parse followed by serialize.
pub fn canonical(text: &str) -> Result<String, FormatError> {
    parse(text).map(|d| serialize(&d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_left_zero() {
        let d = parse("1\n0\n").unwrap();
        assert_eq!(d.semigroup.order(), 1);
        let d = parse("2\n0 0\n1 1\n").unwrap();
        assert_eq!(d.semigroup.rows(), vec![vec![0, 0], vec![1, 1]]);
        assert_eq!(serialize(&d), "2\n0 0\n1 1\n");
    }

    #[test]
    fn directives_and_comments() {
        let text = "# left zero\n2\n0 0\n\n1   1\nlabels: a b\nsubset t: 1, 0\nmap m: 3 4\n";
        let d = parse(text).unwrap();
        assert_eq!(d.semigroup.label(1), "b");
        assert_eq!(d.subset("t").unwrap().to_vec(), vec![0, 1]);
        assert_eq!(d.map("m"), Some(&[3, 4][..]));
        let canon = serialize(&d);
        assert_eq!(canon, "2\n0 0\n1 1\nlabels: a b\nsubset t: 0,1\nmap m: 3 4\n");
        assert_eq!(canonical(&canon).unwrap(), canon);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse("2\n0 0\n1 x\n").unwrap_err(),
            FormatError::Syntax { line: 3, column: 3, message: "expected a non-negative integer, found `x`".into() }
        );
        assert_eq!(
            parse("2\n0 0\n1 2\n").unwrap_err(),
            FormatError::OutOfRange { line: 3, column: 3, value: 2, order: 2 }
        );
        assert!(matches!(parse("2\n0 0\n").unwrap_err(), FormatError::Syntax { line: 3, .. }));
        assert!(matches!(parse("2\n0 0 0\n1 1\n").unwrap_err(), FormatError::Syntax { line: 2, column: 5, .. }));
        assert_eq!(
            parse("2\n0 0\n1 1\nsubset t: 0, 5\n").unwrap_err(),
            FormatError::OutOfRange { line: 4, column: 14, value: 5, order: 2 }
        );
        assert!(matches!(parse("2\n0 0\n1 1\nbogus\n").unwrap_err(), FormatError::Syntax { line: 4, .. }));
        assert!(matches!(
            parse("2\n1 0\n0 0\n").unwrap_err(),
            FormatError::Semigroup(SemigroupError::NonAssociative { .. })
        ));
    }
}

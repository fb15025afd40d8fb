//! The `skl1` text format.
//!
//! ```text
//! skl1
//! name pfn(1)
//! size 3
//! meet
//! 0 0 0
//! 0 1 1
//! 0 2 2
//! join
//! ...
//! imp        (optional)
//! ...
//! zero 0     (optional)
//! top 2      (optional)
//! ```
//!
//! Row `x`, column `y` of a table holds `op(x, y)`. Blank lines are ignored
//! and `#` starts a comment. The emitter always writes the sections in the
//! order above.

use std::fmt::Write as _;

use ncframe_core::{Elem, FiniteAlgebra, Table};
use thiserror::Error;

pub const HEADER: &str = "skl1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct AlgebraFile {
    pub name: Option<String>,
    pub algebra: FiniteAlgebra,
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
    /// Text after the first token, for `name`.
    rest: &'a str,
}

fn lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut offset = 0;
        for piece in content.split_whitespace() {
            let start = content[offset..].find(piece).unwrap() + offset;
            offset = start + piece.len();
            tokens.push(Token {
                text: piece,
                line: i + 1,
                column: content[..start].chars().count() + 1,
            });
        }
        if tokens.is_empty() {
            continue;
        }
        let first_end = content.find(tokens[0].text).unwrap() + tokens[0].text.len();
        out.push(Line {
            number: i + 1,
            rest: content[first_end..].trim(),
            tokens,
        });
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

fn at(tok: &Token<'_>, message: impl Into<String>) -> ParseError {
    err(tok.line, tok.column, message)
}

fn integer(tok: &Token<'_>) -> Result<usize, ParseError> {
    tok.text.parse().map_err(|_| {
        at(
            tok,
            format!("expected a non-negative integer, found `{}`", tok.text),
        )
    })
}

fn element(tok: &Token<'_>, size: usize) -> Result<Elem, ParseError> {
    let v = integer(tok)?;
    if v >= size {
        return Err(at(tok, format!("entry {v} outside 0..{size}")));
    }
    Ok(v)
}

fn single_value<'a>(line: &'a Line<'a>) -> Result<&'a Token<'a>, ParseError> {
    match line.tokens.as_slice() {
        [_, value] => Ok(value),
        [kw] => Err(err(
            line.number,
            kw.column + kw.text.len(),
            format!("`{}` needs a value", kw.text),
        )),
        [_, _, extra, ..] => Err(at(extra, "unexpected token")),
        [] => unreachable!("blank lines are skipped"),
    }
}

pub fn parse(text: &str) -> Result<AlgebraFile, ParseError> {
    let lines = lines(text);
    let mut iter = lines.iter().peekable();
    let Some(head) = iter.next() else {
        return Err(err(1, 1, format!("empty file, expected `{HEADER}`")));
    };
    if head.tokens.len() != 1 || head.tokens[0].text != HEADER {
        return Err(at(&head.tokens[0], format!("expected header `{HEADER}`")));
    }

    let mut name = None;
    let mut size: Option<usize> = None;
    let mut tables: [Option<Table>; 3] = [None, None, None];
    let mut zero = None;
    let mut top = None;
    let mut last_line = head.number;

    while let Some(line) = iter.next() {
        last_line = line.number;
        let kw = &line.tokens[0];
        match kw.text {
            "name" => {
                if name.is_some() {
                    return Err(at(kw, "duplicate `name`"));
                }
                if line.rest.is_empty() {
                    return Err(at(kw, "`name` needs a value"));
                }
                name = Some(line.rest.to_string());
            }
            "size" => {
                if size.is_some() {
                    return Err(at(kw, "duplicate `size`"));
                }
                let tok = single_value(line)?;
                let n = integer(tok)?;
                if n == 0 {
                    return Err(at(tok, "size must be positive"));
                }
                size = Some(n);
            }
            "meet" | "join" | "imp" => {
                let slot = ["meet", "join", "imp"]
                    .iter()
                    .position(|&k| k == kw.text)
                    .unwrap();
                if tables[slot].is_some() {
                    return Err(at(kw, format!("duplicate `{}` table", kw.text)));
                }
                let n = size.ok_or_else(|| at(kw, "`size` must come before the tables"))?;
                if let Some(extra) = line.tokens.get(1) {
                    return Err(at(extra, "table rows start on the next line"));
                }
                let mut table = Table::from_fn(n, |_, _| 0);
                for x in 0..n {
                    let row = iter.next().ok_or_else(|| {
                        err(
                            last_line + 1,
                            1,
                            format!("`{}` table ends after {x} of {n} rows", kw.text),
                        )
                    })?;
                    last_line = row.number;
                    if row.tokens.len() != n {
                        let column = row.tokens.get(n).map_or(row.tokens[0].column, |t| t.column);
                        return Err(err(
                            row.number,
                            column,
                            format!("row has {} entries, expected {n}", row.tokens.len()),
                        ));
                    }
                    for (y, tok) in row.tokens.iter().enumerate() {
                        table.set(x, y, element(tok, n)?);
                    }
                }
                tables[slot] = Some(table);
            }
            "zero" | "top" => {
                let n = size.ok_or_else(|| at(kw, "`size` must come first"))?;
                let slot = if kw.text == "zero" {
                    &mut zero
                } else {
                    &mut top
                };
                if slot.is_some() {
                    return Err(at(kw, format!("duplicate `{}`", kw.text)));
                }
                *slot = Some(element(single_value(line)?, n)?);
            }
            other => return Err(at(kw, format!("unknown section `{other}`"))),
        }
    }

    let [meet, join, imp] = tables;
    let missing = |what: &str| err(last_line + 1, 1, format!("missing `{what}` table"));
    let meet = meet.ok_or_else(|| missing("meet"))?;
    let join = join.ok_or_else(|| missing("join"))?;
    let build = || -> ncframe_core::Result<FiniteAlgebra> {
        let mut alg = FiniteAlgebra::new(meet, join)?;
        if let Some(imp) = imp {
            alg = alg.with_imp(imp)?;
        }
        if let Some(z) = zero {
            alg = alg.with_zero(z)?;
        }
        if let Some(t) = top {
            alg = alg.with_top(t)?;
        }
        Ok(alg)
    };
    // Shape and ranges were checked above, so this cannot fail in practice.
    let algebra = build().map_err(|e| err(last_line, 1, e.to_string()))?;
    Ok(AlgebraFile { name, algebra })
}

fn write_table(out: &mut String, label: &str, table: &Table) {
    out.push_str(label);
    out.push('\n');
    for row in table.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

/// Canonical text for `alg`.
pub fn emit(name: Option<&str>, alg: &FiniteAlgebra) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    if let Some(name) = name {
        writeln!(out, "name {name}").unwrap();
    }
    writeln!(out, "size {}", alg.size()).unwrap();
    write_table(&mut out, "meet", alg.meet_table());
    write_table(&mut out, "join", alg.join_table());
    if let Some(imp) = alg.imp_table() {
        write_table(&mut out, "imp", imp);
    }
    if let Some(z) = alg.zero() {
        writeln!(out, "zero {z}").unwrap();
    }
    if let Some(t) = alg.top_t() {
        writeln!(out, "top {t}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ncframe_core::build_pfn_algebra;

    #[test]
    fn round_trip() {
        let p = build_pfn_algebra(2).unwrap();
        let text = emit(Some("pfn(2)"), &p);
        let parsed = parse(&text).unwrap();
        assert_eq!(parsed.name.as_deref(), Some("pfn(2)"));
        assert_eq!(emit(parsed.name.as_deref(), &parsed.algebra), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# two-chain\nskl1\n\nsize 2 # elements\nmeet\n0 0\n0 1\njoin\n0 1\n1 1\n";
        let f = parse(text).unwrap();
        assert_eq!(f.algebra.join(0, 1), 1);
        assert!(f.name.is_none());
    }

    #[test]
    fn positions() {
        let e = parse("skl1\nsize 2\nmeet\n0 0\n0 5\n").unwrap_err();
        assert_eq!((e.line, e.column), (5, 3));
        let e = parse("skl1\nsize 2\nmeet\n0 0\n0\n").unwrap_err();
        assert_eq!(e.line, 5);
        let e = parse("skl2\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse("skl1\nsize 2\nmeet\n0 0\n0 1\n").unwrap_err();
        assert!(e.message.contains("join"), "{e}");
        let e = parse("skl1\nmeet\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        let e = parse("skl1\nsize 2\nmeet\n0 0\n0 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (5, 3));
        let e = parse("skl1\n  size\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 7));
    }
}

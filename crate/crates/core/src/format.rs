//! A small text format for (skew) tableaux.
//!
//! ```text
//! # comment
//! n 5
//! col 1 2 0 -2
//! col sp skip=1 3 -2
//! col * 2
//! exited 3 1
//! ```
//!
//! The header fixes the rank.  Each `col` line is one column, top to
//! bottom: barred letters are negative, zeros are `0`, a hole is `*`.
//! `sp` marks a spin column (`rsp` a rotated one), `skip=m` hangs the
//! column `m` rows below the top.  An optional `exited r c` line records a vacated box.

use std::fmt::Write as _;

use crate::alphabet::Entry;
use crate::error::{Error, Result};
use crate::skew::{Cell, SkewColumn, SkewTableau};
use crate::tableau::Tableau;

/// A parsed document: a skew tableau plus an optional vacated box.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableauDoc {
    pub skew: SkewTableau,
    /// `exited r c` line, 1-based row and 0-based column.
    pub exited: Option<(usize, usize)>,
}

/// Parses the text format.
pub fn parse_document(src: &str) -> Result<TableauDoc> {
    let mut n: Option<usize> = None;
    let mut cols: Vec<SkewColumn> = Vec::new();
    let mut exited = None;
    for (lineno, raw) in src.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut toks = line.split_whitespace();
        let head = toks.next().unwrap();
        let fail = |msg: String| Error::Parse(format!("line {}: {}", lineno + 1, msg));
        match head {
            "n" => {
                if n.is_some() {
                    return Err(fail("duplicate rank header".into()));
                }
                let v: usize = toks
                    .next()
                    .ok_or_else(|| fail("missing rank".into()))?
                    .parse()
                    .map_err(|e| fail(format!("bad rank: {}", e)))?;
                if v == 0 || toks.next().is_some() {
                    return Err(fail("header must be exactly 'n <rank>'".into()));
                }
                n = Some(v);
            }
            "col" => {
                let n = n.ok_or_else(|| fail("'n <rank>' must come first".into()))?;
                let mut spin = false;
                let mut rotated = false;
                let mut offset = 0usize;
                let mut cells = Vec::new();
                for tok in toks {
                    if tok == "sp" && cells.is_empty() && !spin {
                        spin = true;
                    } else if tok == "rsp" && cells.is_empty() && !spin {
                        spin = true;
                        rotated = true;
                    } else if let Some(m) = tok.strip_prefix("skip=") {
                        if !cells.is_empty() || offset != 0 {
                            return Err(fail("skip= must precede the entries".into()));
                        }
                        offset = m.parse().map_err(|e| fail(format!("bad skip: {}", e)))?;
                    } else if tok == "*" {
                        cells.push(Cell::Star);
                    } else {
                        let raw: i32 = tok
                            .parse()
                            .map_err(|e| fail(format!("bad entry '{}': {}", tok, e)))?;
                        cells.push(Cell::Entry(
                            Entry::new(raw, n).map_err(|e| fail(e.to_string()))?,
                        ));
                    }
                }
                cols.push(SkewColumn {
                    offset,
                    cells,
                    spin,
                    rotated,
                });
            }
            "exited" => {
                let r: usize = toks
                    .next()
                    .ok_or_else(|| fail("missing row".into()))?
                    .parse()
                    .map_err(|e| fail(format!("bad row: {}", e)))?;
                let c: usize = toks
                    .next()
                    .ok_or_else(|| fail("missing column".into()))?
                    .parse()
                    .map_err(|e| fail(format!("bad column: {}", e)))?;
                if toks.next().is_some() {
                    return Err(fail("trailing tokens after 'exited r c'".into()));
                }
                exited = Some((r, c));
            }
            _ => return Err(fail(format!("unknown directive '{}'", head))),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing 'n <rank>' header".into()))?;
    Ok(TableauDoc {
        skew: SkewTableau { n, cols },
        exited,
    })
}

/// Parses a straight tableau: no stars, no skipped rows.
pub fn parse_tableau(src: &str) -> Result<Tableau> {
    let doc = parse_document(src)?;
    if doc.exited.is_some() {
        return Err(Error::Parse(
            "a straight tableau cannot carry an 'exited' line".into(),
        ));
    }
    doc.skew.to_tableau()
}

/// Renders a document in the text format.
pub fn format_document(doc: &TableauDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n {}", doc.skew.n);
    for c in &doc.skew.cols {
        let _ = write!(out, "col");
        if c.spin {
            let _ = write!(out, "{}", if c.rotated { " rsp" } else { " sp" });
        }
        if c.offset > 0 {
            let _ = write!(out, " skip={}", c.offset);
        }
        for cell in &c.cells {
            match cell {
                Cell::Star => {
                    let _ = write!(out, " *");
                }
                Cell::Entry(e) => {
                    let _ = write!(out, " {}", e.raw());
                }
            }
        }
        let _ = writeln!(out);
    }
    if let Some((r, c)) = doc.exited {
        let _ = writeln!(out, "exited {} {}", r, c);
    }
    out
}

/// Renders a skew tableau without an exit line.
pub fn format_skew(t: &SkewTableau) -> String {
    format_document(&TableauDoc {
        skew: t.clone(),
        exited: None,
    })
}

/// Renders a straight tableau.
pub fn format_tableau(t: &Tableau) -> String {
    format_skew(&SkewTableau::from_tableau(t))
}

/// An aligned ASCII grid of the boxes, one row per line.
pub fn pretty_grid(t: &SkewTableau) -> String {
    let height = t.bounding_height();
    let width = t.cols.len();
    let mut cells: Vec<Vec<String>> = vec![vec![String::new(); width]; height];
    let mut colw = vec![1usize; width];
    for (j, c) in t.cols.iter().enumerate() {
        for row in c.offset + 1..=c.bottom() {
            let s = match c.cell_at(row) {
                Some(Cell::Star) => "*".to_string(),
                Some(Cell::Entry(e)) => e.to_string(),
                None => unreachable!(),
            };
            colw[j] = colw[j].max(s.len());
            cells[row - 1][j] = s;
        }
    }
    let mut out = String::new();
    for row in &cells {
        let mut line = String::new();
        for (j, s) in row.iter().enumerate() {
            if s.is_empty() {
                let _ = write!(line, "{:>w$} ", ".", w = colw[j]);
            } else {
                let _ = write!(line, "{:>w$} ", s, w = colw[j]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

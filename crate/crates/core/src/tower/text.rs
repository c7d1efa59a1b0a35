//! Line-based text format for towers and elements.
//!
//! ```text
//! QTOWER 1
//! levels 2
//! square 1: 2
//! square 2: 3 1
//! ```

use std::fmt::Write as _;

use num_rational::BigRational;

use super::{basis_len, Tower, TowerElement};
use crate::error::{Error, Result};
use crate::exactnum::{format_rational, parse_rational};

const MAGIC: &str = "QTOWER 1";

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

fn join_coords(coords: &[BigRational]) -> String {
    coords
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses `<tag> <index>: r0 r1 ...` and checks the coordinate count.
fn parse_indexed(line_no: usize, line: &str, tag: &str) -> Result<(usize, Vec<BigRational>)> {
    let rest = line
        .strip_prefix(tag)
        .and_then(|r| r.strip_prefix(' '))
        .ok_or_else(|| format_err(line_no, format!("expected `{tag} <i>: ...`")))?;
    let (index, values) = rest
        .split_once(':')
        .ok_or_else(|| format_err(line_no, "missing `:`"))?;
    let index: usize = index
        .trim()
        .parse()
        .map_err(|_| format_err(line_no, format!("bad index {:?}", index.trim())))?;
    let coords = values
        .split_whitespace()
        .map(|v| parse_rational(v).map_err(|e| format_err(line_no, e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    Ok((index, coords))
}

/// Non-blank lines with `#` comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

impl Tower {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(MAGIC);
        out.push('\n');
        let _ = writeln!(out, "levels {}", self.depth());
        for (i, s) in self.squares.iter().enumerate() {
            let _ = writeln!(out, "square {}: {}", i + 1, join_coords(&s.coords));
        }
        out
    }

    /// Parses and validates a tower file. Structural problems are
    /// `Error::Format`; a well-formed but invalid tower yields the
    /// validation error for its first failing level.
    pub fn from_text(text: &str) -> Result<Tower> {
        let mut lines = content_lines(text);
        match lines.next() {
            Some((_, MAGIC)) => {}
            Some((n, other)) => return Err(format_err(n, format!("expected `{MAGIC}`, found {other:?}"))),
            None => return Err(format_err(1, "empty tower file")),
        }
        let (n, levels_line) = lines
            .next()
            .ok_or_else(|| format_err(2, "missing `levels <n>`"))?;
        let levels: usize = levels_line
            .strip_prefix("levels ")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| format_err(n, "expected `levels <n>`"))?;
        if levels > 20 {
            return Err(format_err(n, format!("{levels} levels is beyond the supported depth")));
        }
        let mut squares = Vec::with_capacity(levels);
        for (n, line) in lines {
            let (index, coords) = parse_indexed(n, line, "square")?;
            let expected_index = squares.len() + 1;
            if index != expected_index {
                return Err(format_err(n, format!("expected square {expected_index}, found {index}")));
            }
            if index > levels {
                return Err(format_err(n, format!("more squares than the declared {levels} levels")));
            }
            let expected = basis_len(index - 1);
            if coords.len() != expected {
                return Err(format_err(
                    n,
                    format!("square {index} needs {expected} coordinates, found {}", coords.len()),
                ));
            }
            squares.push(coords);
        }
        if squares.len() != levels {
            return Err(format_err(
                text.lines().count(),
                format!("declared {levels} levels, found {}", squares.len()),
            ));
        }
        Tower::from_squares(squares)
    }
}

impl TowerElement {
    /// `elt <level>: r0 r1 ...`
    pub fn to_text(&self) -> String {
        format!("elt {}: {}", self.level, join_coords(&self.coords))
    }

    pub fn from_text(line: &str) -> Result<TowerElement> {
        let (level, coords) = parse_indexed(1, line.trim(), "elt")?;
        if level > 20 {
            return Err(format_err(1, format!("level {level} is beyond the supported depth")));
        }
        TowerElement::new(level, coords).map_err(|e| format_err(1, e.to_string()))
    }
}

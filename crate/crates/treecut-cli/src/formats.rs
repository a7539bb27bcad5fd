//! Text formats for instances and point sets.
//!
//! Instance format (UTF-8, line oriented, `#` starts a comment):
//!
//! ```text
//! tree <n>
//! edge <u> <v> <w>     # exactly n-1 lines, w >= 0
//! mass <v> <count>     # zero or more lines, count >= 1
//! ```
//!
//! Points format: one entry per line, `<coordinate>` or
//! `<coordinate> x<count>`.

use std::fmt::Write as _;

use treecut_core::{VertexMultiset, WeightedTree};

/// A parse failure with a one-line human-readable message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ParseError {}

fn fail<T>(line_no: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(format!("line {line_no}: {}", msg.into())))
}

/// Lines with comments stripped, keeping 1-based line numbers.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

/// Parses the `tree`/`edge`/`mass` instance format.
pub fn parse_instance(text: &str) -> Result<(WeightedTree, VertexMultiset), ParseError> {
    let mut lines = significant_lines(text);
    let (first_no, first) = match lines.next() {
        Some(l) => l,
        None => {
            return Err(ParseError(
                "empty instance: expected a `tree <n>` line".into(),
            ))
        }
    };
    let mut head = first.split_whitespace();
    if head.next() != Some("tree") {
        return fail(first_no, "expected `tree <n>` as the first line");
    }
    let n: usize = match head.next().map(str::parse) {
        Some(Ok(n)) => n,
        _ => return fail(first_no, "expected `tree <n>` with an integer vertex count"),
    };
    if head.next().is_some() {
        return fail(first_no, "trailing tokens after `tree <n>`");
    }

    let mut edges = Vec::new();
    let mut mass_entries = Vec::new();
    for (line_no, line) in lines {
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("edge") => {
                let (u, v, w) = match (
                    tokens.next().map(str::parse::<usize>),
                    tokens.next().map(str::parse::<usize>),
                    tokens.next().map(str::parse::<f64>),
                ) {
                    (Some(Ok(u)), Some(Ok(v)), Some(Ok(w))) => (u, v, w),
                    _ => return fail(line_no, "expected `edge <u> <v> <w>`"),
                };
                if tokens.next().is_some() {
                    return fail(line_no, "trailing tokens after `edge <u> <v> <w>`");
                }
                edges.push((u, v, w));
            }
            Some("mass") => {
                let (v, count) = match (
                    tokens.next().map(str::parse::<usize>),
                    tokens.next().map(str::parse::<usize>),
                ) {
                    (Some(Ok(v)), Some(Ok(c))) => (v, c),
                    _ => return fail(line_no, "expected `mass <v> <count>`"),
                };
                if count == 0 {
                    return fail(line_no, "mass count must be at least 1");
                }
                if tokens.next().is_some() {
                    return fail(line_no, "trailing tokens after `mass <v> <count>`");
                }
                mass_entries.push((v, count));
            }
            Some(other) => return fail(line_no, format!("unknown directive `{other}`")),
            None => unreachable!("blank lines are filtered"),
        }
    }

    let tree = WeightedTree::new(n, edges).map_err(|e| ParseError(format!("invalid tree: {e}")))?;
    let masses = VertexMultiset::new(n, mass_entries)
        .map_err(|e| ParseError(format!("invalid mass entry: {e}")))?;
    Ok((tree, masses))
}

/// Parses the points format into a flat coordinate multiset.
pub fn parse_points(text: &str) -> Result<Vec<f64>, ParseError> {
    let mut points = Vec::new();
    for (line_no, line) in significant_lines(text) {
        let mut tokens = line.split_whitespace();
        let coordinate: f64 = match tokens.next().map(str::parse) {
            Some(Ok(c)) => c,
            _ => return fail(line_no, "expected a coordinate"),
        };
        let count = match tokens.next() {
            None => 1,
            Some(tok) => match tok.strip_prefix('x').map(str::parse::<usize>) {
                Some(Ok(c)) if c >= 1 => c,
                _ => return fail(line_no, "expected a repeat count of the form `x<count>`"),
            },
        };
        if tokens.next().is_some() {
            return fail(line_no, "trailing tokens after the point entry");
        }
        points.extend(std::iter::repeat_n(coordinate, count));
    }
    if points.is_empty() {
        return Err(ParseError("no points in input".into()));
    }
    Ok(points)
}

/// Serializes an instance back into the text format; parsing the output
/// reproduces the instance.
pub fn instance_to_text(tree: &WeightedTree, masses: &VertexMultiset) -> String {
    let mut out = String::new();
    writeln!(out, "tree {}", tree.vertex_count()).unwrap();
    for &(u, v, w) in tree.edges() {
        writeln!(out, "edge {u} {v} {w}").unwrap();
    }
    for (v, count) in masses.support() {
        writeln!(out, "mass {v} {count}").unwrap();
    }
    out
}

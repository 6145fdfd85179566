//! Graph file formats.
//!
//! Native edge-list format: first non-comment line `n m`, then `m` lines
//! `u v` with 0-based ids. Lines starting with `#` are comments and may
//! appear anywhere. Self-loops and duplicate edges are rejected with a
//! line/column diagnostic. A DIMACS reader (`p edge N M` / `e u v`,
//! 1-based) covers imports.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A parse failure with its 1-based position in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

fn parse_usize(tok: &str, line: usize, column: usize) -> std::result::Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| err(line, column, format!("expected an integer, found {tok:?}")))
}

/// Column (1-based) at which the w-th whitespace-separated token starts.
fn token_column(text: &str, index: usize) -> usize {
    let mut seen = 0;
    let mut in_token = false;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() {
            in_token = false;
        } else if !in_token {
            if seen == index {
                return i + 1;
            }
            seen += 1;
            in_token = true;
        }
    }
    text.len() + 1
}

pub fn parse_graph(text: &str) -> std::result::Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());

    let (header_no, header) = lines.next().ok_or_else(|| err(1, 1, "empty input"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(err(
            header_no,
            1,
            format!("header must be `n m`, found {} tokens", tokens.len()),
        ));
    }
    let n = parse_usize(tokens[0], header_no, token_column(header, 0))?;
    let m = parse_usize(tokens[1], header_no, token_column(header, 1))?;

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or_else(|| {
            err(
                header_no,
                1,
                format!("expected {m} edges, input ended early"),
            )
        })?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(err(
                line_no,
                1,
                format!("edge line must be `u v`, found {} tokens", toks.len()),
            ));
        }
        let u = parse_usize(toks[0], line_no, token_column(line, 0))?;
        let v = parse_usize(toks[1], line_no, token_column(line, 1))?;
        if u >= n || v >= n {
            return Err(err(line_no, 1, format!("vertex id out of range 0..{n}")));
        }
        if u == v {
            return Err(err(line_no, 1, format!("self-loop at vertex {u}")));
        }
        if edges.contains(&(u.min(v), u.max(v))) {
            return Err(err(line_no, 1, format!("duplicate edge {u} {v}")));
        }
        edges.push((u.min(v), u.max(v)));
    }
    if let Some((line_no, line)) = lines.next() {
        return Err(err(
            line_no,
            1,
            format!("unexpected trailing content: {line:?}"),
        ));
    }
    Graph::from_edges(n, &edges).map_err(|e| err(header_no, 1, e.to_string()))
}

pub fn parse_dimacs(text: &str) -> std::result::Result<Graph, ParseError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if toks.len() != 4 || (toks[1] != "edge" && toks[1] != "col") {
                    return Err(err(line_no, 1, "problem line must be `p edge N M`"));
                }
                n = Some(parse_usize(toks[2], line_no, token_column(raw, 2))?);
            }
            "e" => {
                if toks.len() != 3 {
                    return Err(err(line_no, 1, "edge line must be `e u v`"));
                }
                let u = parse_usize(toks[1], line_no, token_column(raw, 1))?;
                let v = parse_usize(toks[2], line_no, token_column(raw, 2))?;
                if u == 0 || v == 0 {
                    return Err(err(line_no, 1, "DIMACS ids are 1-based"));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(err(line_no, 1, format!("unknown record {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| err(1, 1, "missing `p edge` line"))?;
    let canonical: Vec<(usize, usize)> = {
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v) in &edges {
            if u == v {
                return Err(err(1, 1, format!("self-loop at vertex {}", u + 1)));
            }
            seen.insert((u.min(v), u.max(v)));
        }
        seen.into_iter().collect()
    };
    Graph::from_edges(n, &canonical).map_err(|e| err(1, 1, e.to_string()))
}

/// Renders a graph in the native format; parsing it back yields an
/// identical edge set.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.n(), g.m()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Convenience wrapper converting parse errors into crate errors.
pub fn parse_graph_auto(text: &str, dimacs: bool) -> Result<Graph> {
    let parsed = if dimacs {
        parse_dimacs(text)
    } else {
        parse_graph(text)
    };
    parsed.map_err(|e| Error::StructureAudit(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_graph_seeded;
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments() {
        let text = "# a triangle\n3 3\n0 1\n# middle comment\n1 2\n0 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn rejects_bad_lines_with_positions() {
        let e = parse_graph("3 1\n0 0\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("self-loop"));

        let e = parse_graph("3 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("duplicate"));

        let e = parse_graph("3 1\n0 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
    }

    #[test]
    fn dimacs_roundtrip() {
        let text = "c tiny\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";
        let g = parse_dimacs(text).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    proptest! {
        #[test]
        fn write_then_parse_is_identity(seed in 0u64..500) {
            let g = random_graph_seeded(seed, 2 + (seed as usize % 14), 0.4);
            let back = parse_graph(&write_graph(&g)).unwrap();
            prop_assert_eq!(g.edges(), back.edges());
            prop_assert_eq!(g.n(), back.n());
        }
    }
}

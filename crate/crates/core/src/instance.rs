//! The `floodgraph` instance text format.
//!
//! Whitespace-separated, `#` starts a comment, blank lines ignored:
//!
//! ```text
//! floodgraph 1
//! n 3
//! c 2
//! colours 1 0 1
//! edges 2
//! 0 1
//! 1 2
//! ```
//!
//! Edges are written `u v` with `u < v`. Writing a parsed graph reproduces
//! the canonical byte layout, so canonical files round-trip identically.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::ColouredGraph;

pub const FORMAT_NAME: &str = "floodgraph";
pub const FORMAT_VERSION: u64 = 1;

struct Lines<'a> {
    rows: Vec<(usize, Vec<&'a str>)>,
    at: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let rows = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                let content = raw.split('#').next().unwrap_or("");
                let tokens: Vec<&str> = content.split_whitespace().collect();
                (!tokens.is_empty()).then_some((i + 1, tokens))
            })
            .collect();
        Lines { rows, at: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &[&'a str])> {
        let row = self.rows.get(self.at).ok_or_else(|| Error::Parse {
            line: self.rows.last().map_or(1, |(l, _)| l + 1),
            message: format!("unexpected end of file, expected {what}"),
        })?;
        self.at += 1;
        Ok((row.0, &row.1))
    }
}

fn parse_number<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected {what}, got `{token}`"),
    })
}

fn keyword_line<'a>(lines: &mut Lines<'a>, keyword: &str, arity: usize) -> Result<(usize, Vec<&'a str>)> {
    let (line, tokens) = lines.next(&format!("`{keyword}` line"))?;
    if tokens[0] != keyword {
        return Err(Error::Parse {
            line,
            message: format!("expected `{keyword}`, got `{}`", tokens[0]),
        });
    }
    if arity != usize::MAX && tokens.len() != arity + 1 {
        return Err(Error::Parse {
            line,
            message: format!("`{keyword}` takes {arity} value(s), got {}", tokens.len() - 1),
        });
    }
    Ok((line, tokens.to_vec()))
}

/// Parses the text format into a validated graph.
pub fn parse_instance(text: &str) -> Result<ColouredGraph> {
    let mut lines = Lines::new(text);

    let (line, header) = keyword_line(&mut lines, FORMAT_NAME, 1)?;
    let version: u64 = parse_number(header[1], line, "format version")?;
    if version != FORMAT_VERSION {
        return Err(Error::Parse {
            line,
            message: format!("unsupported format version {version}"),
        });
    }

    let (line, tokens) = keyword_line(&mut lines, "n", 1)?;
    let n: usize = parse_number(tokens[1], line, "vertex count")?;
    if n == 0 {
        return Err(Error::Parse { line, message: "vertex count must be positive".into() });
    }

    let (line, tokens) = keyword_line(&mut lines, "c", 1)?;
    let c: usize = parse_number(tokens[1], line, "colour count")?;
    if c == 0 {
        return Err(Error::Parse { line, message: "colour count must be positive".into() });
    }

    let (line, tokens) = keyword_line(&mut lines, "colours", usize::MAX)?;
    if tokens.len() != n + 1 {
        return Err(Error::Parse {
            line,
            message: format!("expected {n} colours, got {}", tokens.len() - 1),
        });
    }
    let mut colours = Vec::with_capacity(n);
    for token in &tokens[1..] {
        let colour: usize = parse_number(token, line, "colour id")?;
        if colour >= c {
            return Err(Error::Parse {
                line,
                message: format!("colour {colour} outside 0..{c}"),
            });
        }
        colours.push(colour);
    }

    let (line, tokens) = keyword_line(&mut lines, "edges", 1)?;
    let m: usize = parse_number(tokens[1], line, "edge count")?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for _ in 0..m {
        let (line, tokens) = lines.next("an edge line")?;
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("an edge is two vertex ids, got {} token(s)", tokens.len()),
            });
        }
        let u: usize = parse_number(tokens[0], line, "vertex id")?;
        let v: usize = parse_number(tokens[1], line, "vertex id")?;
        if u == v {
            return Err(Error::Parse { line, message: format!("self-loop at vertex {u}") });
        }
        if u > v {
            return Err(Error::Parse {
                line,
                message: format!("edges are written `u v` with u < v, got {u} {v}"),
            });
        }
        if v >= n {
            return Err(Error::Parse {
                line,
                message: format!("edge ({u},{v}) out of range for {n} vertices"),
            });
        }
        if !seen.insert((u, v)) {
            return Err(Error::Parse { line, message: format!("duplicate edge ({u},{v})") });
        }
        edges.push((u, v));
    }

    if let Some((line, _)) = lines.rows.get(lines.at) {
        return Err(Error::Parse { line: *line, message: "trailing content after edge list".into() });
    }

    ColouredGraph::new(n, c, &edges, colours)
}

/// Canonical text form of a graph.
pub fn write_instance(g: &ColouredGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{FORMAT_NAME} {FORMAT_VERSION}");
    let _ = writeln!(out, "n {}", g.vertex_count());
    let _ = writeln!(out, "c {}", g.colour_count());
    let colours: Vec<String> = g.colouring().as_slice().iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "colours {}", colours.join(" "));
    let _ = writeln!(out, "edges {}", g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const P3: &str = "floodgraph 1\nn 3\nc 2\ncolours 1 0 1\nedges 2\n0 1\n1 2\n";

    #[test]
    fn parses_the_reference_document() {
        let g = parse_instance(P3).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.colour_count(), 2);
        assert_eq!(g.colouring().as_slice(), &[1, 0, 1]);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a path\nfloodgraph 1\n\nn 3 # three vertices\nc 2\ncolours 1 0 1\nedges 2\n0 1\n1 2\n";
        assert!(parse_instance(text).is_ok());
    }

    #[test]
    fn colour_out_of_range_points_at_its_line() {
        let text = "floodgraph 1\nn 3\nc 2\ncolours 1 2 1\nedges 0\n";
        match parse_instance(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn self_loop_is_rejected() {
        let text = "floodgraph 1\nn 3\nc 2\ncolours 1 0 1\nedges 1\n0 0\n";
        match parse_instance(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_and_unordered_edges_are_rejected() {
        let dup = "floodgraph 1\nn 3\nc 2\ncolours 1 0 1\nedges 2\n0 1\n0 1\n";
        assert!(matches!(parse_instance(dup), Err(Error::Parse { line: 7, .. })));
        let unordered = "floodgraph 1\nn 3\nc 2\ncolours 1 0 1\nedges 1\n1 0\n";
        assert!(matches!(parse_instance(unordered), Err(Error::Parse { line: 6, .. })));
    }

    #[test]
    fn truncated_file_reports_following_line() {
        let text = "floodgraph 1\nn 3\nc 2\ncolours 1 0 1\nedges 2\n0 1\n";
        assert!(matches!(parse_instance(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn bad_header_is_rejected() {
        assert!(parse_instance("floodgraph 2\nn 1\nc 1\ncolours 0\nedges 0\n").is_err());
        assert!(parse_instance("graph 1\nn 1\nc 1\ncolours 0\nedges 0\n").is_err());
    }

    #[test]
    fn canonical_round_trip_is_byte_identical() {
        let g = parse_instance(P3).unwrap();
        let written = write_instance(&g);
        assert_eq!(written, P3);
        let again = parse_instance(&written).unwrap();
        assert_eq!(again, g);
    }
}

//! Plain-text graph format.
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v>
//! ```
//! Ids are 0-based. Exactly `m` edge lines must follow the header.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_id(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line_no, "duplicate header"));
                }
                let n = parse_id(toks.next(), line_no, "vertex count")?;
                let m = parse_id(toks.next(), line_no, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let u = parse_id(toks.next(), line_no, "endpoint")?;
                let v = parse_id(toks.next(), line_no, "endpoint")?;
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop on vertex {u}")));
                }
                let (n, _) = header.ok_or_else(|| parse_err(line_no, "edge before header"))?;
                if u >= n || v >= n {
                    return Err(parse_err(line_no, format!("vertex id out of range (n = {n})")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(parse_err(line_no, format!("duplicate edge {u}-{v}")));
                }
                edges.push((u, v));
            }
            Some(other) => {
                return Err(parse_err(line_no, format!("unknown line type `{other}`")));
            }
            None => unreachable!("blank lines are skipped"),
        }
        if toks.next().is_some() {
            return Err(parse_err(line_no, "trailing tokens"));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p <n> <m>` header"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

/// Header plus edges in lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::path;

    #[test]
    fn reads_path() {
        let g = read_graph("p 3 2\ne 0 1\ne 1 2\n").unwrap();
        assert_eq!(g, path(3));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = read_graph("# hello\n\np 2 1\n# mid\ne 1 0\n").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn rejects_self_loop() {
        let err = read_graph("p 1 1\ne 0 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = read_graph("e 0 0").unwrap_err();
        assert!(err.to_string().contains("self-loop"), "{err}");
    }

    #[test]
    fn rejects_duplicates_and_bad_counts() {
        assert!(matches!(read_graph("p 2 2\ne 0 1\ne 1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(read_graph("p 2 2\ne 0 1\n").is_err());
        assert!(matches!(read_graph("p 2 1\ne 0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_graph("p 2 x\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn write_normalizes_edge_order() {
        let g = read_graph("p 3 2\ne 2 1\ne 1 0\n").unwrap();
        assert_eq!(write_graph(&g), "p 3 2\ne 0 1\ne 1 2\n");
    }
}

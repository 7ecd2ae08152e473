//! Plain-text graph format.
//!
//! ```text
//! c optional comments
//! p <n> <m>
//! e <u> <v>      (m lines, 1-indexed endpoints)
//! ```
//!
//! The writer emits edges in lexicographic order, so writing is a function of
//! the adjacency alone.

use std::fmt::Write as _;

use crate::graph::Graph;
use crate::{Error, Result};

pub fn write_graph(g: &Graph) -> String {
    write_graph_with_comments(g, &[])
}

/// Writes the graph with leading `c` comment lines.
pub fn write_graph_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        if c.is_empty() {
            out.push_str("c\n");
        } else {
            let _ = writeln!(out, "c {c}");
        }
    }
    let edges = g.edges();
    let _ = writeln!(out, "p {} {}", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let nums: Vec<usize> = fields
            .map(|f| f.parse::<usize>().map_err(|_| err(format!("expected a non-negative integer, got `{f}`"))))
            .collect::<Result<_>>()?;
        match (tag, nums.as_slice()) {
            ("p", &[n, m]) => {
                if header.is_some() {
                    return Err(err("duplicate `p` line".into()));
                }
                if n == 0 {
                    return Err(err("graphs must have at least one vertex".into()));
                }
                header = Some((n, m));
            }
            ("e", &[u, v]) => {
                let (n, _) = header.ok_or_else(|| err("edge before `p` line".into()))?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(format!("endpoint out of range 1..={n}")));
                }
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            ("p", _) => return Err(err("expected `p <n> <m>`".into())),
            ("e", _) => return Err(err("expected `e <u> <v>`".into())),
            _ => return Err(err(format!("unknown line type `{tag}`"))),
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing `p` line".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_sorted_one_indexed() {
        let g = Graph::from_edge_list(3, &[(2, 1), (0, 2)]).unwrap();
        assert_eq!(write_graph(&g), "p 3 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn parses_comments_and_round_trips() {
        let text = "c a triangle\np 3 3\ne 1 2\nc mid comment\ne 2 3\ne 1 3\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        let with = write_graph_with_comments(&g, &["hello".into()]);
        assert!(with.starts_with("c hello\np 3 3\n"));
        assert_eq!(parse_graph(&with).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_graph("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_graph("p 2 1\ne 1 3\n").is_err());
        assert!(parse_graph("p 2 1\ne 1 1\n").is_err());
        assert!(parse_graph("p 2 2\ne 1 2\n").is_err());
        assert!(parse_graph("p 0 0\n").is_err());
        assert!(parse_graph("x 1\n").is_err());
        assert!(parse_graph("").is_err());
    }
}

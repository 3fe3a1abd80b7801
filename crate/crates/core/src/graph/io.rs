use std::fmt::Write as _;

use super::{Edge, Graph};
use crate::error::{Error, Result};

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

fn parse_pair(text: &str, line: usize) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
        return parse_err(line, "expected two integers");
    };
    match (a.parse(), b.parse()) {
        (Ok(a), Ok(b)) => Ok((a, b)),
        _ => parse_err(line, "expected two non-negative integers"),
    }
}

/// Parses the `n m` header followed by `m` lines `u v` with `u < v < n`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let Some((hl, header)) = lines.next() else {
        return parse_err(1, "missing `n m` header");
    };
    let (n, m) = parse_pair(header, hl + 1)?;
    let mut edges: Vec<Edge> = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        let (u, v) = parse_pair(line, lineno)?;
        if u >= v {
            return parse_err(lineno, format!("edge `{u} {v}` must satisfy u < v"));
        }
        if v >= n {
            return parse_err(lineno, format!("vertex {v} out of range for n = {n}"));
        }
        if !seen.insert((u, v)) {
            return parse_err(lineno, format!("duplicate edge `{u} {v}`"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return parse_err(
            hl + 1,
            format!("header declares {m} edges, found {}", edges.len()),
        );
    }
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

const PALETTE: [(&str, &str); 6] = [
    ("solid", "black"),
    ("dashed", "blue"),
    ("dotted", "red"),
    ("bold", "darkgreen"),
    ("dashed", "orange"),
    ("dotted", "purple"),
];

/// DOT text for `g`. With `trees`, emits one styled edge statement per tree
/// membership and draws host edges used by no tree in grey.
pub fn to_dot(g: &Graph, trees: Option<&[Vec<Edge>]>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    match trees {
        None => {
            for &(u, v) in g.edges() {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
        Some(trees) => {
            for &e in g.edges() {
                let members: Vec<usize> = (0..trees.len())
                    .filter(|&t| trees[t].binary_search(&e).is_ok())
                    .collect();
                if members.is_empty() {
                    let _ = writeln!(out, "  {} -- {} [color=grey];", e.0, e.1);
                }
                for t in members {
                    let (style, color) = PALETTE[t % PALETTE.len()];
                    let _ = writeln!(
                        out,
                        "  {} -- {} [style={style}, color={color}, label=\"T{}\"];",
                        e.0,
                        e.1,
                        t + 1
                    );
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

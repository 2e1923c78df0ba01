//! Plain-text graph files.
//!
//! ```text
//! # a triangle
//! p 3 3
//! 0 1
//! 1 2
//! 0 2
//! ```
//!
//! The header `p <n> <m>` comes first, followed by exactly `m` edge lines with
//! 0-based vertex ids. `#` starts a comment that runs to the end of the line.
//! Self-loops and repeated edges (in either orientation) are errors.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use htw_core::Graph;

use crate::CliError;

pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let err = |message: String| CliError::Parse { line, message };
        let Some((n, m)) = header else {
            if tokens.len() != 3 || tokens[0] != "p" {
                return Err(err(format!("expected header `p <n> <m>`, found `{content}`")));
            }
            header = Some((number(tokens[1], line)?, number(tokens[2], line)?));
            continue;
        };
        if tokens.len() != 2 {
            return Err(err(format!("expected an edge `u v`, found `{content}`")));
        }
        let (u, v) = (number(tokens[0], line)?, number(tokens[1], line)?);
        if u >= n || v >= n {
            return Err(err(format!("vertex id out of range 0..{n} in `{content}`")));
        }
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(format!("duplicate edge {u} {v}")));
        }
        if edges.len() == m {
            return Err(err(format!("more than the {m} edges announced in the header")));
        }
        edges.push((u, v));
    }
    let Some((n, m)) = header else {
        return Err(CliError::Parse { line: 0, message: "missing header `p <n> <m>`".into() });
    };
    if edges.len() != m {
        return Err(CliError::Parse { line: 0, message: format!("header announces {m} edges, found {}", edges.len()) });
    }
    Ok(Graph::new(n, edges)?)
}

fn number(token: &str, line: usize) -> Result<usize, CliError> {
    token
        .parse()
        .map_err(|_| CliError::Parse { line, message: format!("`{token}` is not a vertex id") })
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = crate::read_to_string(path)?;
    parse_graph(&text).map_err(|e| e.in_file(path))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

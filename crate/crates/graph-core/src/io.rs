//! Graph text format.
//!
//! ```text
//! c optional comments anywhere
//! p edge <n> <m>
//! e <u> <v>        (m lines, 0-based endpoints)
//! l <v> <role>     (optional role labels)
//! ```

use thiserror::Error;

use crate::graph::{Graph, Role};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, msg: msg.into() })
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut labels: Vec<(usize, Role)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("p") => {
                if header.is_some() {
                    return err(lineno, "duplicate problem line");
                }
                if tok.next() != Some("edge") {
                    return err(lineno, "expected `p edge <n> <m>`");
                }
                let n = parse_num(tok.next(), lineno)?;
                let m = parse_num(tok.next(), lineno)?;
                header = Some((n, m));
            }
            Some("e") => {
                if header.is_none() {
                    return err(lineno, "edge before problem line");
                }
                let u = parse_num(tok.next(), lineno)?;
                let v = parse_num(tok.next(), lineno)?;
                edges.push((u, v));
            }
            Some("l") => {
                let v = parse_num(tok.next(), lineno)?;
                let role = match tok.next() {
                    Some(word) => Role::parse(word)
                        .ok_or(ParseError { line: lineno, msg: format!("unknown role `{word}`") })?,
                    None => return err(lineno, "expected `l <v> <role>`"),
                };
                labels.push((v, role));
            }
            Some(other) => return err(lineno, format!("unknown line kind `{other}`")),
            None => unreachable!("blank lines are skipped"),
        }
        if tok.next().is_some() {
            return err(lineno, "trailing tokens");
        }
    }
    let (n, m) = match header {
        Some(h) => h,
        None => return err(text.lines().count() + 1, "missing problem line"),
    };
    if edges.len() != m {
        return err(
            text.lines().count() + 1,
            format!("expected {m} edge lines, found {}", edges.len()),
        );
    }
    let mut role_vec = vec![Role::Plain; n];
    for (v, role) in labels {
        if v >= n {
            return err(0, format!("label vertex {v} out of range"));
        }
        role_vec[v] = role;
    }
    Graph::build_labeled(n, &edges, role_vec)
        .map_err(|e| ParseError { line: 0, msg: e.to_string() })
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("p edge {} {}\n", g.n(), g.edge_count()));
    for e in g.edges() {
        out.push_str(&format!("e {} {}\n", e.u(), e.v()));
    }
    for v in g.vertices() {
        if g.label(v) != Role::Plain {
            out.push_str(&format!("l {} {}\n", v, g.label(v)));
        }
    }
    out
}

fn parse_num(tok: Option<&str>, line: usize) -> Result<usize, ParseError> {
    match tok.and_then(|t| t.parse().ok()) {
        Some(v) => Ok(v),
        None => err(line, "expected a number"),
    }
}

//! Edge-list text and graph6 encodings.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{Graph, GraphError};

/// Parses `u v` lines. `#` starts a comment; blank lines are ignored.
///
/// The vertex count is one more than the largest id mentioned, so ids that
/// never appear become isolated vertices.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut n = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let malformed = || GraphError::Malformed { line, text: raw.trim().to_string() };
        let mut tokens = body.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (
                a.parse::<usize>().map_err(|_| malformed())?,
                b.parse::<usize>().map_err(|_| malformed())?,
            ),
            _ => return Err(malformed()),
        };
        if a == b {
            return Err(GraphError::Loop { line, vertex: a });
        }
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) {
            return Err(GraphError::DuplicateEdge { line, u: key.0, v: key.1 });
        }
        n = n.max(a + 1).max(b + 1);
        edges.push((a, b));
    }
    Graph::new(n, edges)
}

/// Sorted `u v` lines, one per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.sorted_edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

const BIAS: u8 = 63;

/// Decodes a single graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty input".into()));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(GraphError::Graph6(format!("invalid byte {bad:#04x}")));
    }
    let (n, body) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(GraphError::Graph6(format!(
            "expected {need} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let short = |what: &str| GraphError::Graph6(format!("truncated {what} size field"));
    if bytes[0] != 126 {
        return Ok(((bytes[0] - BIAS) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(short("8-byte"));
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        return Ok((n, &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(short("4-byte"));
    }
    let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
    Ok((n, &bytes[4..]))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.edge_between(u, v).is_some() as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ascii")
}

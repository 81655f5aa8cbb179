//! Edge-list text and graph6 readers and writers.
//!
//! Edge lists start with a header line `n m` followed by `m` lines `u v`
//! with `0 <= u < v < n`. Blank lines and lines starting with `#` are
//! skipped. Files ending in `.g6` are graph6; everything else is an edge list.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use sepcut_core::{BipartiteGraph, Graph};

use crate::error::IoError;

pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| IoError::parse(1, "missing header \"n m\""))?;
    let (n, m) = two_numbers(hline, header, "header must be \"n m\"")?;
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (line, l) in lines {
        let (u, v) = two_numbers(line, l, "edge line must be \"u v\"")?;
        if u >= n || v >= n {
            return Err(IoError::parse(line, format!("vertex {} out of range for n = {n}", u.max(v))));
        }
        if u == v {
            return Err(IoError::parse(line, format!("loop at vertex {u}")));
        }
        if u > v {
            return Err(IoError::parse(line, format!("edge {u} {v} must be written with u < v")));
        }
        if !g.add_edge(u, v)? {
            return Err(IoError::parse(line, format!("duplicate edge {u} {v}")));
        }
        count += 1;
    }
    if count != m {
        return Err(IoError::parse(hline, format!("header promises {m} edges, found {count}")));
    }
    Ok(g)
}

fn two_numbers(line: usize, text: &str, what: &str) -> Result<(usize, usize), IoError> {
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(IoError::parse(line, format!("{what}, got {text:?}"))),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

/// Upper-triangle pairs in graph6 bit order: `(0,1), (0,2), (1,2), (0,3), ...`.
fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for (i, j) in pairs(n) {
        acc = acc << 1 | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push(acc + 63);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn decode_graph6(text: &str) -> Result<Graph, IoError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(IoError::Graph6(format!("byte {b:#04x} outside 63..=126")));
    }
    let sextet = |b: u8| usize::from(b - 63);
    let (n, body) = match bytes {
        [126, 126, rest @ ..] if rest.len() >= 6 => (rest[..6].iter().fold(0, |a, &b| a << 6 | sextet(b)), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => {
            (rest[..3].iter().fold(0, |a, &b| a << 6 | sextet(b)), &rest[3..])
        }
        [b, rest @ ..] if *b != 126 => (sextet(*b), rest),
        _ => return Err(IoError::Graph6("truncated size header".into())),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(IoError::Graph6(format!("n = {n} needs {} data bytes, found {}", bits.div_ceil(6), body.len())));
    }
    let mut g = Graph::empty(n);
    for (t, (i, j)) in pairs(n).enumerate() {
        if sextet(body[t / 6]) >> (5 - t % 6) & 1 == 1 {
            g.add_edge(i, j)?;
        }
    }
    Ok(g)
}

fn is_graph6(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("g6"))
}

pub fn read_graph(path: &Path) -> Result<Graph, IoError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::File { path: path.into(), source })?;
    if is_graph6(path) {
        let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        decode_graph6(first.trim())
    } else {
        parse_edge_list(&text)
    }
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<(), IoError> {
    let text = if is_graph6(path) { encode_graph6(g) + "\n" } else { write_edge_list(g) };
    fs::write(path, text).map_err(|source| IoError::File { path: path.into(), source })
}

/// A bipartite graph stored as a graph on `left + right` vertices, left part first.
pub fn read_bipartite(path: &Path, left: usize) -> Result<BipartiteGraph, IoError> {
    Ok(BipartiteGraph::from_graph(&read_graph(path)?, left)?)
}

pub fn write_bipartite(path: &Path, h: &BipartiteGraph) -> Result<(), IoError> {
    write_graph(path, &h.to_graph())
}

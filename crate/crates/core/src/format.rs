//! Text formats for graphs: graph6 and a plain edge list.
//!
//! graph6: the vertex count `n` is written as one byte `n + 63` when
//! `n <= 62`, as `126` followed by three bytes of 6 bits each when
//! `n <= 258047`, and as `126 126` followed by six bytes otherwise. The
//! upper triangle of the adjacency matrix follows, column by column
//! (pairs `(i, j)` for `j = 1..n`, `i = 0..j`), one bit per pair, most
//! significant bit first, padded with zeros to a multiple of 6 bits; each
//! 6-bit group is written as the byte `group + 63`. An optional
//! `>>graph6<<` header is accepted on input and never written.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with 0-indexed
//! endpoints. The canonical form lists each edge once with `u < v`, sorted.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";
const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LARGE_MAX: u64 = (1 << 36) - 1;

/// Largest vertex count accepted from text; adjacency is stored densely.
pub const MAX_PARSED_VERTICES: usize = 1 << 14;

fn check_size(n: u64) -> Result<()> {
    if n > MAX_PARSED_VERTICES as u64 {
        return Err(Error::Parse(format!(
            "{n} vertices exceeds the limit of {MAX_PARSED_VERTICES}"
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl GraphFormat {
    pub fn name(self) -> &'static str {
        match self {
            GraphFormat::Graph6 => "graph6",
            GraphFormat::EdgeList => "edge-list",
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edge-list" | "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            other => Err(Error::Parse(format!("unknown graph format {other:?}"))),
        }
    }
}

/// A graph serialized in one of the supported formats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub format: GraphFormat,
    pub payload: String,
}

impl GraphDocument {
    pub fn new(format: GraphFormat, payload: impl Into<String>) -> Self {
        Self {
            format,
            payload: payload.into(),
        }
    }

    /// Guesses the format: text whose first non-blank line is two integers
    /// is an edge list, anything else is graph6.
    pub fn sniff(text: &str) -> Self {
        let first = text.lines().map(str::trim).find(|l| !l.is_empty());
        let is_edge_list = first.is_some_and(|l| {
            let tokens: Vec<&str> = l.split_whitespace().collect();
            tokens.len() == 2 && tokens.iter().all(|t| t.parse::<i64>().is_ok())
        });
        let format = if is_edge_list {
            GraphFormat::EdgeList
        } else {
            GraphFormat::Graph6
        };
        Self::new(format, text)
    }

    pub fn parse(&self) -> Result<Graph> {
        parse_graph(self)
    }
}

pub fn parse_graph(doc: &GraphDocument) -> Result<Graph> {
    match doc.format {
        GraphFormat::Graph6 => parse_graph6(&doc.payload),
        GraphFormat::EdgeList => parse_edge_list(&doc.payload),
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> GraphDocument {
    let payload = match format {
        GraphFormat::Graph6 => emit_graph6(g),
        GraphFormat::EdgeList => emit_edge_list(g),
    };
    GraphDocument::new(format, payload)
}

fn pair_bits(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

fn push_6bit_groups(out: &mut String, value: u64, groups: u32) {
    for k in (0..groups).rev() {
        out.push(char::from(((value >> (6 * k)) & 63) as u8 + 63));
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= SMALL_MAX {
        out.push(char::from(n as u8 + 63));
    } else if n <= MEDIUM_MAX {
        out.push('~');
        push_6bit_groups(&mut out, n as u64, 3);
    } else {
        out.push_str("~~");
        push_6bit_groups(&mut out, n as u64, 6);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for (i, j) in pair_bits(n) {
        group = group << 1 | u8::from(g.is_adjacent(i, j));
        filled += 1;
        if filled == 6 {
            out.push(char::from(group + 63));
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(char::from((group << (6 - filled)) + 63));
    }
    out
}

fn graph6_value(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0, |acc, &b| acc << 6 | u64::from(b - 63))
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim();
    let body = body.strip_prefix(GRAPH6_HEADER).unwrap_or(body);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("invalid graph6 byte {b:#04x}")));
    }
    let (n, data) = if bytes[0] != 126 {
        (u64::from(bytes[0] - 63), &bytes[1..])
    } else if bytes.get(1) == Some(&126) {
        if bytes.len() < 8 {
            return Err(Error::Parse("truncated graph6 size field".into()));
        }
        (graph6_value(&bytes[2..8]), &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(Error::Parse("truncated graph6 size field".into()));
        }
        (graph6_value(&bytes[1..4]), &bytes[4..])
    };
    if n > LARGE_MAX {
        return Err(Error::Parse(format!("graph6 size {n} out of range")));
    }
    check_size(n)?;
    let bits = u128::from(n) * u128::from(n.saturating_sub(1)) / 2;
    let expected = bits.div_ceil(6);
    if data.len() as u128 != expected {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {expected} for {n} vertices",
            data.len()
        )));
    }
    let n = n as usize;
    let mut edges = Vec::new();
    for (k, (i, j)) in pair_bits(n).enumerate() {
        let group = data[k / 6] - 63;
        if group >> (5 - k % 6) & 1 == 1 {
            edges.push((i, j));
        }
    }
    let used = (bits % 6) as u32;
    if used != 0 {
        let last = data[data.len() - 1] - 63;
        if last & ((1 << (6 - used)) - 1) != 0 {
            return Err(Error::Parse("non-zero graph6 padding bits".into()));
        }
    }
    Graph::new(n, edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_count(token: &str, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("{what} {token:?} is not a non-negative integer")))
}

fn parse_pair(line: &str, what: &str) -> Result<(usize, usize)> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(Error::Parse(format!("{what} line {line:?} needs two tokens")));
    }
    Ok((parse_count(tokens[0], what)?, parse_count(tokens[1], what)?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing \"n m\" header".into()))?;
    let (n, m) = parse_pair(header, "header")?;
    check_size(n as u64)?;
    let mut edges = Vec::new();
    for line in lines {
        edges.push(parse_pair(line, "edge")?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    let g = Graph::new(n, edges)?;
    if g.edge_count() != m {
        return Err(Error::Parse("duplicate edge".into()));
    }
    Ok(g)
}

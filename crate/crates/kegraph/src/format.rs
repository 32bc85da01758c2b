//! Graph interchange formats: graph6 (bit-exact, short form plus the 3-byte
//! long form), 0-indexed plain edge lists with an "n m" header, and 1-indexed
//! DIMACS "p edge" files. A sniffing entry point picks the right parser.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("byte {offset}: invalid graph6 byte 0x{byte:02x} (must be 63..=126)")]
    BadByte { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated graph6 data, expected {expected} payload bytes, found {found}")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: trailing garbage after graph6 payload")]
    TrailingGarbage { offset: usize },
    #[error("byte {offset}: nonzero padding bits in final graph6 byte")]
    BadPadding { offset: usize },
    #[error("graph6 order {n} not supported (max {max})")]
    UnsupportedOrder { n: u64, max: u64 },
    #[error("empty input")]
    Empty,
    #[error("line {line}: {msg}")]
    BadLine { line: usize, msg: String },
    #[error("line {line}: self-loop {v} {v}")]
    Loop { line: usize, v: usize },
    #[error("line {line}: vertex {v} out of range (n = {n})")]
    OutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: expected integer, got {token:?}")]
    NonInteger { line: usize, token: String },
}

const G6_MAX_LONG: u64 = 258_047;

/// Encodes a graph as one graph6 line (no trailing newline). Uses the
/// single-byte order field when n <= 62, the ~-prefixed 3-byte field up to
/// 258047 vertices.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        assert!(
            (n as u64) <= G6_MAX_LONG,
            "graph6 encoding beyond {G6_MAX_LONG} vertices is not supported"
        );
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 0x3f) as u8);
        bytes.push(63 + ((n >> 6) & 0x3f) as u8);
        bytes.push(63 + (n & 0x3f) as u8);
    }
    // Upper triangle column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                bytes.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(63 + (acc << (6 - nbits)));
    }
    String::from_utf8(bytes).unwrap()
}

/// Parses one graph6 line. Errors carry the byte offset of the problem.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::BadByte { offset, byte: b });
        }
    }
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as u64, 1)
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(ParseError::UnsupportedOrder {
                n: u64::MAX,
                max: G6_MAX_LONG,
            });
        }
        if bytes.len() < 4 {
            return Err(ParseError::Truncated {
                offset: bytes.len(),
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = ((bytes[1] - 63) as u64) << 12 | ((bytes[2] - 63) as u64) << 6 | (bytes[3] - 63) as u64;
        (n, 4)
    };
    let n = usize::try_from(n).unwrap();
    let nbits = n * n.saturating_sub(1) / 2;
    let payload = nbits.div_ceil(6);
    let found = bytes.len() - header_len;
    if found < payload {
        return Err(ParseError::Truncated {
            offset: bytes.len(),
            expected: payload,
            found,
        });
    }
    if found > payload {
        return Err(ParseError::TrailingGarbage {
            offset: header_len + payload,
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[header_len + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    // Padding bits of the last byte must be zero.
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(ParseError::BadPadding {
                offset: bytes.len() - 1,
            });
        }
    }
    Ok(Graph::from_edges(n, edges).expect("graph6 bits map to valid edges"))
}

/// Edge-list parse result; duplicate edges collapse with a count so callers
/// can warn.
#[derive(Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub duplicate_edges: usize,
}

fn parse_usize(line: usize, token: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::NonInteger {
        line,
        token: token.to_string(),
    })
}

/// Parses a plain edge list ("n m" header then m "u v" lines, 0-indexed) or a
/// DIMACS file ("p edge n m" then "e u v" lines, 1-indexed), distinguished by
/// header sniffing. Blank lines and '#' comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let dimacs = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("p ") || l.starts_with("c ") || l == "c");
    if dimacs {
        return parse_dimacs_lines(text);
    }
    let (line, header) = lines.next().ok_or(ParseError::Empty)?;
    let mut it = header.split_whitespace();
    let (n_tok, m_tok) = (it.next().unwrap_or(""), it.next().unwrap_or(""));
    if it.next().is_some() {
        return Err(ParseError::BadLine {
            line,
            msg: format!("expected header \"n m\", got {header:?}"),
        });
    }
    let n = parse_usize(line, n_tok)?;
    let m = parse_usize(line, m_tok)?;
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, l) = lines.next().ok_or_else(|| ParseError::BadLine {
            line: text.lines().count(),
            msg: format!("expected {m} edge lines"),
        })?;
        let mut it = l.split_whitespace();
        let u = parse_usize(line, it.next().unwrap_or(""))?;
        let v = parse_usize(line, it.next().unwrap_or(""))?;
        push_edge(&mut out, line, n, u, v)?;
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::BadLine {
            line,
            msg: "unexpected content after edge list".into(),
        });
    }
    finish_edges(n, out)
}

fn parse_dimacs_lines(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut n = None;
    let mut out: Vec<(usize, (usize, usize))> = Vec::new();
    for (line, l) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if l.is_empty() || l.starts_with('c') || l.starts_with('#') {
            continue;
        }
        let mut it = l.split_whitespace();
        match it.next() {
            Some("p") => {
                let kind = it.next().unwrap_or("");
                if kind != "edge" && kind != "edges" && kind != "col" {
                    return Err(ParseError::BadLine {
                        line,
                        msg: format!("unsupported DIMACS problem type {kind:?}"),
                    });
                }
                n = Some(parse_usize(line, it.next().unwrap_or(""))?);
            }
            Some("e") => {
                let n = n.ok_or(ParseError::BadLine {
                    line,
                    msg: "edge before \"p edge\" header".into(),
                })?;
                let u = parse_usize(line, it.next().unwrap_or(""))?;
                let v = parse_usize(line, it.next().unwrap_or(""))?;
                if u == 0 || v == 0 {
                    return Err(ParseError::OutOfRange { line, v: 0, n });
                }
                out.push((line, (u - 1, v - 1)));
            }
            Some(other) => {
                return Err(ParseError::BadLine {
                    line,
                    msg: format!("unrecognized DIMACS line kind {other:?}"),
                })
            }
            None => unreachable!(),
        }
    }
    let n = n.ok_or(ParseError::Empty)?;
    let mut edges = Vec::with_capacity(out.len());
    for (line, (u, v)) in out {
        push_edge(&mut edges, line, n, u, v)?;
    }
    finish_edges(n, edges)
}

fn push_edge(
    out: &mut Vec<(usize, usize)>,
    line: usize,
    n: usize,
    u: usize,
    v: usize,
) -> Result<(), ParseError> {
    if u == v {
        return Err(ParseError::Loop { line, v });
    }
    if u >= n {
        return Err(ParseError::OutOfRange { line, v: u, n });
    }
    if v >= n {
        return Err(ParseError::OutOfRange { line, v, n });
    }
    out.push((u.min(v), u.max(v)));
    Ok(())
}

fn finish_edges(n: usize, mut edges: Vec<(usize, usize)>) -> Result<ParsedGraph, ParseError> {
    edges.sort_unstable();
    let before = edges.len();
    edges.dedup();
    let graph = match Graph::from_edges(n, edges.iter().copied()) {
        Ok(g) => g,
        Err(GraphError::SelfLoop { v }) => return Err(ParseError::Loop { line: 0, v }),
        Err(GraphError::VertexOutOfRange { v, n }) => {
            return Err(ParseError::OutOfRange { line: 0, v, n })
        }
        Err(e) => unreachable!("edge list construction: {e}"),
    };
    let duplicate_edges = before - graph.m();
    Ok(ParsedGraph {
        graph,
        duplicate_edges,
    })
}

/// What a piece of input looks like, for the auto-detecting readers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    /// One graph6 graph per line.
    Graph6Lines,
    /// A single edge-list or DIMACS graph.
    SingleGraph,
}

pub fn sniff_input(text: &str) -> InputKind {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("p ") || l.starts_with("c ") || l == "c" => InputKind::SingleGraph,
        Some(l) if l.split_whitespace().count() >= 2 => InputKind::SingleGraph,
        _ => InputKind::Graph6Lines,
    }
}

/// Parses a whole input blob into graphs, auto-detecting the format.
pub fn parse_auto(text: &str) -> Result<Vec<Graph>, ParseError> {
    match sniff_input(text) {
        InputKind::SingleGraph => Ok(vec![parse_edge_list(text)?.graph]),
        InputKind::Graph6Lines => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(parse_graph6)
            .collect(),
    }
}

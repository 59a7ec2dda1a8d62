//! Graph serialization: the graph6 text format and a JSON edge-list shape.
//!
//! graph6 support covers orders 0 through 62 (single-byte header). Decoding
//! is strict: the string must have exactly the right length, every byte must
//! be a printable graph6 character, and padding bits must be zero.

use crate::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodecError {
    #[error("graph6 string is empty")]
    Empty,
    #[error("graph order {0} exceeds 62, the single-byte graph6 limit")]
    OrderTooLarge(usize),
    #[error("byte {byte:#04x} at position {position} is not a graph6 character")]
    InvalidCharacter { byte: u8, position: usize },
    #[error("graph6 string for order {n} needs {expected} bytes, found {found}")]
    LengthMismatch { n: usize, expected: usize, found: usize },
    #[error("nonzero padding bits in final graph6 group")]
    NonZeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Encodes a graph of order at most 62 as a graph6 string.
pub fn to_graph6(g: &Graph) -> Result<String, CodecError> {
    let n = g.n();
    if n > 62 {
        return Err(CodecError::OrderTooLarge(n));
    }
    let mut out = vec![n as u8 + 63];
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | g.adj(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes a graph6 string with a single-byte order header.
pub fn from_graph6(s: &str) -> Result<Graph, CodecError> {
    let bytes = s.as_bytes();
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(CodecError::InvalidCharacter { byte, position });
        }
    }
    let Some(&head) = bytes.first() else {
        return Err(CodecError::Empty);
    };
    if head > 62 + 63 {
        return Err(CodecError::OrderTooLarge(head as usize - 63));
    }
    let n = (head - 63) as usize;
    let nbits = if n < 2 { 0 } else { n * (n - 1) / 2 };
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(CodecError::LengthMismatch {
            n,
            expected,
            found: bytes.len(),
        });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(CodecError::NonZeroPadding);
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// JSON edge-list form: `{"n": 4, "edges": [[0,1],[1,2]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl EdgeListJson {
    pub fn from_graph(g: &Graph) -> EdgeListJson {
        EdgeListJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    /// Tolerates unordered, reversed, or repeated edges.
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edge_list(self.n, &pairs)
    }
}

//! graph6 encoding of undirected graphs (nauty's `formats.txt`).
//!
//! Layout: a size field followed by the upper triangle of the adjacency
//! matrix read column by column (`(0,1), (0,2), (1,2), (0,3), …`), packed
//! six bits per byte, most significant first, each byte offset by 63.
//! The size field is one byte for `n <= 62`, `126` plus three bytes for
//! `n <= 258047`, and `126 126` plus six bytes beyond that.

use thiserror::Error;

use crate::graph::{Graph, TwoColoring};

const HEADER: &[u8] = b">>graph6<<";
const BIAS: u8 = 63;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {reason}")]
pub struct Graph6Error {
    pub offset: usize,
    pub reason: String,
}

fn err(offset: usize, reason: impl Into<String>) -> Graph6Error {
    Graph6Error {
        offset,
        reason: reason.into(),
    }
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= SHORT_MAX {
        out.push(n as u8 + BIAS);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Encodes `g` without header or trailing newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

fn digit(bytes: &[u8], at: usize) -> Result<u64, Graph6Error> {
    match bytes.get(at) {
        Some(&b) if (BIAS..=126).contains(&b) => Ok((b - BIAS) as u64),
        Some(&b) => Err(err(
            at,
            format!("byte {b:#04x} outside the graph6 range 63..=126"),
        )),
        None => Err(err(at, "unexpected end of input in size field")),
    }
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and a
/// trailing newline are accepted.
pub fn decode_graph6(input: &[u8]) -> Result<Graph, Graph6Error> {
    let mut start = 0;
    if input.starts_with(HEADER) {
        start = HEADER.len();
    }
    let mut end = input.len();
    while end > start && matches!(input[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let bytes = &input[..end];

    let (n, body_start) = match bytes.get(start) {
        None => return Err(err(start, "empty input")),
        Some(&126) if bytes.get(start + 1) == Some(&126) => {
            let mut n = 0u64;
            for k in 0..6 {
                n = (n << 6) | digit(bytes, start + 2 + k)?;
            }
            (n, start + 8)
        }
        Some(&126) => {
            let mut n = 0u64;
            for k in 0..3 {
                n = (n << 6) | digit(bytes, start + 1 + k)?;
            }
            (n, start + 4)
        }
        Some(_) => (digit(bytes, start)?, start + 1),
    };
    let n = usize::try_from(n).map_err(|_| err(start, "vertex count does not fit in memory"))?;

    let bits = n as u128 * n.saturating_sub(1) as u128 / 2;
    let expected = bits.div_ceil(6);
    let got = (bytes.len() - body_start) as u128;
    if got != expected {
        let offset = if got > expected {
            body_start + expected as usize
        } else {
            bytes.len()
        };
        return Err(err(
            offset,
            format!("expected {expected} adjacency bytes for {n} vertices, found {got}"),
        ));
    }

    let mut g = Graph::new(n);
    let body = &bytes[body_start..];
    let mut index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let at = body_start + index / 6;
            let value = digit(bytes, at)?;
            if value >> (5 - index % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            index += 1;
        }
    }
    if !index.is_multiple_of(6) {
        let last = body.len() - 1;
        let pad_mask = (1u8 << (6 - index % 6)) - 1;
        if (body[last] - BIAS) & pad_mask != 0 {
            return Err(err(body_start + last, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// graph6 of the red graph.
pub fn encode_coloring(c: &TwoColoring) -> String {
    encode_graph6(c.red())
}

pub fn decode_coloring(input: &[u8]) -> Result<TwoColoring, Graph6Error> {
    decode_graph6(input).map(TwoColoring::from_red)
}

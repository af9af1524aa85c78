//! The graph6 text format: a size prefix followed by the upper triangle of
//! the adjacency matrix, column by column, packed six bits per byte.

use super::graph::Graph;
use crate::error::{Error, Result};
use crate::limits::{self, Limits};

const HEADER: &str = ">>graph6<<";

fn perr(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_graph6_with(text, &limits::current())
}

pub fn parse_graph6_with(text: &str, lim: &Limits) -> Result<Graph> {
    let mut bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(HEADER.as_bytes()) {
        bytes = rest;
        base = HEADER.len();
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(perr(base + i, format!("byte {b:#04x} outside the graph6 range")));
        }
    }
    if bytes.is_empty() {
        return Err(perr(base, "empty record"));
    }
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(perr(base + bytes.len(), "truncated size field"));
        }
        let v = bytes[1..4].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize);
        (v, 4)
    } else {
        if bytes.len() < 8 {
            return Err(perr(base + bytes.len(), "truncated size field"));
        }
        let v = bytes[2..8].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize);
        (v, 8)
    };
    if n > lim.vertex_cap {
        return Err(perr(base, format!("vertex count {n} exceeds cap {}", lim.vertex_cap)));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos < nbytes {
        return Err(perr(base + bytes.len(), format!("expected {nbytes} data bytes, found {}", bytes.len() - pos)));
    }
    if bytes.len() - pos > nbytes {
        return Err(perr(base + pos + nbytes, "trailing bytes after record"));
    }
    let mut g = Graph::empty(n).map_err(|e| perr(base, e.to_string()))?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    pos += nbytes;
    if nbits % 6 != 0 {
        let last = bytes[pos - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(perr(base + pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

//! graph6 encoding for trees.
//!
//! The header is `n + 63` for `n <= 62`, `~` plus three 6-bit groups for
//! `n <= 258047`, and `~~` plus six groups beyond that. The body lists the
//! upper triangle column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! six bits per printable byte.

use thiserror::Error;

use crate::{validate_tree, Tree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph6 decodes to a graph that is not a tree: {0}")]
    NotATree(#[from] TreeError),
}

fn malformed(msg: impl Into<String>) -> Graph6Error {
    Graph6Error::MalformedGraph6(msg.into())
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn encode_graph6(t: &Tree) -> String {
    let n = t.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let bits = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; bits.div_ceil(6)];
    for (u, v) in t.edges() {
        // u < v: bit index of x(u, v) in column-major upper-triangle order.
        let k = v * (v - 1) / 2 + u;
        body[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(body.into_iter().map(|b| b + 63));
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes the order and raw edge list of any graph6 string, without
/// requiring a tree.
pub fn decode_graph6_edges(s: &str) -> Result<(usize, Vec<(usize, usize)>), Graph6Error> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let group = |i: usize| -> Result<usize, Graph6Error> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| malformed("truncated header"))
    };
    let (n, mut pos) = if bytes[0] != 126 {
        (group(0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        let n = (1..4).try_fold(0usize, |acc, i| Ok::<_, Graph6Error>((acc << 6) | group(i)?))?;
        (n, 4)
    } else {
        let n = (2..8).try_fold(0usize, |acc, i| Ok::<_, Graph6Error>((acc << 6) | group(i)?))?;
        (n, 8)
    };
    let bits = n
        .checked_mul(n.saturating_sub(1))
        .map(|b| b / 2)
        .ok_or_else(|| malformed(format!("order {n} is too large")))?;
    let need = bits.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(malformed(format!(
            "expected {need} body bytes for n = {n}, found {}",
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let (mut u, mut v) = (0usize, 1usize);
    for k in 0..bits {
        let byte = bytes[pos + k / 6] - 63;
        if byte >> (5 - k % 6) & 1 == 1 {
            edges.push((u, v));
        }
        u += 1;
        if u == v {
            u = 0;
            v += 1;
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    if need > 0 {
        let pad = need * 6 - bits;
        let last = bytes[bytes.len() - 1] - 63;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Ok((n, edges))
}

pub fn decode_graph6(s: &str) -> Result<Tree, Graph6Error> {
    let (n, edges) = decode_graph6_edges(s)?;
    Ok(validate_tree(n, &edges)?)
}

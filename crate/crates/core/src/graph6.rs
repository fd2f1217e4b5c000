//! graph6 encoding for graphs on at most 64 vertices.
//!
//! The order is a single byte `n + 63` for `n <= 62` and `'~'` followed by
//! three 6-bit groups otherwise. The body packs the upper triangle column by
//! column (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit groups, each
//! offset by 63, with zero padding in the last group.

use thiserror::Error;

use crate::graph::{SmallGraph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed header")]
    BadHeader,
    #[error("order {0} is above the supported maximum of 64")]
    TooLarge(usize),
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range")]
    BadByte { byte: u8, offset: usize },
    #[error("expected {expected} body bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("nonzero padding bits in the last byte")]
    BadPadding,
    #[error("{0} unexpected trailing bytes")]
    TrailingBytes(usize),
}

const HEADER: &[u8] = b">>graph6<<";

pub fn encode(g: &SmallGraph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        let row = g.neighbors(v);
        for u in 0..v {
            acc = (acc << 1) | ((row >> u) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    // Every byte is in 63..=126, so this is ASCII.
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 string. An optional `>>graph6<<` prefix and a single
/// trailing newline are accepted.
pub fn decode(input: &[u8]) -> Result<SmallGraph, Graph6Error> {
    let mut s = input.strip_prefix(HEADER).unwrap_or(input);
    if let Some(rest) = s.strip_suffix(b"\n") {
        s = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    let check = |offset: usize, byte: u8| -> Result<u8, Graph6Error> {
        if (63..=126).contains(&byte) {
            Ok(byte - 63)
        } else {
            Err(Graph6Error::BadByte { byte, offset })
        }
    };

    let (&first, rest) = s.split_first().ok_or(Graph6Error::BadHeader)?;
    let first = check(0, first)?;
    let (n, body) = if first < 63 {
        (first as usize, rest)
    } else {
        if rest.len() < 3 {
            return Err(Graph6Error::BadHeader);
        }
        if rest[0] == b'~' {
            // 36-bit form: always more than 64 vertices.
            return Err(Graph6Error::TooLarge(usize::MAX));
        }
        let mut n = 0usize;
        for (i, &b) in rest[..3].iter().enumerate() {
            n = (n << 6) | check(i + 1, b)? as usize;
        }
        if n < 63 {
            return Err(Graph6Error::BadHeader);
        }
        (n, &rest[3..])
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes(body.len() - expected));
    }
    let header_len = s.len() - body.len();

    let mut g = SmallGraph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let chunk = check(header_len + k / 6, body[k / 6])?;
            if (chunk >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = check(header_len + expected - 1, body[expected - 1])?;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::BadPadding);
        }
    }
    Ok(g)
}

//! graph6 encoding (McKay's format).

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn encode_n(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
}

fn decode_n(bytes: &[u8]) -> Result<(usize, usize)> {
    let six = |b: u8| -> Result<usize> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(Error::MalformedGraph6(format!("byte {b} outside 63..=126")))
        }
    };
    match bytes {
        [] => Err(Error::MalformedGraph6("empty input".into())),
        [b'~', b'~', rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::MalformedGraph6("truncated size field".into()));
            }
            let mut n = 0;
            for &b in &rest[..6] {
                n = (n << 6) | six(b)?;
            }
            Ok((n, 8))
        }
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::MalformedGraph6("truncated size field".into()));
            }
            let mut n = 0;
            for &b in &rest[..3] {
                n = (n << 6) | six(b)?;
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((six(*b)?, 1)),
    }
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out = String::new();
        encode_n(n, &mut out);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.is_adjacent(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push((acc + 63) as char);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(((acc << (6 - filled)) + 63) as char);
        }
        out
    }

    /// Decodes one graph6 line; an optional `>>graph6<<` header is accepted.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let s = text.trim();
        let s = s.strip_prefix(HEADER).unwrap_or(s);
        let bytes = s.as_bytes();
        let (n, used) = decode_n(bytes)?;
        if n == 0 {
            return Err(Error::MalformedGraph6(
                "graphs with zero vertices are not supported".into(),
            ));
        }
        let body = &bytes[used..];
        let bits = n * (n - 1) / 2;
        let need = bits.div_ceil(6);
        if body.len() != need {
            return Err(Error::MalformedGraph6(format!(
                "expected {need} data bytes for n = {n}, found {}",
                body.len()
            )));
        }
        let mut adj = vec![false; n * n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let b = body[k / 6];
                if !(63..=126).contains(&b) {
                    return Err(Error::MalformedGraph6(format!("byte {b} outside 63..=126")));
                }
                if ((b - 63) >> (5 - k % 6)) & 1 == 1 {
                    adj[i * n + j] = true;
                    adj[j * n + i] = true;
                }
                k += 1;
            }
        }
        // Padding bits must be zero for a canonical encoding.
        if bits % 6 != 0 {
            let last = body[need - 1] - 63;
            if last & ((1 << (6 - bits % 6)) - 1) != 0 {
                return Err(Error::MalformedGraph6("nonzero padding bits".into()));
            }
        }
        Ok(Graph::from_adjacency(n, adj))
    }
}

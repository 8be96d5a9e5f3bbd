//! graph6 and DOT text formats.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit groups, most significant bit
//! first, each emitted as the byte `63 + value`. The order is prefixed with a
//! single byte for `n <= 62`, with `~` and three bytes for `n <= 258047`, and
//! with `~~` and six bytes beyond that.

use std::fmt::Write;

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {message}")]
pub struct Graph6Error {
    pub offset: usize,
    pub message: String,
}

fn err(offset: usize, message: impl Into<String>) -> Graph6Error {
    Graph6Error {
        offset,
        message: message.into(),
    }
}

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = (1 << 36) - 1;

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        assert!(n <= MAX_ORDER, "graph too large for graph6");
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    // Every byte is in 63..=126.
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextet(bytes: &[u8], at: usize) -> Result<usize, Graph6Error> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
        Some(&b) => Err(err(
            at,
            format!("byte {b:#04x} outside the graph6 range 63..=126"),
        )),
        None => Err(err(at, "unexpected end of input")),
    }
}

pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let body_start = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let bytes = trimmed.as_bytes();
    let mut pos = body_start;
    let first = sextet(bytes, pos)?;
    let n = if first < 63 {
        pos += 1;
        first
    } else if bytes.get(pos + 1) == Some(&126) {
        let mut n = 0;
        for k in 0..6 {
            n = (n << 6) | sextet(bytes, pos + 2 + k)?;
        }
        pos += 8;
        n
    } else {
        let mut n = 0;
        for k in 0..3 {
            n = (n << 6) | sextet(bytes, pos + 1 + k)?;
        }
        pos += 4;
        n
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() != expected {
        let offset = pos + body.len().min(expected);
        return Err(err(
            offset,
            format!(
                "expected {expected} adjacency bytes for n = {n}, found {}",
                body.len()
            ),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(bytes, pos + k / 6)?;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.set_bit(i, j, true);
                g.set_bit(j, i, true);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = sextet(bytes, pos + expected - 1)?;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(pos + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Graphviz `graph` listing every vertex and edge.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::super::{path, star};
    use super::*;

    #[test]
    fn known_strings() {
        assert_eq!(encode_graph6(&path(3).unwrap()), "Bg");
        assert_eq!(encode_graph6(&Graph::new(0)), "?");
        assert_eq!(encode_graph6(&Graph::new(1)), "@");
        let empty3 = decode_graph6("B?").unwrap();
        assert_eq!(empty3.order(), 3);
        assert_eq!(empty3.edge_count(), 0);
        assert_eq!(decode_graph6(">>graph6<<Bg\n").unwrap(), path(3).unwrap());
    }

    #[test]
    fn long_form() {
        let g = star(99).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let e = decode_graph6("B").unwrap_err();
        assert_eq!(e.offset, 1);
        let e = decode_graph6("Bgg").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = decode_graph6("C\x10").unwrap_err();
        assert_eq!(e.offset, 1);
        let e = decode_graph6("Bh").unwrap_err();
        assert_eq!(e.message, "nonzero padding bits");
        assert!(decode_graph6("").is_err());
    }

    #[test]
    fn dot_output() {
        assert_eq!(
            to_dot(&path(2).unwrap()),
            "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"
        );
    }
}

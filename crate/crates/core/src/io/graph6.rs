//! graph6, short form only (`n <= 62`).
//!
//! One size byte `63 + n`, then the upper triangle read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte, most significant
//! bit first, zero-padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_N: usize = 62;

const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_N {
        return Err(Error::InvalidParameter(format!(
            "graph6 short form holds at most {MAX_N} vertices, got {n}"
        )));
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(63 + (acc << (6 - used)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, line) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = line.as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset: offset + skip,
        reason: reason.to_string(),
    };
    let &first = bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if !(63..=126).contains(&first) {
        return Err(err(0, "byte outside 63..=126"));
    }
    if first == 126 {
        return Err(err(0, "long size form not supported"));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(err(0, "graphs must have at least one vertex"));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if bytes.len() - 1 != expected {
        return Err(err(
            bytes.len().min(expected + 1),
            &format!("expected {expected} edge bytes, found {}", bytes.len() - 1),
        ));
    }
    let data = &bytes[1..];
    if let Some(pos) = data.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos + 1, "byte outside 63..=126"));
    }
    let bit = |idx: usize| (data[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(err(expected, "nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_and_k2() {
        let k1 = Graph::new(1, &[]).unwrap();
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(encode_graph6(&k1).unwrap(), "@");
        assert_eq!(encode_graph6(&k2).unwrap(), "A_");
        assert_eq!(decode_graph6("@").unwrap(), k1);
        assert_eq!(decode_graph6("A_\n").unwrap(), k2);
        assert_eq!(decode_graph6(">>graph6<<A_").unwrap(), k2);
    }

    #[test]
    fn known_strings() {
        // Published examples: the 5-cycle is "Dhc", the Petersen graph "IheA@GUAo".
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(encode_graph6(&c5).unwrap(), "Dhc");
        let petersen = decode_graph6("IheA@GUAo").unwrap();
        assert_eq!(petersen.n(), 10);
        assert_eq!(petersen.edge_count(), 15);
        assert!((0..10).all(|v| petersen.degree(v) == 3));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(decode_graph6("?"), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(decode_graph6("A"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(decode_graph6("A_?"), Err(Error::Graph6 { .. })));
        assert!(matches!(decode_graph6("B \u{7f}"), Err(Error::Graph6 { .. })));
        // K2 has one data bit; '@' is 000001, so only a padding bit is set.
        assert!(matches!(decode_graph6("A@"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(decode_graph6("~??"), Err(Error::Graph6 { offset: 0, .. })));
    }

    #[test]
    fn too_large_for_short_form() {
        assert!(encode_graph6(&Graph::new(63, &[]).unwrap()).is_err());
        assert_eq!(encode_graph6(&Graph::new(62, &[]).unwrap()).unwrap().len(), 1 + 1891usize.div_ceil(6));
    }
}

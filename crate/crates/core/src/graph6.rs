//! The graph6 interchange format: 6-bit chunks offset by 63, column-major
//! upper triangle. One record encodes one undirected graph; corpus files
//! hold one record per line.

use crate::graph::Graph;
use thiserror::Error;

/// Largest order this implementation accepts (the census and corpus work is
/// desk-scale; the format itself goes further).
pub const MAX_ORDER: u64 = 1 << 18;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside graph6 range 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("truncated graph6 order header")]
    TruncatedHeader,
    #[error("graph6 order {n} exceeds supported maximum {MAX_ORDER}")]
    OrderTooLarge { n: u64 },
    #[error("truncated graph6 bit stream: need {expected} data bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("{extra} trailing byte(s) after graph6 bit stream")]
    TrailingGarbage { extra: usize },
    #[error("nonzero padding bits at end of graph6 bit stream")]
    NonzeroPadding,
}

fn sextets(bytes: &[u8]) -> Result<Vec<u8>, Graph6Error> {
    bytes
        .iter()
        .enumerate()
        .map(|(pos, &b)| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(Graph6Error::InvalidByte { pos, byte: b })
            }
        })
        .collect()
}

/// Parses one graph6 record.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let vals = sextets(text.trim_end_matches(['\n', '\r']).as_bytes())?;
    if vals.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, header_len) = if vals[0] != 63 {
        (vals[0] as u64, 1)
    } else if vals.len() >= 2 && vals[1] != 63 {
        if vals.len() < 4 {
            return Err(Graph6Error::TruncatedHeader);
        }
        let n = ((vals[1] as u64) << 12) | ((vals[2] as u64) << 6) | vals[3] as u64;
        (n, 4)
    } else {
        if vals.len() < 8 {
            return Err(Graph6Error::TruncatedHeader);
        }
        let mut n = 0u64;
        for &v in &vals[2..8] {
            n = (n << 6) | v as u64;
        }
        (n, 8)
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge { n });
    }
    let n = n as usize;
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let data = &vals[header_len..];
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            extra: data.len() - expected,
        });
    }
    let bit_at = |k: usize| data[k / 6] >> (5 - k % 6) & 1 == 1;
    // Padding bits beyond the triangle must be zero.
    for k in bits..expected * 6 {
        if bit_at(k) {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Encodes a graph as a graph6 record.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if (n as u64) < (1 << 18) {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    } else {
        out.push(126);
        out.push(126);
        for shift in (0..6).rev() {
            out.push(((n >> (6 * shift)) & 63) as u8 + 63);
        }
    }
    let bits = n * (n - 1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    out.extend(data.into_iter().map(|v| v + 63));
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let g = from_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.m(), 0);
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn triangle() {
        let g = from_graph6("Bw").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(to_graph6(&Graph::complete(3)), "Bw");
    }

    #[test]
    fn path_three() {
        let g = from_graph6("Bg").unwrap();
        assert_eq!(g, Graph::from_edges(3, &[(0, 1), (1, 2)]));
    }

    #[test]
    fn null_graph() {
        let g = from_graph6("?").unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(to_graph6(&g), "?");
    }

    #[test]
    fn roundtrip_all_graphs_up_to_5() {
        for n in 0..=5usize {
            let pairs = n.saturating_sub(1) * n / 2;
            for mask in 0u64..1 << pairs {
                let g = crate::harness::graph_from_mask(n, mask);
                let enc = to_graph6(&g);
                assert_eq!(from_graph6(&enc).unwrap(), g, "mask {mask} n {n}");
            }
        }
    }

    #[test]
    fn medium_order_header() {
        let g = Graph::empty(100);
        let enc = to_graph6(&g);
        assert!(enc.starts_with('~'));
        assert_eq!(from_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn distinct_parse_errors() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(
            from_graph6("B\u{7f}"),
            Err(Graph6Error::InvalidByte { pos: 1, .. })
        ));
        assert_eq!(from_graph6("~A"), Err(Graph6Error::TruncatedHeader));
        assert_eq!(
            from_graph6("B"),
            Err(Graph6Error::Truncated { expected: 1, got: 0 })
        );
        assert_eq!(
            from_graph6("Bww"),
            Err(Graph6Error::TrailingGarbage { extra: 1 })
        );
        // order 3 uses 3 of the 6 bits; set a padding bit
        assert_eq!(from_graph6("B~"), Err(Graph6Error::NonzeroPadding));
    }
}

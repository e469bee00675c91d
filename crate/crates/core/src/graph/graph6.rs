//! graph6: the vertex count followed by the upper triangle of the adjacency
//! matrix, column by column, packed six bits per printable byte (`63 + x`).

use super::{Graph, GraphError};

/// Largest vertex count accepted by [`from_graph6`] and [`to_graph6`].
pub const MAX_GRAPH6_VERTICES: usize = 1 << 18;

const HEADER: &[u8] = b">>graph6<<";

pub fn from_graph6(bytes: &[u8]) -> Result<Graph, GraphError> {
    let mut data = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    while let Some((&last, rest)) = data.split_last() {
        if last == b'\n' || last == b'\r' {
            data = rest;
        } else {
            break;
        }
    }
    if let Some(&b) = data.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte 0x{b:02x} is not a graph6 character")));
    }

    let (n, body) = decode_size(data)?;
    if n > MAX_GRAPH6_VERTICES {
        return Err(malformed(format!(
            "{n} vertices exceeds the supported maximum {MAX_GRAPH6_VERTICES}"
        )));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        let last = body[body.len() - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(malformed("nonzero padding bits".to_string()));
        }
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

pub fn to_graph6(g: &Graph) -> Result<Vec<u8>, GraphError> {
    let n = g.vertex_count();
    if n > MAX_GRAPH6_VERTICES {
        return Err(GraphError::InvalidParameter(format!(
            "graph6 supports at most {MAX_GRAPH6_VERTICES} vertices"
        )));
    }
    let mut out = encode_size(n);
    let bits = n * n.saturating_sub(1) / 2;
    let mut packed = vec![0u8; bits.div_ceil(6)];
    // bit index of (i, j), i < j, in column order
    for (i, j) in g.edges() {
        let k = j * (j - 1) / 2 + i;
        packed[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(packed.into_iter().map(|b| b + 63));
    Ok(out)
}

fn decode_size(data: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let take = |len: usize| -> Result<usize, GraphError> {
        if data.len() < len {
            return Err(malformed("truncated size header".to_string()));
        }
        let start = len - if len == 4 { 3 } else { 6 };
        Ok(data[start..len]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63)))
    };
    match data {
        [] => Err(malformed("empty input".to_string())),
        [126, 126, ..] => Ok((take(8)?, &data[8..])),
        [126, ..] => Ok((take(4)?, &data[4..])),
        [b, rest @ ..] => Ok((usize::from(b - 63), rest)),
    }
}

fn encode_size(n: usize) -> Vec<u8> {
    let chunks = |count: usize| (0..count).rev().map(move |s| ((n >> (6 * s)) & 63) as u8 + 63);
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        std::iter::once(126).chain(chunks(3)).collect()
    } else {
        [126, 126].into_iter().chain(chunks(6)).collect()
    }
}

fn malformed(message: String) -> GraphError {
    GraphError::Graph6(message)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn decodes_small_example_and_round_trips() {
        let g = from_graph6(b"D?{").unwrap();
        assert_eq!(g.vertex_count(), 5);
        // star centred on vertex 4
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g).unwrap(), b"D?{");
    }

    #[test]
    fn cycle_five_matches_generator() {
        let c5 = generators::cycle(5).unwrap();
        let bytes = to_graph6(&c5).unwrap();
        let back = from_graph6(&bytes).unwrap();
        assert_eq!(back, c5);
        assert!(back.degrees().all(|d| d == 2));
        // C5 labelled 0-1-2-3-4-0 is "Dhc" in nauty's tables
        assert_eq!(bytes, b"Dhc");
    }

    #[test]
    fn header_and_newline_are_stripped() {
        let g = from_graph6(b">>graph6<<Dhc\n").unwrap();
        assert_eq!(g, generators::cycle(5).unwrap());
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(from_graph6(b"D?{ "), Err(GraphError::Graph6(_))));
        assert!(matches!(from_graph6(b""), Err(GraphError::Graph6(_))));
        assert!(matches!(from_graph6(b"D?"), Err(GraphError::Graph6(_))));
        assert!(matches!(from_graph6(b"D?{?"), Err(GraphError::Graph6(_))));
        // 5 vertices use 10 bits; the low two bits of the second byte must be 0
        assert!(matches!(from_graph6(b"D?|"), Err(GraphError::Graph6(_))));
        assert!(matches!(from_graph6(b"~??"), Err(GraphError::Graph6(_))));
    }

    #[test]
    fn size_header_forms() {
        assert_eq!(encode_size(62), vec![125]);
        assert_eq!(encode_size(63), vec![126, 63, 63, 126]);
        assert_eq!(encode_size(258_047).len(), 4);
        assert_eq!(encode_size(258_048).len(), 8);
        for n in [0, 1, 62, 63, 1000, 258_047, 258_048, MAX_GRAPH6_VERTICES] {
            let enc = encode_size(n);
            assert_eq!(decode_size(&enc).unwrap().0, n);
        }
    }
}

//! graph6 and plain edge-list serialization.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by
//! column (for each `j`, the bits `(i, j)` for `i < j`) into 6-bit groups,
//! each group offset by 63 so every payload byte is printable. The vertex
//! count is prefixed as `N(n)`: a single byte `n + 63` for `n <= 62`, or
//! `'~'` followed by three 6-bit digits of `n` for larger graphs. An
//! optional `>>graph6<<` header may precede the data.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_N: usize = 258_047; // largest n that fits the 3-digit form

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}

/// Encodes a graph as a single graph6 line (no trailing newline, no
/// optional header).
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph6 encoding supports at most {MAX_N} vertices");
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        out.push((((n >> 12) & 63) as u8 + 63) as char);
        out.push((((n >> 6) & 63) as u8 + 63) as char);
        out.push(((n & 63) as u8 + 63) as char);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push((group + 63) as char);
    }
    out
}

/// Decodes one graph6 line. Leading/trailing ASCII whitespace and an
/// optional `>>graph6<<` header are tolerated.
///
/// # Errors
///
/// Reports malformed bytes, truncation, and trailing garbage with the
/// byte offset into the (header-stripped) payload.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let mut s = line.trim();
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "empty graph6 payload"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(i, format!("byte {b:#04x} outside graph6 range 63..=126")));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(parse_err(1, "8-byte vertex counts are not supported"));
        }
        if bytes.len() < 4 {
            return Err(parse_err(bytes.len(), "truncated multi-byte vertex count"));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let expected_bytes = nbits.div_ceil(6);
    if bytes.len() - pos < expected_bytes {
        return Err(parse_err(
            bytes.len(),
            format!(
                "truncated payload: need {expected_bytes} data bytes for n = {n}, found {}",
                bytes.len() - pos
            ),
        ));
    }
    if bytes.len() - pos > expected_bytes {
        return Err(parse_err(
            pos + expected_bytes,
            format!("trailing data after {expected_bytes} data bytes"),
        ));
    }

    let mut edges = Vec::new();
    let mut group = 0u8;
    let mut avail = 0u8;
    for j in 1..n {
        for i in 0..j {
            if avail == 0 {
                group = bytes[pos] - 63;
                pos += 1;
                avail = 6;
            }
            if group & 0b100000 != 0 {
                edges.push((i, j));
            }
            group <<= 1;
            avail -= 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes a graph as an edge-list document: a `n m` header line followed
/// by one `u v` line per edge.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list document format. Blank lines and `#` comment
/// lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::invalid("edge list without a header line"))?;
    let mut hp = header.split_whitespace();
    let n: usize = hp
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::invalid(format!("bad edge-list header {header:?}")))?;
    let m: usize = hp
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::invalid(format!("bad edge-list header {header:?}")))?;
    if hp.next().is_some() {
        return Err(Error::invalid(format!("bad edge-list header {header:?}")));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => {
                let u = a
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad edge line {line:?}")))?;
                let v = b
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad edge line {line:?}")))?;
                (u, v)
            }
            _ => return Err(Error::invalid(format!("bad edge line {line:?}"))),
        };
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::invalid(format!(
            "header announced {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, edges)
}

/// Reads a graph from file contents, accepting either format: the first
/// non-comment line decides (a `n m` digit header means edge list,
/// anything else is treated as graph6).
pub fn parse_auto(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| Error::invalid("no graph data in input"))?;
    let looks_like_edge_list = {
        let mut it = first.split_whitespace();
        matches!(
            (it.next(), it.next(), it.next()),
            (Some(a), Some(b), None)
                if a.chars().all(|c| c.is_ascii_digit())
                    && b.chars().all(|c| c.is_ascii_digit())
        )
    };
    if looks_like_edge_list {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_multipartite, cycle};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn known_encodings() {
        // the single-vertex empty graph
        assert_eq!(serialize_graph6(&Graph::empty(1)), "@");
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);

        // encodings cross-checked against an independent implementation
        assert_eq!(serialize_graph6(&cycle(5).unwrap()), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), cycle(5).unwrap());
        assert_eq!(serialize_graph6(&complete(4)), "C~");
        assert_eq!(
            serialize_graph6(&complete_multipartite(&[3, 3]).unwrap()),
            "EFz_"
        );
        // the Petersen graph
        let pet = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(pet.n(), 10);
        assert_eq!(pet.edge_count(), 15);
        assert!((0..10).all(|v| pet.degree(v) == 3));
        assert_eq!(serialize_graph6(&pet), "IheA@GUAo");
    }

    #[test]
    fn header_prefix_is_tolerated() {
        let g = complete(4);
        let enc = format!(">>graph6<<{}", serialize_graph6(&g));
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn roundtrip_on_seeded_random_graphs_up_to_32() {
        let mut rng = StdRng::seed_from_u64(0x6006_0001);
        for _ in 0..1000 {
            let n = rng.gen_range(0..=32usize);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let enc = serialize_graph6(&g);
            assert!(enc.bytes().all(|b| (63..=126).contains(&b)));
            let back = parse_graph6(&enc).unwrap();
            assert_eq!(back, g, "roundtrip failed for {enc:?}");
        }
    }

    #[test]
    fn roundtrip_multibyte_vertex_count() {
        let g = complete_multipartite(&[40, 40]).unwrap();
        let enc = serialize_graph6(&g);
        assert!(enc.starts_with('~'));
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        // byte below 63
        let err = parse_graph6("D\x20qc").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 1, .. }), "{err:?}");
        // truncated payload
        let err = parse_graph6("D").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err:?}");
        // trailing garbage
        let err = parse_graph6("DqcA").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err:?}");
        // empty
        assert!(parse_graph6("").is_err());
    }

    #[test]
    fn edge_list_roundtrip_and_comments() {
        let g = complete_multipartite(&[2, 3]).unwrap();
        let doc = serialize_edge_list(&g);
        assert!(doc.starts_with("5 6\n"));
        let back = parse_edge_list(&doc).unwrap();
        assert_eq!(back, g);

        let with_comments = format!("# generated for a test\n\n{doc}");
        assert_eq!(parse_edge_list(&with_comments).unwrap(), g);

        assert!(parse_edge_list("3 2\n0 1\n").is_err()); // wrong edge count
        assert!(parse_edge_list("3\n").is_err());
    }

    #[test]
    fn auto_detection_picks_the_right_parser() {
        let g = cycle(6).unwrap();
        assert_eq!(parse_auto(&serialize_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_auto(&serialize_graph6(&g)).unwrap(), g);
        assert_eq!(
            parse_auto(&format!("# comment\n{}", serialize_graph6(&g))).unwrap(),
            g
        );
    }
}

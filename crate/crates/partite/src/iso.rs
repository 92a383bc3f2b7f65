//! Canonical forms and isomorphism testing for graphs on at most 16
//! vertices.
//!
//! The canonical key of a graph is the lexicographically largest value of
//! the column-major upper-triangle bitstring over all vertex orderings,
//! found by a depth-first search. At each depth only the orderings whose
//! next block of bits is maximal can still win, and candidates with
//! identical adjacency rows are interchangeable, which keeps the search
//! tame even on the symmetric graphs this crate deals in. Keys fit in a
//! `u128` (at most 120 triangle bits).

use crate::graph::Graph;

pub const ISO_CAP: usize = 16;

/// Canonical key of `g`; equal keys mean isomorphic graphs (given equal
/// vertex counts).
///
/// # Panics
///
/// Panics when `g` has more than [`ISO_CAP`] vertices.
pub fn canonical_key(g: &Graph) -> u128 {
    let n = g.n();
    assert!(n <= ISO_CAP, "canonical form capped at {ISO_CAP} vertices");
    if n <= 1 {
        return 0;
    }
    let rows: Vec<u16> = (0..n)
        .map(|v| {
            let mut row = 0u16;
            for u in g.neighbours(v) {
                row |= 1 << u;
            }
            row
        })
        .collect();
    let mut best: Option<u128> = None;
    let mut order = Vec::with_capacity(n);
    canon_rec(&rows, n, &mut order, 0, 0, 0, &mut best);
    best.unwrap()
}

#[allow(clippy::too_many_arguments)]
fn canon_rec(
    rows: &[u16],
    n: usize,
    order: &mut Vec<usize>,
    used: u16,
    prefix: u128,
    bits: usize,
    best: &mut Option<u128>,
) {
    let d = order.len();
    if d == n {
        if best.map_or(true, |b| prefix > b) {
            *best = Some(prefix);
        }
        return;
    }
    // the current prefix and the best key's leading `bits` bits have the
    // same length, so lexicographic dominance is decided right here
    if let Some(b) = *best {
        if prefix < b >> (n * (n - 1) / 2 - bits) {
            return;
        }
    }
    // Next block: adjacency of the candidate to order[0..d], d bits,
    // order[0] most significant.
    let block_of = |v: usize| -> u128 {
        let mut b = 0u128;
        for &u in order.iter() {
            b = (b << 1) | u128::from(rows[v] >> u & 1);
        }
        b
    };
    let mut max_block = 0u128;
    let mut picks: Vec<(usize, u128)> = Vec::new();
    for v in 0..n {
        if used >> v & 1 == 1 {
            continue;
        }
        let b = block_of(v);
        if b > max_block {
            max_block = b;
        }
        picks.push((v, b));
    }
    picks.retain(|&(_, b)| b == max_block);
    let new_prefix = (prefix << d) | max_block;
    // candidates that are twins of an explored one (rows equal once both
    // self-bits are masked off, so swapping them is an automorphism)
    // yield the same completions and are skipped
    let mut kept: Vec<usize> = Vec::new();
    for (v, _) in picks {
        if kept.iter().any(|&u| {
            let m = !((1u16 << u) | (1u16 << v));
            rows[u] & m == rows[v] & m
        }) {
            continue;
        }
        kept.push(v);
        order.push(v);
        canon_rec(rows, n, order, used | (1 << v), new_prefix, bits + d, best);
        order.pop();
    }
}

/// Rebuilds the graph encoded by a canonical key on `n` vertices. The
/// result of `rebuild(n, canonical_key(g))` is isomorphic to `g` and is
/// used as the stored representative of its class.
pub fn rebuild_from_key(n: usize, key: u128) -> Graph {
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut shift = total_bits;
    for d in 1..n {
        for j in 0..d {
            shift -= 1;
            if key >> shift & 1 == 1 {
                edges.push((j, d));
            }
        }
    }
    Graph::from_edges(n, edges).expect("key bits decode to in-range edges")
}

/// Isomorphism test through canonical keys, with cheap invariants first.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical_key(a) == canonical_key(b)
}

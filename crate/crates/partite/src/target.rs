//! Target-graph analysis.
//!
//! A decomposition target `H` enters the pipeline through [`analyze_target`],
//! which records its chromatic number, the smallest colour class over all
//! optimal colourings, and the family of bipartite graphs induced on pairs
//! of colour classes. That family is what the extremal bounds and the
//! lower-bound construction forbid.

use std::collections::HashSet;

use crate::chromatic::{chromatic_number, for_each_proper_partition};
use crate::error::{Error, Result};
use crate::graph::{complete_multipartite, cycle, Graph, VertexSet};
use crate::iso::{canonical_key, rebuild_from_key, ISO_CAP};

/// Everything the decomposition pipeline needs to know about a target.
#[derive(Clone, Debug)]
pub struct TargetSpec {
    pub h: Graph,
    /// Chromatic number of `h`.
    pub chi: usize,
    /// Smallest colour class size over all proper `chi`-colourings.
    pub sigma: usize,
    /// De-duplicated induced subgraphs on unions of two colour classes,
    /// over all proper `chi`-colourings and all class pairs. Stored as
    /// canonical representatives in a deterministic order. Every member is
    /// bipartite with at least one edge.
    pub reducts: Vec<Graph>,
}

impl TargetSpec {
    /// The `r` such that the pipeline decomposes into `r` parts:
    /// one less than the chromatic number.
    pub fn r(&self) -> usize {
        self.chi.saturating_sub(1)
    }
}

/// Analyzes a target graph.
///
/// # Errors
///
/// Rejects the empty graph and anything above 16 vertices (the colouring
/// enumeration and canonical forms are exponential).
pub fn analyze_target(h: &Graph) -> Result<TargetSpec> {
    if h.n() == 0 {
        return Err(Error::invalid("target graph has no vertices"));
    }
    if h.n() > ISO_CAP {
        return Err(Error::capacity(
            "analyze_target",
            format!("target has {} vertices, cap is {ISO_CAP}", h.n()),
        ));
    }
    let chi = chromatic_number(h)?;
    let mut sigma = h.n();
    // distinct unordered class pairs, as bitmask pairs
    let mut pairs: HashSet<(u32, u32)> = HashSet::new();
    for_each_proper_partition(h, chi, &mut |colour, used| {
        if used != chi {
            return;
        }
        let mut masks = vec![0u32; chi];
        for (v, &c) in colour.iter().enumerate() {
            masks[c] |= 1 << v;
        }
        let smallest = masks
            .iter()
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap();
        sigma = sigma.min(smallest);
        for a in 0..chi {
            for b in a + 1..chi {
                let (lo, hi) = if masks[a] < masks[b] {
                    (masks[a], masks[b])
                } else {
                    (masks[b], masks[a])
                };
                pairs.insert((lo, hi));
            }
        }
    });

    let mut keys: Vec<(usize, u128)> = Vec::new();
    for &(a, b) in &pairs {
        let union = a | b;
        let keep = VertexSet::from_iter(h.n(), (0..h.n()).filter(|&v| union >> v & 1 == 1));
        let sub = h.induced(&keep).graph;
        let key = (sub.n(), canonical_key(&sub));
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    keys.sort_unstable();
    let reducts: Vec<Graph> = keys
        .into_iter()
        .map(|(n, key)| rebuild_from_key(n, key))
        .collect();

    // Two classes of an optimal colouring always see each other (otherwise
    // they would merge into a colouring with fewer colours), so chi >= 2
    // forces every reduct to carry an edge.
    debug_assert!(chi < 2 || reducts.iter().all(|f| f.edge_count() > 0));

    Ok(TargetSpec {
        h: h.clone(),
        chi,
        sigma,
        reducts,
    })
}

/// Well-known targets accepted by name. `K3`, `K4` are complete graphs,
/// `K222` is the octahedron, `C5` the pentagon.
pub fn preset_target(name: &str) -> Option<Graph> {
    match name.to_ascii_uppercase().as_str() {
        "K3" => Some(complete_multipartite(&[1, 1, 1]).unwrap()),
        "K4" => Some(complete_multipartite(&[1, 1, 1, 1]).unwrap()),
        "K222" => Some(complete_multipartite(&[2, 2, 2]).unwrap()),
        "C5" => Some(cycle(5).unwrap()),
        _ => None,
    }
}

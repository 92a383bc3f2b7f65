//! Exact colouring machinery for small graphs.
//!
//! The chromatic number is computed by testing k-colourability for
//! increasing k between a greedy clique lower bound and a greedy colouring
//! upper bound. The k-colourability test is a DSATUR-ordered backtracking
//! search that only ever opens one fresh colour per branch, so permuting
//! colour classes never costs anything.
//!
//! Before searching, false twins (distinct vertices with identical open
//! neighbourhoods, necessarily non-adjacent) are contracted: any proper
//! colouring can recolour one twin to the other's colour, so contraction
//! preserves the chromatic number while collapsing the blow-up-like
//! constructions this crate produces down to a handful of vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap on the vertex count of the graph the exact search actually
/// runs on, i.e. after twin contraction.
pub const CHROMATIC_SEARCH_CAP: usize = 28;

/// First-fit colouring along descending degree order. The returned vector
/// maps each vertex to a colour; its maximum plus one is an upper bound
/// for the chromatic number.
pub fn greedy_colouring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colour = vec![usize::MAX; n];
    for &v in &order {
        let mut used = vec![false; n];
        for u in g.neighbours(v) {
            if colour[u] != usize::MAX {
                used[colour[u]] = true;
            }
        }
        colour[v] = (0..n).find(|&c| !used[c]).unwrap();
    }
    colour
}

/// A maximal clique grown greedily by descending degree; its size is a
/// lower bound for the chromatic number.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut candidates: Vec<usize> = (0..n).collect();
    let mut clique = Vec::new();
    while !candidates.is_empty() {
        let &best = candidates
            .iter()
            .max_by_key(|&&v| {
                candidates
                    .iter()
                    .filter(|&&u| u != v && g.has_edge(u, v))
                    .count()
            })
            .unwrap();
        clique.push(best);
        candidates.retain(|&u| u != best && g.has_edge(u, best));
    }
    clique.sort_unstable();
    clique
}

/// Searches for a proper colouring with at most `k` colours and returns
/// one if it exists. Runs on the graph as given; callers wanting the twin
/// contraction should go through [`chromatic_number`] or
/// [`is_k_colourable`].
pub fn find_k_colouring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut colour = vec![usize::MAX; n];
    if colour_rec(g, k, &mut colour, 0) {
        Some(colour)
    } else {
        None
    }
}

fn colour_rec(g: &Graph, k: usize, colour: &mut [usize], coloured: usize) -> bool {
    let n = g.n();
    if coloured == n {
        return true;
    }
    // DSATUR choice: most distinct neighbouring colours, ties by degree.
    let mut pick = usize::MAX;
    let mut pick_key = (0usize, 0usize);
    let mut max_used = 0usize;
    for v in 0..n {
        if colour[v] != usize::MAX {
            max_used = max_used.max(colour[v] + 1);
            continue;
        }
        let mut seen = 0u64;
        for u in g.neighbours(v) {
            if colour[u] != usize::MAX {
                seen |= 1 << colour[u];
            }
        }
        let key = (seen.count_ones() as usize, g.degree(v));
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
        }
    }
    let mut forbidden = 0u64;
    for u in g.neighbours(pick) {
        if colour[u] != usize::MAX {
            forbidden |= 1 << colour[u];
        }
    }
    // Colours above max_used are interchangeable: trying the single fresh
    // one covers them all.
    let limit = k.min(max_used + 1);
    for c in 0..limit {
        if forbidden >> c & 1 == 1 {
            continue;
        }
        colour[pick] = c;
        if colour_rec(g, k, colour, coloured + 1) {
            return true;
        }
        colour[pick] = usize::MAX;
    }
    false
}

/// Whether the graph admits a proper colouring with at most `k` colours.
/// Twin contraction is applied first.
pub fn is_k_colourable(g: &Graph, k: usize) -> bool {
    let (reduced, _) = contract_false_twins(g);
    find_k_colouring(&reduced, k).is_some()
}

/// Exact chromatic number.
///
/// # Errors
///
/// Returns a capacity error when the twin-contracted graph still has more
/// than [`CHROMATIC_SEARCH_CAP`] vertices; the search is exponential and
/// anything larger is out of contract.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let (reduced, _) = contract_false_twins(g);
    if reduced.n() > CHROMATIC_SEARCH_CAP {
        return Err(Error::capacity(
            "chromatic_number",
            format!(
                "graph has {} vertices after twin contraction, cap is {CHROMATIC_SEARCH_CAP}",
                reduced.n()
            ),
        ));
    }
    if reduced.n() == 0 {
        return Ok(0);
    }
    let lb = greedy_clique(&reduced).len();
    let ub = greedy_colouring(&reduced)
        .iter()
        .max()
        .map_or(0, |&c| c + 1);
    for k in lb..ub {
        if find_k_colouring(&reduced, k).is_some() {
            return Ok(k);
        }
    }
    Ok(ub)
}

/// Contracts classes of false twins to single representatives, repeating
/// until no class has two members. Returns the contracted graph and, for
/// each original vertex, the vertex of the contracted graph it maps to.
pub fn contract_false_twins(g: &Graph) -> (Graph, Vec<usize>) {
    let mut current = g.clone();
    let mut map: Vec<usize> = (0..g.n()).collect();
    loop {
        let n = current.n();
        // group vertices by adjacency row
        let mut class_of = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for v in 0..n {
            let row = current.row(v);
            match reps.iter().position(|&r| current.row(r) == row) {
                Some(c) => class_of[v] = c,
                None => {
                    class_of[v] = reps.len();
                    reps.push(v);
                }
            }
        }
        if reps.len() == n {
            return (current, map);
        }
        let mut edges = Vec::new();
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate().skip(a + 1) {
                if current.has_edge(ra, rb) {
                    edges.push((a, b));
                }
            }
        }
        let next = Graph::from_edges(reps.len(), edges).expect("quotient edges in range");
        for slot in map.iter_mut() {
            *slot = class_of[*slot];
        }
        current = next;
    }
}

/// Proper 2-colouring via breadth-first search, or `None` if some
/// component is odd. Much cheaper than the general search and used by the
/// exhaustive verification sweeps.
pub fn bipartition(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut colour = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for start in 0..n {
        if colour[start] != usize::MAX {
            continue;
        }
        colour[start] = 0;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbours(v) {
                if colour[u] == usize::MAX {
                    colour[u] = 1 - colour[v];
                    queue.push_back(u);
                } else if colour[u] == colour[v] {
                    return None;
                }
            }
        }
    }
    Some(colour)
}

/// Checks that an assignment of vertices to classes is a proper
/// colouring, i.e. that no edge is monochromatic.
pub fn is_proper_colouring(g: &Graph, colour: &[usize]) -> bool {
    debug_assert_eq!(colour.len(), g.n());
    g.edges().all(|(u, v)| colour[u] != colour[v])
}

/// Enumerates every proper partition of the vertex set into at most
/// `max_classes` independent classes, each partition exactly once (classes
/// appear in order of their smallest vertex). The callback receives the
/// class assignment and the number of classes used.
pub fn for_each_proper_partition<F>(g: &Graph, max_classes: usize, f: &mut F)
where
    F: FnMut(&[usize], usize),
{
    let n = g.n();
    if n == 0 {
        f(&[], 0);
        return;
    }
    let mut colour = vec![usize::MAX; n];
    partition_rec(g, max_classes, &mut colour, 0, 0, f);
}

fn partition_rec<F>(
    g: &Graph,
    max_classes: usize,
    colour: &mut Vec<usize>,
    v: usize,
    used: usize,
    f: &mut F,
) where
    F: FnMut(&[usize], usize),
{
    let n = g.n();
    if v == n {
        f(colour, used);
        return;
    }
    let mut forbidden = vec![false; used + 1];
    for u in g.neighbours(v) {
        if u < v {
            forbidden[colour[u]] = true;
        }
    }
    let limit = (used + 1).min(max_classes);
    for c in 0..limit {
        if c < used && forbidden[c] {
            continue;
        }
        colour[v] = c;
        partition_rec(g, max_classes, colour, v + 1, used.max(c + 1), f);
    }
    colour[v] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_multipartite, cycle, disjoint_union, path, Graph};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn chromatic_of_standard_graphs() {
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(chromatic_number(&Graph::empty(7)).unwrap(), 1);
        assert_eq!(chromatic_number(&complete(5)).unwrap(), 5);
        assert_eq!(chromatic_number(&cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&cycle(6).unwrap()).unwrap(), 2);
        assert_eq!(chromatic_number(&path(6).unwrap()).unwrap(), 2);
        // the Petersen graph
        let pet = crate::graph6::parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(chromatic_number(&pet).unwrap(), 3);
    }

    #[test]
    fn chromatic_of_complete_multipartite_is_part_count() {
        let mut rng = StdRng::seed_from_u64(0xC010_0001);
        for _ in 0..40 {
            let parts = rng.gen_range(1..=4usize);
            let sizes: Vec<usize> = (0..parts).map(|_| rng.gen_range(1..=3)).collect();
            if sizes.iter().sum::<usize>() > 12 {
                continue;
            }
            let g = complete_multipartite(&sizes).unwrap();
            assert_eq!(chromatic_number(&g).unwrap(), parts, "sizes {sizes:?}");
        }
    }

    #[test]
    fn twin_contraction_collapses_blowups() {
        // C_5 with every vertex tripled: contracts back to C_5
        let mut edges = Vec::new();
        for i in 0..5usize {
            for j in 0..3usize {
                for l in 0..3usize {
                    edges.push((3 * i + j, 3 * ((i + 1) % 5) + l));
                }
            }
        }
        let blowup = Graph::from_edges(15, edges).unwrap();
        let (reduced, map) = contract_false_twins(&blowup);
        assert_eq!(reduced.n(), 5);
        assert_eq!(reduced.edge_count(), 5);
        assert_eq!(chromatic_number(&blowup).unwrap(), 3);
        // map respects adjacency
        for (u, v) in blowup.edges() {
            assert!(reduced.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn contraction_preserves_chromatic_number_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(0xC010_0002);
        for _ in 0..60 {
            let n = rng.gen_range(1..=8usize);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            // brute force: smallest k admitting a proper assignment
            let mut brute = n;
            'outer: for k in 1..=n {
                for code in 0..(k as u64).pow(n as u32) {
                    let mut c = code;
                    let assignment: Vec<usize> = (0..n)
                        .map(|_| {
                            let digit = (c % k as u64) as usize;
                            c /= k as u64;
                            digit
                        })
                        .collect();
                    if is_proper_colouring(&g, &assignment) {
                        brute = k;
                        break 'outer;
                    }
                }
            }
            assert_eq!(chromatic_number(&g).unwrap(), brute);
        }
    }

    #[test]
    fn bipartition_agrees_with_two_colourability() {
        let mut rng = StdRng::seed_from_u64(0xC010_0003);
        for _ in 0..100 {
            let n = rng.gen_range(1..=10usize);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.3) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            match bipartition(&g) {
                Some(c) => {
                    assert!(is_proper_colouring(&g, &c));
                    assert!(c.iter().all(|&x| x < 2));
                }
                None => assert!(!is_k_colourable(&g, 2)),
            }
        }
    }

    #[test]
    fn partition_enumeration_counts_are_canonical() {
        // K_3: exactly one partition into 3 classes, none into fewer
        let mut count = 0;
        for_each_proper_partition(&complete(3), 3, &mut |_, used| {
            assert_eq!(used, 3);
            count += 1;
        });
        assert_eq!(count, 1);

        // empty graph on 3 vertices: Bell(3) = 5 partitions into <= 3 classes
        let mut count = 0;
        for_each_proper_partition(&Graph::empty(3), 3, &mut |_, _| count += 1);
        assert_eq!(count, 5);

        // P_3 (path a-b-c): proper partitions: {a|b|c}, {ac|b} into <= 3
        let mut seen = Vec::new();
        for_each_proper_partition(&path(3).unwrap(), 3, &mut |c, used| {
            seen.push((c.to_vec(), used));
        });
        seen.sort();
        assert_eq!(
            seen,
            vec![(vec![0, 1, 0], 2), (vec![0, 1, 2], 3)]
        );
    }

    #[test]
    fn disjoint_union_chromatic_is_max() {
        let g = disjoint_union(&complete(4), &cycle(5).unwrap());
        assert_eq!(chromatic_number(&g).unwrap(), 4);
    }
}

//! Simple undirected graphs on `0..n` with bitset adjacency rows.
//!
//! Everything downstream (clique censuses, blow-up searches, the
//! decomposition pipeline) leans on word-parallel row intersections, so the
//! representation is a flat `Vec<u64>` with one stride of words per vertex.
//! Graphs are immutable once built; constructions assemble an edge list and
//! freeze it through [`Graph::from_edges`].

use crate::error::{Error, Result};

/// Number of `u64` words needed to hold `n` bits.
#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// An undirected graph without loops or parallel edges.
///
/// Vertices are `0..n`. The adjacency matrix is stored row-major, one bit
/// per potential neighbour, `words_for(n)` words per row. Symmetry and
/// loop-freeness are enforced by construction and asserted in debug builds.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0u64; n * words],
        }
    }

    /// Builds a graph from an explicit edge list.
    ///
    /// Duplicate edges are collapsed. Both orientations of a pair are
    /// accepted.
    ///
    /// # Errors
    ///
    /// Rejects loops (`u == v`) and endpoints outside `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("loop edge at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Adjacency row of `v` as a word slice.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] |= 1u64 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1u64 << (u % 64);
    }

    /// Inserts the edge `{u, v}`; a no-op if already present.
    ///
    /// # Panics
    ///
    /// `u = v` or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u}, {v})");
        self.set_edge(u, v);
    }

    /// Deletes the edge `{u, v}`; a no-op if absent.
    ///
    /// # Panics
    ///
    /// `u = v` or an out-of-range endpoint.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u}, {v})");
        self.bits[u * self.words + v / 64] &= !(1u64 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1u64 << (u % 64));
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Degree of `v`.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.n).map(|v| self.degree(v)).sum();
        total / 2
    }

    /// Iterates over edges as ordered pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbours_from(u, u + 1).map(move |v| (u, v))
        })
    }

    /// Iterates over the neighbours of `v` in ascending order.
    pub fn neighbours(&self, v: usize) -> BitIter<'_> {
        BitIter::new(self.row(v), 0)
    }

    /// Neighbours of `v` that are `>= lo`, ascending.
    pub fn neighbours_from(&self, v: usize, lo: usize) -> BitIter<'_> {
        BitIter::new(self.row(v), lo)
    }

    /// The neighbourhood of `v` as a set.
    pub fn neighbour_set(&self, v: usize) -> VertexSet {
        VertexSet {
            nbits: self.n,
            words: self.row(v).to_vec(),
        }
    }

    /// Smallest degree over all vertices.
    ///
    /// # Errors
    ///
    /// The empty graph has no minimum degree.
    pub fn min_degree(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::invalid("minimum degree of the empty graph"));
        }
        Ok((0..self.n).map(|v| self.degree(v)).min().unwrap())
    }

    /// Number of common neighbours of two distinct vertices.
    ///
    /// # Errors
    ///
    /// Rejects `u == v`: the codegree of a vertex with itself is not a
    /// meaningful quantity here.
    pub fn codegree(&self, u: usize, v: usize) -> Result<usize> {
        if u == v {
            return Err(Error::invalid(format!("codegree of vertex {u} with itself")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!(
                "codegree ({u}, {v}) out of range for n = {}",
                self.n
            )));
        }
        Ok(self.codegree_unchecked(u, v))
    }

    #[inline]
    pub(crate) fn codegree_unchecked(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// The graph on the same vertex set that keeps exactly the edges with
    /// both endpoints adjacent to `v`. Edges incident to `v` itself are
    /// dropped, so copies of `K_{k}` here correspond to copies of
    /// `K_{k+1}` through `v` in the original graph.
    pub fn neighbourhood_graph(&self, v: usize) -> Graph {
        assert!(v < self.n, "vertex {v} out of range");
        let mut out = Graph::empty(self.n);
        let nv = self.row(v);
        for u in BitIter::new(nv, 0) {
            let dst = &mut out.bits[u * self.words..(u + 1) * self.words];
            for (d, (a, b)) in dst.iter_mut().zip(self.row(u).iter().zip(nv)) {
                *d = a & b;
            }
        }
        // `u` itself is adjacent to `v`, never to itself, so no loop bits
        // can appear; symmetry is inherited from the source rows.
        out
    }

    /// Induced subgraph on `keep`, relabelled to `0..keep.len()`.
    pub fn induced(&self, keep: &VertexSet) -> Induced {
        let old_of_new: Vec<usize> = keep.iter().collect();
        let mut edges = Vec::new();
        for (a, &u) in old_of_new.iter().enumerate() {
            for (b, &v) in old_of_new.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    edges.push((a, b));
                }
            }
        }
        let graph = Graph::from_edges(old_of_new.len(), edges)
            .expect("relabelled edges are in range by construction");
        Induced { graph, old_of_new }
    }

    #[cfg(test)]
    pub(crate) fn check_invariants(&self) {
        for v in 0..self.n {
            assert!(!self.has_edge(v, v), "loop at {v}");
            for u in self.neighbours(v) {
                assert!(self.has_edge(u, v), "asymmetric edge ({v}, {u})");
            }
        }
        // no stray bits at or beyond n
        for v in 0..self.n {
            for u in self.neighbours(v) {
                assert!(u < self.n);
            }
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}; ", self.n, self.edge_count())?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
            first = false;
        }
        write!(f, ")")
    }
}

/// Result of [`Graph::induced`]: the relabelled graph plus the map from new
/// indices back to the original ones. `old_of_new` is ascending, so the
/// inverse direction is a binary search.
pub struct Induced {
    pub graph: Graph,
    pub old_of_new: Vec<usize>,
}

impl Induced {
    /// New index of an original vertex, if it was kept.
    pub fn new_of_old(&self, old: usize) -> Option<usize> {
        self.old_of_new.binary_search(&old).ok()
    }
}

// ======================================================================
// Vertex sets
// ======================================================================

/// A set of vertices of a graph on `nbits` vertices, as a bit vector.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(nbits: usize) -> VertexSet {
        VertexSet {
            nbits,
            words: vec![0u64; words_for(nbits)],
        }
    }

    /// The full vertex set `0..nbits`.
    pub fn full(nbits: usize) -> VertexSet {
        let mut s = VertexSet::empty(nbits);
        for v in 0..nbits {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(nbits: usize, it: I) -> VertexSet {
        let mut s = VertexSet::empty(nbits);
        for v in it {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.nbits
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {v} out of range");
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {v} out of range");
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.nbits && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> BitIter<'_> {
        BitIter::new(&self.words, 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Everything in `0..nbits` that is not in the set.
    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet::empty(self.nbits);
        for v in 0..self.nbits {
            if !self.contains(v) {
                out.insert(v);
            }
        }
        out
    }

    /// Number of members that are neighbours of `v` in `g`.
    pub fn degree_into(&self, g: &Graph, v: usize) -> usize {
        debug_assert_eq!(self.nbits, g.n());
        g.row(v)
            .iter()
            .zip(&self.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    /// Collects into a set sized by the largest member; prefer
    /// [`VertexSet::from_iter`] with an explicit capacity when the ambient
    /// graph is known.
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> VertexSet {
        let items: Vec<usize> = it.into_iter().collect();
        let nbits = items.iter().max().map_or(0, |&m| m + 1);
        VertexSet::from_iter(nbits, items)
    }
}

/// Ascending iterator over set bits of a word slice.
pub struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    fn new(words: &'a [u64], lo: usize) -> BitIter<'a> {
        let word_idx = lo / 64;
        let current = if word_idx < words.len() {
            // mask off bits below lo within the starting word
            words[word_idx] & (!0u64).checked_shl((lo % 64) as u32).unwrap_or(0)
        } else {
            0
        };
        BitIter {
            words,
            word_idx,
            current,
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * 64 + bit)
    }
}

// ======================================================================
// Stock constructions used throughout
// ======================================================================

/// Builds a graph from vertex indices and an edge list; the public
/// entry point mirrored by the `from_edges` constructor.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, edges.iter().copied())
}

/// Complete multipartite graph with the given part sizes. Vertices are
/// laid out part by part in the order given.
///
/// # Errors
///
/// Rejects an empty size list and zero part sizes.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() {
        return Err(Error::invalid("complete multipartite graph with no parts"));
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::invalid(format!("part {i} has size zero")));
    }
    let n: usize = sizes.iter().sum();
    let mut part_of = vec![0usize; n];
    let mut v = 0;
    for (p, &s) in sizes.iter().enumerate() {
        for _ in 0..s {
            part_of[v] = p;
            v += 1;
        }
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for w in u + 1..n {
            if part_of[u] != part_of[w] {
                g.set_edge(u, w);
            }
        }
    }
    Ok(g)
}

/// The cycle `C_n` (`n >= 3`).
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle on {n} < 3 vertices")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// The path `P_n` on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.set_edge(u, v);
        }
    }
    g
}

/// Disjoint union, with the second operand's vertices shifted up.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let n = a.n() + b.n();
    let mut edges: Vec<(usize, usize)> = a.edges().collect();
    edges.extend(b.edges().map(|(u, v)| (u + a.n(), v + a.n())));
    Graph::from_edges(n, edges).expect("shifted edges stay in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(2, 0)]).is_ok());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn degrees_and_handshake_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(0x5EED_0001);
        for _ in 0..50 {
            let n = rng.gen_range(1..=40);
            let g = random_graph(&mut rng, n, 0.4);
            let sum: usize = (0..n).map(|v| g.degree(v)).sum();
            assert_eq!(sum, 2 * g.edge_count());
            g.check_invariants();
        }
    }

    #[test]
    fn min_degree_rejects_empty_graph() {
        assert!(Graph::empty(0).min_degree().is_err());
        assert_eq!(Graph::empty(5).min_degree().unwrap(), 0);
    }

    #[test]
    fn codegree_matches_naive_double_loop() {
        let mut rng = StdRng::seed_from_u64(0x5EED_0002);
        for _ in 0..100 {
            let n = rng.gen_range(2..=12);
            let g = random_graph(&mut rng, n, 0.5);
            for u in 0..n {
                for v in 0..n {
                    if u == v {
                        assert!(g.codegree(u, v).is_err());
                        continue;
                    }
                    let naive = (0..n)
                        .filter(|&w| w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w))
                        .count();
                    assert_eq!(g.codegree(u, v).unwrap(), naive, "codegree({u},{v})");
                }
            }
        }
    }

    #[test]
    fn codegree_in_complete_bipartite() {
        let g = complete_multipartite(&[5, 5]).unwrap();
        // same side: all five opposite vertices; opposite sides: none
        assert_eq!(g.codegree(0, 1).unwrap(), 5);
        assert_eq!(g.codegree(0, 5).unwrap(), 0);
    }

    #[test]
    fn neighbourhood_graph_of_k4_keeps_the_far_triangle() {
        let g = complete(4);
        let gv = g.neighbourhood_graph(0);
        assert_eq!(gv.n(), 4);
        assert_eq!(gv.edge_count(), 3);
        assert!(gv.has_edge(1, 2) && gv.has_edge(1, 3) && gv.has_edge(2, 3));
        assert_eq!(gv.degree(0), 0);
    }

    #[test]
    fn neighbourhood_graph_is_the_common_neighbour_filter() {
        let mut rng = StdRng::seed_from_u64(0x5EED_0003);
        for _ in 0..30 {
            let n = rng.gen_range(2..=14);
            let g = random_graph(&mut rng, n, 0.5);
            let v = rng.gen_range(0..n);
            let gv = g.neighbourhood_graph(v);
            for a in 0..n {
                for b in a + 1..n {
                    let expect = g.has_edge(a, b) && g.has_edge(v, a) && g.has_edge(v, b);
                    assert_eq!(gv.has_edge(a, b), expect);
                }
            }
        }
    }

    #[test]
    fn induced_relabels_consistently() {
        let g = cycle(6).unwrap();
        let keep = VertexSet::from_iter(6, [0, 2, 3, 5]);
        let ind = g.induced(&keep);
        assert_eq!(ind.graph.n(), 4);
        assert_eq!(ind.old_of_new, vec![0, 2, 3, 5]);
        // surviving edges of C_6 among {0,2,3,5}: 2-3 and 5-0
        assert_eq!(ind.graph.edge_count(), 2);
        let e23 = (ind.new_of_old(2).unwrap(), ind.new_of_old(3).unwrap());
        assert!(ind.graph.has_edge(e23.0, e23.1));
        assert_eq!(ind.new_of_old(1), None);
    }

    #[test]
    fn complete_multipartite_shapes() {
        let g = complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 12);
        assert!((0..6).all(|v| g.degree(v) == 4));
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[2, 0, 1]).is_err());
    }

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::empty(70);
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(69);
        assert_eq!(s.len(), 4);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 69]);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.complement().len(), 67);
    }

    #[test]
    fn bit_iter_from_offset() {
        let g = complete(130);
        let hi: Vec<usize> = g.neighbours_from(0, 127).collect();
        assert_eq!(hi, vec![127, 128, 129]);
    }

    #[test]
    fn degree_into_counts_set_neighbours() {
        let g = cycle(5).unwrap();
        let s = VertexSet::from_iter(5, [1, 2, 4]);
        // vertex 0 is adjacent to 1 and 4
        assert_eq!(s.degree_into(&g, 0), 2);
        assert_eq!(s.degree_into(&g, 3), 2); // 2 and 4
    }
}

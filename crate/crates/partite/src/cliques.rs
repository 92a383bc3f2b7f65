//! Clique censuses and subgraph searches.
//!
//! The census enumerates every k-clique once, walking vertices along a
//! degeneracy order so candidate sets shrink as fast as the graph allows,
//! and attributes each copy to its vertices and edges. Downstream logic
//! only ever consumes the counts, but the per-edge attribution is what
//! lets the decomposition pipeline spot edges that sit in suspiciously
//! many cliques.
//!
//! With the `parallel` feature the census fans out over the first clique
//! vertex; merging per-task counts is associative, so the result is
//! independent of the work split.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{words_for, Graph, VertexSet};

pub type Rational = Ratio<BigInt>;

/// Caps for the census enumeration; beyond these the copy counts
/// themselves explode and an exact census is out of contract.
pub const CENSUS_MAX_N: usize = 400;
pub const CENSUS_MAX_K: usize = 8;

// ======================================================================
// Census
// ======================================================================

/// Exact counts of `K_k` copies: overall, through each vertex, and
/// through each edge.
#[derive(Clone, Debug)]
pub struct CliqueCensus {
    pub k: usize,
    pub total: u64,
    pub per_vertex: Vec<u64>,
    edges: Vec<(usize, usize)>,
    edge_counts: Vec<u64>,
}

impl CliqueCensus {
    /// Per-edge counts as `((u, v), count)` with `u < v`, ascending.
    pub fn edge_counts(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.edges.iter().copied().zip(self.edge_counts.iter().copied())
    }

    /// Count of copies through one edge.
    pub fn count_for_edge(&self, u: usize, v: usize) -> Option<u64> {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search(&key)
            .ok()
            .map(|i| self.edge_counts[i])
    }

    fn check_identities(&self) {
        let k = self.k as u64;
        let vertex_sum: u64 = self.per_vertex.iter().sum();
        debug_assert_eq!(vertex_sum, k * self.total, "vertex-incidence identity");
        let edge_sum: u64 = self.edge_counts.iter().sum();
        debug_assert_eq!(
            edge_sum,
            k * k.saturating_sub(1) / 2 * self.total,
            "edge-incidence identity"
        );
        if self.k >= 2 {
            for (i, &(u, v)) in self.edges.iter().enumerate() {
                debug_assert!(
                    self.edge_counts[i] <= self.per_vertex[u].min(self.per_vertex[v]),
                    "edge ({u},{v}) exceeds its endpoints"
                );
            }
        }
    }
}

/// A smallest-last (degeneracy) ordering. Enumerating cliques along it
/// bounds the branching at each step by the degeneracy rather than the
/// maximum degree.
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n.max(1)];
    for v in 0..n {
        buckets[deg[v]].push(v);
    }
    let mut order = Vec::with_capacity(n);
    let mut floor = 0usize;
    while order.len() < n {
        while floor < buckets.len() && buckets[floor].is_empty() {
            floor += 1;
        }
        if floor >= buckets.len() {
            break;
        }
        let v = buckets[floor].pop().unwrap();
        if removed[v] || deg[v] != floor {
            // stale bucket entry
            continue;
        }
        removed[v] = true;
        order.push(v);
        for u in g.neighbours(v) {
            if !removed[u] {
                deg[u] -= 1;
                buckets[deg[u]].push(u);
                if deg[u] < floor {
                    floor = deg[u];
                }
            }
        }
    }
    order
}

/// Per-task accumulator; merging is pointwise addition.
struct Counts {
    total: u64,
    per_vertex: Vec<u64>,
    per_edge: Vec<u64>,
}

impl Counts {
    fn zero(n: usize, m: usize) -> Counts {
        Counts {
            total: 0,
            per_vertex: vec![0; n],
            per_edge: vec![0; m],
        }
    }

    #[cfg(feature = "parallel")]
    fn merge(mut self, other: Counts) -> Counts {
        self.total += other.total;
        for (a, b) in self.per_vertex.iter_mut().zip(other.per_vertex) {
            *a += b;
        }
        for (a, b) in self.per_edge.iter_mut().zip(other.per_edge) {
            *a += b;
        }
        self
    }
}

/// Everything the per-vertex census tasks share read-only.
struct CensusCtx {
    /// graph relabelled along the degeneracy order
    rows: Vec<u64>,
    words: usize,
    n: usize,
    k: usize,
    /// relabelled vertex -> original vertex
    old_of_new: Vec<usize>,
    /// original edge -> slot in the per-edge array
    edge_slot: BTreeMap<(usize, usize), usize>,
}

impl CensusCtx {
    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Counts all k-cliques whose smallest relabelled vertex is `start`.
    fn count_from(&self, start: usize, acc: &mut Counts) {
        let mut clique = Vec::with_capacity(self.k);
        clique.push(start);
        if self.k == 1 {
            self.record(&clique, acc);
            return;
        }
        let mut cand = vec![0u64; self.words];
        mask_above(self.row(start), start, &mut cand);
        let mut scratch = vec![vec![0u64; self.words]; self.k];
        self.extend(&mut clique, &cand, &mut scratch, acc);
    }

    fn extend(
        &self,
        clique: &mut Vec<usize>,
        cand: &[u64],
        scratch: &mut [Vec<u64>],
        acc: &mut Counts,
    ) {
        let depth = clique.len();
        let need = self.k - depth;
        if popcount(cand) < need {
            return;
        }
        if need == 0 {
            unreachable!("extend is never entered with a full clique");
        }
        let (mine, rest) = scratch.split_first_mut().unwrap();
        for v in bits(cand) {
            clique.push(v);
            if need == 1 {
                self.record(clique, acc);
            } else {
                for (i, w) in mine.iter_mut().enumerate() {
                    *w = cand[i] & self.row(v)[i];
                }
                mask_above_inplace(mine, v);
                self.extend(clique, mine, rest, acc);
            }
            clique.pop();
        }
    }

    fn record(&self, clique: &[usize], acc: &mut Counts) {
        acc.total += 1;
        for &v in clique {
            acc.per_vertex[self.old_of_new[v]] += 1;
        }
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                let (x, y) = (self.old_of_new[a], self.old_of_new[b]);
                let key = (x.min(y), x.max(y));
                acc.per_edge[self.edge_slot[&key]] += 1;
            }
        }
    }
}

fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}

/// `out = row` restricted to indices strictly above `v`.
fn mask_above(row: &[u64], v: usize, out: &mut [u64]) {
    out.copy_from_slice(row);
    mask_above_inplace(out, v);
}

fn mask_above_inplace(words: &mut [u64], v: usize) {
    let wi = v / 64;
    for w in words[..wi].iter_mut() {
        *w = 0;
    }
    let keep = (!0u64).checked_shl(v as u32 % 64 + 1).unwrap_or(0);
    words[wi] &= keep;
}

fn census_ctx(g: &Graph, k: usize) -> CensusCtx {
    let n = g.n();
    let order = degeneracy_order(g);
    // order lists a smallest-last elimination; enumerate along its reverse
    // so every vertex sees few forward neighbours
    let mut old_of_new: Vec<usize> = order;
    old_of_new.reverse();
    let mut new_of_old = vec![0usize; n];
    for (new, &old) in old_of_new.iter().enumerate() {
        new_of_old[old] = new;
    }
    let words = words_for(n);
    let mut rows = vec![0u64; n * words];
    for old in 0..n {
        let new = new_of_old[old];
        for u in g.neighbours(old) {
            let nu = new_of_old[u];
            rows[new * words + nu / 64] |= 1u64 << (nu % 64);
        }
    }
    let mut edge_slot = BTreeMap::new();
    for (slot, (u, v)) in g.edges().enumerate() {
        edge_slot.insert((u, v), slot);
    }
    CensusCtx {
        rows,
        words,
        n,
        k,
        old_of_new,
        edge_slot,
    }
}

fn census_validate(g: &Graph, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::invalid("census of K_0 copies"));
    }
    if k > CENSUS_MAX_K || g.n() > CENSUS_MAX_N {
        return Err(Error::capacity(
            "clique_census",
            format!(
                "n = {}, k = {k}; caps are n <= {CENSUS_MAX_N}, k <= {CENSUS_MAX_K}",
                g.n()
            ),
        ));
    }
    Ok(())
}

fn census_finish(g: &Graph, k: usize, counts: Counts) -> CliqueCensus {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let census = CliqueCensus {
        k,
        total: counts.total,
        per_vertex: counts.per_vertex,
        edges,
        edge_counts: counts.per_edge,
    };
    census.check_identities();
    census
}

/// Sequential census. Always available; the default entry point
/// [`clique_census`] dispatches here when the `parallel` feature is off.
pub fn clique_census_seq(g: &Graph, k: usize) -> Result<CliqueCensus> {
    census_validate(g, k)?;
    let ctx = census_ctx(g, k);
    let mut acc = Counts::zero(g.n(), g.edge_count());
    for v in 0..ctx.n {
        ctx.count_from(v, &mut acc);
    }
    Ok(census_finish(g, k, acc))
}

/// Parallel census fanning out over the first clique vertex.
#[cfg(feature = "parallel")]
pub fn clique_census_par(g: &Graph, k: usize) -> Result<CliqueCensus> {
    use rayon::prelude::*;
    census_validate(g, k)?;
    let ctx = census_ctx(g, k);
    let m = g.edge_count();
    let n = ctx.n;
    let counts = (0..n)
        .into_par_iter()
        .fold(
            || Counts::zero(n, m),
            |mut acc, v| {
                ctx.count_from(v, &mut acc);
                acc
            },
        )
        .reduce(|| Counts::zero(n, m), Counts::merge);
    Ok(census_finish(g, k, counts))
}

/// Exact census of `K_k` copies.
///
/// # Errors
///
/// `k = 0` is rejected; `k > 8` or more than 400 vertices exceed the
/// enumeration caps.
pub fn clique_census(g: &Graph, k: usize) -> Result<CliqueCensus> {
    #[cfg(feature = "parallel")]
    {
        clique_census_par(g, k)
    }
    #[cfg(not(feature = "parallel"))]
    {
        clique_census_seq(g, k)
    }
}

/// Edges lying in at least `floor` copies of `K_k`, ascending.
pub fn edges_in_many_cliques(g: &Graph, k: usize, floor: u64) -> Result<Vec<(usize, usize)>> {
    let census = clique_census(g, k)?;
    Ok(census
        .edge_counts()
        .filter(|&(_, c)| c >= floor)
        .map(|(e, _)| e)
        .collect())
}

// ======================================================================
// Subgraph and blow-up searches
// ======================================================================

/// A vertex map witnessing a subgraph copy: `map[i]` is the host vertex
/// playing target vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and that every target edge is carried to a host
    /// edge (plain subgraph containment, not induced).
    pub fn validates(&self, host: &Graph, target: &Graph) -> bool {
        if self.map.len() != target.n() {
            return false;
        }
        if self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        let mut seen = VertexSet::empty(host.n());
        for &v in &self.map {
            if seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        target.edges().all(|(a, b)| host.has_edge(self.map[a], self.map[b]))
    }
}

/// Outcome of a budgeted search: a witness, a definite no, or a budget
/// exhausted before the space was covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Embedding),
    Absent,
    Indeterminate,
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&Embedding> {
        match self {
            SearchOutcome::Found(e) => Some(e),
            _ => None,
        }
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, SearchOutcome::Absent)
    }
}

pub const SUBGRAPH_TARGET_CAP: usize = 16;

/// Backtracking subgraph embedding search; exhaustive, so the outcome is
/// always definite.
///
/// Target vertices are placed most-constrained-first (most already-placed
/// neighbours, then highest degree); host candidates respect degree and
/// adjacency to placed neighbours.
///
/// # Errors
///
/// Targets above 16 vertices are out of contract.
pub fn find_subgraph(g: &Graph, h: &Graph) -> Result<SearchOutcome> {
    find_subgraph_guided(g, h, None, None)
}

/// [`find_subgraph`] with an optional host-vertex preference order and an
/// optional node budget. Exceeding the budget yields
/// [`SearchOutcome::Indeterminate`].
pub fn find_subgraph_guided(
    g: &Graph,
    h: &Graph,
    host_order: Option<&[usize]>,
    budget: Option<u64>,
) -> Result<SearchOutcome> {
    if h.n() > SUBGRAPH_TARGET_CAP {
        return Err(Error::capacity(
            "find_subgraph",
            format!("target has {} vertices, cap is {SUBGRAPH_TARGET_CAP}", h.n()),
        ));
    }
    if h.n() > g.n() {
        return Ok(SearchOutcome::Absent);
    }
    let order = target_order(h);
    let hosts: Vec<usize> = match host_order {
        Some(o) => {
            debug_assert_eq!(o.len(), g.n());
            o.to_vec()
        }
        None => {
            let mut v: Vec<usize> = (0..g.n()).collect();
            v.sort_by_key(|&x| std::cmp::Reverse(g.degree(x)));
            v
        }
    };
    let mut map = vec![usize::MAX; h.n()];
    let mut used = VertexSet::empty(g.n());
    let mut nodes = budget;
    let exhausted = &mut false;
    let found = embed_rec(g, h, &order, &hosts, 0, &mut map, &mut used, &mut nodes, exhausted);
    if found {
        Ok(SearchOutcome::Found(Embedding { map }))
    } else if *exhausted {
        Ok(SearchOutcome::Indeterminate)
    } else {
        Ok(SearchOutcome::Absent)
    }
}

/// Most-constrained-first placement order for the target's vertices.
fn target_order(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let pick = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let anchored = h.neighbours(v).filter(|&u| placed[u]).count();
                (anchored, h.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[pick] = true;
        order.push(pick);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn embed_rec(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    hosts: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut VertexSet,
    nodes: &mut Option<u64>,
    exhausted: &mut bool,
) -> bool {
    if depth == order.len() {
        return true;
    }
    if let Some(b) = nodes {
        if *b == 0 {
            *exhausted = true;
            return false;
        }
        *b -= 1;
    }
    let t = order[depth];
    let want_degree = h.degree(t);
    'hosts: for &w in hosts {
        if used.contains(w) || g.degree(w) < want_degree {
            continue;
        }
        for u in h.neighbours(t) {
            if map[u] != usize::MAX && !g.has_edge(w, map[u]) {
                continue 'hosts;
            }
        }
        map[t] = w;
        used.insert(w);
        if embed_rec(g, h, order, hosts, depth + 1, map, used, nodes, exhausted) {
            return true;
        }
        used.remove(w);
        map[t] = usize::MAX;
    }
    false
}

/// Caps for the blow-up search.
pub const BLOWUP_CAP: usize = 24;

/// Searches for a complete r-partite subgraph with all parts of size `s`
/// (parts need not be independent in the host). Parts are built one at a
/// time: an s-subset of the running common neighbourhood is chosen, the
/// common neighbourhood is intersected down, and the search recurses, so
/// the candidate pool shrinks exactly as fast as the partite structure
/// demands.
///
/// `budget` caps the number of part-extension steps; `None` is exhaustive
/// and therefore definite.
///
/// # Errors
///
/// Requires `r >= 1`, `s >= 1`, and `r * s <= 24`.
pub fn find_blowup(g: &Graph, r: usize, s: usize, budget: Option<u64>) -> Result<SearchOutcome> {
    if r == 0 || s == 0 {
        return Err(Error::invalid("blow-up parameters must be positive"));
    }
    if r * s > BLOWUP_CAP {
        return Err(Error::capacity(
            "find_blowup",
            format!("r * s = {} exceeds cap {BLOWUP_CAP}", r * s),
        ));
    }
    let n = g.n();
    if r * s > n {
        return Ok(SearchOutcome::Absent);
    }
    let mut cand = VertexSet::full(n);
    let mut parts: Vec<usize> = Vec::with_capacity(r * s);
    let mut nodes = budget;
    let mut exhausted = false;
    let ok = blowup_rec(g, r, s, &mut cand, &mut parts, 0, &mut nodes, &mut exhausted);
    if ok {
        Ok(SearchOutcome::Found(Embedding { map: parts }))
    } else if exhausted {
        Ok(SearchOutcome::Indeterminate)
    } else {
        Ok(SearchOutcome::Absent)
    }
}

fn blowup_rec(
    g: &Graph,
    r: usize,
    s: usize,
    cand: &mut VertexSet,
    parts: &mut Vec<usize>,
    min_floor: usize,
    nodes: &mut Option<u64>,
    exhausted: &mut bool,
) -> bool {
    let parts_done = parts.len() / s;
    if parts_done == r {
        return true;
    }
    if cand.len() < (r - parts_done) * s {
        return false;
    }
    if let Some(b) = nodes {
        if *b == 0 {
            *exhausted = true;
            return false;
        }
        *b -= 1;
    }
    // choose the next part as an s-subset of cand; parts are
    // interchangeable, so force ascending part minima via min_floor
    let pool: Vec<usize> = cand.iter().filter(|&v| v >= min_floor).collect();
    choose_part(g, r, s, &pool, 0, s, cand, parts, nodes, exhausted)
}

#[allow(clippy::too_many_arguments)]
fn choose_part(
    g: &Graph,
    r: usize,
    s: usize,
    pool: &[usize],
    from: usize,
    remaining: usize,
    cand: &VertexSet,
    parts: &mut Vec<usize>,
    nodes: &mut Option<u64>,
    exhausted: &mut bool,
) -> bool {
    if remaining == 0 {
        // part complete: shrink the common neighbourhood and recurse
        let part_start = parts.len() - s;
        let mut next = cand.clone();
        for &x in &parts[part_start..] {
            let mut nx = g.neighbour_set(x);
            nx.intersect_with(&next);
            next = nx;
        }
        let floor = parts[part_start] + 1;
        return blowup_rec(g, r, s, &mut next, parts, floor, nodes, exhausted);
    }
    for i in from..pool.len() {
        if pool.len() - i < remaining {
            break;
        }
        parts.push(pool[i]);
        if choose_part(g, r, s, pool, i + 1, remaining - 1, cand, parts, nodes, exhausted) {
            return true;
        }
        parts.pop();
        if *exhausted {
            return false;
        }
    }
    false
}

/// Exhaustive search for a complete bipartite `K_{t,s}` (`1 <= t <= s`):
/// a `t`-subset whose common neighbourhood reaches size `s`. Returns an
/// embedding laid out left part first, or `None`.
///
/// # Errors
///
/// Rejects `t > s` or `t = 0`, and pool sizes whose `t`-subset count is
/// astronomically large.
pub fn find_kts(g: &Graph, t: usize, s: usize) -> Result<Option<Embedding>> {
    if t == 0 || t > s {
        return Err(Error::invalid(format!("need 1 <= t <= s, got t = {t}, s = {s}")));
    }
    let n = g.n();
    let mut work: u64 = 1;
    for i in 0..t {
        work = work.saturating_mul((n.saturating_sub(i)) as u64) / (i as u64 + 1);
        if work > 50_000_000 {
            return Err(Error::capacity(
                "find_kts",
                format!("C({n}, {t}) subsets is beyond the enumeration cap"),
            ));
        }
    }
    // subsets over a degree-descending relabelling: high-codegree sets
    // surface early on the graphs this gets pointed at
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut subset = Vec::with_capacity(t);
    let mut found: Option<Embedding> = None;
    kts_rec(g, t, s, &by_degree, 0, &mut subset, &mut found);
    Ok(found)
}

fn kts_rec(
    g: &Graph,
    t: usize,
    s: usize,
    pool: &[usize],
    from: usize,
    subset: &mut Vec<usize>,
    found: &mut Option<Embedding>,
) {
    if found.is_some() {
        return;
    }
    if subset.len() == t {
        let mut common = g.neighbour_set(subset[0]);
        for &v in &subset[1..] {
            let nv = g.neighbour_set(v);
            common.intersect_with(&nv);
        }
        if common.len() >= s {
            let mut map = subset.clone();
            map.extend(common.iter().take(s));
            *found = Some(Embedding { map });
        }
        return;
    }
    for i in from..pool.len() {
        if pool.len() - i < t - subset.len() {
            break;
        }
        // cheap degree cut: every left vertex needs at least s neighbours
        if g.degree(pool[i]) < s {
            continue;
        }
        subset.push(pool[i]);
        kts_rec(g, t, s, pool, i + 1, subset, found);
        subset.pop();
        if found.is_some() {
            return;
        }
    }
}

// ======================================================================
// Supersaturation constant
// ======================================================================

/// The exact-rational density constant `delta_{r,s}(eps)` used when
/// converting clique counts into blow-up guarantees:
///
/// * `delta_{1,s}(eps) = eps^s / (2^s s!)`
/// * `delta_{r,s}(eps) = (1/r) d (d eps/2)^s / (2^s s!)` where
///   `d = delta_{r-1,s}(eps/2)`
///
/// Values shrink astronomically fast; callers treat them as exact
/// rationals and never round.
///
/// # Errors
///
/// Requires `r >= 1`, `s >= 1`, `0 < eps <= 1`.
pub fn erdos_delta(r: usize, s: usize, eps: &Rational) -> Result<Rational> {
    if r == 0 || s == 0 {
        return Err(Error::invalid("erdos_delta needs r >= 1 and s >= 1"));
    }
    if !(eps > &Rational::zero() && eps <= &Rational::one()) {
        return Err(Error::invalid(format!("eps = {eps} outside (0, 1]")));
    }
    let two_s_sfact = Rational::from_integer(BigInt::from(2).pow(s as u32) * factorial(s));
    if r == 1 {
        return Ok(pow(eps, s) / two_s_sfact);
    }
    let half = eps / Rational::from_integer(BigInt::from(2));
    let d = erdos_delta(r - 1, s, &half)?;
    let base = &d * &half;
    Ok(&d * pow(&base, s) / (two_s_sfact * Rational::from_integer(BigInt::from(r))))
}

pub(crate) fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub(crate) fn pow(x: &Rational, k: usize) -> Rational {
    let mut out = Rational::one();
    for _ in 0..k {
        out *= x;
    }
    out
}

#[cfg(test)]
pub(crate) fn big_rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_multipartite, cycle, Graph};
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
    fn census_of_complete_graphs_is_binomial() {
        let g = complete(6);
        for (k, expect) in [(1, 6u64), (2, 15), (3, 20), (4, 15), (5, 6), (6, 1)] {
            let c = clique_census(&g, k).unwrap();
            assert_eq!(c.total, expect, "K_6 census at k = {k}");
        }
        // every triangle count sits evenly: C(5,2) = 10 per vertex, 4 per edge
        let c = clique_census(&g, 3).unwrap();
        assert!(c.per_vertex.iter().all(|&x| x == 10));
        assert!(c.edge_counts().all(|(_, x)| x == 4));
    }

    #[test]
    fn census_of_turan_style_graphs() {
        // K_{2,2,2,2}: one K_4 per transversal
        let g = complete_multipartite(&[2, 2, 2, 2]).unwrap();
        let c = clique_census(&g, 4).unwrap();
        assert_eq!(c.total, 16);
        // triangle-free bipartite
        let b = complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(clique_census(&b, 3).unwrap().total, 0);
    }

    #[test]
    fn k5_plus_edge_triangle_attribution() {
        // K_{5,5} plus one edge inside a side: that edge lies in 5
        // triangles, every cross edge in exactly 1
        let mut edges: Vec<(usize, usize)> = complete_multipartite(&[5, 5]).unwrap().edges().collect();
        edges.push((0, 1));
        let g = Graph::from_edges(10, edges).unwrap();
        let c = clique_census(&g, 3).unwrap();
        assert_eq!(c.total, 5);
        assert_eq!(c.count_for_edge(0, 1).unwrap(), 5);
        assert_eq!(c.count_for_edge(0, 7).unwrap(), 1);
        let many = edges_in_many_cliques(&g, 3, 5).unwrap();
        assert_eq!(many, vec![(0, 1)]);
    }

    #[test]
    fn census_caps_and_degenerate_k() {
        assert!(clique_census(&complete(3), 0).is_err());
        assert!(clique_census(&complete(3), 9).is_err());
        let c = clique_census(&complete(3), 1).unwrap();
        assert_eq!(c.total, 3);
        assert!(c.edge_counts().all(|(_, x)| x == 0));
    }

    #[test]
    fn seq_and_default_census_agree_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(0xCE45_0001);
        for _ in 0..30 {
            let n = rng.gen_range(1..=16);
            let g = random_graph(&mut rng, n, 0.5);
            for k in 1..=4 {
                let a = clique_census(&g, k).unwrap();
                let b = clique_census_seq(&g, k).unwrap();
                assert_eq!(a.total, b.total);
                assert_eq!(a.per_vertex, b.per_vertex);
                assert!(a.edge_counts().eq(b.edge_counts()));
            }
        }
    }

    #[test]
    fn find_subgraph_on_knowns() {
        let g = complete_multipartite(&[2, 2, 2]).unwrap();
        let c4 = complete_multipartite(&[2, 2]).unwrap();
        let hit = find_subgraph(&g, &c4).unwrap();
        let emb = hit.found().expect("C_4 sits inside the octahedron");
        assert!(emb.validates(&g, &c4));
        // no K_4 in the octahedron
        assert!(find_subgraph(&g, &complete(4)).unwrap().is_absent());
        // C_5 inside the Petersen graph
        let pet = crate::graph6::parse_graph6("IheA@GUAo").unwrap();
        let c5 = cycle(5).unwrap();
        let hit = find_subgraph(&pet, &c5).unwrap();
        assert!(hit.found().unwrap().validates(&pet, &c5));
        // K_{3,3} is not (Petersen has girth 5)
        assert!(find_subgraph(&pet, &complete_multipartite(&[3, 3]).unwrap())
            .unwrap()
            .is_absent());
    }

    #[test]
    fn find_subgraph_respects_target_cap() {
        assert!(find_subgraph(&complete(17), &complete(17)).is_err());
        assert!(find_subgraph(&complete(3), &complete(4)).unwrap().is_absent());
    }

    #[test]
    fn blowup_search_matches_subgraph_search() {
        let mut rng = StdRng::seed_from_u64(0xCE45_0002);
        for _ in 0..40 {
            let n = rng.gen_range(4..=12);
            let g = random_graph(&mut rng, n, 0.6);
            for (r, s) in [(2, 2), (3, 1), (2, 3), (3, 2)] {
                let via_blowup = find_blowup(&g, r, s, None).unwrap();
                let target = complete_multipartite(&vec![s; r]).unwrap();
                let via_embed = find_subgraph(&g, &target).unwrap();
                assert_eq!(
                    via_blowup.found().is_some(),
                    via_embed.found().is_some(),
                    "n = {n}, r = {r}, s = {s}"
                );
                if let Some(emb) = via_blowup.found() {
                    // a blow-up witness is an embedding of the uniform
                    // multipartite target laid out part by part
                    assert!(emb.validates(&g, &target));
                }
            }
        }
    }

    #[test]
    fn blowup_budget_reports_indeterminate() {
        // dense-ish graph with no K_3(2): a tight budget must not claim absence
        let g = complete_multipartite(&[1, 1, 6]).unwrap();
        let out = find_blowup(&g, 3, 2, Some(1)).unwrap();
        assert_eq!(out, SearchOutcome::Indeterminate);
        let exhaustive = find_blowup(&g, 3, 2, None).unwrap();
        assert!(exhaustive.is_absent());
    }

    #[test]
    fn octahedron_is_a_triple_blowup() {
        let g = complete_multipartite(&[2, 2, 2]).unwrap();
        let out = find_blowup(&g, 3, 2, None).unwrap();
        let emb = out.found().expect("K_3(2) is the octahedron itself");
        assert!(emb.validates(&g, &complete_multipartite(&[2, 2, 2]).unwrap()));
    }

    #[test]
    fn kts_on_knowns() {
        let k33 = complete_multipartite(&[3, 3]).unwrap();
        let hit = find_kts(&k33, 2, 2).unwrap().expect("C_4 inside K_{3,3}");
        assert!(hit.validates(&k33, &complete_multipartite(&[2, 2]).unwrap()));
        assert!(find_kts(&k33, 3, 3).unwrap().is_some());
        // C_4-free graphs: the pentagon and the Petersen graph
        assert!(find_kts(&cycle(5).unwrap(), 2, 2).unwrap().is_none());
        let pet = crate::graph6::parse_graph6("IheA@GUAo").unwrap();
        assert!(find_kts(&pet, 2, 2).unwrap().is_none());
        // stars are K_{1,s}
        let star = complete_multipartite(&[1, 4]).unwrap();
        assert!(find_kts(&star, 1, 4).unwrap().is_some());
        assert!(find_kts(&star, 2, 2).unwrap().is_none());
        assert!(find_kts(&star, 3, 2).is_err());
    }

    #[test]
    fn kts_agrees_with_subgraph_search_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(0xCE45_0003);
        for _ in 0..60 {
            let n = rng.gen_range(4..=11);
            let g = random_graph(&mut rng, n, 0.5);
            for (t, s) in [(1, 3), (2, 2), (2, 3), (3, 3)] {
                let via_kts = find_kts(&g, t, s).unwrap();
                let target = complete_multipartite(&[t, s]).unwrap();
                let via_embed = find_subgraph(&g, &target).unwrap();
                assert_eq!(via_kts.is_some(), via_embed.found().is_some());
                if let Some(emb) = via_kts {
                    assert!(emb.validates(&g, &target));
                }
            }
        }
    }

    #[test]
    fn erdos_delta_base_cases_and_regression() {
        let one = Rational::one();
        assert_eq!(erdos_delta(1, 1, &one).unwrap(), big_rational(1, 2));
        // delta_{1,2}(1/4) = (1/16)/8
        assert_eq!(
            erdos_delta(1, 2, &big_rational(1, 4)).unwrap(),
            big_rational(1, 128)
        );
        // pinned composite value
        assert_eq!(
            erdos_delta(2, 2, &big_rational(1, 2)).unwrap(),
            big_rational(1, 536_870_912)
        );
    }

    #[test]
    fn erdos_delta_is_positive_and_monotone_in_eps() {
        let quarters = [big_rational(1, 8), big_rational(1, 4), big_rational(1, 2)];
        for r in 1..=4 {
            for s in 1..=4 {
                let mut prev: Option<Rational> = None;
                for eps in &quarters {
                    let d = erdos_delta(r, s, eps).unwrap();
                    assert!(d > Rational::zero(), "r = {r}, s = {s}");
                    if let Some(p) = prev {
                        assert!(d > p, "not monotone at r = {r}, s = {s}");
                    }
                    prev = Some(d);
                }
            }
        }
        assert!(erdos_delta(0, 1, &Rational::one()).is_err());
        assert!(erdos_delta(1, 1, &Rational::zero()).is_err());
    }
}

//! Brute-force ground truth.
//!
//! Everything in here is deliberately written as a second, independent
//! code path: subset enumeration instead of ordered clique extension,
//! exhaustive labelings instead of greedy partitioning, raw bitmask
//! loops over every labeled graph instead of sampling heuristics. The
//! rest of the crate is tested against these, never the other way
//! around.
//!
//! The verification suites (`verify_aes_small`, `verify_zarankiewicz_small`,
//! `verify_kst_small`) re-check classical theorems at desk scale. They are
//! expected to find nothing; a counterexample means a bug in this crate,
//! not in the mathematics.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::chromatic::is_k_colourable;
use crate::cliques::{clique_census, find_kts};
use crate::error::{Error, Result};
use crate::extremal::turan_parts;
use crate::graph::{complete, complete_multipartite, cycle, path, Graph};
use crate::graph6::serialize_graph6;
use crate::target::TargetSpec;

/// Outcome of one verification suite run.
#[derive(Clone, Debug)]
pub struct OracleReport {
    /// which suite ran: "aes", "zarankiewicz", or "kst"
    pub suite: String,
    /// echoed parameters, including any seed used
    pub params: String,
    pub instances_checked: u64,
    /// graph6 strings of hypothesis-satisfying graphs that failed the
    /// conclusion; expected empty
    pub counterexamples: Vec<String>,
    pub elapsed: Duration,
}

impl OracleReport {
    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// One CSV row: `suite,params,instances_checked,counterexamples,elapsed_ms,verified`.
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},\"{}\",{},{},{},{}",
            self.suite,
            self.params,
            self.instances_checked,
            self.counterexamples.len(),
            self.elapsed.as_millis(),
            self.verified()
        )
    }
}

// ======================================================================
// Exact minimum deletion
// ======================================================================

const MIN_DELETION_LABELINGS_CAP: u64 = 2_100_000;

/// Exact minimum number of edges whose removal leaves an r-partite
/// graph (the complement of a max r-cut).
///
/// Branch and bound over part assignments in descending-degree order;
/// part-permutation symmetry is cut by only ever opening the next empty
/// part. The bound is the plain partial cost, so every pruned branch is
/// provably no better than the incumbent.
///
/// # Errors
///
/// `r = 0`, or an `r^n` labeling space beyond roughly two million.
pub fn min_deletion_to_r_partite(g: &Graph, r: usize) -> Result<usize> {
    if r == 0 {
        return Err(Error::invalid("0-partite is not a thing"));
    }
    let n = g.n();
    let mut space: u64 = 1;
    for _ in 0..n {
        space = space.saturating_mul(r as u64);
        if space > MIN_DELETION_LABELINGS_CAP {
            return Err(Error::capacity(
                "min_deletion_to_r_partite",
                format!("{r}^{n} labelings exceed the enumeration cap"),
            ));
        }
    }
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // rows over the reordered labels, as u32 masks (n <= 21 always holds
    // under the cap once r >= 2; r = 1 trivially returns every edge)
    if r == 1 {
        return Ok(g.edge_count());
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut rows = vec![0u32; n];
    for (u, v) in g.edges() {
        rows[pos[u]] |= 1 << pos[v];
        rows[pos[v]] |= 1 << pos[u];
    }
    // greedy incumbent: place each vertex in its cheapest part
    let mut part_masks = vec![0u32; r];
    let mut greedy_cost = 0usize;
    for i in 0..n {
        let (best_p, best_c) = (0..r)
            .map(|p| (p, (rows[i] & part_masks[p]).count_ones() as usize))
            .min_by_key(|&(_, c)| c)
            .unwrap();
        part_masks[best_p] |= 1 << i;
        greedy_cost += best_c;
    }
    let mut best = greedy_cost;
    let mut masks = vec![0u32; r];
    min_del_rec(&rows, r, 0, 0, &mut masks, 0, &mut best);
    Ok(best)
}

fn min_del_rec(
    rows: &[u32],
    r: usize,
    i: usize,
    cost: usize,
    masks: &mut Vec<u32>,
    open: usize,
    best: &mut usize,
) {
    if cost >= *best {
        return;
    }
    if i == rows.len() {
        *best = cost;
        return;
    }
    let limit = (open + 1).min(r);
    for p in 0..limit {
        let extra = (rows[i] & masks[p]).count_ones() as usize;
        masks[p] |= 1 << i;
        min_del_rec(
            rows,
            r,
            i + 1,
            cost + extra,
            masks,
            open.max(p + 1),
            best,
        );
        masks[p] &= !(1u32 << i);
    }
}

// ======================================================================
// Naive counting and containment
// ======================================================================

/// Counts k-cliques by plain k-subset enumeration. Independent of the
/// census code on purpose.
///
/// # Errors
///
/// Caps: n ≤ 16, k ≤ 6; k = 0 rejected.
pub fn naive_count_cliques(g: &Graph, k: usize) -> Result<u64> {
    if k == 0 {
        return Err(Error::invalid("counting K_0 copies"));
    }
    if g.n() > 16 || k > 6 {
        return Err(Error::capacity(
            "naive_count_cliques",
            format!("n = {}, k = {k}; caps are n <= 16, k <= 6", g.n()),
        ));
    }
    fn rec(g: &Graph, k: usize, from: usize, chosen: &mut Vec<usize>, total: &mut u64) {
        if chosen.len() == k {
            *total += 1;
            return;
        }
        for v in from..g.n() {
            if g.n() - v < k - chosen.len() {
                break;
            }
            if chosen.iter().all(|&u| g.has_edge(u, v)) {
                chosen.push(v);
                rec(g, k, v + 1, chosen, total);
                chosen.pop();
            }
        }
    }
    let mut total = 0;
    rec(g, k, 0, &mut Vec::new(), &mut total);
    Ok(total)
}

/// Containment by enumeration of every injective vertex map, with no
/// ordering heuristics at all.
///
/// # Errors
///
/// The map space `n^(v(h))` must stay below fifty million.
pub fn naive_contains_subgraph(g: &Graph, h: &Graph) -> Result<bool> {
    let n = g.n();
    let k = h.n();
    let mut space: u64 = 1;
    for i in 0..k {
        space = space.saturating_mul(n.saturating_sub(i) as u64);
        if space > 50_000_000 {
            return Err(Error::capacity(
                "naive_contains_subgraph",
                format!("{n} hosts for {k} target vertices is beyond the map-enumeration cap"),
            ));
        }
    }
    if k > n {
        return Ok(false);
    }
    fn rec(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let t = map.len();
        if t == h.n() {
            return true;
        }
        for w in 0..g.n() {
            if used[w] {
                continue;
            }
            let consistent = (0..t).all(|u| !h.has_edge(u, t) || g.has_edge(map[u], w));
            if consistent {
                map.push(w);
                used[w] = true;
                if rec(g, h, map, used) {
                    return true;
                }
                used[w] = false;
                map.pop();
            }
        }
        false
    }
    Ok(rec(g, h, &mut Vec::new(), &mut vec![false; n]))
}

// ======================================================================
// Exact extremal numbers for tiny n
// ======================================================================

pub const BIEX_EXACT_CAP: usize = 8;

/// Exact `ex(n, F)` where `F` is the target's family of colour-class-pair
/// subgraphs: the maximum edge count of an n-vertex graph containing no
/// member of `F`.
///
/// Branch and bound over edges in lexicographic order, include-first;
/// including an edge is allowed only when no `F`-member copy through
/// that edge appears, and branches die once the undecided edges cannot
/// beat the incumbent.
///
/// # Errors
///
/// n ≤ 8.
pub fn biex_exact(n: usize, target: &TargetSpec) -> Result<usize> {
    biex_exact_family(n, &target.reducts)
}

/// [`biex_exact`] against an explicit forbidden family.
pub fn biex_exact_family(n: usize, family: &[Graph]) -> Result<usize> {
    if n > BIEX_EXACT_CAP {
        return Err(Error::capacity(
            "biex_exact",
            format!("n = {n} exceeds cap {BIEX_EXACT_CAP}"),
        ));
    }
    if family.is_empty() {
        return Err(Error::invalid("empty forbidden family"));
    }
    let all_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut g = Graph::empty(n);
    // edges addable to the empty graph (everything, unless some family
    // member is a lone edge plus isolated vertices)
    let addable: Vec<(usize, usize)> = all_edges
        .into_iter()
        .filter(|&(u, v)| {
            g.add_edge(u, v);
            let bad = family.iter().any(|f| contains_through_edge(&g, f, u, v));
            g.remove_edge(u, v);
            !bad
        })
        .collect();
    let mut best = 0usize;
    biex_rec(&mut g, &addable, 0, family, &mut best);
    Ok(best)
}

/// `addable` holds exactly the undecided edges whose individual addition
/// keeps `g` F-free. Un-addability is monotone under edge addition, so
/// each include step re-filters the list and each exclude step reuses it;
/// the list length is then a true bound on how many edges can still come.
fn biex_rec(
    g: &mut Graph,
    addable: &[(usize, usize)],
    cur: usize,
    family: &[Graph],
    best: &mut usize,
) {
    if cur > *best {
        *best = cur;
    }
    if cur + addable.len() <= *best {
        return;
    }
    let (u, v) = addable[0];
    g.add_edge(u, v);
    let still: Vec<(usize, usize)> = addable[1..]
        .iter()
        .copied()
        .filter(|&(x, y)| {
            g.add_edge(x, y);
            let bad = family.iter().any(|f| contains_through_edge(g, f, x, y));
            g.remove_edge(x, y);
            !bad
        })
        .collect();
    biex_rec(g, &still, cur + 1, family, best);
    g.remove_edge(u, v);
    biex_rec(g, &addable[1..], cur, family, best);
}

/// Does `g` contain a copy of `f` in which some `f`-edge lands exactly on
/// the host edge `{u, v}`? Only such copies can be created by adding that
/// edge, so this is the full incremental containment check.
pub(crate) fn contains_through_edge(g: &Graph, f: &Graph, u: usize, v: usize) -> bool {
    for (a, b) in f.edges() {
        for (x, y) in [(u, v), (v, u)] {
            let mut map = vec![usize::MAX; f.n()];
            let mut used = vec![false; g.n()];
            map[a] = x;
            map[b] = y;
            used[x] = true;
            used[y] = true;
            if anchored_embed(g, f, &mut map, &mut used) {
                return true;
            }
        }
    }
    false
}

fn anchored_embed(g: &Graph, f: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    let t = match map.iter().position(|&m| m == usize::MAX) {
        None => return true,
        Some(t) => t,
    };
    for w in 0..g.n() {
        if used[w] {
            continue;
        }
        let ok = f
            .neighbours(t)
            .all(|u2| map[u2] == usize::MAX || g.has_edge(map[u2], w));
        if ok {
            map[t] = w;
            used[w] = true;
            if anchored_embed(g, f, map, used) {
                return true;
            }
            used[w] = false;
            map[t] = usize::MAX;
        }
    }
    false
}

/// Second, independent path for tiny n: full enumeration of all labeled
/// graphs, keeping the best F-free edge count.
///
/// # Errors
///
/// n ≤ 6 (2^15 graphs at most).
pub fn biex_exhaustive(n: usize, family: &[Graph]) -> Result<usize> {
    if n > 6 {
        return Err(Error::capacity(
            "biex_exhaustive",
            format!("n = {n} exceeds cap 6"),
        ));
    }
    if family.is_empty() {
        return Err(Error::invalid("empty forbidden family"));
    }
    let m = n * n.saturating_sub(1) / 2;
    let all_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut best = 0usize;
    for mask in 0u32..(1u32 << m) {
        let cnt = mask.count_ones() as usize;
        if cnt <= best {
            continue;
        }
        let edges = all_edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).unwrap();
        let mut free = true;
        for f in family {
            if naive_contains_subgraph(&g, f).unwrap() {
                free = false;
                break;
            }
        }
        if free {
            best = cnt;
        }
    }
    Ok(best)
}

// ======================================================================
// Labeled-graph enumeration plumbing
// ======================================================================

/// Visits every labeled graph on n vertices as rows of u8 adjacency
/// masks. n ≤ 7 keeps the space at 2^21.
fn for_each_labeled_graph<F: FnMut(&[u8])>(n: usize, mut f: F) {
    assert!(n <= 7);
    let m = n * n.saturating_sub(1) / 2;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut rows = vec![0u8; n];
    for mask in 0u32..(1u32 << m) {
        for r in rows.iter_mut() {
            *r = 0;
        }
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
        f(&rows);
    }
}

fn rows_to_graph(rows: &[u8]) -> Graph {
    let n = rows.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rows[u] >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn has_triangle_rows(rows: &[u8]) -> bool {
    let n = rows.len();
    for u in 0..n {
        for v in u + 1..n {
            if rows[u] >> v & 1 == 1 && rows[u] & rows[v] != 0 {
                return true;
            }
        }
    }
    false
}

fn is_bipartite_rows(rows: &[u8]) -> bool {
    let n = rows.len();
    let mut colour = [u8::MAX; 8];
    for start in 0..n {
        if colour[start] != u8::MAX {
            continue;
        }
        colour[start] = 0;
        let mut stack = [0usize; 8];
        let mut top = 0;
        stack[top] = start;
        top += 1;
        while top > 0 {
            top -= 1;
            let v = stack[top];
            for u in 0..n {
                if rows[v] >> u & 1 == 1 {
                    if colour[u] == u8::MAX {
                        colour[u] = 1 - colour[v];
                        stack[top] = u;
                        top += 1;
                    } else if colour[u] == colour[v] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Deterministic family of structured graphs on n vertices used by the
/// verification suites alongside random sampling.
pub fn structured_corpus(n: usize) -> Vec<Graph> {
    let mut out = vec![Graph::empty(n), complete(n)];
    if n >= 3 {
        out.push(cycle(n).unwrap());
    }
    if n >= 2 {
        out.push(path(n).unwrap());
        out.push(complete_multipartite(&[1, n - 1]).unwrap());
    }
    for r in 2..=4usize.min(n) {
        out.push(complete_multipartite(&turan_parts(n, r)).unwrap());
    }
    if n >= 2 && n % 2 == 0 {
        // complete graph minus a perfect matching
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1));
        out.push(Graph::from_edges(n, edges).unwrap());
    }
    if n % 5 == 0 && n > 0 {
        // C_5 blow-up with parts of size n/5
        let s = n / 5;
        let edges = (0..5usize).flat_map(move |i| {
            let j = (i + 1) % 5;
            (0..s).flat_map(move |a| (0..s).map(move |b| (i * s + a, j * s + b)))
        });
        out.push(Graph::from_edges(n, edges).unwrap());
    }
    if n == 10 {
        out.push(crate::graph6::parse_graph6("IheA@GUAo").unwrap());
    }
    out
}

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect::<Vec<_>>();
    Graph::from_edges(n, edges).unwrap()
}

/// Random spanning supergraphs of a balanced r-partite graph: dense
/// enough to pass minimum-degree hypotheses without being complete.
fn random_near_multipartite(rng: &mut StdRng, n: usize, r: usize, p_extra: f64) -> Graph {
    let parts = turan_parts(n, r);
    let mut part_of = Vec::with_capacity(n);
    for (i, &s) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(s));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] || rng.gen_bool(p_extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

// ======================================================================
// Verification suites
// ======================================================================

const EXHAUSTIVE_N_CAP: usize = 7;
const SAMPLED_N_CAP: usize = 16;
const AES_SEED: u64 = 0xAE5_0001;
const ZAR_SEED: u64 = 0x2A12_0001;
const KST_SEED: u64 = 0x5C57_0001;
const SAMPLES_PER_SUITE: usize = 400;

/// min degree strictly above (1 - 3/(3r-1)) n, in exact integers:
/// delta * (3r-1) > (3r-4) * n.
fn aes_hypothesis_degree(delta: usize, n: usize, r: usize) -> bool {
    delta * (3 * r - 1) > (3 * r - 4) * n
}

/// min degree strictly above (1 - 1/r) n: delta * r > (r-1) * n.
fn zar_hypothesis_degree(delta: usize, n: usize, r: usize) -> bool {
    delta * r > (r - 1) * n
}

/// Stability at desk scale: every K_{r+1}-free graph with minimum degree
/// strictly above (1−3/(3r−1))·n is r-colourable.
///
/// r = 2 with n ≤ 7 runs over every labeled graph; larger n (≤ 16) and
/// r = 3 run seed-pinned random sampling plus the structured corpus.
/// Degree thresholds compare exactly in integers, so boundary graphs
/// like C_5 (δ = 2n/5) are correctly outside the hypothesis.
///
/// # Errors
///
/// r outside {2, 3}, or n beyond the sampling cap.
pub fn verify_aes_small(n: usize, r: usize) -> Result<OracleReport> {
    if !(r == 2 || r == 3) {
        return Err(Error::capacity(
            "verify_aes_small",
            format!("r = {r}; suites cover r in {{2, 3}}"),
        ));
    }
    if n > SAMPLED_N_CAP {
        return Err(Error::capacity(
            "verify_aes_small",
            format!("n = {n} beyond cap {SAMPLED_N_CAP}"),
        ));
    }
    let start = Instant::now();
    let mut checked = 0u64;
    let mut bad = Vec::new();
    if r == 2 && n <= EXHAUSTIVE_N_CAP {
        for_each_labeled_graph(n, |rows| {
            checked += 1;
            let delta = rows.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0);
            if !aes_hypothesis_degree(delta, n, 2) {
                return;
            }
            if has_triangle_rows(rows) {
                return;
            }
            if !is_bipartite_rows(rows) {
                bad.push(serialize_graph6(&rows_to_graph(rows)));
            }
        });
        return Ok(OracleReport {
            suite: "aes".into(),
            params: format!("n={n} r=2 mode=exhaustive"),
            instances_checked: checked,
            counterexamples: bad,
            elapsed: start.elapsed(),
        });
    }
    let mut rng = StdRng::seed_from_u64(AES_SEED ^ ((n as u64) << 8) ^ r as u64);
    let mut corpus = structured_corpus(n);
    for _ in 0..SAMPLES_PER_SUITE {
        let p = rng.gen_range(0.3..0.95);
        corpus.push(random_graph(&mut rng, n, p));
        let q = rng.gen_range(0.0..0.4);
        corpus.push(random_near_multipartite(&mut rng, n, r, q));
    }
    for g in &corpus {
        checked += 1;
        let delta = if n == 0 { 0 } else { g.min_degree()? };
        if n == 0 || !aes_hypothesis_degree(delta, n, r) {
            continue;
        }
        if naive_count_cliques(g, r + 1)? > 0 {
            continue;
        }
        if !is_k_colourable(g, r) {
            bad.push(serialize_graph6(g));
        }
    }
    Ok(OracleReport {
        suite: "aes".into(),
        params: format!("n={n} r={r} mode=sampled seed={:#x}", AES_SEED),
        instances_checked: checked,
        counterexamples: bad,
        elapsed: start.elapsed(),
    })
}

/// The clique-forcing threshold at desk scale: minimum degree strictly
/// above (1−1/r)·n forces a K_{r+1}; the Turán graph sits exactly at the
/// boundary and stays K_{r+1}-free.
///
/// # Errors
///
/// Same caps as [`verify_aes_small`].
pub fn verify_zarankiewicz_small(n: usize, r: usize) -> Result<OracleReport> {
    if !(r == 2 || r == 3) {
        return Err(Error::capacity(
            "verify_zarankiewicz_small",
            format!("r = {r}; suites cover r in {{2, 3}}"),
        ));
    }
    if n > SAMPLED_N_CAP {
        return Err(Error::capacity(
            "verify_zarankiewicz_small",
            format!("n = {n} beyond cap {SAMPLED_N_CAP}"),
        ));
    }
    let start = Instant::now();
    let mut checked = 0u64;
    let mut bad = Vec::new();
    // boundary witness first: T_r(n) has min degree exactly n - ceil(n/r)
    // and no K_{r+1}
    if n >= r {
        checked += 1;
        let t = complete_multipartite(&turan_parts(n, r))?;
        let delta = t.min_degree()?;
        let boundary_ok = delta == n - n.div_ceil(r)
            && !zar_hypothesis_degree(delta, n, r)
            && naive_count_cliques(&t, r + 1)? == 0;
        if !boundary_ok {
            bad.push(serialize_graph6(&t));
        }
    }
    if r == 2 && n <= EXHAUSTIVE_N_CAP {
        for_each_labeled_graph(n, |rows| {
            checked += 1;
            let delta = rows.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0);
            if !zar_hypothesis_degree(delta, n, 2) {
                return;
            }
            if !has_triangle_rows(rows) {
                bad.push(serialize_graph6(&rows_to_graph(rows)));
            }
        });
        return Ok(OracleReport {
            suite: "zarankiewicz".into(),
            params: format!("n={n} r=2 mode=exhaustive"),
            instances_checked: checked,
            counterexamples: bad,
            elapsed: start.elapsed(),
        });
    }
    let mut rng = StdRng::seed_from_u64(ZAR_SEED ^ ((n as u64) << 8) ^ r as u64);
    let mut corpus = structured_corpus(n);
    for _ in 0..SAMPLES_PER_SUITE {
        let p = rng.gen_range(0.5..0.98);
        corpus.push(random_graph(&mut rng, n, p));
        let q = rng.gen_range(0.0..0.5);
        corpus.push(random_near_multipartite(&mut rng, n, r + 1, q));
    }
    for g in &corpus {
        checked += 1;
        let delta = if n == 0 { 0 } else { g.min_degree()? };
        if n == 0 || !zar_hypothesis_degree(delta, n, r) {
            continue;
        }
        if naive_count_cliques(g, r + 1)? == 0 {
            bad.push(serialize_graph6(g));
        }
    }
    Ok(OracleReport {
        suite: "zarankiewicz".into(),
        params: format!("n={n} r={r} mode=sampled seed={:#x}", ZAR_SEED),
        instances_checked: checked,
        counterexamples: bad,
        elapsed: start.elapsed(),
    })
}

/// Edge-count bound that forces a K_{t,s} at this scale. For (t, s) =
/// (2, 2) the quarter bound n(1+sqrt(4n−3))/4 is sharp enough to bite at
/// desk sizes; other shapes use the general closed form
/// ½((s−1)^{1/t}(n−t+1)n^{1−1/t} + (t−1)n).
pub fn kst_edge_bound(n: usize, t: usize, s: usize) -> f64 {
    let nf = n as f64;
    if t == 2 && s == 2 {
        nf * (1.0 + (4.0 * nf - 3.0).sqrt()) / 4.0
    } else {
        let tf = t as f64;
        let sf = s as f64;
        0.5 * ((sf - 1.0).powf(1.0 / tf) * (nf - tf + 1.0) * nf.powf(1.0 - 1.0 / tf)
            + (tf - 1.0) * nf)
    }
}

/// Bipartite-forcing at desk scale: on the seed-pinned and structured
/// corpus, [`find_kts`] agrees with the naive map-enumeration search, and
/// every graph whose edge count strictly exceeds [`kst_edge_bound`]
/// contains a K_{t,s}.
///
/// # Errors
///
/// n ≤ 14, 1 ≤ t ≤ s, and K_{t,s} small enough for the naive search.
pub fn verify_kst_small(n: usize, t: usize, s: usize) -> Result<OracleReport> {
    if n > 14 {
        return Err(Error::capacity(
            "verify_kst_small",
            format!("n = {n} beyond cap 14"),
        ));
    }
    if t == 0 || t > s {
        return Err(Error::invalid(format!("need 1 <= t <= s, got ({t}, {s})")));
    }
    let start = Instant::now();
    let target = complete_multipartite(&[t, s])?;
    let mut rng = StdRng::seed_from_u64(KST_SEED ^ ((n as u64) << 16) ^ ((t as u64) << 8) ^ s as u64);
    let mut corpus = structured_corpus(n);
    for _ in 0..SAMPLES_PER_SUITE {
        let p = rng.gen_range(0.05..0.95);
        corpus.push(random_graph(&mut rng, n, p));
    }
    let bound = kst_edge_bound(n, t, s);
    let mut checked = 0u64;
    let mut bad = Vec::new();
    for g in &corpus {
        checked += 1;
        let via_kts = find_kts(g, t, s)?.is_some();
        let via_naive = naive_contains_subgraph(g, &target)?;
        let mut offending = via_kts != via_naive;
        if (g.edge_count() as f64) > bound && !via_naive {
            offending = true;
        }
        if offending {
            bad.push(serialize_graph6(g));
        }
    }
    Ok(OracleReport {
        suite: "kst".into(),
        params: format!("n={n} t={t} s={s} mode=sampled seed={:#x}", KST_SEED),
        instances_checked: checked,
        counterexamples: bad,
        elapsed: start.elapsed(),
    })
}

/// Default seed for [`verify_census_crosscheck`].
pub const CENSUS_SEED: u64 = 0xCE15_0001;

/// Census against naive enumeration: `samples` seed-pinned random graphs
/// with n ≤ 12 and k ≤ 5, plus the whole structured corpus at a few
/// sizes, all compared for exact total equality.
pub fn verify_census_crosscheck(samples: usize, seed: u64) -> Result<OracleReport> {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut checked = 0u64;
    let mut bad = Vec::new();
    let mut check = |g: &Graph, k: usize| -> Result<()> {
        checked += 1;
        if clique_census(g, k)?.total != naive_count_cliques(g, k)? {
            bad.push(format!("k={k} {}", serialize_graph6(g)));
        }
        Ok(())
    };
    for _ in 0..samples {
        let n = rng.gen_range(1..=12usize);
        let p = rng.gen_range(0.1..0.9);
        let k = rng.gen_range(2..=5usize);
        let g = random_graph(&mut rng, n, p);
        check(&g, k)?;
    }
    for n in [6, 9, 10, 12] {
        for g in structured_corpus(n) {
            for k in 2..=5 {
                check(&g, k)?;
            }
        }
    }
    Ok(OracleReport {
        suite: "census-crosscheck".into(),
        params: format!("samples={samples} seed={seed:#x}"),
        instances_checked: checked,
        counterexamples: bad,
        elapsed: start.elapsed(),
    })
}

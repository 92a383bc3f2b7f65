//! The stability decomposition pipeline: bounded-degree partitioning,
//! the W/Y/X/Z refinement, greedy clique extension, and the top-level
//! routine that either embeds the target graph or certifies an r-partite
//! approximation with an explicit deletion set.
//!
//! The analytic density thresholds (μn^r copies per vertex, ηn^{r+1}
//! copies globally, εn^{r−1} copies per edge) fall below one count at
//! desk scale, so every bar is clamped from below by a configurable
//! integer floor and each clamp is logged in the result trace.

use std::collections::HashSet;

use num::{BigInt, One, Signed, ToPrimitive, Zero};

use crate::cliques::{
    clique_census, edges_in_many_cliques, erdos_delta, factorial, find_blowup,
    find_subgraph_guided, pow, Embedding, Rational, SearchOutcome,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::target::TargetSpec;

const MBDS_EXACT_CAP: usize = 20;

fn rat(x: usize) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

fn rat_u64(x: u64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Density thresholds for the decomposition, all exact rationals.
///
/// The defaults follow the analysis: μ = ε^r/r!, η = ε^{r+1}/(r+1)!,
/// γ = (1/(4(3r−1)))^r/r!. The floors clamp each count bar from below;
/// `c2` overrides the constant in the many-cliques shortcut trigger
/// (default 1/δ_{r−1,v(H)}(ε), which is astronomically conservative).
#[derive(Clone, Debug)]
pub struct Thresholds {
    pub eps: Rational,
    pub mu: Rational,
    pub eta: Rational,
    pub gamma: Rational,
    pub floors: Floors,
    pub c2: Option<Rational>,
}

/// Integer lower clamps for the count bars.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Floors {
    /// witness bar on the global K_{r+1} count
    pub global: u64,
    /// exceptional-set bar on the per-vertex K_{r+1} count
    pub per_vertex: u64,
    /// shortcut bar on the per-edge K_{r+1} count
    pub per_edge: u64,
}

impl Default for Floors {
    fn default() -> Self {
        Floors { global: 1, per_vertex: 1, per_edge: 1 }
    }
}

impl Thresholds {
    /// Thresholds with the default μ, η, γ for this r and unit floors.
    ///
    /// # Errors
    ///
    /// Requires r ≥ 2 and 0 < ε ≤ 1/(4(3r−1)); the upper bound keeps
    /// every part inside its own W-window during refinement.
    pub fn new(r: usize, eps: Rational) -> Result<Thresholds> {
        if r < 2 {
            return Err(Error::invalid(format!("thresholds need r >= 2, got {r}")));
        }
        let denom = 4 * (3 * r - 1);
        if eps <= Rational::zero() || eps > Rational::new(BigInt::one(), BigInt::from(denom)) {
            return Err(Error::invalid(format!(
                "eps = {eps} outside (0, 1/{denom}]"
            )));
        }
        let mu = pow(&eps, r) / Rational::from_integer(factorial(r));
        let eta = pow(&eps, r + 1) / Rational::from_integer(factorial(r + 1));
        let gamma = pow(&Rational::new(BigInt::one(), BigInt::from(denom)), r)
            / Rational::from_integer(factorial(r));
        Ok(Thresholds { eps, mu, eta, gamma, floors: Floors::default(), c2: None })
    }

    pub fn with_floors(mut self, floors: Floors) -> Thresholds {
        self.floors = floors;
        self
    }

    pub fn validate(&self, r: usize) -> Result<()> {
        if r < 2 {
            return Err(Error::invalid(format!("thresholds need r >= 2, got {r}")));
        }
        let denom = 4 * (3 * r - 1);
        if self.eps <= Rational::zero()
            || self.eps > Rational::new(BigInt::one(), BigInt::from(denom))
        {
            return Err(Error::invalid(format!(
                "eps = {} outside (0, 1/{denom}]",
                self.eps
            )));
        }
        for (name, v) in [("mu", &self.mu), ("eta", &self.eta), ("gamma", &self.gamma)] {
            if !v.is_positive() {
                return Err(Error::invalid(format!("{name} = {v} must be positive")));
            }
        }
        if self.floors.global == 0 || self.floors.per_vertex == 0 || self.floors.per_edge == 0 {
            return Err(Error::invalid("floors must be at least 1".to_string()));
        }
        Ok(())
    }
}

/// The bars actually used on one run, plus a log of every clamp where an
/// integer floor overrode a sub-floor analytic value.
#[derive(Clone, Debug)]
pub struct ThresholdTrace {
    pub eta_bar: Rational,
    pub mu_bar: Rational,
    pub edge_bar: Option<Rational>,
    pub c2_bar: Option<Rational>,
    pub clamps: Vec<String>,
}

fn clamped_bar(analytic: Rational, floor: u64, name: &str, clamps: &mut Vec<String>) -> Rational {
    let f = rat_u64(floor);
    if analytic < f {
        clamps.push(format!("{name}: analytic bar {analytic} below floor {floor}"));
        f
    } else {
        analytic
    }
}

/// A certified near-r-partition: exceptional set `d`, parts `parts`, the
/// refinement diagnostics, and the deletion set whose removal makes the
/// rest properly r-colourable.
#[derive(Clone, Debug)]
pub struct Partition {
    pub d: VertexSet,
    pub parts: Vec<VertexSet>,
    pub w: Vec<VertexSet>,
    pub y: Vec<VertexSet>,
    pub x: VertexSet,
    pub z: VertexSet,
    pub deleted: Vec<(usize, usize)>,
}

/// Witness that the graph carries more K_{r+1} copies than the η bar.
#[derive(Clone, Debug)]
pub struct ManyCliquesWitness {
    pub total: u64,
    pub bar: Rational,
    /// one concrete K_{r+1}, as vertices
    pub sample: Vec<usize>,
}

/// Outcome of the partition lemma: many cliques, or a bounded-degree
/// split.
#[derive(Clone, Debug)]
pub enum CliquePartitionOutcome {
    ManyCliques(ManyCliquesWitness),
    Split { d: VertexSet, parts: Vec<VertexSet> },
}

/// Either an embedding of the target into the host, or a certified
/// partition with a deletion set.
#[derive(Clone, Debug)]
pub enum Resolution {
    Embedding(Embedding),
    Partition(Box<Partition>),
}

#[derive(Clone, Debug)]
pub struct DecompositionResult {
    pub resolution: Resolution,
    pub trace: ThresholdTrace,
}

impl DecompositionResult {
    pub fn mode(&self) -> &'static str {
        match self.resolution {
            Resolution::Embedding(_) => "embedding",
            Resolution::Partition(_) => "partition",
        }
    }

    /// Deleted-edge count in partition mode, 0 in embedding mode.
    pub fn deleted_count(&self) -> usize {
        match &self.resolution {
            Resolution::Embedding(_) => 0,
            Resolution::Partition(p) => p.deleted.len(),
        }
    }
}

/// Selection strategy for [`max_bounded_degree_set`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundedDegreeMode {
    Greedy,
    Exact,
}

/// A vertex set S with Δ(g[S]) ≤ d. Exact mode enumerates all subsets
/// and returns a maximum-cardinality set; greedy mode scans vertices in
/// ascending degree order and keeps every vertex that fits, which is
/// only guaranteed maximal.
///
/// # Errors
///
/// Exact mode is capped at 20 vertices.
pub fn max_bounded_degree_set(g: &Graph, d: usize, mode: BoundedDegreeMode) -> Result<VertexSet> {
    let n = g.n();
    match mode {
        BoundedDegreeMode::Exact => {
            if n > MBDS_EXACT_CAP {
                return Err(Error::capacity(
                    "max_bounded_degree_set",
                    format!("exact mode on {n} vertices, cap is {MBDS_EXACT_CAP}"),
                ));
            }
            let rows: Vec<u32> = (0..n)
                .map(|v| g.neighbours(v).fold(0u32, |acc, u| acc | (1 << u)))
                .collect();
            let mut best_mask = 0u32;
            let mut best_size = 0u32;
            for mask in 0u32..(1u32 << n) {
                if mask.count_ones() <= best_size {
                    continue;
                }
                let mut ok = true;
                let mut rest = mask;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if (rows[v] & mask).count_ones() as usize > d {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    best_mask = mask;
                    best_size = mask.count_ones();
                }
            }
            Ok(VertexSet::from_iter(
                n,
                (0..n).filter(|&v| best_mask >> v & 1 == 1),
            ))
        }
        BoundedDegreeMode::Greedy => {
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&v| (g.degree(v), v));
            let mut set = VertexSet::empty(n);
            let mut internal = vec![0usize; n];
            for v in order {
                let dv = set.degree_into(g, v);
                if dv > d {
                    continue;
                }
                if g.neighbours(v).any(|u| set.contains(u) && internal[u] + 1 > d) {
                    continue;
                }
                for u in g.neighbours(v) {
                    if set.contains(u) {
                        internal[u] += 1;
                    }
                }
                internal[v] = dv;
                set.insert(v);
            }
            Ok(set)
        }
    }
}

/// Greedily extends a clique by one vertex per part, always choosing
/// inside the running common neighbourhood. Returns the product of
/// per-step choice counts (a lower bound on the number of extensions)
/// and the completed clique when every step had at least one choice; a
/// step with zero choices yields `(0, None)`.
///
/// # Panics
///
/// The seed must induce a clique and each part must be disjoint from
/// the seed.
pub fn greedy_clique_extend(
    g: &Graph,
    seed: &VertexSet,
    parts: &[VertexSet],
) -> (u64, Option<VertexSet>) {
    let seed_vs: Vec<usize> = seed.iter().collect();
    for (i, &u) in seed_vs.iter().enumerate() {
        for &v in &seed_vs[i + 1..] {
            assert!(g.has_edge(u, v), "seed is not a clique: {u} and {v} not adjacent");
        }
    }
    let mut common = VertexSet::full(g.n());
    for &u in &seed_vs {
        common.intersect_with(&g.neighbour_set(u));
    }
    let mut count: u64 = 1;
    let mut chosen = seed.clone();
    for part in parts {
        assert!(part.is_disjoint(seed), "part overlaps the seed");
        let mut pool = part.clone();
        pool.intersect_with(&common);
        let choices = pool.len() as u64;
        if choices == 0 {
            return (0, None);
        }
        count = count.saturating_mul(choices);
        let pick = pool.iter().next().expect("pool is nonempty");
        chosen.insert(pick);
        common.intersect_with(&g.neighbour_set(pick));
    }
    (count, Some(chosen))
}

fn min_degree_precondition(g: &Graph, r: usize, eps: &Rational) -> Result<()> {
    let n = g.n();
    let delta = g.min_degree()?;
    // delta > (1 - 3/(3r-1) + 4 eps) n
    let need = (Rational::new(BigInt::from(3 * r - 4), BigInt::from(3 * r - 1))
        + rat(4) * eps)
        * rat(n);
    if rat(delta) > need {
        return Ok(());
    }
    let deficit = need.clone() - rat(delta);
    Err(Error::MinDegree {
        actual: delta,
        required: need.to_string(),
        deficit: deficit.to_string(),
    })
}

fn witness_and_vertex_bars(n: usize, r: usize, th: &Thresholds) -> (Rational, Rational, Vec<String>) {
    let mut clamps = Vec::new();
    let eta_bar = clamped_bar(
        th.eta.clone() * pow(&rat(n), r + 1),
        th.floors.global,
        "eta",
        &mut clamps,
    );
    let mu_bar = clamped_bar(
        th.mu.clone() * pow(&rat(n), r),
        th.floors.per_vertex,
        "mu",
        &mut clamps,
    );
    (eta_bar, mu_bar, clamps)
}

/// One concrete K_{k} in a graph known to contain at least one; simple
/// greedy-with-backtracking, since the caller only needs a sample.
fn some_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn rec(g: &Graph, k: usize, cand: &VertexSet, acc: &mut Vec<usize>) -> bool {
        if acc.len() == k {
            return true;
        }
        for v in cand.iter() {
            let mut next = cand.clone();
            next.intersect_with(&g.neighbour_set(v));
            acc.push(v);
            if rec(g, k, &next, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::with_capacity(k);
    rec(g, k, &VertexSet::full(g.n()), &mut acc).then_some(acc)
}

/// Lemma-style dichotomy: either the graph holds more K_{r+1} copies
/// than the η bar, or it splits into an exceptional set D and r parts
/// with Δ(g[V_i]) ≤ ⌈εn⌉ each.
///
/// The procedure follows the proof: census; D by the per-vertex μ bar;
/// a chain of maximum bounded-degree sets through shrinking common
/// neighbourhoods; absorption of low-attachment leftovers; anything
/// still unplaced joins D (an algorithm cannot run the proof's
/// contradiction step, so |D| is reported rather than bounded).
///
/// # Errors
///
/// Threshold validation and the minimum-degree precondition
/// δ > (1 − 3/(3r−1) + 4ε)n, reported with the exact deficit.
pub fn clique_partition(g: &Graph, r: usize, th: &Thresholds) -> Result<CliquePartitionOutcome> {
    clique_partition_inner(g, r, th, false)
}

fn clique_partition_inner(
    g: &Graph,
    r: usize,
    th: &Thresholds,
    skip_witness: bool,
) -> Result<CliquePartitionOutcome> {
    th.validate(r)?;
    min_degree_precondition(g, r, &th.eps)?;
    let n = g.n();
    let census = clique_census(g, r + 1)?;
    let (eta_bar, mu_bar, _) = witness_and_vertex_bars(n, r, th);
    if !skip_witness && rat_u64(census.total) > eta_bar {
        let sample = some_clique(g, r + 1).expect("positive census must yield a clique");
        return Ok(CliquePartitionOutcome::ManyCliques(ManyCliquesWitness {
            total: census.total,
            bar: eta_bar,
            sample,
        }));
    }
    let mut d = VertexSet::empty(n);
    for v in 0..n {
        if rat_u64(census.per_vertex[v]) > mu_bar {
            d.insert(v);
        }
    }
    let keep = d.complement();
    let induced = g.induced(&keep);
    let gp = induced.graph;
    let old = induced.old_of_new;
    let d_bound = ceil_to_usize(&(th.eps.clone() * rat(n)));

    // chain of bounded-degree sets through shrinking neighbourhoods
    let mut xs: Vec<VertexSet> = Vec::with_capacity(r);
    let mut cur = gp.clone();
    let mut cur_map: Vec<usize> = (0..gp.n()).collect();
    for i in 0..r {
        if cur.n() == 0 {
            xs.push(VertexSet::empty(gp.n()));
            continue;
        }
        let mode = if cur.n() <= MBDS_EXACT_CAP {
            BoundedDegreeMode::Exact
        } else {
            BoundedDegreeMode::Greedy
        };
        let x = max_bounded_degree_set(&cur, d_bound, mode)?;
        xs.push(VertexSet::from_iter(gp.n(), x.iter().map(|v| cur_map[v])));
        if i + 1 == r {
            break;
        }
        // recurse on the neighbourhood of the X-vertex with the most
        // neighbours outside X, keeping the next instance as large as
        // the proof's density argument expects
        let mut v_star = None;
        let mut best = 0usize;
        for v in x.iter() {
            let mut outside = cur.neighbour_set(v);
            outside.subtract(&x);
            if v_star.is_none() || outside.len() > best {
                v_star = Some(v);
                best = outside.len();
            }
        }
        let Some(v_star) = v_star else {
            continue;
        };
        let mut keep = cur.neighbour_set(v_star);
        keep.subtract(&x);
        let ind = cur.induced(&keep);
        cur_map = ind.old_of_new.iter().map(|&o| cur_map[o]).collect();
        cur = ind.graph;
    }
    while xs.len() < r {
        xs.push(VertexSet::empty(gp.n()));
    }

    // absorb leftovers with low attachment to some X_i; the rest join D
    let mut parts_gp = xs.clone();
    let mut placed = VertexSet::empty(gp.n());
    for x in &xs {
        placed.union_with(x);
    }
    let eps_n = th.eps.clone() * rat(n);
    for l in placed.complement().iter() {
        let mut done = false;
        for i in 0..r {
            if rat(xs[i].degree_into(&gp, l)) < eps_n
                && fits_bound(&gp, &parts_gp[i], l, d_bound)
            {
                parts_gp[i].insert(l);
                done = true;
                break;
            }
        }
        if !done {
            d.insert(old[l]);
        }
    }

    let parts: Vec<VertexSet> = parts_gp
        .iter()
        .map(|p| VertexSet::from_iter(n, p.iter().map(|v| old[v]).filter(|&v| !d.contains(v))))
        .collect();
    let mut covered = d.clone();
    for p in &parts {
        debug_assert!(p.is_disjoint(&covered));
        covered.union_with(p);
    }
    assert_eq!(covered.len(), n, "split must cover the vertex set");
    for p in &parts {
        for v in p.iter() {
            assert!(
                p.degree_into(g, v) <= d_bound,
                "part exceeds the degree bound at vertex {v}"
            );
        }
    }
    Ok(CliquePartitionOutcome::Split { d, parts })
}

fn ceil_to_usize(x: &Rational) -> usize {
    x.ceil().to_integer().to_usize().expect("bound fits in usize")
}

fn fits_bound(g: &Graph, set: &VertexSet, v: usize, d: usize) -> bool {
    if set.degree_into(g, v) > d {
        return false;
    }
    g.neighbours(v)
        .filter(|&u| set.contains(u))
        .all(|u| set.degree_into(g, u) + 1 <= d)
}

/// The W/Y/X/Z refinement: windows every vertex by its attachment to
/// each part, reassigns low-attachment exceptional vertices, and picks
/// the cheapest certified deletion set among the analysis rule, the
/// always-valid internal-edge rule, and a local-improvement colouring.
/// The residual's proper r-colourability is certified before returning,
/// never assumed.
///
/// The thresholds parameter keeps the call shape uniform with the rest
/// of the pipeline; the attachment windows themselves depend only on n
/// and r.
pub fn refine_partition(
    g: &Graph,
    raw: (VertexSet, Vec<VertexSet>),
    _th: &Thresholds,
) -> Partition {
    let (d, parts) = raw;
    let n = g.n();
    let r = parts.len();
    let q = Rational::new(BigInt::from(n), BigInt::from(4 * (3 * r - 1)));
    let three_half = Rational::new(BigInt::from(3 * n), BigInt::from(2 * (3 * r - 1)));

    let w: Vec<VertexSet> = (0..r)
        .map(|i| {
            VertexSet::from_iter(n, (0..n).filter(|&v| rat(parts[i].degree_into(g, v)) <= q))
        })
        .collect();
    let y: Vec<VertexSet> = (0..r)
        .map(|i| {
            let hi = rat(parts[i].len()) - three_half.clone();
            VertexSet::from_iter(
                n,
                d.iter().filter(|&v| {
                    let a = rat(parts[i].degree_into(g, v));
                    a > q && a < hi
                }),
            )
        })
        .collect();
    let mut x = d.clone();
    for s in w.iter().chain(y.iter()) {
        x.subtract(s);
    }
    let mut z = x.clone();
    for s in &y {
        z.union_with(s);
    }

    // exceptional vertices inside some W-window join the part they are
    // least attached to
    let mut parts2 = parts.clone();
    for v in d.iter() {
        if z.contains(v) {
            continue;
        }
        let best = (0..r)
            .filter(|&i| w[i].contains(v))
            .min_by_key(|&i| (parts[i].degree_into(g, v), i))
            .expect("a D-vertex outside Z lies in some W window");
        parts2[best].insert(v);
    }

    let part_of = |v: usize| -> Option<usize> { (0..r).find(|&i| parts2[i].contains(v)) };

    // candidate 1, the analysis rule: edges inside a W window plus
    // everything touching Z
    let mut del_a: Vec<(usize, usize)> = Vec::new();
    for (u, v) in g.edges() {
        if z.contains(u) || z.contains(v) || (0..r).any(|i| w[i].contains(u) && w[i].contains(v)) {
            del_a.push((u, v));
        }
    }
    let colouring_a: Vec<usize> = (0..n).map(|v| part_of(v).unwrap_or(0)).collect();

    // candidate 2, always sufficient: every internal part edge plus
    // everything touching Z
    let del_b: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| {
            z.contains(u)
                || z.contains(v)
                || matches!((part_of(u), part_of(v)), (Some(a), Some(b)) if a == b)
        })
        .collect();

    // candidate 3: seed a colouring from the refined parts, place Z
    // vertices where they are least attached, then hill-climb vertex
    // moves until monochrome incidence stops dropping
    let mut colouring_c: Vec<usize> = (0..n)
        .map(|v| {
            part_of(v).unwrap_or_else(|| {
                (0..r)
                    .min_by_key(|&i| (parts2[i].degree_into(g, v), i))
                    .unwrap_or(0)
            })
        })
        .collect();
    loop {
        let mut improved = false;
        for v in 0..n {
            let mut counts = vec![0usize; r];
            for u in g.neighbours(v) {
                counts[colouring_c[u]] += 1;
            }
            let best = (0..r).min_by_key(|&i| (counts[i], i)).expect("r >= 1");
            if counts[best] < counts[colouring_c[v]] {
                colouring_c[v] = best;
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    let del_c: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| colouring_c[u] == colouring_c[v])
        .collect();

    let mut candidates: Vec<Vec<(usize, usize)>> = Vec::new();
    if certifies(g, &del_a, &colouring_a) {
        candidates.push(del_a);
    }
    debug_assert!(certifies(g, &del_b, &colouring_a));
    candidates.push(del_b);
    debug_assert!(certifies(g, &del_c, &colouring_c));
    candidates.push(del_c);
    let mut deleted = candidates
        .into_iter()
        .min_by_key(|d| d.len())
        .expect("at least the internal-edge rule is present");
    deleted.sort_unstable();
    deleted.dedup();

    Partition { d: z.clone(), parts: parts2, w, y, x, z, deleted }
}

/// Does removing `deleted` leave every remaining edge properly coloured?
fn certifies(g: &Graph, deleted: &[(usize, usize)], colouring: &[usize]) -> bool {
    let gone: HashSet<(usize, usize)> = deleted.iter().copied().collect();
    g.edges()
        .all(|(u, v)| gone.contains(&(u, v)) || colouring[u] != colouring[v])
}

/// Searches the host for the target graph, preferring the blow-up
/// search when the target is complete multipartite (seeding an exact
/// equivalence in the uniform case) and otherwise running the ordered
/// subgraph search with hosts sorted by clique-census attribution.
fn search_target(g: &Graph, target: &TargetSpec) -> Result<Option<Embedding>> {
    let h = &target.h;
    if h.n() > g.n() {
        return Ok(None);
    }
    if let Some(classes) = multipartite_classes(h) {
        let k = classes.len();
        let smax = classes.iter().map(Vec::len).max().unwrap_or(0);
        let uniform = classes.iter().all(|c| c.len() == smax);
        match find_blowup(g, k, smax, None)? {
            SearchOutcome::Found(e) => {
                let mut map = vec![usize::MAX; h.n()];
                for (ci, class) in classes.iter().enumerate() {
                    for (pos, &hv) in class.iter().enumerate() {
                        map[hv] = e.map[ci * smax + pos];
                    }
                }
                let emb = Embedding { map };
                assert!(emb.validates(g, h), "blow-up hit must carry the target");
                return Ok(Some(emb));
            }
            SearchOutcome::Absent if uniform => return Ok(None),
            _ => {}
        }
    }
    let census = clique_census(g, target.chi.min(g.n()))?;
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(census.per_vertex[v]), v));
    match find_subgraph_guided(g, h, Some(&order), None)? {
        SearchOutcome::Found(e) => {
            assert!(e.validates(g, h));
            Ok(Some(e))
        }
        SearchOutcome::Absent => Ok(None),
        SearchOutcome::Indeterminate => unreachable!("unbudgeted search cannot be cut short"),
    }
}

/// Colour classes of a complete multipartite graph (components of the
/// complement, each verified independent); `None` when the graph is not
/// complete multipartite.
fn multipartite_classes(h: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = h.n();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        class_of[start] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for u in 0..n {
                if u != v && !h.has_edge(u, v) && class_of[u] == usize::MAX {
                    class_of[u] = id;
                    stack.push(u);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    for class in &classes {
        for (i, &u) in class.iter().enumerate() {
            for &v in &class[i + 1..] {
                if h.has_edge(u, v) {
                    return None;
                }
            }
        }
    }
    Some(classes)
}

/// The top-level dichotomy: either an embedding of the target into `g`,
/// or a certified partition with a deletion set. Embeddings are
/// validated and partitions certified on every return path.
///
/// # Errors
///
/// Requires χ(target) ≥ 3 (so r ≥ 2), valid thresholds, and the
/// minimum-degree precondition.
pub fn stability_decompose(
    g: &Graph,
    target: &TargetSpec,
    th: &Thresholds,
) -> Result<DecompositionResult> {
    let r = target.r();
    if r < 2 {
        return Err(Error::invalid(format!(
            "target has chromatic number {}, need at least 3",
            target.chi
        )));
    }
    th.validate(r)?;
    let n = g.n();
    let (eta_bar, mu_bar, mut clamps) = witness_and_vertex_bars(n, r, th);
    let mut trace = ThresholdTrace {
        eta_bar,
        mu_bar,
        edge_bar: None,
        c2_bar: None,
        clamps: Vec::new(),
    };

    let outcome = clique_partition_inner(g, r, th, false)?;
    let (d, parts) = match outcome {
        CliquePartitionOutcome::ManyCliques(_) => {
            if let Some(emb) = search_target(g, target)? {
                trace.clamps = clamps;
                return Ok(DecompositionResult {
                    resolution: Resolution::Embedding(emb),
                    trace,
                });
            }
            // the dichotomy's clique-rich side does not carry the target
            // here; run the partition machinery with the witness gate
            // lifted
            match clique_partition_inner(g, r, th, true)? {
                CliquePartitionOutcome::Split { d, parts } => (d, parts),
                CliquePartitionOutcome::ManyCliques(_) => unreachable!("witness gate lifted"),
            }
        }
        CliquePartitionOutcome::Split { d, parts } => (d, parts),
    };

    // shortcut: when enough edges sit on many cliques, the target's own
    // extremal bound says one of them must carry it
    let edge_bar = clamped_bar(
        th.eps.clone() * pow(&rat(n), r - 1),
        th.floors.per_edge,
        "edge",
        &mut clamps,
    );
    let edge_floor = edge_bar
        .floor()
        .to_integer()
        .to_u64()
        .unwrap_or(u64::MAX)
        .saturating_add(1);
    let many = edges_in_many_cliques(g, r + 1, edge_floor)?;
    let biex_hi = crate::extremal::biex_bounds(n, target).upper;
    let c2 = match &th.c2 {
        Some(c) => c.clone(),
        None => {
            let delta = erdos_delta(r - 1, target.h.n(), &th.eps)?;
            delta.recip()
        }
    };
    let c2_bar = c2 * rat(biex_hi);
    trace.edge_bar = Some(edge_bar);
    trace.c2_bar = Some(c2_bar.clone());
    if rat(many.len()) > c2_bar {
        if let Some(emb) = search_target(g, target)? {
            trace.clamps = clamps;
            return Ok(DecompositionResult {
                resolution: Resolution::Embedding(emb),
                trace,
            });
        }
    }

    let partition = refine_partition(g, (d, parts), th);
    let gone: HashSet<(usize, usize)> = partition.deleted.iter().copied().collect();
    debug_assert!(
        residual_is_r_partite(g, &gone, r),
        "partition must leave an r-colourable residual"
    );
    trace.clamps = clamps;
    Ok(DecompositionResult {
        resolution: Resolution::Partition(Box::new(partition)),
        trace,
    })
}

fn residual_is_r_partite(g: &Graph, gone: &HashSet<(usize, usize)>, r: usize) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().filter(|e| !gone.contains(e)).collect();
    let residual = Graph::from_edges(g.n(), edges).expect("residual edges are valid");
    crate::chromatic::is_k_colourable(&residual, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::big_rational;
    use crate::extremal::{aes_extremal, lower_bound_graph, turan_graph};
    use crate::graph::{complete, complete_multipartite, cycle, Graph};
    use crate::oracle::min_deletion_to_r_partite;
    use crate::target::{analyze_target, preset_target};

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    #[test]
    fn threshold_defaults_and_validation() {
        let th = Thresholds::new(2, big_rational(1, 25)).unwrap();
        assert_eq!(th.mu, big_rational(1, 1250));
        assert_eq!(th.eta, big_rational(1, 93750));
        assert_eq!(th.gamma, big_rational(1, 800));
        assert!(th.validate(2).is_ok());
        // eps must stay within (0, 1/(4(3r-1))]
        assert!(Thresholds::new(2, big_rational(1, 20)).is_ok());
        assert!(Thresholds::new(2, big_rational(1, 19)).is_err());
        assert!(Thresholds::new(2, big_rational(0, 1)).is_err());
        assert!(Thresholds::new(2, big_rational(-1, 30)).is_err());
        assert!(Thresholds::new(1, big_rational(1, 100)).is_err());
        let bad = Thresholds::new(2, big_rational(1, 25))
            .unwrap()
            .with_floors(Floors { global: 0, per_vertex: 1, per_edge: 1 });
        assert!(bad.validate(2).is_err());
    }

    #[test]
    fn bounded_degree_set_knowns() {
        let c5 = cycle(5).unwrap();
        let s = max_bounded_degree_set(&c5, 0, BoundedDegreeMode::Exact).unwrap();
        assert_eq!(s.len(), 2);
        let k4 = complete(4);
        let s = max_bounded_degree_set(&k4, 1, BoundedDegreeMode::Exact).unwrap();
        assert_eq!(s.len(), 2);
        let s = max_bounded_degree_set(&petersen(), 0, BoundedDegreeMode::Exact).unwrap();
        assert_eq!(s.len(), 4);
        assert!(max_bounded_degree_set(&Graph::empty(21), 0, BoundedDegreeMode::Exact).is_err());
    }

    #[test]
    fn bounded_degree_set_properties() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0xDEC_0001);
        for _ in 0..30 {
            let n = rng.gen_range(4..=12usize);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let d = rng.gen_range(0..3usize);
            let greedy = max_bounded_degree_set(&g, d, BoundedDegreeMode::Greedy).unwrap();
            let exact = max_bounded_degree_set(&g, d, BoundedDegreeMode::Exact).unwrap();
            for set in [&greedy, &exact] {
                for v in set.iter() {
                    assert!(set.degree_into(&g, v) <= d);
                }
            }
            assert!(exact.len() >= greedy.len());
            // greedy is maximal: no vertex outside can join
            for v in greedy.complement().iter() {
                assert!(!fits_bound(&g, &greedy, v, d), "greedy set missed vertex {v}");
            }
        }
    }

    #[test]
    fn clique_extension_examples() {
        let k5 = complete(5);
        let seed = VertexSet::from_iter(5, [0]);
        let parts = [VertexSet::from_iter(5, [1, 2]), VertexSet::from_iter(5, [3, 4])];
        let (count, witness) = greedy_clique_extend(&k5, &seed, &parts);
        assert_eq!(count, 4);
        let w = witness.unwrap();
        assert_eq!(w.len(), 3);
        let vs: Vec<usize> = w.iter().collect();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                assert!(k5.has_edge(a, b));
            }
        }

        let c5 = cycle(5).unwrap();
        let seed = VertexSet::from_iter(5, [0, 1]);
        let rest = VertexSet::from_iter(5, [2, 3, 4]);
        assert_eq!(greedy_clique_extend(&c5, &seed, &[rest]), (0, None));

        let k333 = complete_multipartite(&[3, 3, 3]).unwrap();
        let seed = VertexSet::from_iter(9, [0]);
        let parts = [
            VertexSet::from_iter(9, 3..6),
            VertexSet::from_iter(9, 6..9),
        ];
        let (count, witness) = greedy_clique_extend(&k333, &seed, &parts);
        assert_eq!(count, 9);
        assert!(witness.is_some());
    }

    #[test]
    fn partition_of_turan_is_clean() {
        let th = Thresholds::new(2, big_rational(1, 100)).unwrap();
        let g = turan_graph(10, 2).unwrap();
        match clique_partition(&g, 2, &th).unwrap() {
            CliquePartitionOutcome::Split { d, parts } => {
                assert!(d.is_empty());
                let sizes: Vec<usize> = parts.iter().map(VertexSet::len).collect();
                assert_eq!(sizes, vec![5, 5]);
            }
            CliquePartitionOutcome::ManyCliques(_) => panic!("K_{{5,5}} is triangle-free"),
        }
    }

    #[test]
    fn partition_witness_on_k6() {
        let th = Thresholds::new(2, big_rational(1, 25)).unwrap();
        match clique_partition(&complete(6), 2, &th).unwrap() {
            CliquePartitionOutcome::ManyCliques(w) => {
                assert_eq!(w.total, 20);
                assert_eq!(w.sample.len(), 3);
            }
            CliquePartitionOutcome::Split { .. } => panic!("K_6 has 20 triangles"),
        }
    }

    #[test]
    fn partition_rejects_low_degree() {
        let th = Thresholds::new(2, big_rational(1, 100)).unwrap();
        // C_5 has minimum degree exactly (1 - 3/5)n, not strictly above
        let err = clique_partition(&cycle(5).unwrap(), 2, &th).unwrap_err();
        match err {
            Error::MinDegree { actual, deficit, .. } => {
                assert_eq!(actual, 2);
                assert!(!deficit.is_empty());
            }
            other => panic!("expected a min-degree error, got {other}"),
        }
        // so does the pentagon extremal graph at r = 3
        let th3 = Thresholds::new(3, big_rational(1, 100)).unwrap();
        assert!(clique_partition(&aes_extremal(8, 3).unwrap(), 3, &th3).is_err());
    }

    #[test]
    fn refine_on_clean_bipartition_deletes_nothing() {
        let g = turan_graph(10, 2).unwrap();
        let th = Thresholds::new(2, big_rational(1, 100)).unwrap();
        let raw = match clique_partition(&g, 2, &th).unwrap() {
            CliquePartitionOutcome::Split { d, parts } => (d, parts),
            _ => unreachable!(),
        };
        let p = refine_partition(&g, raw, &th);
        assert!(p.deleted.is_empty());
        assert!(p.z.is_empty());
    }

    #[test]
    fn refine_finds_the_single_planted_edge() {
        let mut g = turan_graph(10, 2).unwrap();
        g.add_edge(0, 1);
        let th = Thresholds::new(2, big_rational(1, 100)).unwrap();
        // the planted edge puts five triangles on the books, so the
        // witness gate must be lifted to reach the split
        let raw = match clique_partition_inner(&g, 2, &th, true).unwrap() {
            CliquePartitionOutcome::Split { d, parts } => (d, parts),
            _ => unreachable!(),
        };
        let p = refine_partition(&g, raw, &th);
        assert_eq!(p.deleted, vec![(0, 1)]);
        assert_eq!(min_deletion_to_r_partite(&g, 2).unwrap(), 1);
    }

    #[test]
    fn decompose_planted_edge_instance() {
        let mut g = turan_graph(10, 2).unwrap();
        g.add_edge(0, 1);
        let target = analyze_target(&preset_target("K222").unwrap()).unwrap();
        let th = Thresholds::new(2, big_rational(1, 100)).unwrap();
        let res = stability_decompose(&g, &target, &th).unwrap();
        assert_eq!(res.mode(), "partition");
        assert_eq!(res.deleted_count(), 1);
        assert!(!res.trace.clamps.is_empty(), "desk-scale bars must be clamped");
    }

    #[test]
    fn decompose_flagship_pentagon_interior() {
        let target = analyze_target(&preset_target("K222").unwrap()).unwrap();
        let (g, planted) = lower_bound_graph(10, 2, &target).unwrap();
        assert_eq!(planted, 5);
        let th = Thresholds::new(2, big_rational(1, 100))
            .unwrap()
            .with_floors(Floors { global: 1, per_vertex: 11, per_edge: 1 });
        let res = stability_decompose(&g, &target, &th).unwrap();
        assert_eq!(res.mode(), "partition");
        assert_eq!(res.deleted_count(), 5);
        let Resolution::Partition(p) = &res.resolution else { panic!() };
        let gone: HashSet<(usize, usize)> = p.deleted.iter().copied().collect();
        assert!(residual_is_r_partite(&g, &gone, 2));
        assert_eq!(min_deletion_to_r_partite(&g, 2).unwrap(), 5);
    }

    #[test]
    fn decompose_bipartite_host_with_triangle_target() {
        let g = turan_graph(10, 2).unwrap();
        let target = analyze_target(&complete(3)).unwrap();
        let th = Thresholds::new(2, big_rational(1, 100)).unwrap();
        let res = stability_decompose(&g, &target, &th).unwrap();
        assert_eq!(res.mode(), "partition");
        assert_eq!(res.deleted_count(), 0);
    }

    #[test]
    fn decompose_finds_planted_clique() {
        let mut g = turan_graph(12, 3).unwrap();
        g.add_edge(0, 1);
        g.add_edge(4, 5);
        g.add_edge(8, 9);
        let target = analyze_target(&complete(4)).unwrap();
        let th = Thresholds::new(3, big_rational(1, 144)).unwrap();
        let res = stability_decompose(&g, &target, &th).unwrap();
        assert_eq!(res.mode(), "embedding");
        let Resolution::Embedding(e) = &res.resolution else { panic!() };
        assert!(e.validates(&g, &target.h));
    }

    #[test]
    fn decompose_rejects_bipartite_targets() {
        let g = complete(6);
        let target = analyze_target(&complete_multipartite(&[2, 2]).unwrap()).unwrap();
        let th = Thresholds::new(2, big_rational(1, 100)).unwrap();
        assert!(stability_decompose(&g, &target, &th).is_err());
    }

    #[test]
    fn witness_monotone_in_eps() {
        // raising eps raises the eta bar, so the witness can only
        // disappear, never appear
        let th_lo = Thresholds::new(2, big_rational(1, 200)).unwrap();
        let th_hi = Thresholds::new(2, big_rational(1, 50)).unwrap();
        let mut k55e = turan_graph(10, 2).unwrap();
        k55e.add_edge(0, 1);
        for g in [complete(6), turan_graph(10, 2).unwrap(), k55e] {
            let lo = clique_partition(&g, 2, &th_lo);
            let hi = clique_partition(&g, 2, &th_hi);
            if let (Ok(lo), Ok(hi)) = (lo, hi) {
                if matches!(hi, CliquePartitionOutcome::ManyCliques(_)) {
                    assert!(
                        matches!(lo, CliquePartitionOutcome::ManyCliques(_)),
                        "witness appearing as eps grows breaks monotonicity"
                    );
                }
            }
        }
    }

    #[test]
    fn partition_invariants_on_corpus() {
        let target = analyze_target(&preset_target("K222").unwrap()).unwrap();
        let th = Thresholds::new(2, big_rational(1, 100)).unwrap();
        let mut k55e = turan_graph(10, 2).unwrap();
        k55e.add_edge(2, 3);
        let flagship = lower_bound_graph(10, 2, &target).unwrap().0;
        for g in [turan_graph(10, 2).unwrap(), k55e, flagship] {
            let res = stability_decompose(&g, &target, &th).unwrap();
            let Resolution::Partition(p) = &res.resolution else {
                panic!("corpus graphs are all K222-free")
            };
            // coverage
            let mut covered = p.d.clone();
            for part in &p.parts {
                assert!(part.is_disjoint(&covered));
                covered.union_with(part);
            }
            assert_eq!(covered.len(), g.n());
            assert!(p.z.is_subset_of(&p.d));
            // the deletion set really is a solution, so the oracle
            // optimum can never exceed it
            let gone: HashSet<(usize, usize)> = p.deleted.iter().copied().collect();
            assert!(residual_is_r_partite(&g, &gone, 2));
            let opt = min_deletion_to_r_partite(&g, 2).unwrap();
            assert!(opt <= p.deleted.len());
        }
    }

    #[test]
    fn clique_sample_is_a_clique() {
        let w = match clique_partition(
            &complete(7),
            2,
            &Thresholds::new(2, big_rational(1, 25)).unwrap(),
        )
        .unwrap()
        {
            CliquePartitionOutcome::ManyCliques(w) => w,
            _ => panic!(),
        };
        for (i, &a) in w.sample.iter().enumerate() {
            for &b in &w.sample[i + 1..] {
                assert!(complete(7).has_edge(a, b));
            }
        }
    }
}

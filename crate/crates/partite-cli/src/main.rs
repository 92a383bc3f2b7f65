//! The `partite` binary.
//!
//! Five subcommands: `generate` builds named extremal constructions and
//! writes them as graph6 with a provenance header, `decompose` runs the
//! stability pipeline on an input graph, `census` counts cliques,
//! `verify` runs the brute-force suites, and `experiment` sweeps
//! constructions over n and emits one CSV row per instance.
//!
//! Exit codes: 0 success/verified, 1 counterexample or failed
//! construction, 2 input error, 3 capacity error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num::BigInt;

use partite::cliques::Rational;
use partite::extremal::{
    aes_extremal, biex_bounds, lower_bound_graph, modified_extremal, turan_graph, ExtremalParams,
};
use partite::graph6::{parse_auto, parse_graph6, serialize_graph6};
use partite::oracle::{
    min_deletion_to_r_partite, verify_aes_small, verify_census_crosscheck, verify_kst_small,
    verify_zarankiewicz_small, OracleReport, CENSUS_SEED,
};
use partite::{
    analyze_target, cliques::clique_census, preset_target, stability_decompose, Error, Floors,
    Graph, Resolution, TargetSpec, Thresholds,
};

const CSV_HEADER: &str = "n,r,construction,mode,deleted,biex_lo,biex_hi,oracle_opt,elapsed_ms,seed";
const ORACLE_HEADER: &str = "suite,params,instances_checked,counterexamples,elapsed_ms,verified";
const DEFAULT_SEED: u64 = 0x9A17E;

#[derive(Parser)]
#[command(
    name = "partite",
    version,
    about = "Extremal constructions, clique censuses, and near-r-partite stability decompositions"
)]
struct Cli {
    /// Worker threads; falls back to PARTITE_THREADS, then all cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a construction and write graph6 plus a provenance header
    Generate(GenerateArgs),
    /// Run the stability decomposition on an input graph
    Decompose(DecomposeArgs),
    /// Count K_k copies in an input graph
    Census(CensusArgs),
    /// Run a verification suite against brute force
    Verify(VerifyArgs),
    /// Sweep a construction over n and emit experiment CSV rows
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// turan | aes-extremal | lower-bound | modified-extremal
    construction: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Smaller side of the forbidden K_{t,s} (modified-extremal).
    #[arg(long, default_value_t = 2)]
    t: usize,
    /// Larger side of the forbidden K_{t,s} (modified-extremal).
    #[arg(long, default_value_t = 2)]
    s: usize,
    /// Gadget density coefficient, e.g. 1/16 (modified-extremal).
    #[arg(long, default_value = "1/16", value_parser = parse_rational)]
    c: Rational,
    /// Target graph: preset (K3, K4, K222, C5) or graph6 (lower-bound).
    #[arg(long, default_value = "K222")]
    target: String,
    #[arg(long)]
    seed: Option<u64>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Input graph file, graph6 or edge list; # lines are skipped.
    #[arg(long)]
    input: PathBuf,
    /// Target graph: preset name or graph6 literal.
    #[arg(long)]
    target: String,
    /// Slack parameter as a fraction, e.g. 1/100; must lie in
    /// (0, 1/(4(3r-1))]. Default: a tenth of that cap.
    #[arg(long, value_parser = parse_rational)]
    eps: Option<Rational>,
    /// Count floors: global,per_vertex,per_edge.
    #[arg(long, value_parser = parse_floors, default_value = "1,1,1")]
    floors: Floors,
    /// CSV output file; a .detail.txt sibling receives the embedding
    /// map or deleted-edge list. Stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    input: PathBuf,
    /// Clique order to count.
    #[arg(long)]
    k: usize,
    /// Also list edges lying on at least this many K_k copies.
    #[arg(long)]
    floor: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// aes | zarankiewicz | kst | census-crosscheck
    suite: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long, default_value_t = 2)]
    t: usize,
    #[arg(long, default_value_t = 2)]
    s: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Random sample count (census-crosscheck).
    #[arg(long, default_value_t = 500)]
    samples: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// turan | aes-extremal | lower-bound | modified-extremal
    #[arg(long)]
    construction: String,
    #[arg(long, default_value = "K222")]
    target: String,
    /// Sweep sizes, comma separated: --n 8,10,12
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long, default_value_t = 2)]
    t: usize,
    #[arg(long, default_value_t = 2)]
    s: usize,
    #[arg(long, default_value = "1/16", value_parser = parse_rational)]
    c: Rational,
    #[arg(long, value_parser = parse_rational)]
    eps: Option<Rational>,
    #[arg(long, value_parser = parse_floors, default_value = "1,1,1")]
    floors: Floors,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv, or svg to also write a deleted-vs-n scatter (requires --out).
    #[arg(long, default_value = "csv")]
    format: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads(cli.threads);
    let outcome = match cli.command {
        Command::Generate(a) => cmd_generate(&a),
        Command::Decompose(a) => cmd_decompose(&a),
        Command::Census(a) => cmd_census(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Experiment(a) => cmd_experiment(&a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Capacity { .. } => 3,
        Error::Construction(_) => 1,
        _ => 2,
    }
}

fn configure_threads(requested: Option<usize>) {
    #[cfg(feature = "parallel")]
    {
        let t = requested.or_else(|| {
            std::env::var("PARTITE_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        });
        if let Some(t) = t.filter(|&t| t > 0) {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global();
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = requested;
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let bad = |m: &str| format!("{m} in {s:?}; expected a fraction like 1/100");
    if let Some((a, b)) = s.split_once('/') {
        let num: i64 = a.trim().parse().map_err(|_| bad("bad numerator"))?;
        let den: i64 = b.trim().parse().map_err(|_| bad("bad denominator"))?;
        if den == 0 {
            return Err(bad("zero denominator"));
        }
        return Ok(Rational::new(BigInt::from(num), BigInt::from(den)));
    }
    if let Some((w, f)) = s.split_once('.') {
        if f.is_empty() || f.len() > 12 || !f.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad("bad decimal"));
        }
        let whole: i64 = if w.is_empty() {
            0
        } else {
            w.parse().map_err(|_| bad("bad decimal"))?
        };
        let frac: i64 = f.parse().map_err(|_| bad("bad decimal"))?;
        let scale = 10i64.pow(f.len() as u32);
        let num = whole
            .checked_mul(scale)
            .and_then(|x| x.checked_add(if whole < 0 { -frac } else { frac }))
            .ok_or_else(|| bad("decimal out of range"))?;
        return Ok(Rational::new(BigInt::from(num), BigInt::from(scale)));
    }
    let v: i64 = s.parse().map_err(|_| bad("bad number"))?;
    Ok(Rational::from_integer(BigInt::from(v)))
}

fn parse_floors(s: &str) -> Result<Floors, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!(
            "expected global,per_vertex,per_edge, got {s:?}"
        ));
    }
    let nums: Vec<u64> = parts
        .iter()
        .map(|p| p.parse().map_err(|_| format!("bad floor {p:?}")))
        .collect::<Result<_, _>>()?;
    Ok(Floors {
        global: nums[0],
        per_vertex: nums[1],
        per_edge: nums[2],
    })
}

fn resolve_target(spec: &str) -> Result<TargetSpec, Error> {
    let h = match preset_target(spec) {
        Some(h) => h,
        None => parse_graph6(spec)
            .map_err(|_| Error::invalid(format!("target {spec:?} is neither a preset nor graph6")))?,
    };
    analyze_target(&h)
}

/// Default slack: a tenth of the upper cap 1/(4(3r-1)), so the
/// minimum-degree precondition stays close to the bare (3r-4)/(3r-1)
/// threshold.
fn default_eps(r: usize) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(40 * (3 * r - 1)))
}

fn thresholds_for(r: usize, eps: &Option<Rational>, floors: Floors) -> Result<Thresholds, Error> {
    let eps = eps.clone().unwrap_or_else(|| default_eps(r));
    Ok(Thresholds::new(r, eps)?.with_floors(floors))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => fs::write(p, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Error> {
    let text = fs::read_to_string(path)?;
    parse_auto(&text)
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

// ======================================================================
// generate
// ======================================================================

struct Generated {
    graph: Graph,
    provenance: Vec<String>,
}

fn build_construction(
    construction: &str,
    n: usize,
    r: usize,
    t: usize,
    s: usize,
    c: &Rational,
    target_spec: &str,
    seed: Option<u64>,
) -> Result<Generated, Error> {
    match construction {
        "turan" => Ok(Generated {
            graph: turan_graph(n, r)?,
            provenance: vec![format!("# construction=turan n={n} r={r}")],
        }),
        "aes-extremal" => Ok(Generated {
            graph: aes_extremal(n, r)?,
            provenance: vec![format!("# construction=aes-extremal n={n} r={r}")],
        }),
        "lower-bound" => {
            let target = resolve_target(target_spec)?;
            let (graph, planted) = lower_bound_graph(n, r, &target)?;
            Ok(Generated {
                graph,
                provenance: vec![format!(
                    "# construction=lower-bound n={n} r={r} target={target_spec} interior_edges={planted}"
                )],
            })
        }
        "modified-extremal" => {
            let params = ExtremalParams {
                n,
                r,
                t,
                s,
                c: c.clone(),
            };
            let seed = seed.unwrap_or(DEFAULT_SEED);
            let (graph, min_deg) = modified_extremal(&params, seed)?;
            Ok(Generated {
                graph,
                provenance: vec![format!(
                    "# construction=modified-extremal n={n} r={r} t={t} s={s} c={c} seed={seed} min_degree={min_deg}"
                )],
            })
        }
        other => Err(Error::invalid(format!(
            "unknown construction {other:?}; expected turan, aes-extremal, lower-bound, or modified-extremal"
        ))),
    }
}

fn cmd_generate(a: &GenerateArgs) -> Result<ExitCode, Error> {
    let gen = build_construction(
        &a.construction,
        a.n,
        a.r,
        a.t,
        a.s,
        &a.c,
        &a.target,
        a.seed,
    )?;
    let mut text = String::new();
    for line in &gen.provenance {
        let _ = writeln!(text, "{line}");
    }
    let _ = writeln!(text, "{}", serialize_graph6(&gen.graph));
    emit(&a.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

// ======================================================================
// decompose
// ======================================================================

fn cmd_decompose(a: &DecomposeArgs) -> Result<ExitCode, Error> {
    let g = read_graph(&a.input)?;
    let target = resolve_target(&a.target)?;
    let r = target.r();
    let th = thresholds_for(r, &a.eps, a.floors)?;
    let start = Instant::now();
    let res = stability_decompose(&g, &target, &th)?;
    let elapsed_ms = start.elapsed().as_millis();

    let n = g.n();
    let bounds = biex_bounds(n, &target);
    let construction = a
        .input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "input".to_string());
    let oracle_opt = match &res.resolution {
        Resolution::Partition(_) => min_deletion_to_r_partite(&g, r)
            .map(|v| v.to_string())
            .unwrap_or_default(),
        Resolution::Embedding(_) => String::new(),
    };
    let row = format!(
        "{n},{r},{},{},{},{},{},{oracle_opt},{elapsed_ms},",
        csv_escape(&construction),
        res.mode(),
        res.deleted_count(),
        bounds.lower,
        bounds.upper,
    );

    let mut detail = String::new();
    match &res.resolution {
        Resolution::Embedding(e) => {
            for (hv, gv) in e.map.iter().enumerate() {
                let _ = writeln!(detail, "{hv} -> {gv}");
            }
        }
        Resolution::Partition(p) => {
            for (u, v) in &p.deleted {
                let _ = writeln!(detail, "{u} {v}");
            }
        }
    }

    let mut text = String::new();
    let _ = writeln!(
        text,
        "# decompose input={} target={} eps={} floors={},{},{}",
        a.input.display(),
        a.target,
        th.eps,
        th.floors.global,
        th.floors.per_vertex,
        th.floors.per_edge
    );
    for clamp in &res.trace.clamps {
        let _ = writeln!(text, "# clamp: {clamp}");
    }
    let _ = writeln!(text, "{CSV_HEADER}");
    let _ = writeln!(text, "{row}");
    match &a.out {
        Some(p) => {
            fs::write(p, &text)?;
            let detail_path = p.with_extension("detail.txt");
            fs::write(detail_path, &detail)?;
        }
        None => {
            print!("{text}");
            let label = match &res.resolution {
                Resolution::Embedding(_) => "embedding map",
                Resolution::Partition(_) => "deleted edges",
            };
            println!("# {label}:");
            for line in detail.lines() {
                println!("# {line}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ======================================================================
// census
// ======================================================================

fn cmd_census(a: &CensusArgs) -> Result<ExitCode, Error> {
    let g = read_graph(&a.input)?;
    let census = clique_census(&g, a.k)?;
    let mut text = String::new();
    let _ = writeln!(text, "# census input={} n={} k={}", a.input.display(), g.n(), a.k);
    let _ = writeln!(text, "total={}", census.total);
    let argmax = (0..g.n()).max_by_key(|&v| census.per_vertex[v]);
    if let Some(v) = argmax {
        let _ = writeln!(text, "per_vertex_max={} at={v}", census.per_vertex[v]);
    }
    if let Some(floor) = a.floor {
        let hot: Vec<String> = census
            .edge_counts()
            .filter(|&(_, c)| c >= floor)
            .map(|((u, v), c)| format!("{u}-{v}:{c}"))
            .collect();
        let _ = writeln!(text, "edges_at_floor_{floor}={}", hot.join(" "));
    }
    emit(&a.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

// ======================================================================
// verify
// ======================================================================

fn cmd_verify(a: &VerifyArgs) -> Result<ExitCode, Error> {
    let need_n = || {
        a.n.ok_or_else(|| Error::invalid(format!("suite {:?} needs --n", a.suite)))
    };
    let report: OracleReport = match a.suite.as_str() {
        "aes" => verify_aes_small(need_n()?, a.r)?,
        "zarankiewicz" => verify_zarankiewicz_small(need_n()?, a.r)?,
        "kst" => verify_kst_small(need_n()?, a.t, a.s)?,
        "census-crosscheck" => {
            verify_census_crosscheck(a.samples, a.seed.unwrap_or(CENSUS_SEED))?
        }
        other => {
            return Err(Error::invalid(format!(
                "unknown suite {other:?}; expected aes, zarankiewicz, kst, or census-crosscheck"
            )))
        }
    };
    let mut text = String::new();
    let _ = writeln!(text, "{ORACLE_HEADER}");
    let _ = writeln!(text, "{}", report.to_csv_row());
    emit(&a.out, &text)?;
    if report.verified() {
        Ok(ExitCode::SUCCESS)
    } else {
        for g6 in &report.counterexamples {
            eprintln!("counterexample: {g6}");
        }
        Ok(ExitCode::from(1))
    }
}

// ======================================================================
// experiment
// ======================================================================

struct ExperimentRow {
    n: usize,
    r: usize,
    construction: String,
    mode: String,
    deleted: Option<usize>,
    biex_lo: Option<usize>,
    biex_hi: Option<usize>,
    oracle_opt: Option<usize>,
    elapsed_ms: u128,
    seed: u64,
}

impl ExperimentRow {
    fn to_csv(&self) -> String {
        let opt = |v: &Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.r,
            csv_escape(&self.construction),
            self.mode,
            opt(&self.deleted),
            opt(&self.biex_lo),
            opt(&self.biex_hi),
            opt(&self.oracle_opt),
            self.elapsed_ms,
            self.seed
        )
    }
}

fn experiment_row(a: &ExperimentArgs, target: &TargetSpec, n: usize) -> ExperimentRow {
    let start = Instant::now();
    let mut row = ExperimentRow {
        n,
        r: a.r,
        construction: a.construction.clone(),
        mode: String::new(),
        deleted: None,
        biex_lo: None,
        biex_hi: None,
        oracle_opt: None,
        elapsed_ms: 0,
        seed: a.seed,
    };
    let built = build_construction(
        &a.construction,
        n,
        a.r,
        a.t,
        a.s,
        &a.c,
        &a.target,
        Some(a.seed),
    );
    let g = match built {
        Ok(gen) => gen.graph,
        Err(e) => {
            row.mode = format!("error: {e}").replace(',', ";");
            row.elapsed_ms = start.elapsed().as_millis();
            return row;
        }
    };
    let bounds = biex_bounds(n, target);
    row.biex_lo = Some(bounds.lower);
    row.biex_hi = Some(bounds.upper);
    let run = thresholds_for(a.r, &a.eps, a.floors)
        .and_then(|th| stability_decompose(&g, target, &th));
    match run {
        Ok(res) => {
            row.mode = res.mode().to_string();
            row.deleted = Some(res.deleted_count());
            if matches!(res.resolution, Resolution::Partition(_)) {
                row.oracle_opt = min_deletion_to_r_partite(&g, a.r).ok();
            }
        }
        Err(e) => {
            row.mode = format!("error: {e}").replace(',', ";");
        }
    }
    row.elapsed_ms = start.elapsed().as_millis();
    row
}

fn experiment_rows(a: &ExperimentArgs, target: &TargetSpec) -> Vec<ExperimentRow> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        a.n.par_iter().map(|&n| experiment_row(a, target, n)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        a.n.iter().map(|&n| experiment_row(a, target, n)).collect()
    }
}

fn cmd_experiment(a: &ExperimentArgs) -> Result<ExitCode, Error> {
    match a.format.as_str() {
        "csv" => {}
        "svg" => {
            if a.out.is_none() {
                return Err(Error::invalid("--format svg requires --out"));
            }
        }
        other => {
            return Err(Error::invalid(format!(
                "unknown format {other:?}; expected csv or svg"
            )))
        }
    }
    if a.r != resolve_target(&a.target)?.r() {
        return Err(Error::invalid(format!(
            "--r {} does not match the target's chromatic number minus one",
            a.r
        )));
    }
    let target = resolve_target(&a.target)?;
    let total = Instant::now();
    let rows = experiment_rows(a, &target);

    // max suboptimality ratio over rows where the oracle ran; exact
    // agreement at zero counts as ratio one
    let mut max_ratio: Option<f64> = None;
    for row in &rows {
        if let (Some(d), Some(o)) = (row.deleted, row.oracle_opt) {
            let ratio = if o == 0 {
                if d == 0 {
                    1.0
                } else {
                    continue;
                }
            } else {
                d as f64 / o as f64
            };
            max_ratio = Some(max_ratio.map_or(ratio, |m: f64| m.max(ratio)));
        }
    }

    let mut text = String::new();
    let _ = writeln!(
        text,
        "# experiment construction={} target={} r={} seed={} ns={}",
        a.construction,
        a.target,
        a.r,
        a.seed,
        a.n.iter().map(|n| n.to_string()).collect::<Vec<_>>().join("+")
    );
    let _ = writeln!(text, "{CSV_HEADER}");
    for row in &rows {
        let _ = writeln!(text, "{}", row.to_csv());
    }
    let ratio_field = max_ratio.map(|r| format!("{r:.3}")).unwrap_or_default();
    let _ = writeln!(
        text,
        ",,summary,,,,,{ratio_field},{},",
        total.elapsed().as_millis()
    );
    emit(&a.out, &text)?;

    if a.format == "svg" {
        let svg_path = a.out.as_ref().expect("checked above").with_extension("svg");
        fs::write(&svg_path, scatter_svg(&rows))?;
    }
    Ok(ExitCode::SUCCESS)
}

/// Static scatter of deleted edges against n, with the biex upper bound
/// drawn as a reference polyline.
fn scatter_svg(rows: &[ExperimentRow]) -> String {
    const W: f64 = 640.0;
    const H: f64 = 420.0;
    const PAD: f64 = 48.0;
    let points: Vec<(usize, usize, usize)> = rows
        .iter()
        .filter_map(|r| Some((r.n, r.deleted?, r.biex_hi?)))
        .collect();
    let (x_max, y_max) = points.iter().fold((1usize, 1usize), |(xm, ym), &(n, d, b)| {
        (xm.max(n), ym.max(d).max(b))
    });
    let sx = |n: usize| PAD + (n as f64 / x_max as f64) * (W - 2.0 * PAD);
    let sy = |v: usize| H - PAD - (v as f64 / y_max as f64) * (H - 2.0 * PAD);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {W} {H}\" font-family=\"sans-serif\" font-size=\"12\">"
    );
    let _ = writeln!(s, "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>");
    let _ = writeln!(
        s,
        "<line x1=\"{PAD}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>",
        H - PAD,
        W - PAD,
        H - PAD
    );
    let _ = writeln!(
        s,
        "<line x1=\"{PAD}\" y1=\"{PAD}\" x2=\"{PAD}\" y2=\"{}\" stroke=\"black\"/>",
        H - PAD
    );
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">n</text>",
        W / 2.0,
        H - 12.0
    );
    let _ = writeln!(
        s,
        "<text x=\"14\" y=\"{}\" transform=\"rotate(-90 14 {})\" text-anchor=\"middle\">edges</text>",
        H / 2.0,
        H / 2.0
    );
    if points.len() > 1 {
        let mut curve: Vec<(usize, usize)> = points.iter().map(|&(n, _, b)| (n, b)).collect();
        curve.sort_unstable();
        curve.dedup();
        let path: Vec<String> = curve
            .iter()
            .map(|&(n, b)| format!("{:.1},{:.1}", sx(n), sy(b)))
            .collect();
        let _ = writeln!(
            s,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"steelblue\" stroke-dasharray=\"4 3\"/>",
            path.join(" ")
        );
    }
    for &(n, d, _) in &points {
        let _ = writeln!(
            s,
            "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"4\" fill=\"firebrick\"/>",
            sx(n),
            sy(d)
        );
        let _ = writeln!(
            s,
            "<text x=\"{:.1}\" y=\"{:.1}\">{}</text>",
            sx(n) + 6.0,
            sy(d) - 6.0,
            d
        );
    }
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" fill=\"steelblue\">biex upper bound</text>",
        W - PAD - 140.0,
        PAD
    );
    let _ = writeln!(s, "</svg>");
    s
}

//! `sepcut`: build the graph families, run the exact checks, print JSON lines.
//!
//! Exit codes: 0 pass, 1 refutation found, 2 usage or input error, 3 budget exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use sepcut::io::{encode_graph6, read_bipartite, read_graph, write_graph};
use sepcut::records::{self, parse_rational, rational, CertificateRecord, Sidecar};
use sepcut::IoError;
use sepcut_core::bihole::{max_bihole_with, verify_no_bihole_with};
use sepcut_core::cuts::{
    chen_yu_classes, examine_candidate, extremal_check, find_cut_with, hunt_candidates, CutProperty, CutSearch,
    EdgeBound, HuntMode, CHEN_YU_LIMIT,
};
use sepcut_core::generators::{
    chained_clique, clique_join, random_bipartite_restricted, verify_claim2, ChainedCliqueInstance,
};
use sepcut_core::params::{derive_parameters, derive_parameters_for_k, Truth};
use sepcut_core::separators::{min_separator, verify_claim1_with, verify_clique_in_separators, SepInvariant};
use sepcut_core::{BipartiteGraph, Budget, Graph, Rational};

const PASS: u8 = 0;
const REFUTED: u8 = 1;
const USAGE: u8 = 2;
const BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "sepcut", version, about = "Separator and cut verification for sparse graph families")]
struct Cli {
    /// Branch-and-bound node limit for each exact solve.
    #[arg(long, global = true, env = "SEPCUT_NODE_BUDGET")]
    node_budget: Option<u64>,
    /// Limit on minimal separators enumerated per graph.
    #[arg(long, global = true, env = "SEPCUT_SEPARATOR_BUDGET")]
    separator_budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph family and write it with a JSON provenance sidecar.
    #[command(subcommand)]
    Construct(Family),
    /// Run one of the exact claim checks.
    #[command(subcommand)]
    Verify(Check),
    /// Stable cuts in every connected graph with fewer than 2n-3 edges.
    ScanChenyu {
        #[arg(long, default_value_t = CHEN_YU_LIMIT)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Search for graphs below the edge bound without a cut of chromatic number < k.
    Hunt(HuntArgs),
    /// Largest bi-hole of a bipartite graph.
    Bihole(BiholeArgs),
    /// Parameter chain for a given epsilon.
    Params {
        #[arg(long, value_parser = parse_rational)]
        epsilon: Rational,
        /// Use this k instead of the minimal one.
        #[arg(short)]
        k: Option<u64>,
    },
    /// Least chi, omega or degeneracy over all separators.
    Sepmin {
        #[arg(long, default_value = "chi")]
        invariant: SepInvariant,
        graph: PathBuf,
    },
    /// First minimal separator whose induced subgraph has a property.
    Cut {
        /// stable, bipartite, forest, chi_lt(k) or degenerate_le(d)
        #[arg(long)]
        property: CutProperty,
        graph: PathBuf,
    },
}

#[derive(Subcommand)]
enum Family {
    /// K_k joined to an independent set of n-k vertices.
    CliqueJoin {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// beta cliques of size alpha chained by copies of h.
    Chained {
        #[command(flatten)]
        instance: ChainedArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// G(2n, 2n, delta/4n) restricted to n low-degree left vertices and n right vertices.
    RandomBipartite {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
struct ChainedArgs {
    #[arg(long)]
    alpha: usize,
    #[arg(long)]
    beta: usize,
    /// alpha x alpha bipartite graph stored on 2 alpha vertices, left part first.
    #[arg(long, conflicts_with_all = ["delta", "seed"])]
    h: Option<PathBuf>,
    /// Without --h, sample h as a random bipartite graph with left degrees <= delta.
    #[arg(long, requires = "seed")]
    delta: Option<usize>,
    #[arg(long, requires = "delta")]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Check {
    /// Every minimal separator of a chained instance has chi >= alpha - max_bihole(h).
    Claim1(ChainedArgs),
    /// Exact edge count and average degree <= alpha - 1 + 2 Delta_h.
    Claim2(ChainedArgs),
    /// Every separator has chromatic number at least k (defaults to clique_join(k, n)).
    Fig1 {
        #[arg(short)]
        k: usize,
        #[arg(short, required_unless_present = "graph")]
        n: Option<usize>,
        #[arg(conflicts_with = "n")]
        graph: Option<PathBuf>,
    },
    /// Every separator contains a clique of the target size.
    Thm16 {
        #[arg(long)]
        target: usize,
        graph: PathBuf,
    },
}

#[derive(Args)]
struct HuntArgs {
    #[arg(short)]
    k: usize,
    /// Bound the average degree below 2 ell instead of |E| < k n - k(k+1)/2.
    #[arg(long, value_parser = parse_rational)]
    ell: Option<Rational>,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    /// Sample G(n, m) graphs instead of enumerating every class.
    #[arg(long, requires = "seed")]
    random: bool,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Skip this many candidates (each output line carries its candidate index).
    #[arg(long, default_value_t = 0)]
    resume_after: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct BiholeArgs {
    /// Bipartite graph stored on left + right vertices, left part first.
    #[arg(required_unless_present = "n")]
    graph: Option<PathBuf>,
    #[arg(long, requires = "graph")]
    left: Option<usize>,
    /// Sample with the random bipartite generator instead of reading a file.
    #[arg(short, conflicts_with = "graph", requires_all = ["delta", "seed"])]
    n: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Also report whether the largest bi-hole is below this bound.
    #[arg(long, value_parser = parse_rational)]
    threshold: Option<Rational>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget::new(
        cli.node_budget.unwrap_or(Budget::DEFAULT.search_nodes),
        cli.separator_budget.unwrap_or(Budget::DEFAULT.separators),
    );
    match run(cli.command, &budget) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let code = if is_budget(&e) { BUDGET } else { USAGE };
            emit(&json!({ "error": format!("{e:#}"), "exit_code": code, "budget": records::budget(&budget) }));
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}

fn is_budget(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<sepcut_core::Error>().is_some_and(sepcut_core::Error::is_budget)
            || matches!(c.downcast_ref::<IoError>(), Some(IoError::Graph(g)) if g.is_budget())
    })
}

fn emit(v: &Value) {
    println!("{v}");
}

fn verdict(passed: bool) -> u8 {
    if passed {
        PASS
    } else {
        REFUTED
    }
}

fn run(command: Command, budget: &Budget) -> anyhow::Result<u8> {
    match command {
        Command::Construct(family) => construct(family),
        Command::Verify(check) => verify(check, budget),
        Command::ScanChenyu { n_max, jobs } => scan_chenyu(n_max, jobs, budget),
        Command::Hunt(args) => hunt(args, budget),
        Command::Bihole(args) => bihole(args, budget),
        Command::Params { epsilon, k } => params(epsilon, k),
        Command::Sepmin { invariant, graph } => sepmin(invariant, &graph, budget),
        Command::Cut { property, graph } => cut(property, &graph, budget),
    }
}

fn finish_construct(g: &Graph, sidecar: Sidecar, out: Option<&Path>) -> anyhow::Result<u8> {
    let mut line = serde_json::to_value(&sidecar)?;
    if let Some(out) = out {
        write_graph(out, g)?;
        let mut side = out.as_os_str().to_owned();
        side.push(".json");
        std::fs::write(&side, serde_json::to_string_pretty(&sidecar)? + "\n")
            .with_context(|| format!("writing {}", Path::new(&side).display()))?;
        line["out"] = json!(out);
    }
    emit(&line);
    Ok(PASS)
}

fn load_h(args: &ChainedArgs) -> anyhow::Result<(BipartiteGraph, Value)> {
    match (&args.h, args.delta, args.seed) {
        (Some(path), _, _) => {
            let h = read_bipartite(path, args.alpha)?;
            Ok((h, json!({ "h": path })))
        }
        (None, Some(delta), Some(seed)) => {
            let r = random_bipartite_restricted(args.alpha, delta, seed)?;
            Ok((r.graph, json!({ "h": "random-bipartite", "delta": delta, "seed": seed, "attempts": r.attempts })))
        }
        _ => bail!("chained instances need --h FILE or both --delta and --seed"),
    }
}

fn chained_instance(args: &ChainedArgs) -> anyhow::Result<(ChainedCliqueInstance, Value)> {
    let (h, source) = load_h(args)?;
    let inst = chained_clique(args.alpha, args.beta, &h)?;
    let mut params = json!({ "alpha": args.alpha, "beta": args.beta, "h_edges": h.edge_count() });
    params["h_source"] = source;
    Ok((inst, params))
}

fn construct(family: Family) -> anyhow::Result<u8> {
    match family {
        Family::CliqueJoin { k, n, out } => {
            let g = clique_join(k, n)?;
            let sidecar = Sidecar::new("clique-join", json!({ "k": k, "n": n }), None, &g);
            finish_construct(&g, sidecar, out.as_deref())
        }
        Family::Chained { instance, out } => {
            let (inst, params) = chained_instance(&instance)?;
            let sidecar = Sidecar::new("chained", params, instance.seed, &inst.graph);
            finish_construct(&inst.graph, sidecar, out.as_deref())
        }
        Family::RandomBipartite { n, delta, seed, out } => {
            let r = random_bipartite_restricted(n, delta, seed)?;
            let params = json!({
                "n": n,
                "delta": delta,
                "attempts": r.attempts,
                "selected_left": r.selected_left,
                "max_left_degree": r.graph.max_left_degree(),
                "layout": "left part 0..n, right part n..2n",
            });
            let g = r.graph.to_graph();
            let sidecar = Sidecar::new("random-bipartite", params, Some(seed), &g);
            finish_construct(&g, sidecar, out.as_deref())
        }
    }
}

fn verify(check: Check, budget: &Budget) -> anyhow::Result<u8> {
    let budget_json = records::budget(budget);
    match check {
        Check::Claim1(args) => {
            let (inst, params) = chained_instance(&args)?;
            let r = verify_claim1_with(&inst, budget)?;
            let failures: Vec<Value> = r
                .entries
                .iter()
                .filter(|e| !e.passed)
                .map(|e| json!({ "x": records::set(&e.x), "pair": e.pair, "chi": e.chi_x }))
                .collect();
            emit(&json!({
                "subcommand": "verify", "check": "claim1", "params": params, "seed": args.seed,
                "graph6": encode_graph6(&inst.graph), "max_bihole": r.max_bihole, "bound": r.bound,
                "minimal_separators": r.entries.len(), "min_chi": r.min_chi, "failures": failures,
                "passed": r.passed, "budget": budget_json,
            }));
            Ok(verdict(r.passed))
        }
        Check::Claim2(args) => {
            let (inst, params) = chained_instance(&args)?;
            let r = verify_claim2(&inst)?;
            let structure = inst.check_structure();
            let passed = r.passed && structure.is_ok();
            emit(&json!({
                "subcommand": "verify", "check": "claim2", "params": params, "seed": args.seed,
                "edges": r.edges, "expected_edges": r.expected_edges, "edge_bound": r.edge_bound,
                "average_degree": rational(r.average_degree), "degree_bound": rational(r.degree_bound),
                "max_left_degree": r.max_left_degree, "structure": structure.err().unwrap_or("ok"),
                "passed": passed, "budget": budget_json,
            }));
            Ok(verdict(passed))
        }
        Check::Fig1 { k, n, graph } => {
            let (g, source) = match (graph, n) {
                (Some(path), _) => (read_graph(&path)?, json!({ "graph": path })),
                (None, Some(n)) => (clique_join(k, n)?, json!({ "family": "clique-join", "n": n })),
                (None, None) => bail!("fig1 needs a graph file or -n"),
            };
            let found = min_separator(&g, SepInvariant::Chi, budget)?;
            let min_chi = found.as_ref().map(|m| m.value);
            let passed = min_chi.is_none_or(|c| c >= k as isize);
            emit(&json!({
                "subcommand": "verify", "check": "fig1", "params": { "k": k, "source": source },
                "graph6": encode_graph6(&g), "min_chi": min_chi,
                "witness": found.as_ref().map(|m| records::report(&m.report)),
                "minimal_separators": found.as_ref().map_or(0, |m| m.separators),
                "passed": passed, "budget": budget_json,
            }));
            Ok(verdict(passed))
        }
        Check::Thm16 { target, graph } => {
            let g = read_graph(&graph)?;
            let r = verify_clique_in_separators(&g, target, budget)?;
            emit(&json!({
                "subcommand": "verify", "check": "thm16", "params": { "target": target, "graph": graph },
                "graph6": encode_graph6(&g), "min_omega": r.min_omega,
                "witness": r.witness.as_ref().map(records::report),
                "passed": r.passed, "budget": budget_json,
            }));
            Ok(verdict(r.passed))
        }
    }
}

fn pool(jobs: usize) -> anyhow::Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build()?)
}

fn scan_chenyu(n_max: usize, jobs: usize, budget: &Budget) -> anyhow::Result<u8> {
    if n_max > CHEN_YU_LIMIT {
        bail!("--n-max is limited to {CHEN_YU_LIMIT}");
    }
    let pool = pool(jobs)?;
    let (mut classes, mut violators) = (0, 0);
    for n in 2..=n_max {
        let graphs = chen_yu_classes(n)?;
        let verdicts: Vec<sepcut_core::Result<CutSearch>> =
            pool.install(|| graphs.par_iter().map(|g| find_cut_with(g, CutProperty::Stable, budget)).collect());
        let mut level_violators = 0;
        for (g, v) in graphs.iter().zip(verdicts) {
            if let CutSearch::NoneExhaustive { separators_examined } = v? {
                level_violators += 1;
                let cert = CertificateRecord::no_cut(g, "stable".into(), separators_examined, "enumerate");
                emit(&serde_json::to_value(cert)?);
            }
        }
        emit(&json!({
            "subcommand": "scan-chenyu", "n": n, "max_edges": (2 * n).saturating_sub(4),
            "classes": graphs.len(), "violators": level_violators,
        }));
        classes += graphs.len();
        violators += level_violators;
    }
    let mut extremal_ok = true;
    for n in 4..=n_max {
        let e = extremal_check(n, budget)?;
        extremal_ok &= !e.admits_stable_cut && e.edges == 2 * n - 3;
        emit(&json!({
            "subcommand": "scan-chenyu", "extremal": "clique-join", "k": 2, "n": n, "edges": e.edges,
            "admits_stable_cut": e.admits_stable_cut,
        }));
    }
    let passed = violators == 0 && extremal_ok;
    emit(&json!({
        "subcommand": "scan-chenyu", "params": { "n_max": n_max, "jobs": jobs }, "classes": classes,
        "violators": violators, "extremal_ok": extremal_ok, "passed": passed, "budget": records::budget(budget),
    }));
    Ok(verdict(passed))
}

fn hunt(args: HuntArgs, budget: &Budget) -> anyhow::Result<u8> {
    let bound = args.ell.map_or(EdgeBound::CliqueJoin, EdgeBound::AverageDegree);
    let (mode, mode_name) = match (args.random, args.seed) {
        (true, Some(seed)) => (HuntMode::Random { seed, samples: args.samples }, "random"),
        _ => (HuntMode::Enumerate, "enumerate"),
    };
    let seed = args.seed.filter(|_| args.random);
    let property = CutProperty::ChiLessThan(args.k).to_string();
    let pool = pool(args.jobs)?;
    let mut candidates = Vec::new();
    for n in args.n_min..=args.n_max {
        candidates.extend(hunt_candidates(args.k, bound, n, mode)?);
    }
    let total = candidates.len();
    let skipped = args.resume_after.min(total);
    let results: Vec<sepcut_core::Result<_>> =
        pool.install(|| candidates[skipped..].par_iter().map(|g| examine_candidate(g, args.k, budget)).collect());
    let (mut found, mut unknown) = (0, 0);
    for (i, (g, result)) in candidates[skipped..].iter().zip(results).enumerate() {
        let record = match result {
            Ok(None) => continue,
            Ok(Some(cert)) => {
                found += 1;
                CertificateRecord::counterexample(&cert, mode_name, seed)
            }
            Err(e) if e.is_budget() => {
                unknown += 1;
                CertificateRecord::unknown(g, property.clone(), &e.to_string(), mode_name, seed)
            }
            Err(e) => return Err(e.into()),
        };
        let mut line = json!({ "index": skipped + i });
        line.as_object_mut().unwrap().extend(serde_json::to_value(record)?.as_object().unwrap().clone());
        emit(&line);
    }
    emit(&json!({
        "subcommand": "hunt",
        "params": {
            "k": args.k, "ell": args.ell.map(rational), "n_min": args.n_min, "n_max": args.n_max,
            "mode": mode_name, "samples": args.random.then_some(args.samples), "resume_after": args.resume_after,
            "jobs": args.jobs,
        },
        "seed": seed, "candidates": total, "skipped": skipped, "counterexamples": found, "unknown": unknown,
        "budget": records::budget(budget),
    }));
    Ok(if found > 0 {
        REFUTED
    } else if unknown > 0 {
        BUDGET
    } else {
        PASS
    })
}

fn bihole(args: BiholeArgs, budget: &Budget) -> anyhow::Result<u8> {
    let (h, source) = match (&args.graph, args.n) {
        (Some(path), _) => {
            let g = read_graph(path)?;
            let left = args.left.unwrap_or(g.order() / 2);
            (BipartiteGraph::from_graph(&g, left)?, json!({ "graph": path, "left": left }))
        }
        (None, Some(n)) => {
            let (delta, seed) = (args.delta.unwrap_or_default(), args.seed.unwrap_or_default());
            let r = random_bipartite_restricted(n, delta, seed)?;
            (r.graph, json!({ "family": "random-bipartite", "n": n, "delta": delta, "seed": seed }))
        }
        (None, None) => bail!("bihole needs a graph file or -n/--delta/--seed"),
    };
    let (size, hole) = max_bihole_with(&h, budget)?;
    let below = args.threshold.map(|t| verify_no_bihole_with(&h, t, budget)).transpose()?;
    emit(&json!({
        "subcommand": "bihole", "params": source, "seed": args.seed,
        "left": h.left_size(), "right": h.right_size(), "edges": h.edge_count(),
        "max_left_degree": h.max_left_degree(), "max_bihole": size,
        "witness": { "left": records::set(&hole.left), "right": records::set(&hole.right) },
        "threshold": args.threshold.map(rational), "below_threshold": below,
        "budget": records::budget(budget),
    }));
    Ok(PASS)
}

fn params(epsilon: Rational, k: Option<u64>) -> anyhow::Result<u8> {
    let p = match k {
        Some(k) => derive_parameters_for_k(epsilon, k)?,
        None => derive_parameters(epsilon)?,
    };
    let checks: Vec<Value> = p
        .checks()
        .iter()
        .map(|c| {
            let truth = match c.truth {
                Truth::True => "true",
                Truth::False => "false",
                Truth::Unknown => "unknown",
            };
            json!({ "inequality": c.name, "holds": truth })
        })
        .collect();
    emit(&json!({
        "subcommand": "params",
        "epsilon": rational(p.epsilon), "eta": rational(p.eta), "delta": p.delta, "k_min": p.k_min,
        "k": p.k, "alpha": p.alpha, "ell": rational(p.ell), "checks": checks, "valid": p.is_valid(),
    }));
    Ok(verdict(p.is_valid()))
}

fn sepmin(invariant: SepInvariant, path: &Path, budget: &Budget) -> anyhow::Result<u8> {
    let g = read_graph(path)?;
    let found = min_separator(&g, invariant, budget)?;
    emit(&json!({
        "subcommand": "sepmin", "params": { "invariant": invariant.name(), "graph": path },
        "graph6": encode_graph6(&g), "value": found.as_ref().map(|m| m.value),
        "separator": found.as_ref().map(|m| records::report(&m.report)),
        "minimal_separators": found.as_ref().map_or(0, |m| m.separators),
        "budget": records::budget(budget),
    }));
    Ok(PASS)
}

fn cut(property: CutProperty, path: &Path, budget: &Budget) -> anyhow::Result<u8> {
    let g = read_graph(path)?;
    let result = match find_cut_with(&g, property, budget)? {
        CutSearch::Found(r) => json!({ "verdict": "found", "cut": records::report(&r) }),
        CutSearch::NoneExhaustive { separators_examined } => {
            json!({ "verdict": "none_exhaustive", "minimal_separators_examined": separators_examined })
        }
    };
    let mut line = json!({
        "subcommand": "cut", "params": { "property": property.to_string(), "graph": path },
        "graph6": encode_graph6(&g), "budget": records::budget(budget),
    });
    line.as_object_mut().unwrap().extend(result.as_object().unwrap().clone());
    emit(&line);
    Ok(PASS)
}

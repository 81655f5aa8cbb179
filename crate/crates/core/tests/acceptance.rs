//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p sepcut-core --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sepcut_core::bihole::{max_bihole, max_bihole_bruteforce, verify_no_bihole};
use sepcut_core::cuts::scan_chen_yu;
use sepcut_core::generators::{
    chained_clique, clique_join, clique_join_edge_count, enumerate_connected_graphs, random_bipartite,
    random_bipartite_restricted, random_graph_nm, verify_claim2,
};
use sepcut_core::params::{delta_condition, derive_parameters, k_condition_linear, k_condition_log, Truth};
use sepcut_core::separators::{
    min_separator, min_separator_chromatic, minimal_separators, sep_min_bruteforce, verify_claim1, SepInvariant,
};
use sepcut_core::{BipartiteGraph, Budget, Graph, Rational, VertexSet};

/// Allowed relative deviation of the empirical mean degree in criterion 10.
const MEAN_DEGREE_TOLERANCE: f64 = 0.15;
/// Connected graphs on `n` vertices with at most `2n - 4` edges, up to
/// isomorphism, summed from the published table of connected graphs by order
/// and size (OEIS A054924).
const CONNECTED_BELOW_2N_3: [usize; 9] = [0, 0, 0, 1, 4, 13, 60, 350, 2817];
/// Random `h` per `(alpha, beta)` shape in criteria 4 and 5.
const H_PER_SHAPE: u64 = 50;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let held: bool = $cond;
        if !held {
            return Err(format!($($fmt)+));
        }
    };
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("clique-join edge count and average degree", c1_clique_join),
        ("clique-join separators have chromatic number k", c2_clique_join_separators),
        ("stable cuts below 2n-3 edges, n <= 8", c3_chen_yu),
        ("block-pair lower bound on separator chromatic number", c4_claim1),
        ("chained-clique edge count and average degree", c5_claim2),
        ("bi-hole solver agrees with brute force", c6_bihole_oracle),
        ("minimal-separator reduction agrees with brute force", c7_separator_oracle),
        ("parameter chain", c8_parameters),
        ("asymptotic bounds not reproducible at desk scale", c9_statement),
        ("random bipartite generator contract", c10_generator),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{secs:.1}s] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{secs:.1}s] {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn c1_clique_join() -> Outcome {
    let mut checked = 0;
    for k in 1..=6usize {
        for n in k..=12usize {
            let g = clique_join(k, n).map_err(|e| e.to_string())?;
            let m = n * k - k * (k + 1) / 2;
            // count edges by hand instead of trusting the size counter
            let counted =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| g.has_edge(u, v)).count();
            ensure!(g.size() == m && counted == m && clique_join_edge_count(k, n) == m, "k={k} n={n}: {counted} edges");
            if n > k {
                let avg = g.average_degree().map_err(|e| e.to_string())?;
                ensure!(avg == Rational::new(2 * m as u64, n as u64), "k={k} n={n}: average {avg}");
                ensure!(avg < Rational::from_integer(2 * k as u64), "k={k} n={n}: average {avg} >= 2k");
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} graphs exact"))
}

fn c2_clique_join_separators() -> Outcome {
    let mut checked = 0;
    for k in 2..=4usize {
        for n in k + 2..=10 {
            let g = clique_join(k, n).map_err(|e| e.to_string())?;
            let block = VertexSet::range(n, 0, k);
            let found = min_separator_chromatic(&g).map_err(|e| e.to_string())?;
            let value = found.map(|m| m.value);
            ensure!(value == Some(k as isize), "k={k} n={n}: min chi {value:?}");
            let brute = sep_min_bruteforce(&g, SepInvariant::Chi).map_err(|e| e.to_string())?;
            ensure!(brute == Some(k as isize), "k={k} n={n}: brute force gives {brute:?}");
            let seps = minimal_separators(&g).map_err(|e| e.to_string())?;
            ensure!(!seps.is_empty(), "k={k} n={n}: no minimal separator");
            ensure!(seps.iter().all(|x| block.is_subset(x)), "k={k} n={n}: separator missing the clique");
            checked += 1;
        }
    }
    // the block stops being a separator with only one independent vertex
    for k in 2..=4usize {
        let g = clique_join(k, k + 1).map_err(|e| e.to_string())?;
        ensure!(min_separator_chromatic(&g).map_err(|e| e.to_string())?.is_none(), "k={k}: K_(k+1) separated");
    }
    Ok(format!("{checked} graphs, min chi = k, every minimal separator contains the clique"))
}

fn c3_chen_yu() -> Outcome {
    let report = scan_chen_yu(8).map_err(|e| e.to_string())?;
    ensure!(report.violators() == 0, "{} violators", report.violators());
    for level in &report.levels {
        let expected = CONNECTED_BELOW_2N_3[level.n];
        ensure!(level.classes == expected, "n={}: {} classes, enumeration has {expected}", level.n, level.classes);
    }
    ensure!(report.extremal.len() == 5, "extremal checks for n in 4..=8 missing");
    for e in &report.extremal {
        ensure!(e.edges == 2 * e.n - 3, "n={}: {} edges", e.n, e.edges);
        ensure!(!e.admits_stable_cut, "n={}: clique_join(2, n) has a stable cut", e.n);
    }
    let counts: Vec<String> = report.levels.iter().map(|l| format!("n={}:{}", l.n, l.classes)).collect();
    Ok(format!(
        "0 violators over {} classes ({}); clique_join(2, n) has none for n=4..8",
        report.classes(),
        counts.join(" ")
    ))
}

/// The 450 instances of criteria 4 and 5; edge density varies with the seed.
fn chained_instances() -> Vec<(usize, usize, u64, BipartiteGraph)> {
    let mut out = Vec::new();
    for alpha in 3..=5usize {
        for beta in 2..=4usize {
            for seed in 0..H_PER_SHAPE {
                let num = 1 + (seed % 5) as u32;
                let h = random_bipartite(alpha, alpha, num, 6, seed * 1000 + (alpha * 10 + beta) as u64).unwrap();
                out.push((alpha, beta, seed, h));
            }
        }
    }
    out
}

fn c4_claim1() -> Outcome {
    let (mut instances, mut separators, mut cross) = (0, 0, 0);
    for (alpha, beta, seed, h) in chained_instances() {
        let inst = chained_clique(alpha, beta, &h).map_err(|e| e.to_string())?;
        let report = verify_claim1(&inst).map_err(|e| e.to_string())?;
        let b = max_bihole_bruteforce(&h).map_err(|e| e.to_string())?;
        let bound = alpha - b;
        ensure!(
            report.max_bihole == b,
            "alpha={alpha} beta={beta} seed={seed}: solver bi-hole {} != {b}",
            report.max_bihole
        );
        ensure!(report.passed, "alpha={alpha} beta={beta} seed={seed}: block-pair argument fails");
        for e in &report.entries {
            ensure!(e.chi_x >= bound, "alpha={alpha} beta={beta} seed={seed}: chi {} < {bound} on {:?}", e.chi_x, e.x);
        }
        if alpha * beta <= 16 {
            let brute = sep_min_bruteforce(&inst.graph, SepInvariant::Chi).map_err(|e| e.to_string())?;
            ensure!(
                brute == report.min_chi.map(|c| c as isize),
                "alpha={alpha} beta={beta} seed={seed}: brute force {brute:?} vs {:?}",
                report.min_chi
            );
            ensure!(
                brute.is_none_or(|c| c >= bound as isize),
                "alpha={alpha} beta={beta} seed={seed}: brute force below bound"
            );
            cross += 1;
        }
        separators += report.entries.len();
        instances += 1;
    }
    Ok(format!("{instances} instances, {separators} minimal separators, {cross} cross-checked by brute force"))
}

fn c5_claim2() -> Outcome {
    let mut instances = 0;
    for (alpha, beta, seed, h) in chained_instances() {
        let inst = chained_clique(alpha, beta, &h).map_err(|e| e.to_string())?;
        inst.check_structure().map_err(|e| format!("alpha={alpha} beta={beta} seed={seed}: {e}"))?;
        let r = verify_claim2(&inst).map_err(|e| e.to_string())?;
        let delta = (0..alpha).map(|l| (0..alpha).filter(|&r| h.has_edge(l, r)).count()).max().unwrap_or(0);
        let h_edges = h.edges().count();
        let m = beta * alpha * (alpha - 1) / 2 + (beta - 1) * h_edges;
        ensure!(
            inst.graph.size() == m && r.edges == m,
            "alpha={alpha} beta={beta} seed={seed}: {} edges, expected {m}",
            r.edges
        );
        ensure!(
            m <= beta * (alpha * (alpha - 1) / 2 + alpha * delta),
            "alpha={alpha} beta={beta} seed={seed}: edge bound"
        );
        let avg = Rational::new(2 * m as u64, (alpha * beta) as u64);
        let bound = Rational::from_integer((alpha - 1 + 2 * delta) as u64);
        ensure!(
            r.average_degree == avg && avg <= bound,
            "alpha={alpha} beta={beta} seed={seed}: average {avg} > {bound}"
        );
        ensure!(r.passed, "alpha={alpha} beta={beta} seed={seed}: report failed");
        instances += 1;
    }
    Ok(format!("{instances} instances exact"))
}

fn c6_bihole_oracle() -> Outcome {
    for mask in 0u32..1 << 16 {
        let edges: Vec<(usize, usize)> = (0..16).filter(|b| mask >> b & 1 == 1).map(|b| (b / 4, b % 4)).collect();
        let h = BipartiteGraph::from_edges(4, 4, &edges).map_err(|e| e.to_string())?;
        let (s, hole) = max_bihole(&h).map_err(|e| e.to_string())?;
        let brute = max_bihole_bruteforce(&h).map_err(|e| e.to_string())?;
        ensure!(s == brute && hole.is_valid_in(&h) && hole.size() == s, "4x4 mask {mask:#06x}: {s} vs {brute}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..1000 {
        let (a, b) = (rng.random_range(1..=10), rng.random_range(1..=10));
        let num = rng.random_range(0..=10);
        let h = random_bipartite(a, b, num, 10, rng.random()).map_err(|e| e.to_string())?;
        let (s, hole) = max_bihole(&h).map_err(|e| e.to_string())?;
        let brute = max_bihole_bruteforce(&h).map_err(|e| e.to_string())?;
        ensure!(s == brute && hole.is_valid_in(&h), "random #{i} ({a}x{b}): {s} vs {brute}");
    }
    Ok("65536 exhaustive 4x4 + 1000 random instances, 0 mismatches".into())
}

fn compare_separator_minima(g: &Graph) -> Result<(), String> {
    for inv in [SepInvariant::Chi, SepInvariant::Omega, SepInvariant::Degeneracy] {
        let fast = min_separator(g, inv, &Budget::DEFAULT).map_err(|e| e.to_string())?.map(|m| m.value);
        let brute = sep_min_bruteforce(g, inv).map_err(|e| e.to_string())?;
        ensure!(fast == brute, "{} on {g:?}: {fast:?} vs {brute:?}", inv.name());
    }
    Ok(())
}

fn c7_separator_oracle() -> Outcome {
    let mut exhaustive = 0;
    for n in 1..=7 {
        for g in enumerate_connected_graphs(n, n * (n - 1) / 2).map_err(|e| e.to_string())? {
            compare_separator_minima(&g)?;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut random = 0;
    while random < 500 {
        let n = rng.random_range(2..=12usize);
        let m = rng.random_range(n - 1..=n * (n - 1) / 2);
        let g = random_graph_nm(n, m, rng.random(), 0).map_err(|e| e.to_string())?;
        if !g.is_connected() {
            continue;
        }
        compare_separator_minima(&g)?;
        random += 1;
    }
    Ok(format!("{exhaustive} connected classes (n <= 7) + {random} random connected graphs, 0 mismatches"))
}

/// Plain floating-point form of the first inequality, with a margin that
/// keeps it away from rounding noise.
fn delta_condition_f64(delta: u64, eta: f64) -> Option<bool> {
    let d = delta as f64;
    let gap = 1.0 - 8.0 * d.ln() / d - 1.0 / (1.0 + eta);
    (gap.abs() > 1e-9).then_some(gap > 0.0)
}

fn c8_parameters() -> Outcome {
    let epsilons = [Ratio::new(1, 4), Ratio::new(1, 2), Ratio::new(1, 1), Ratio::new(2, 1), Ratio::new(4, 1)];
    let mut last_delta = u64::MAX;
    let mut lines = Vec::new();
    for eps in epsilons {
        let p = derive_parameters(eps).map_err(|e| e.to_string())?;
        let eta = eps / Ratio::from_integer(2);
        let eta_f = *eta.numer() as f64 / *eta.denom() as f64;
        ensure!(p.is_valid(), "eps={eps}: {:?}", p.checks());
        ensure!(delta_condition(p.delta, eta) == Truth::True, "eps={eps}: first inequality not certain");
        ensure!(k_condition_linear(p.k, p.delta, eta), "eps={eps}: eta k < 2 Delta");
        ensure!(k_condition_log(p.k, p.delta, eta) == Truth::True, "eps={eps}: (1+eta) k < Delta/ln Delta");
        // minimality of Delta, both under directed rounding and by an independent scan
        ensure!(p.delta == 27 || delta_condition(p.delta - 1, eta) != Truth::True, "eps={eps}: Delta-1 also works");
        let scan = (27u64..).find(|&d| delta_condition_f64(d, eta_f) == Some(true)).unwrap();
        ensure!(scan == p.delta, "eps={eps}: scan finds {scan}, derived {}", p.delta);
        // minimality of k
        let k = p.k_min - 1;
        ensure!(
            !k_condition_linear(k, p.delta, eta) || k_condition_log(k, p.delta, eta) != Truth::True,
            "eps={eps}: k_min - 1 also works"
        );
        ensure!(p.delta <= last_delta, "eps={eps}: Delta {} above the value for a smaller epsilon", p.delta);
        last_delta = p.delta;
        lines.push(format!("eps={eps}: Delta={} k={} alpha={} ell={}", p.delta, p.k, p.alpha, p.ell));
    }
    let two = derive_parameters(Ratio::from_integer(2)).map_err(|e| e.to_string())?;
    ensure!(two.delta == 68 && two.k_min == 2 * two.delta, "eps=2: Delta={} k={}", two.delta, two.k_min);
    Ok(lines.join("; "))
}

fn c9_statement() -> Outcome {
    let p = derive_parameters(Ratio::from_integer(2)).map_err(|e| e.to_string())?;
    // bi-hole threshold 8 (ln Delta / Delta) n at the desk-scale instance n = 20, Delta = 8
    let (n, delta) = (20u64, 8f64);
    let threshold = 8.0 * delta.ln() / delta * n as f64;
    ensure!(threshold > n as f64, "threshold {threshold:.1} does not exceed n = {n}");
    let sample = random_bipartite_restricted(20, 8, 0).map_err(|e| e.to_string())?;
    let vacuous = verify_no_bihole(&sample.graph, Rational::from_integer(n + 1)).map_err(|e| e.to_string())?;
    ensure!(vacuous, "a bi-hole larger than n");
    Ok(format!(
        "NOT VERIFIED: the sparse-graph bound needs k >= {} (blocks of {} vertices, Delta = {}) even at eps = 2, far beyond exact \
         colouring; the bi-hole bound 8 ln(Delta)/Delta n = {threshold:.1} exceeds n = {n} at n = 20, Delta = 8 and holds vacuously. \
         Criteria 4-6 check the exact combinatorial content of both proofs instance by instance instead",
        p.k_min, p.alpha, p.delta
    ))
}

fn c10_generator() -> Outcome {
    let (n, delta) = (20usize, 8usize);
    let (mut host_sum, mut out_sum, mut count) = (0usize, 0usize, 0usize);
    for seed in 0..200 {
        let r = random_bipartite_restricted(n, delta, seed).map_err(|e| e.to_string())?;
        ensure!(r.graph.left_size() == n && r.graph.right_size() == n, "seed {seed}: wrong shape");
        ensure!(r.graph.max_left_degree() <= delta, "seed {seed}: left degree above {delta}");
        ensure!(r.host_left_degrees.iter().all(|&d| d <= delta), "seed {seed}: host degree above {delta}");
        let again = random_bipartite_restricted(n, delta, seed).map_err(|e| e.to_string())?;
        ensure!(again == r, "seed {seed}: not deterministic");
        host_sum += r.host_left_degrees.iter().sum::<usize>();
        out_sum += (0..n).map(|l| r.graph.left_degree(l)).sum::<usize>();
        count += n;
    }
    let host_mean = host_sum as f64 / count as f64;
    let out_mean = out_sum as f64 / count as f64;
    let target = delta as f64 / 2.0;
    ensure!(
        (host_mean - target).abs() <= MEAN_DEGREE_TOLERANCE * target,
        "mean sampled left degree {host_mean:.3} not within 15% of {target}"
    );
    Ok(format!(
        "200 seeds, all left degrees <= {delta}; mean left degree in G(2n, 2n, Delta/4n) = {host_mean:.3} (target {target}, \
         tolerance 15%); mean inside the n x n restriction = {out_mean:.3}"
    ))
}

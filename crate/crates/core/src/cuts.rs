//! Cuts with hereditary properties, the stable-cut scan below `2n - 3`
//! edges, and the counterexample hunt for `chi`-bounded cuts.
//!
//! Every property here survives deleting vertices, so a graph has a cut with
//! the property iff one of its minimal separators has it. A negative answer is
//! only returned after all minimal separators were examined; running out of
//! budget surfaces as an error ("unknown"), never as "none".

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::generators::{clique_join, enumerate_connected_graphs, random_graph_nm};
use crate::graph::Graph;
use crate::invariants::{chromatic_number_with, degeneracy, is_bipartite, is_forest, is_stable};
use crate::separators::{minimal_separators_with, SeparatorReport};
use crate::{Rational, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutProperty {
    Stable,
    Bipartite,
    Forest,
    /// `chi(G[X]) < k`.
    ChiLessThan(usize),
    /// `G[X]` is `d`-degenerate; `d = -1` admits only the empty set.
    DegenerateAtMost(isize),
}

impl CutProperty {
    pub fn holds(&self, sub: &Graph, budget: &Budget) -> Result<bool> {
        Ok(match *self {
            CutProperty::Stable => is_stable(sub),
            CutProperty::Bipartite => is_bipartite(sub),
            CutProperty::Forest => is_forest(sub),
            CutProperty::ChiLessThan(k) => sub.order() < k || chromatic_number_with(sub, budget)? < k,
            CutProperty::DegenerateAtMost(d) => degeneracy(sub).value <= d,
        })
    }
}

impl fmt::Display for CutProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutProperty::Stable => f.write_str("stable"),
            CutProperty::Bipartite => f.write_str("bipartite"),
            CutProperty::Forest => f.write_str("forest"),
            CutProperty::ChiLessThan(k) => write!(f, "chi_lt({k})"),
            CutProperty::DegenerateAtMost(d) => write!(f, "degenerate_le({d})"),
        }
    }
}

impl core::str::FromStr for CutProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let arg = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
        match s {
            "stable" => Ok(CutProperty::Stable),
            "bipartite" => Ok(CutProperty::Bipartite),
            "forest" => Ok(CutProperty::Forest),
            _ => {
                if let Some(k) = arg("chi_lt(") {
                    k.parse().map(CutProperty::ChiLessThan).map_err(|_| Error::InvalidParameter("bad chi_lt bound"))
                } else if let Some(d) = arg("degenerate_le(") {
                    d.parse()
                        .map(CutProperty::DegenerateAtMost)
                        .map_err(|_| Error::InvalidParameter("bad degenerate_le bound"))
                } else {
                    Err(Error::InvalidParameter(
                        "property must be stable, bipartite, forest, chi_lt(k) or degenerate_le(d)",
                    ))
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutSearch {
    Found(SeparatorReport),
    /// Every minimal separator was examined and none qualifies.
    NoneExhaustive {
        separators_examined: usize,
    },
}

impl CutSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, CutSearch::Found(_))
    }
}

pub fn find_cut(g: &Graph, property: CutProperty) -> Result<CutSearch> {
    find_cut_with(g, property, &Budget::DEFAULT)
}

/// First qualifying minimal separator in lexicographic order.
pub fn find_cut_with(g: &Graph, property: CutProperty, budget: &Budget) -> Result<CutSearch> {
    let seps = minimal_separators_with(g, budget)?;
    for x in &seps {
        if property.holds(&g.induced_subgraph(x)?, budget)? {
            let report = SeparatorReport::new(g, x, budget)?.expect("minimal separators separate");
            return Ok(CutSearch::Found(report));
        }
    }
    Ok(CutSearch::NoneExhaustive { separators_examined: seps.len() })
}

/// Any cut with the property, by checking every subset (order at most 16).
pub fn find_cut_bruteforce(g: &Graph, property: CutProperty) -> Result<Option<VertexSet>> {
    let n = g.order();
    if n > crate::separators::BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "find_cut_bruteforce",
            size: n,
            limit: crate::separators::BRUTEFORCE_LIMIT,
        });
    }
    for mask in 0u64..(1u64 << n) - 1 {
        let x = VertexSet::from_members(n, (0..n).filter(|v| mask >> v & 1 == 1))?;
        if g.components_within(&x.complement())?.len() >= 2
            && property.holds(&g.induced_subgraph(&x)?, &Budget::DEFAULT)?
        {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Largest order accepted by [`scan_chen_yu`].
pub const CHEN_YU_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChenYuLevel {
    pub n: usize,
    /// Graphs scanned have at most this many edges (`2n - 4`).
    pub max_edges: usize,
    pub classes: usize,
    pub violators: Vec<Graph>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalCheck {
    pub n: usize,
    pub edges: usize,
    pub admits_stable_cut: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChenYuReport {
    pub levels: Vec<ChenYuLevel>,
    /// `clique_join(2, n)` for `4 <= n <= n_max`: `2n - 3` edges and no stable cut expected.
    pub extremal: Vec<ExtremalCheck>,
}

impl ChenYuReport {
    pub fn violators(&self) -> usize {
        self.levels.iter().map(|l| l.violators.len()).sum()
    }

    pub fn classes(&self) -> usize {
        self.levels.iter().map(|l| l.classes).sum()
    }

    pub fn passed(&self) -> bool {
        self.violators() == 0 && self.extremal.iter().all(|e| !e.admits_stable_cut)
    }
}

/// Connected graphs on `n` vertices with fewer than `2n - 3` edges, one per
/// isomorphism class. For `n <= 2` there are none: the only candidate would
/// be edgeless, hence disconnected.
pub fn chen_yu_classes(n: usize) -> Result<Vec<Graph>> {
    if 2 * n < 4 {
        return Ok(Vec::new());
    }
    enumerate_connected_graphs(n, 2 * n - 4)
}

/// Exhaustive stable-cut check of every connected graph with `2 <= n <= n_max`
/// vertices and fewer than `2n - 3` edges, plus the extremal clique joins.
pub fn scan_chen_yu(n_max: usize) -> Result<ChenYuReport> {
    scan_chen_yu_with(n_max, &Budget::DEFAULT)
}

pub fn scan_chen_yu_with(n_max: usize, budget: &Budget) -> Result<ChenYuReport> {
    if n_max > CHEN_YU_LIMIT {
        return Err(Error::TooLarge { what: "scan_chen_yu", size: n_max, limit: CHEN_YU_LIMIT });
    }
    let mut levels = Vec::new();
    for n in 2..=n_max {
        let classes = chen_yu_classes(n)?;
        let mut violators = Vec::new();
        for g in &classes {
            if !find_cut_with(g, CutProperty::Stable, budget)?.is_found() {
                violators.push(g.clone());
            }
        }
        levels.push(ChenYuLevel { n, max_edges: (2 * n).saturating_sub(4), classes: classes.len(), violators });
    }
    let extremal = (4..=n_max).map(|n| extremal_check(n, budget)).collect::<Result<_>>()?;
    Ok(ChenYuReport { levels, extremal })
}

pub fn extremal_check(n: usize, budget: &Budget) -> Result<ExtremalCheck> {
    let g = clique_join(2, n)?;
    Ok(ExtremalCheck {
        n,
        edges: g.size(),
        admits_stable_cut: find_cut_with(&g, CutProperty::Stable, budget)?.is_found(),
    })
}

/// Edge budget a hunted graph must stay strictly below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeBound {
    /// `|E| < k|V| - k(k+1)/2`, the edge count of the clique join.
    CliqueJoin,
    /// Average degree `< 2 ell`, i.e. `|E| < ell |V|`.
    AverageDegree(Rational),
}

impl EdgeBound {
    /// Largest admissible edge count on `n` vertices, or `None` if no count is admissible.
    pub fn max_edges(&self, k: usize, n: usize) -> Option<usize> {
        match *self {
            EdgeBound::CliqueJoin => (k * n).checked_sub(k * (k + 1) / 2)?.checked_sub(1),
            EdgeBound::AverageDegree(ell) => {
                let limit = ell * Rational::from_integer(n as u64);
                let ceil = limit.ceil().to_integer() as usize;
                ceil.checked_sub(1)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HuntMode {
    /// Every isomorphism class (order at most 9).
    Enumerate,
    /// `samples` seeded `G(n, m)` draws per order, `m` uniform over the admissible range.
    Random { seed: u64, samples: usize },
}

/// A graph below the edge bound with no cut of chromatic number `< k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub graph: Graph,
    pub k: usize,
    /// Every minimal separator with its chromatic number (all `>= k`).
    pub separator_chi: Vec<(VertexSet, usize)>,
    pub separators_examined: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum HuntOutcome {
    Counterexample(Certificate),
    /// The exact search for this graph ran out of budget.
    Unknown {
        graph: Graph,
        reason: String,
    },
}

/// Candidates of order `n` for the hunt; disconnected samples are dropped.
pub fn hunt_candidates(k: usize, bound: EdgeBound, n: usize, mode: HuntMode) -> Result<Vec<Graph>> {
    let Some(max_edges) = bound.max_edges(k, n) else {
        return Ok(Vec::new());
    };
    if n == 0 || max_edges + 1 < n {
        return Ok(Vec::new());
    }
    match mode {
        HuntMode::Enumerate => enumerate_connected_graphs(n, max_edges),
        HuntMode::Random { seed, samples } => {
            let max_edges = max_edges.min(n * (n - 1) / 2);
            let span = (max_edges + 1 - (n - 1)) as u64;
            let mut out = Vec::new();
            for i in 0..samples as u64 {
                // stream (n, i) keeps orders independent of each other
                let stream = (n as u64) << 32 | i;
                let m = n - 1 + (splitmix(seed ^ stream) % span) as usize;
                let g = random_graph_nm(n, m, seed, stream)?;
                if g.is_connected() {
                    out.push(g);
                }
            }
            Ok(out)
        }
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// `Some(certificate)` when `g` is connected and has no cut with `chi < k`.
pub fn examine_candidate(g: &Graph, k: usize, budget: &Budget) -> Result<Option<Certificate>> {
    if !g.is_connected() {
        return Ok(None);
    }
    match find_cut_with(g, CutProperty::ChiLessThan(k), budget)? {
        CutSearch::Found(_) => Ok(None),
        CutSearch::NoneExhaustive { separators_examined } => {
            let mut separator_chi = Vec::new();
            for x in minimal_separators_with(g, budget)? {
                let chi = chromatic_number_with(&g.induced_subgraph(&x)?, budget)?;
                separator_chi.push((x, chi));
            }
            Ok(Some(Certificate { graph: g.clone(), k, separator_chi, separators_examined }))
        }
    }
}

/// Sequential hunt over `n_range`; budget failures are recorded, not fatal.
pub fn hunt_counterexample(
    k: usize,
    bound: EdgeBound,
    n_range: core::ops::RangeInclusive<usize>,
    mode: HuntMode,
    budget: &Budget,
) -> Result<Vec<HuntOutcome>> {
    let mut out = Vec::new();
    for n in n_range {
        for g in hunt_candidates(k, bound, n, mode)? {
            match examine_candidate(&g, k, budget) {
                Ok(Some(cert)) => out.push(HuntOutcome::Counterexample(cert)),
                Ok(None) => {}
                Err(e) if e.is_budget() => out.push(HuntOutcome::Unknown { graph: g, reason: alloc::format!("{e}") }),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

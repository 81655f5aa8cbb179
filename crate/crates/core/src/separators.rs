//! Separators, minimal separators, and the least value of a hereditary
//! invariant over all separators.
//!
//! A separator (cut) of `G` is a set `X` with `G - X` nonempty and
//! disconnected. Removing all of `V` is never a separator.
//!
//! Reduction lemma: if `X` separates `a` from `b`, then `X` contains an
//! inclusion-minimal `(a, b)`-separator. Chromatic number, clique number and
//! degeneracy cannot increase when vertices are deleted, so their minimum over
//! all separators equals their minimum over minimal separators. The brute-force
//! oracle [`sep_min_bruteforce`] checks this on every subset.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bihole::max_bihole_with;
use crate::bits::{self, Bits, VertexSet};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::generators::ChainedCliqueInstance;
use crate::graph::Graph;
use crate::invariants::{self, chromatic_number_with, degeneracy, maximum_clique};

/// Two components of `G - X`, or `None` when `X` does not separate.
pub fn separation_witness(g: &Graph, x: &VertexSet) -> Result<Option<(VertexSet, VertexSet)>> {
    g.check_set(x)?;
    if x.is_full() {
        return Err(Error::FullVertexSet);
    }
    let mut comps = g.components_within(&x.complement())?.into_iter();
    Ok(match (comps.next(), comps.next()) {
        (Some(a), Some(b)) => Some((a, b)),
        _ => None,
    })
}

/// `G - X` is disconnected (and nonempty).
pub fn is_separator(g: &Graph, x: &VertexSet) -> Result<bool> {
    Ok(separation_witness(g, x)?.is_some())
}

/// A separator together with its induced invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorReport {
    pub x: VertexSet,
    /// Two components of `G - X` (the two with the smallest members).
    pub witness: (VertexSet, VertexSet),
    pub chi_x: usize,
    pub omega_x: usize,
    pub degeneracy_x: isize,
}

impl SeparatorReport {
    /// Builds the report, or `None` when `x` is not a separator.
    pub fn new(g: &Graph, x: &VertexSet, budget: &Budget) -> Result<Option<Self>> {
        let Some(witness) = separation_witness(g, x)? else {
            return Ok(None);
        };
        let sub = g.induced_subgraph(x)?;
        Ok(Some(SeparatorReport {
            x: x.clone(),
            witness,
            chi_x: chromatic_number_with(&sub, budget)?,
            omega_x: maximum_clique(&sub, budget)?.len(),
            degeneracy_x: degeneracy(&sub).value,
        }))
    }

    /// Re-checks separation and `omega <= chi <= degeneracy + 1` against `g`.
    pub fn is_consistent_with(&self, g: &Graph) -> bool {
        let separated = g
            .components_within(&self.x.complement())
            .map(|comps| {
                comps.len() >= 2
                    && comps.contains(&self.witness.0)
                    && comps.contains(&self.witness.1)
                    && self.witness.0 != self.witness.1
            })
            .unwrap_or(false);
        separated && self.omega_x <= self.chi_x && self.chi_x as isize <= self.degeneracy_x + 1
    }
}

/// All inclusion-minimal separators in lexicographic order, under the default budget.
pub fn minimal_separators(g: &Graph) -> Result<Vec<VertexSet>> {
    minimal_separators_with(g, &Budget::DEFAULT)
}

/// Closure generation: seed with `N(C)` for every component `C` of `G - N[v]`,
/// then for each separator `S` and `x` in `S` add `N(C)` for every component
/// `C` of `G - (S + N(x))`. For a disconnected graph the empty set appears
/// (from a component not adjacent to the seed vertex) and is the only minimal
/// separator that is not inside a single component.
pub fn minimal_separators_with(g: &Graph, budget: &Budget) -> Result<Vec<VertexSet>> {
    let n = g.order();
    let mut out = g.with_bits(
        |adj| enumerate::<u64>(adj, budget).map(|v| v.into_iter().map(|s| s.to_set(n)).collect::<Vec<_>>()),
        |adj| enumerate::<VertexSet>(adj, budget),
    )?;
    out.sort_unstable();
    Ok(out)
}

pub(crate) fn enumerate<B: Bits>(adj: &[B], budget: &Budget) -> Result<Vec<B>> {
    let n = adj.len();
    let all = B::full(n);
    let mut seen: BTreeSet<B> = BTreeSet::new();
    let mut queue: Vec<B> = Vec::new();
    let push = |s: B, seen: &mut BTreeSet<B>, queue: &mut Vec<B>| -> Result<()> {
        if seen.insert(s.clone()) {
            if seen.len() > budget.separators {
                return Err(Error::BudgetExceeded { what: "minimal_separators", limit: budget.separators as u64 });
            }
            queue.push(s);
        }
        Ok(())
    };
    for v in 0..n {
        let mut closed = adj[v].clone();
        closed.insert(v);
        for c in bits::components_in(adj, &all.and_not(&closed)) {
            push(bits::neighbourhood(adj, &c), &mut seen, &mut queue)?;
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let s = queue[head].clone();
        head += 1;
        for x in s.ones() {
            let removed = s.or(&adj[x]);
            for c in bits::components_in(adj, &all.and_not(&removed)) {
                push(bits::neighbourhood(adj, &c), &mut seen, &mut queue)?;
            }
        }
    }
    Ok(queue)
}

/// Hereditary invariant minimised over separators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SepInvariant {
    Chi,
    Omega,
    Degeneracy,
}

impl SepInvariant {
    pub fn name(self) -> &'static str {
        match self {
            SepInvariant::Chi => "chi",
            SepInvariant::Omega => "omega",
            SepInvariant::Degeneracy => "degeneracy",
        }
    }

    pub fn evaluate(self, sub: &Graph, budget: &Budget) -> Result<isize> {
        Ok(match self {
            SepInvariant::Chi => chromatic_number_with(sub, budget)? as isize,
            SepInvariant::Omega => maximum_clique(sub, budget)?.len() as isize,
            SepInvariant::Degeneracy => degeneracy(sub).value,
        })
    }
}

impl core::str::FromStr for SepInvariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chi" => Ok(SepInvariant::Chi),
            "omega" => Ok(SepInvariant::Omega),
            "degeneracy" => Ok(SepInvariant::Degeneracy),
            _ => Err(Error::InvalidParameter("invariant must be chi, omega or degeneracy")),
        }
    }
}

/// Least invariant value over all separators, with a separator attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SepMin {
    pub invariant: SepInvariant,
    pub value: isize,
    pub report: SeparatorReport,
    /// Minimal separators examined.
    pub separators: usize,
}

/// `None` when `g` has no separator (complete graphs, order <= 1).
pub fn min_separator(g: &Graph, invariant: SepInvariant, budget: &Budget) -> Result<Option<SepMin>> {
    let seps = minimal_separators_with(g, budget)?;
    let mut best: Option<(isize, &VertexSet)> = None;
    for x in &seps {
        let value = invariant.evaluate(&g.induced_subgraph(x)?, budget)?;
        if best.is_none_or(|(b, _)| value < b) {
            best = Some((value, x));
        }
    }
    let Some((value, x)) = best else {
        return Ok(None);
    };
    let report = SeparatorReport::new(g, x, budget)?.expect("minimal separators separate");
    Ok(Some(SepMin { invariant, value, report, separators: seps.len() }))
}

pub fn min_separator_chromatic(g: &Graph) -> Result<Option<SepMin>> {
    min_separator(g, SepInvariant::Chi, &Budget::DEFAULT)
}

pub fn min_separator_clique(g: &Graph) -> Result<Option<SepMin>> {
    min_separator(g, SepInvariant::Omega, &Budget::DEFAULT)
}

pub fn min_separator_degeneracy(g: &Graph) -> Result<Option<SepMin>> {
    min_separator(g, SepInvariant::Degeneracy, &Budget::DEFAULT)
}

/// Largest order accepted by [`sep_min_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 16;

/// Minimum over every subset `X` with `G - X` nonempty and disconnected.
pub fn sep_min_bruteforce(g: &Graph, invariant: SepInvariant) -> Result<Option<isize>> {
    let n = g.order();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge { what: "sep_min_bruteforce", size: n, limit: BRUTEFORCE_LIMIT });
    }
    let adj = g.word_adjacency();
    let full = u64::full(n);
    let mut best: Option<isize> = None;
    for x in 0..full {
        if bits::components_in(&adj, &(full & !x)).len() < 2 {
            continue;
        }
        let sub = g.induced_subgraph(&x.to_set(n))?;
        let value = invariant.evaluate(&sub, &Budget::DEFAULT)?;
        best = Some(best.map_or(value, |b| b.min(value)));
    }
    Ok(best)
}

/// The neighbourhood of a vertex of degree at most `k - 1` that leaves
/// something outside its closed neighbourhood; such a set separates and has
/// fewer than `k` vertices. Lowest qualifying vertex index wins.
pub fn low_degree_separator(g: &Graph, k: usize) -> Result<Option<SeparatorReport>> {
    low_degree_separator_with(g, k, &Budget::DEFAULT)
}

pub fn low_degree_separator_with(g: &Graph, k: usize, budget: &Budget) -> Result<Option<SeparatorReport>> {
    let n = g.order();
    for v in 0..n {
        if g.degree(v) + 1 > k || g.degree(v) + 1 == n {
            continue;
        }
        let x = g.neighbors(v).clone();
        let mut rest = x.complement();
        rest.remove(v);
        let mut others = g.components_within(&rest)?;
        let other = others.swap_remove(0);
        let single = VertexSet::from_members(n, [v])?;
        let witness = if v < other.first().expect("nonempty") { (single, other) } else { (other, single) };
        let sub = g.induced_subgraph(&x)?;
        return Ok(Some(SeparatorReport {
            x,
            witness,
            chi_x: chromatic_number_with(&sub, budget)?,
            omega_x: maximum_clique(&sub, budget)?.len(),
            degeneracy_x: invariants::degeneracy(&sub).value,
        }));
    }
    Ok(None)
}

/// Outcome of the block-pair argument for one minimal separator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim1Entry {
    pub x: VertexSet,
    /// First `i` (0-based) with no edge between `A_i - X` and `A_{i+1} - X`.
    pub pair: Option<usize>,
    /// `min(|A_i - X|, |A_{i+1} - X|)`: the size of the bi-hole left behind.
    pub hole: usize,
    /// `max(|A_i ∩ X|, |A_{i+1} ∩ X|)`: a clique inside `X`.
    pub clique_in_x: usize,
    pub chi_x: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim1Report {
    pub alpha: usize,
    pub beta: usize,
    /// Largest bi-hole of `h`.
    pub max_bihole: usize,
    /// `alpha - max_bihole`, the forced lower bound on `chi(G[X])`.
    pub bound: usize,
    pub entries: Vec<Claim1Entry>,
    /// Least `chi(G[X])` over minimal separators; `None` without separators.
    pub min_chi: Option<usize>,
    pub passed: bool,
}

/// Checks, separator by separator, that some consecutive block pair is cut
/// apart by `X`, that what remains of it is a bi-hole of `h` (so at most
/// `max_bihole(h)` on its smaller side), and that `chi(G[X]) >= alpha - max_bihole(h)`.
pub fn verify_claim1(inst: &ChainedCliqueInstance) -> Result<Claim1Report> {
    verify_claim1_with(inst, &Budget::DEFAULT)
}

pub fn verify_claim1_with(inst: &ChainedCliqueInstance, budget: &Budget) -> Result<Claim1Report> {
    let g = &inst.graph;
    let (b, _) = max_bihole_with(&inst.h, budget)?;
    let bound = inst.alpha.saturating_sub(b);
    let mut entries = Vec::new();
    for x in minimal_separators_with(g, budget)? {
        let rest = x.complement();
        let pair = (0..inst.beta - 1).find(|&i| {
            let left = inst.blocks[i].intersection(&rest);
            let right = inst.blocks[i + 1].intersection(&rest);
            left.iter().all(|u| g.neighbors(u).is_disjoint(&right))
        });
        let (hole, clique_in_x) = match pair {
            Some(i) => {
                let (p, q) = (&inst.blocks[i], &inst.blocks[i + 1]);
                (
                    p.difference(&x).len().min(q.difference(&x).len()),
                    p.intersection(&x).len().max(q.intersection(&x).len()),
                )
            }
            None => (usize::MAX, 0),
        };
        let chi_x = chromatic_number_with(&g.induced_subgraph(&x)?, budget)?;
        let passed = pair.is_some() && hole <= b && clique_in_x >= bound && chi_x >= bound;
        entries.push(Claim1Entry { x, pair, hole, clique_in_x, chi_x, passed });
    }
    let min_chi = entries.iter().map(|e| e.chi_x).min();
    let passed = entries.iter().all(|e| e.passed);
    Ok(Claim1Report { alpha: inst.alpha, beta: inst.beta, max_bihole: b, bound, entries, min_chi, passed })
}

/// Every separator of `g` contains a clique of size `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueInSeparators {
    pub target: usize,
    /// Least clique number over separators; `None` without separators.
    pub min_omega: Option<usize>,
    pub witness: Option<SeparatorReport>,
    pub passed: bool,
}

pub fn verify_clique_in_separators(g: &Graph, target: usize, budget: &Budget) -> Result<CliqueInSeparators> {
    let found = min_separator(g, SepInvariant::Omega, budget)?;
    let min_omega = found.as_ref().map(|m| m.value as usize);
    Ok(CliqueInSeparators {
        target,
        min_omega,
        passed: min_omega.is_none_or(|w| w >= target),
        witness: found.map(|m| m.report),
    })
}

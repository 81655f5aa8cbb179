//! Exact hereditary invariants: chromatic number, clique number, degeneracy,
//! and the stable / bipartite / forest predicates.
//!
//! Chromatic and clique numbers come from branch and bound. Greedy colourings
//! only ever prune; the reported value is always the proven optimum, and a
//! search that cannot finish inside its [`Budget`] fails with
//! [`Error::BudgetExceeded`].

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::budget::{Budget, Ticker};
use crate::error::Result;
use crate::graph::Graph;
use crate::VertexSet;

const UNCOLORED: usize = usize::MAX;

/// Exact chromatic number under the default budget.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with(g, &Budget::DEFAULT)
}

pub fn chromatic_number_with(g: &Graph, budget: &Budget) -> Result<usize> {
    let coloring = optimal_coloring(g, budget)?;
    Ok(coloring.iter().max().map_or(0, |&c| c + 1))
}

/// A proper colouring with the minimum number of colours (colours `0..chi`).
pub fn optimal_coloring(g: &Graph, budget: &Budget) -> Result<Vec<usize>> {
    g.with_bits(|adj| color_exact(adj, budget), |adj| color_exact(adj, budget))
}

/// Exact clique number under the default budget.
pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(maximum_clique(g, &Budget::DEFAULT)?.len())
}

/// A maximum clique.
pub fn maximum_clique(g: &Graph, budget: &Budget) -> Result<VertexSet> {
    let n = g.order();
    let members = g.with_bits(|adj| clique_exact(adj, budget), |adj| clique_exact(adj, budget))?;
    VertexSet::from_members(n, members)
}

/// Degeneracy with its witnessing elimination order.
///
/// `value` is `-1` for the graph with no vertices, matching the convention
/// that only the empty graph is (-1)-degenerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneracy {
    pub value: isize,
    /// Vertices in removal order; each had at most `value` neighbours among later ones.
    pub order: Vec<usize>,
}

/// Repeatedly removes a minimum-degree vertex (lowest index on ties).
pub fn degeneracy(g: &Graph) -> Degeneracy {
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut value: isize = -1;
    for _ in 0..n {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| deg[v]).expect("a vertex is alive");
        value = value.max(deg[v] as isize);
        alive[v] = false;
        order.push(v);
        for u in g.neighbors(v) {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    Degeneracy { value, order }
}

pub fn is_stable(g: &Graph) -> bool {
    g.size() == 0
}

/// Two-colours each component by breadth-first search.
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.order();
    let mut side = vec![u8::MAX; n];
    let mut queue = Vec::new();
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        queue.clear();
        queue.push(root);
        while let Some(v) = queue.pop() {
            for u in g.neighbors(v) {
                if side[u] == u8::MAX {
                    side[u] = 1 - side[v];
                    queue.push(u);
                } else if side[u] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Acyclic iff `m = n - (number of components)`.
pub fn is_forest(g: &Graph) -> bool {
    g.size() + g.connected_components().len() == g.order()
}

// ---------------------------------------------------------------------------
// maximum clique: bitset branch and bound with greedy colour bounds
// ---------------------------------------------------------------------------

struct CliqueSearch<'a, B> {
    adj: &'a [B],
    current: Vec<usize>,
    best: Vec<usize>,
    ticker: Ticker,
}

impl<B: Bits> CliqueSearch<'_, B> {
    /// Greedy sequential colouring of `cand`; returns vertices with their colour count so far.
    fn colour_bound(&self, cand: &B) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(cand.count());
        let mut uncoloured = cand.clone();
        let mut k = 0;
        while !uncoloured.is_empty() {
            k += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q = q.and_not(&self.adj[v]);
                uncoloured.remove(v);
                out.push((v, k));
            }
        }
        out
    }

    fn expand(&mut self, mut cand: B) -> Result<()> {
        self.ticker.tick()?;
        let ordered = self.colour_bound(&cand);
        for &(v, k) in ordered.iter().rev() {
            if self.current.len() + k <= self.best.len() {
                return Ok(());
            }
            self.current.push(v);
            let next = cand.and(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best.clone_from(&self.current);
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            cand.remove(v);
        }
        Ok(())
    }
}

pub(crate) fn clique_exact<B: Bits>(adj: &[B], budget: &Budget) -> Result<Vec<usize>> {
    let mut search = CliqueSearch {
        adj,
        current: Vec::new(),
        best: Vec::new(),
        ticker: Ticker::new(budget.search_nodes, "clique_number"),
    };
    if !adj.is_empty() {
        search.expand(B::full(adj.len()))?;
    }
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

// ---------------------------------------------------------------------------
// chromatic number: exact DSATUR branch and bound
// ---------------------------------------------------------------------------

struct ColorSearch<'a, B> {
    adj: &'a [B],
    n: usize,
    color: Vec<usize>,
    /// `usage[v * n + c]`: coloured neighbours of `v` with colour `c`.
    usage: Vec<u32>,
    saturation: Vec<usize>,
    uncolored: B,
    best: usize,
    best_coloring: Vec<usize>,
    lower: usize,
    ticker: Ticker,
}

impl<B: Bits> ColorSearch<'_, B> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        self.uncolored.remove(v);
        for u in self.adj[v].ones() {
            let slot = &mut self.usage[u * self.n + c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = UNCOLORED;
        self.uncolored.insert(v);
        for u in self.adj[v].ones() {
            let slot = &mut self.usage[u * self.n + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// Highest saturation, then most uncoloured neighbours, then lowest index.
    fn select(&self) -> usize {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in self.uncolored.ones() {
            let key = (self.saturation[v], self.adj[v].and(&self.uncolored).count());
            match best {
                Some((s, d, _)) if (key.0, key.1) <= (s, d) => {}
                _ => best = Some((key.0, key.1, v)),
            }
        }
        best.expect("an uncoloured vertex remains").2
    }

    fn free(&self, v: usize, c: usize) -> bool {
        self.usage[v * self.n + c] == 0
    }

    fn greedy(&mut self) -> usize {
        let mut used = 0;
        let mut placed = Vec::with_capacity(self.n);
        while !self.uncolored.is_empty() {
            let v = self.select();
            let c = (0..).find(|&c| self.free(v, c)).expect("some colour is free");
            self.assign(v, c);
            placed.push((v, c));
            used = used.max(c + 1);
        }
        let coloring = self.color.clone();
        for (v, c) in placed.into_iter().rev() {
            self.unassign(v, c);
        }
        self.best = used;
        self.best_coloring = coloring;
        used
    }

    /// Returns `true` once a colouring meeting the lower bound is known.
    fn search(&mut self, used: usize) -> Result<bool> {
        self.ticker.tick()?;
        if self.uncolored.is_empty() {
            if used < self.best {
                self.best = used;
                self.best_coloring.clone_from(&self.color);
            }
            return Ok(self.best == self.lower);
        }
        let v = self.select();
        for c in 0..=used {
            if used.max(c + 1) >= self.best {
                break;
            }
            if !self.free(v, c) {
                continue;
            }
            self.assign(v, c);
            let done = self.search(used.max(c + 1))?;
            self.unassign(v, c);
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

pub(crate) fn color_exact<B: Bits>(adj: &[B], budget: &Budget) -> Result<Vec<usize>> {
    let n = adj.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let clique = clique_exact(adj, budget)?;
    let mut s = ColorSearch {
        adj,
        n,
        color: vec![UNCOLORED; n],
        usage: vec![0; n * n],
        saturation: vec![0; n],
        uncolored: B::full(n),
        best: usize::MAX,
        best_coloring: Vec::new(),
        lower: clique.len(),
        ticker: Ticker::new(budget.search_nodes, "chromatic_number"),
    };
    if s.greedy() > s.lower {
        // colours are interchangeable, so a maximum clique may be fixed to 0..omega
        for (c, &v) in clique.iter().enumerate() {
            s.assign(v, c);
        }
        s.search(clique.len())?;
    }
    debug_assert!(s.best_coloring.iter().all(|&c| c != UNCOLORED));
    Ok(s.best_coloring)
}

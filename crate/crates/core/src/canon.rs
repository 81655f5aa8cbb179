//! Canonical forms for small graphs (order at most 11).
//!
//! The code of a labelled graph is its upper adjacency triangle read column by
//! column (`(0,1), (0,2), (1,2), (0,3), ...`) as a big-endian bit string. The
//! canonical code is the minimum over all relabellings that list vertices in
//! the order of their colour-refinement classes; the classes and their order
//! are isomorphism invariant, so isomorphic graphs get equal codes.
//!
//! The search places vertices position by position. After `p` placements the
//! first `p(p-1)/2` bits are fixed, so at each position only candidates whose
//! new column is minimal survive, and prefixes above the incumbent are cut.
//! Of several twin candidates (equal neighbourhoods up to each other) only one
//! is explored.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order whose code fits in 64 bits.
pub const MAX_ORDER: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub order: usize,
    pub code: u64,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        decode(self.order, self.code)
    }
}

#[inline]
fn bits_for(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Code of `g` under its current labelling.
pub fn labelled_code(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::TooLarge { what: "canonical code", size: n, limit: MAX_ORDER });
    }
    let total = bits_for(n);
    let mut code = 0u64;
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                code |= 1 << (total - 1 - t);
            }
            t += 1;
        }
    }
    Ok(code)
}

/// Graph with the given code.
pub fn decode(n: usize, code: u64) -> Graph {
    let total = bits_for(n);
    let mut g = Graph::empty(n);
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - t) & 1 == 1 {
                g.add_edge(i, j).expect("valid edge");
            }
            t += 1;
        }
    }
    g
}

/// Colour refinement starting from degrees; returns a class index per vertex,
/// with classes numbered by the sorted order of their signatures.
fn refine(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let mut class: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| class[u]).collect();
                nb.sort_unstable();
                (class[v], nb)
            })
            .collect();
        let mut ranks = BTreeMap::new();
        for s in &sigs {
            ranks.entry(s.clone()).or_insert(0);
        }
        for (i, r) in ranks.values_mut().enumerate() {
            *r = i;
        }
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let count = ranks.len();
        class = next;
        if count == classes {
            return class;
        }
        classes = count;
    }
}

struct Labeller<'a> {
    adj: &'a [u32],
    /// Class required at each position.
    slot_class: Vec<usize>,
    class: Vec<usize>,
    perm: Vec<usize>,
    used: u32,
    total: usize,
    best: u64,
}

impl Labeller<'_> {
    fn column(&self, v: usize) -> u64 {
        let mut col = 0u64;
        for &u in &self.perm {
            col = col << 1 | u64::from(self.adj[v] >> u & 1);
        }
        col
    }

    fn place(&mut self, prefix: u64) {
        let p = self.perm.len();
        let n = self.adj.len();
        if p == n {
            self.best = self.best.min(prefix);
            return;
        }
        let want = self.slot_class[p];
        let mut min_col = u64::MAX;
        let mut cands: Vec<usize> = Vec::new();
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.class[v] != want {
                continue;
            }
            let col = self.column(v);
            if col < min_col {
                min_col = col;
                cands.clear();
            }
            // swapping twins is an automorphism fixing everything placed so far
            let twin = |u: usize| self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u);
            if col == min_col && !cands.iter().any(|&u| twin(u)) {
                cands.push(v);
            }
        }
        let next = (prefix << p) | min_col;
        if next > self.best >> (self.total - bits_for(p + 1)) {
            return;
        }
        for v in cands {
            self.perm.push(v);
            self.used |= 1 << v;
            self.place(next);
            self.used &= !(1 << v);
            self.perm.pop();
        }
    }
}

/// Canonical form of `g` (order at most [`MAX_ORDER`]).
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::TooLarge { what: "canonical form", size: n, limit: MAX_ORDER });
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |a, u| a | 1 << u)).collect();
    let class = refine(&adj);
    let mut slot_class: Vec<usize> = class.clone();
    slot_class.sort_unstable();
    let mut labeller = Labeller {
        adj: &adj,
        slot_class,
        class,
        perm: Vec::with_capacity(n),
        used: 0,
        total: bits_for(n),
        best: u64::MAX,
    };
    labeller.place(0);
    Ok(CanonicalForm { order: n, code: labeller.best })
}

/// `g` relabelled into canonical position.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.to_graph())
}

//! Maximum bi-holes of bipartite graphs.
//!
//! A bi-hole is a pair `(A', B')` with `A'` on the left, `B'` on the right and
//! no edge between them; its size is `min(|A'|, |B'|)`. Shrinking the larger
//! side of a bi-hole keeps it a bi-hole, so a bi-hole of size `s` exists iff a
//! balanced `s x s` one does. The solver therefore maximises
//! `min(|A'|, |R(A')|)` over left sets `A'`, where `R(A')` is the set of right
//! vertices with no neighbour in `A'`, and returns a balanced witness.

use alloc::vec::Vec;

use crate::bits::{Bits, VertexSet};
use crate::budget::{Budget, Ticker};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::Rational;

/// `(A', B')` with no edges between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiHole {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl BiHole {
    pub fn size(&self) -> usize {
        self.left.len().min(self.right.len())
    }

    /// True when the sets fit `h` and no edge of `h` joins them.
    pub fn is_valid_in(&self, h: &BipartiteGraph) -> bool {
        self.left.universe() == h.left_size()
            && self.right.universe() == h.right_size()
            && self.left.iter().all(|l| h.left_neighbors(l).is_disjoint(&self.right))
    }
}

/// Size of a largest bi-hole with a balanced witness, under the default budget.
pub fn max_bihole(h: &BipartiteGraph) -> Result<(usize, BiHole)> {
    max_bihole_with(h, &Budget::DEFAULT)
}

pub fn max_bihole_with(h: &BipartiteGraph, budget: &Budget) -> Result<(usize, BiHole)> {
    if h.left_size() == 0 || h.right_size() == 0 {
        return Err(Error::InvalidParameter("bi-hole search needs both parts nonempty"));
    }
    let b = h.right_size();
    if b <= 64 {
        let adj: Vec<u64> = (0..h.left_size()).map(|l| u64::from_set(h.left_neighbors(l))).collect();
        search(&adj, h, budget)
    } else {
        let adj: Vec<VertexSet> = (0..h.left_size()).map(|l| h.left_neighbors(l).clone()).collect();
        search(&adj, h, budget)
    }
}

struct Search<'a, B> {
    adj: &'a [B],
    chosen: Vec<usize>,
    best: usize,
    best_left: Vec<usize>,
    best_right: B,
    ticker: Ticker,
}

impl<B: Bits> Search<'_, B> {
    /// `right` is the common non-neighbourhood of `chosen`; `cands` are the left
    /// vertices that may still be added, each already known to leave more than
    /// `best` right vertices.
    fn expand(&mut self, right: &B, cands: &[usize]) -> Result<()> {
        self.ticker.tick()?;
        let here = self.chosen.len().min(right.count());
        if here > self.best {
            self.best = here;
            let mut left = self.chosen.clone();
            left.sort_unstable();
            left.truncate(here);
            self.best_left = left;
            self.best_right = right.clone();
        }
        if (self.chosen.len() + cands.len()).min(right.count()) <= self.best {
            return Ok(());
        }
        for (i, &v) in cands.iter().enumerate() {
            if self.chosen.len() + cands.len() - i <= self.best {
                break;
            }
            let next_right = right.and_not(&self.adj[v]);
            if next_right.count() <= self.best {
                continue;
            }
            let best = self.best;
            let next: Vec<usize> =
                cands[i + 1..].iter().copied().filter(|&w| next_right.and_not(&self.adj[w]).count() > best).collect();
            self.chosen.push(v);
            self.expand(&next_right, &next)?;
            self.chosen.pop();
        }
        Ok(())
    }
}

fn search<B: Bits>(adj: &[B], h: &BipartiteGraph, budget: &Budget) -> Result<(usize, BiHole)> {
    let b = h.right_size();
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&l| (h.left_degree(l), l));
    let mut s = Search {
        adj,
        chosen: Vec::new(),
        best: 0,
        best_left: Vec::new(),
        best_right: B::empty(b),
        ticker: Ticker::new(budget.search_nodes, "max_bihole"),
    };
    s.expand(&B::full(b), &order)?;
    let size = s.best;
    let left = VertexSet::from_members(h.left_size(), s.best_left)?;
    let right = VertexSet::from_members(b, s.best_right.ones().take(size))?;
    Ok((size, BiHole { left, right }))
}

/// Largest bi-hole by checking every pair of subsets. Parts must be at most 14.
pub fn max_bihole_bruteforce(h: &BipartiteGraph) -> Result<usize> {
    const LIMIT: usize = 14;
    let (a, b) = (h.left_size(), h.right_size());
    if a.max(b) > LIMIT {
        return Err(Error::TooLarge { what: "max_bihole_bruteforce", size: a.max(b), limit: LIMIT });
    }
    let nbr: Vec<u32> = (0..a).map(|l| u64::from_set(h.left_neighbors(l)) as u32).collect();
    let mut best = 0;
    for left in 0u32..1 << a {
        let mut blocked = 0u32;
        for (l, &nb) in nbr.iter().enumerate() {
            if left >> l & 1 == 1 {
                blocked |= nb;
            }
        }
        for right in 0u32..1 << b {
            if blocked & right == 0 {
                best = best.max(left.count_ones().min(right.count_ones()) as usize);
            }
        }
    }
    Ok(best)
}

/// True iff the largest bi-hole is strictly below `threshold`, i.e.
/// `max_bihole(h) <= ceil(threshold) - 1`.
pub fn verify_no_bihole(h: &BipartiteGraph, threshold: Rational) -> Result<bool> {
    verify_no_bihole_with(h, threshold, &Budget::DEFAULT)
}

pub fn verify_no_bihole_with(h: &BipartiteGraph, threshold: Rational, budget: &Budget) -> Result<bool> {
    let (size, _) = max_bihole_with(h, budget)?;
    Ok(Rational::from_integer(size as u64) < threshold)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(h: &BipartiteGraph, expected: usize) {
        let (size, hole) = max_bihole(h).unwrap();
        assert_eq!(size, expected);
        assert_eq!(hole.size(), size);
        assert_eq!(hole.left.len(), size);
        assert_eq!(hole.right.len(), size);
        assert!(hole.is_valid_in(h));
        assert_eq!(max_bihole_bruteforce(h).unwrap(), expected);
    }

    #[test]
    fn examples() {
        check(&BipartiteGraph::complete(5, 5), 0);
        check(&BipartiteGraph::new(5, 5), 5);
        check(&BipartiteGraph::perfect_matching(6), 3);
        check(&BipartiteGraph::new(2, 7), 2);
    }

    #[test]
    fn k33_minus_matching() {
        let mut h = BipartiteGraph::new(3, 3);
        for l in 0..3 {
            for r in 0..3 {
                if l != r {
                    h.add_edge(l, r).unwrap();
                }
            }
        }
        check(&h, 1);
    }

    #[test]
    fn empty_part_rejected() {
        assert!(max_bihole(&BipartiteGraph::new(0, 3)).is_err());
        assert!(max_bihole_bruteforce(&BipartiteGraph::new(15, 2)).is_err());
    }

    #[test]
    fn threshold_examples() {
        let t = |n| Rational::from_integer(n);
        assert!(!verify_no_bihole(&BipartiteGraph::new(5, 5), t(3)).unwrap());
        assert!(verify_no_bihole(&BipartiteGraph::complete(5, 5), t(1)).unwrap());
        // non-integer threshold: size 3 is below 7/2 but not below 3
        let m6 = BipartiteGraph::perfect_matching(6);
        assert!(verify_no_bihole(&m6, Rational::new(7, 2)).unwrap());
        assert!(!verify_no_bihole(&m6, t(3)).unwrap());
    }

    #[test]
    fn wide_right_part() {
        // 3 x 70 with left vertex l adjacent to right vertices 0..=20*l
        let mut h = BipartiteGraph::new(3, 70);
        for l in 0..3 {
            for r in 0..=20 * l {
                h.add_edge(l, r).unwrap();
            }
        }
        let (size, hole) = max_bihole(&h).unwrap();
        assert_eq!(size, 3);
        assert!(hole.is_valid_in(&h));
    }
}

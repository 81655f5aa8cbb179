//! Simple undirected graphs and bipartite graphs on dense integer vertices.

use alloc::vec::Vec;

use crate::bits::{self, VertexSet};
use crate::error::{Error, Result};
use crate::Rational;

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edges: usize,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Self {
        Graph { adj: (0..n).map(|_| VertexSet::new(n)).collect(), edges: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("valid edge");
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n).expect("valid edge");
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v).expect("valid edge");
        }
        g
    }

    /// Builds a graph from an edge list. Duplicate edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(Error::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
        }
        Ok(g)
    }

    /// Adds `uv`; returns `false` when it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(Error::Loop { vertex: u });
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        if fresh {
            self.edges += 1;
        }
        Ok(fresh)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Exact `2m/n`.
    pub fn average_degree(&self) -> Result<Rational> {
        if self.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Rational::new(2 * self.edges as u64, self.order() as u64))
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.order() {
            return Err(Error::UniverseMismatch { expected: self.order(), found: s.universe() });
        }
        Ok(())
    }

    /// `G[s]`; vertex `i` of the result is the `i`-th smallest member of `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let members = s.to_vec();
        let mut index = alloc::vec![usize::MAX; self.order()];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(members.len());
        for (i, &v) in members.iter().enumerate() {
            for w in self.adj[v].intersection(s).iter().filter(|&w| w > v) {
                g.add_edge(i, index[w])?;
            }
        }
        Ok(g)
    }

    /// Components of `G[within]` as sets of original labels, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_set(within)?;
        Ok(self.with_bits(
            |adj: &[u64]| {
                bits::components_in(adj, &<u64 as bits::Bits>::from_set(within))
                    .into_iter()
                    .map(|c| bits::Bits::to_set(&c, self.order()))
                    .collect()
            },
            |adj: &[VertexSet]| bits::components_in(adj, within),
        ))
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set()).expect("full set matches order")
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// The bipartite graph of `G`-edges between disjoint `s` (left) and `t` (right).
    pub fn semi_induced_bipartite(&self, s: &VertexSet, t: &VertexSet) -> Result<BipartiteGraph> {
        self.check_set(s)?;
        self.check_set(t)?;
        if !s.is_disjoint(t) {
            return Err(Error::OverlappingSets);
        }
        let right = t.to_vec();
        let mut h = BipartiteGraph::new(s.len(), right.len());
        for (i, u) in s.iter().enumerate() {
            for (j, &w) in right.iter().enumerate() {
                if self.has_edge(u, w) {
                    h.add_edge(i, j)?;
                }
            }
        }
        Ok(h)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = VertexSet::new(n);
        if perm.len() != n || perm.iter().any(|&p| p >= n || !seen.insert(p)) {
            return Err(Error::InvalidParameter("relabelling must be a permutation of 0..n"));
        }
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// Runs the word-packed variant when the order fits in 64 bits, the dynamic one otherwise.
    pub(crate) fn with_bits<T>(&self, word: impl FnOnce(&[u64]) -> T, wide: impl FnOnce(&[VertexSet]) -> T) -> T {
        if self.order() <= 64 {
            word(&self.word_adjacency())
        } else {
            wide(&self.adj)
        }
    }

    pub(crate) fn word_adjacency(&self) -> Vec<u64> {
        self.adj.iter().map(<u64 as bits::Bits>::from_set).collect()
    }

    #[cfg(test)]
    pub(crate) fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// A bipartite graph stored as left-vertex neighbour sets over the right part.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    right: usize,
    left: Vec<VertexSet>,
    degrees: Vec<usize>,
    edges: usize,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph {
            right,
            left: (0..left).map(|_| VertexSet::new(right)).collect(),
            degrees: alloc::vec![0; left],
            edges: 0,
        }
    }

    pub fn complete(left: usize, right: usize) -> Self {
        let mut h = BipartiteGraph::new(left, right);
        for l in 0..left {
            for r in 0..right {
                h.add_edge(l, r).expect("in range");
            }
        }
        h
    }

    /// Edges `(l, l)` for every `l < n`.
    pub fn perfect_matching(n: usize) -> Self {
        let mut h = BipartiteGraph::new(n, n);
        for v in 0..n {
            h.add_edge(v, v).expect("in range");
        }
        h
    }

    pub fn from_edges(left: usize, right: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut h = BipartiteGraph::new(left, right);
        for &(l, r) in edges {
            if !h.add_edge(l, r)? {
                return Err(Error::DuplicateEdge { u: l, v: r });
            }
        }
        Ok(h)
    }

    pub fn add_edge(&mut self, l: usize, r: usize) -> Result<bool> {
        if l >= self.left.len() {
            return Err(Error::VertexOutOfRange { vertex: l, order: self.left.len() });
        }
        if r >= self.right {
            return Err(Error::VertexOutOfRange { vertex: r, order: self.right });
        }
        let fresh = self.left[l].insert(r);
        if fresh {
            self.degrees[l] += 1;
            self.edges += 1;
        }
        Ok(fresh)
    }

    #[inline]
    pub fn left_size(&self) -> usize {
        self.left.len()
    }

    #[inline]
    pub fn right_size(&self) -> usize {
        self.right
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        l < self.left.len() && self.left[l].contains(r)
    }

    #[inline]
    pub fn left_neighbors(&self, l: usize) -> &VertexSet {
        &self.left[l]
    }

    #[inline]
    pub fn left_degree(&self, l: usize) -> usize {
        self.degrees[l]
    }

    /// Largest left degree; plays the role of `Delta` for a given `H`.
    pub fn max_left_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.left.iter().enumerate().flat_map(|(l, nb)| nb.iter().map(move |r| (l, r)))
    }

    /// Swaps the roles of the two parts.
    pub fn transpose(&self) -> BipartiteGraph {
        let mut t = BipartiteGraph::new(self.right, self.left.len());
        for (l, r) in self.edges() {
            t.add_edge(r, l).expect("in range");
        }
        t
    }

    /// The bipartite graph as an ordinary graph: left `l` becomes `l`, right `r` becomes `a + r`.
    pub fn to_graph(&self) -> Graph {
        let a = self.left_size();
        let mut g = Graph::empty(a + self.right);
        for (l, r) in self.edges() {
            g.add_edge(l, a + r).expect("in range");
        }
        g
    }

    /// Inverse of [`BipartiteGraph::to_graph`]: edges inside either part are rejected.
    pub fn from_graph(g: &Graph, left: usize) -> Result<Self> {
        if left > g.order() {
            return Err(Error::InvalidParameter("left part larger than the graph"));
        }
        let mut h = BipartiteGraph::new(left, g.order() - left);
        for (u, v) in g.edges() {
            if v < left || u >= left {
                return Err(Error::InvalidParameter("edge inside one part of a bipartite graph"));
            }
            h.add_edge(u, v - left)?;
        }
        Ok(h)
    }
}

impl core::fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "BipartiteGraph({}x{}, edges=", self.left_size(), self.right)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn average_degree_examples() {
        assert_eq!(Graph::cycle(6).average_degree().unwrap(), Rational::from_integer(2));
        assert_eq!(Graph::complete(5).average_degree().unwrap(), Rational::from_integer(4));
        assert_eq!(Graph::empty(0).average_degree(), Err(Error::EmptyGraph));
    }

    #[test]
    fn induced_consecutive_cycle_vertices_is_path() {
        let c5 = Graph::cycle(5);
        let p = c5.induced_subgraph(&set(5, &[4, 0, 1])).unwrap();
        assert_eq!(p.size(), 2);
        // members 0, 1, 4 become 0, 1, 2; vertex 0 is the middle of the path
        assert_eq!(p.degree(0), 2);
        assert_eq!(p.degree(1), 1);
        assert!(!p.has_edge(1, 2));
        assert_eq!(c5.induced_subgraph(&c5.vertex_set()).unwrap(), c5);
    }

    #[test]
    fn induced_subgraph_rejects_foreign_set() {
        assert!(matches!(Graph::cycle(5).induced_subgraph(&set(6, &[5])), Err(Error::UniverseMismatch { .. })));
    }

    #[test]
    fn components_examples() {
        let c6 = Graph::cycle(6);
        assert_eq!(c6.connected_components().len(), 1);
        let rest = c6.induced_subgraph(&set(6, &[1, 2, 4, 5])).unwrap();
        assert_eq!(rest.connected_components().len(), 2);
        let e4 = Graph::empty(4).connected_components();
        assert_eq!(e4, vec![set(4, &[0]), set(4, &[1]), set(4, &[2]), set(4, &[3])]);
        assert!(Graph::empty(0).connected_components().is_empty());
    }

    #[test]
    fn components_on_wide_graph() {
        let mut g = Graph::path(70);
        let cut = set(70, &[30]);
        let comps = g.components_within(&cut.complement()).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].len(), 30);
        assert_eq!(comps[1].len(), 39);
        g.add_edge(0, 69).unwrap();
        assert_eq!(g.components_within(&cut.complement()).unwrap().len(), 1);
    }

    #[test]
    fn semi_induced_examples() {
        let k4 = Graph::complete(4);
        let h = k4.semi_induced_bipartite(&set(4, &[0, 1]), &set(4, &[2, 3])).unwrap();
        assert_eq!(h, BipartiteGraph::complete(2, 2));
        let c4 = Graph::cycle(4);
        let h = c4.semi_induced_bipartite(&set(4, &[0, 2]), &set(4, &[1, 3])).unwrap();
        assert_eq!(h, BipartiteGraph::complete(2, 2));
        assert_eq!(c4.semi_induced_bipartite(&set(4, &[0, 1]), &set(4, &[1, 2])), Err(Error::OverlappingSets));
    }

    #[test]
    fn edge_errors() {
        let mut g = Graph::empty(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::Loop { vertex: 1 }));
        assert_eq!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { vertex: 3, order: 3 }));
        assert_eq!(Graph::from_edges(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge { u: 0, v: 1 }));
    }

    #[test]
    fn bipartite_round_trip_through_graph() {
        let h = BipartiteGraph::from_edges(2, 3, &[(0, 0), (1, 2), (0, 2)]).unwrap();
        assert_eq!(h.left_degree(0), 2);
        assert_eq!(h.max_left_degree(), 2);
        let g = h.to_graph();
        assert_eq!(BipartiteGraph::from_graph(&g, 2).unwrap(), h);
        assert!(BipartiteGraph::from_graph(&Graph::complete(4), 2).is_err());
        assert_eq!(h.transpose().transpose(), h);
    }
}

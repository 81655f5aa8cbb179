//! Graph families: clique joins, chained cliques, seeded random bipartite
//! graphs with bounded left degree, and exhaustive lists of small connected
//! graphs up to isomorphism.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::VertexSet;
use crate::canon::{self, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::Rational;

/// `K_k` joined completely to an independent set of `n - k` vertices.
///
/// Vertices `0..k` form the clique. The graph has exactly `kn - k(k+1)/2` edges.
pub fn clique_join(k: usize, n: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("clique_join needs k >= 1"));
    }
    if n < k {
        return Err(Error::InvalidParameter("clique_join needs n >= k"));
    }
    let mut g = Graph::empty(n);
    for u in 0..k {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `kn - k(k+1)/2`.
pub fn clique_join_edge_count(k: usize, n: usize) -> usize {
    k * n - k * (k + 1) / 2
}

/// `beta` cliques of size `alpha`, consecutive ones joined by copies of `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainedCliqueInstance {
    pub alpha: usize,
    pub beta: usize,
    pub h: BipartiteGraph,
    pub graph: Graph,
    /// `blocks[i]` is `A_{i+1}`, occupying vertices `i*alpha .. (i+1)*alpha`.
    pub blocks: Vec<VertexSet>,
}

/// Builds the chained-clique graph: every block is a clique and block `i`
/// (left part of `h`) is joined to block `i+1` (right part) exactly as in `h`.
pub fn chained_clique(alpha: usize, beta: usize, h: &BipartiteGraph) -> Result<ChainedCliqueInstance> {
    if (h.left_size(), h.right_size()) != (alpha, alpha) {
        return Err(Error::DimensionMismatch { expected: (alpha, alpha), found: (h.left_size(), h.right_size()) });
    }
    if beta < 2 {
        return Err(Error::InvalidParameter("chained_clique needs beta >= 2"));
    }
    if alpha == 0 {
        return Err(Error::InvalidParameter("chained_clique needs alpha >= 1"));
    }
    let n = alpha * beta;
    let mut graph = Graph::empty(n);
    for i in 0..beta {
        let base = i * alpha;
        for u in 0..alpha {
            for v in u + 1..alpha {
                graph.add_edge(base + u, base + v)?;
            }
        }
        if i + 1 < beta {
            for (l, r) in h.edges() {
                graph.add_edge(base + l, base + alpha + r)?;
            }
        }
    }
    let blocks = (0..beta).map(|i| VertexSet::range(n, i * alpha, (i + 1) * alpha)).collect();
    Ok(ChainedCliqueInstance { alpha, beta, h: h.clone(), graph, blocks })
}

impl ChainedCliqueInstance {
    /// `beta * alpha(alpha-1)/2 + (beta-1) |E(h)|`.
    pub fn expected_edges(&self) -> usize {
        self.beta * self.alpha * (self.alpha - 1) / 2 + (self.beta - 1) * self.h.edge_count()
    }

    /// Checks the structural invariants of the construction.
    pub fn check_structure(&self) -> core::result::Result<(), &'static str> {
        let g = &self.graph;
        if g.order() != self.alpha * self.beta || self.blocks.len() != self.beta {
            return Err("wrong order or block count");
        }
        for block in &self.blocks {
            let sub = g.induced_subgraph(block).map_err(|_| "block outside graph")?;
            if sub.size() != self.alpha * (self.alpha - 1) / 2 {
                return Err("block is not a clique");
            }
        }
        for pair in self.blocks.windows(2) {
            let h = g.semi_induced_bipartite(&pair[0], &pair[1]).map_err(|_| "blocks overlap")?;
            if h != self.h {
                return Err("consecutive blocks are not joined by h");
            }
        }
        for i in 0..self.beta {
            for j in i + 2..self.beta {
                let h = g.semi_induced_bipartite(&self.blocks[i], &self.blocks[j]).map_err(|_| "blocks overlap")?;
                if h.edge_count() != 0 {
                    return Err("edge between non-consecutive blocks");
                }
            }
        }
        if g.size() != self.expected_edges() {
            return Err("edge count differs from the block formula");
        }
        Ok(())
    }
}

/// Exact average-degree accounting for a chained instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim2Report {
    pub edges: usize,
    pub expected_edges: usize,
    /// `beta (alpha(alpha-1)/2 + alpha Delta_h)`.
    pub edge_bound: usize,
    pub average_degree: Rational,
    /// `alpha - 1 + 2 Delta_h`.
    pub degree_bound: Rational,
    pub max_left_degree: usize,
    pub passed: bool,
}

/// Checks `|E| = beta alpha(alpha-1)/2 + (beta-1)|E(h)| <= beta(alpha(alpha-1)/2 + alpha Delta_h)`
/// and `2|E|/|V| <= alpha - 1 + 2 Delta_h`, with `Delta_h` the largest left degree of `h`.
pub fn verify_claim2(inst: &ChainedCliqueInstance) -> Result<Claim2Report> {
    let (a, b) = (inst.alpha, inst.beta);
    let delta = inst.h.max_left_degree();
    let edges = inst.graph.size();
    let expected_edges = inst.expected_edges();
    let edge_bound = b * (a * (a - 1) / 2 + a * delta);
    let average_degree = inst.graph.average_degree()?;
    let degree_bound = Rational::from_integer((a - 1 + 2 * delta) as u64);
    let passed = edges == expected_edges && edges <= edge_bound && average_degree <= degree_bound;
    Ok(Claim2Report { edges, expected_edges, edge_bound, average_degree, degree_bound, max_left_degree: delta, passed })
}

/// Output of [`random_bipartite_restricted`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomBipartite {
    /// The `n x n` restriction.
    pub graph: BipartiteGraph,
    /// Left vertices of the `2n x 2n` host graph that were kept, in order.
    pub selected_left: Vec<usize>,
    /// Degrees of the kept left vertices in the host graph (all `<= delta`).
    pub host_left_degrees: Vec<usize>,
    /// Sampling rounds used; round `r` draws from ChaCha8 stream `r` of the seed.
    pub attempts: u32,
}

pub const DEFAULT_RETRIES: u32 = 64;

/// Samples `G(2n, 2n, delta/(4n))`, keeps the `n` lowest-index left vertices of
/// degree at most `delta` and the first `n` right vertices.
pub fn random_bipartite_restricted(n: usize, delta: usize, seed: u64) -> Result<RandomBipartite> {
    random_bipartite_restricted_with_retries(n, delta, seed, DEFAULT_RETRIES)
}

pub fn random_bipartite_restricted_with_retries(
    n: usize,
    delta: usize,
    seed: u64,
    retries: u32,
) -> Result<RandomBipartite> {
    if n == 0 || delta == 0 || delta > 4 * n {
        return Err(Error::InvalidParameter("random bipartite needs n >= 1 and 1 <= delta <= 4n"));
    }
    let (num, den) = (
        u32::try_from(delta).map_err(|_| Error::InvalidParameter("delta too large"))?,
        u32::try_from(4 * n).map_err(|_| Error::InvalidParameter("n too large"))?,
    );
    let side = 2 * n;
    for attempt in 0..retries {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(u64::from(attempt));
        let mut host = BipartiteGraph::new(side, side);
        for l in 0..side {
            for r in 0..side {
                if rng.random_ratio(num, den) {
                    host.add_edge(l, r)?;
                }
            }
        }
        let selected_left: Vec<usize> = (0..side).filter(|&l| host.left_degree(l) <= delta).take(n).collect();
        if selected_left.len() < n {
            continue;
        }
        let mut graph = BipartiteGraph::new(n, n);
        for (i, &l) in selected_left.iter().enumerate() {
            for r in host.left_neighbors(l).iter().filter(|&r| r < n) {
                graph.add_edge(i, r)?;
            }
        }
        let host_left_degrees = selected_left.iter().map(|&l| host.left_degree(l)).collect();
        return Ok(RandomBipartite { graph, selected_left, host_left_degrees, attempts: attempt + 1 });
    }
    Err(Error::GeneratorExhausted { attempts: retries })
}

/// Uniformly random `left x right` bipartite graph with edge probability `num/den`.
pub fn random_bipartite(left: usize, right: usize, num: u32, den: u32, seed: u64) -> Result<BipartiteGraph> {
    if den == 0 || num > den {
        return Err(Error::InvalidParameter("edge probability must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = BipartiteGraph::new(left, right);
    for l in 0..left {
        for r in 0..right {
            if rng.random_ratio(num, den) {
                h.add_edge(l, r)?;
            }
        }
    }
    Ok(h)
}

/// Largest order accepted by [`enumerate_connected_graphs`].
pub const ENUMERATION_LIMIT: usize = 9;

/// One representative (in canonical labelling) of every isomorphism class of
/// connected graphs on `n` vertices with at most `max_edges` edges, sorted by
/// edge count and then canonical code.
///
/// Classes on `j` vertices are grown from classes on `j - 1` vertices by adding
/// a vertex with a nonempty neighbourhood; this reaches every connected graph
/// because deleting a non-cut vertex keeps a graph connected.
pub fn enumerate_connected_graphs(n: usize, max_edges: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_connected_forms(n, max_edges)?.iter().map(CanonicalForm::to_graph).collect())
}

pub fn enumerate_connected_forms(n: usize, max_edges: usize) -> Result<Vec<CanonicalForm>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge { what: "enumerate_connected_graphs", size: n, limit: ENUMERATION_LIMIT });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: Vec<(usize, CanonicalForm)> = Vec::new();
    if max_edges + 1 >= n {
        level.push((0, canon::canonical_form(&Graph::empty(1))?));
    }
    for j in 2..=n {
        // later vertices each add at least one edge
        let cap = (max_edges + j).saturating_sub(n);
        let mut next = BTreeSet::new();
        for (m, form) in &level {
            let g = form.to_graph();
            let room = cap.saturating_sub(*m);
            for mask in 1u32..1 << (j - 1) {
                let extra = mask.count_ones() as usize;
                if extra > room {
                    continue;
                }
                let mut h = Graph::empty(j);
                for (u, v) in g.edges() {
                    h.add_edge(u, v)?;
                }
                for u in 0..j - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, j - 1)?;
                    }
                }
                next.insert((m + extra, canon::canonical_form(&h)?));
            }
        }
        level = next.into_iter().collect();
    }
    Ok(level.into_iter().map(|(_, f)| f).collect())
}

/// Seeded `G(n, m)` sample.
pub fn random_graph_nm(n: usize, m: usize, seed: u64, stream: u64) -> Result<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    if m > pairs.len() {
        return Err(Error::InvalidParameter("more edges than vertex pairs"));
    }
    let mut pairs = pairs;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    for i in 0..m {
        let j = rng.random_range(i..pairs.len());
        pairs.swap(i, j);
    }
    Graph::from_edges(n, &pairs[..m])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_join_examples() {
        assert_eq!(clique_join(2, 4).unwrap().size(), 5);
        let star = clique_join(1, 3).unwrap();
        assert_eq!(star.size(), 2);
        assert_eq!(star.degree(0), 2);
        assert_eq!(clique_join(3, 3).unwrap(), Graph::complete(3));
        assert!(clique_join(4, 3).is_err());
        assert!(clique_join(0, 3).is_err());
    }

    #[test]
    fn chained_examples() {
        let two_triangles = chained_clique(3, 2, &BipartiteGraph::new(3, 3)).unwrap();
        assert_eq!(two_triangles.graph.size(), 6);
        assert_eq!(two_triangles.graph.connected_components().len(), 2);
        let k6 = chained_clique(3, 2, &BipartiteGraph::complete(3, 3)).unwrap();
        assert_eq!(k6.graph, Graph::complete(6));
        let h = BipartiteGraph::from_edges(4, 4, &[(0, 0), (0, 1), (1, 1), (2, 2), (3, 3), (3, 0)]).unwrap();
        let inst = chained_clique(4, 3, &h).unwrap();
        assert_eq!(inst.graph.size(), 30);
        assert_eq!(inst.check_structure(), Ok(()));
        assert!(chained_clique(4, 3, &BipartiteGraph::new(3, 4)).is_err());
        assert!(chained_clique(3, 1, &BipartiteGraph::new(3, 3)).is_err());
    }

    #[test]
    fn claim2_on_matching_chain() {
        let inst = chained_clique(4, 3, &BipartiteGraph::perfect_matching(4)).unwrap();
        let r = verify_claim2(&inst).unwrap();
        assert!(r.passed);
        assert_eq!(r.edges, 3 * 6 + 2 * 4);
        assert_eq!(r.average_degree, Rational::new(52, 12));
        assert_eq!(r.degree_bound, Rational::from_integer(5));
    }

    #[test]
    fn random_bipartite_is_deterministic_and_bounded() {
        let a = random_bipartite_restricted(20, 8, 7).unwrap();
        let b = random_bipartite_restricted(20, 8, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.graph.max_left_degree() <= 8);
        assert!(a.host_left_degrees.iter().all(|&d| d <= 8));
        assert_ne!(a.graph, random_bipartite_restricted(20, 8, 8).unwrap().graph);
        assert!(random_bipartite_restricted(2, 9, 0).is_err());
    }

    #[test]
    fn exhausted_retries_reported() {
        // n = delta = 1: a single round fails when both host left vertices have degree 2
        let mut exhausted = false;
        for seed in 0..5000 {
            if let Err(e) = random_bipartite_restricted_with_retries(1, 1, seed, 1) {
                assert_eq!(e, Error::GeneratorExhausted { attempts: 1 });
                exhausted = true;
                break;
            }
        }
        assert!(exhausted);
    }

    #[test]
    fn small_enumeration_counts() {
        assert_eq!(enumerate_connected_graphs(1, 0).unwrap().len(), 1);
        assert_eq!(enumerate_connected_graphs(2, 10).unwrap(), [Graph::complete(2)]);
        assert_eq!(enumerate_connected_graphs(3, 10).unwrap().len(), 2);
        assert_eq!(enumerate_connected_graphs(4, 10).unwrap().len(), 6);
        // trees on 5 vertices
        assert_eq!(enumerate_connected_graphs(5, 4).unwrap().len(), 3);
        assert!(enumerate_connected_graphs(10, 12).is_err());
    }

    #[test]
    fn gnm_sample() {
        let g = random_graph_nm(10, 17, 3, 0).unwrap();
        assert_eq!(g.size(), 17);
        assert_eq!(g, random_graph_nm(10, 17, 3, 0).unwrap());
    }
}

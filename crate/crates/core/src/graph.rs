//! Labeled simple graphs on vertices `0..n`, stored as per-vertex bitsets.
//!
//! Graphs are plain values: operations never mutate their input, so a graph
//! can be shared freely across threads once built.

use std::fmt;

use crate::bipartite::BipartiteGraph;

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Panics on self-loops or labels
    /// outside `0..n`; repeated edges are harmless.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &word)| BitIter { word, base: i * 64 })
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The complement: `uv` is an edge iff `u != v` and `uv` is not one here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        if self.n == 0 {
            return g;
        }
        let tail_mask = if self.n % 64 == 0 {
            !0u64
        } else {
            (1u64 << (self.n % 64)) - 1
        };
        for v in 0..self.n {
            for w in 0..self.words {
                let mut word = !self.bits[v * self.words + w];
                if w == self.words - 1 {
                    word &= tail_mask;
                }
                g.bits[v * self.words + w] = word;
            }
            // clear the diagonal bit
            g.bits[v * self.words + v / 64] &= !(1 << (v % 64));
        }
        g
    }

    /// The subgraph induced by `vertices`, relabeled by position.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Deletes vertex `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n);
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// The subgraph induced by the vertices of degree `d`, together with the
    /// map from its labels back to the original ones.
    pub fn degree_subgraph(&self, d: usize) -> InducedSubgraph {
        let vertices: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) == d).collect();
        InducedSubgraph {
            graph: self.induced_subgraph(&vertices),
            vertices,
        }
    }

    /// The bipartite subgraph of edges joining degree-`p` vertices to
    /// degree-`q` vertices. `p != q` is a contract: for `p == q` use
    /// [`Graph::degree_subgraph`].
    pub fn cross_degree_subgraph(&self, p: usize, q: usize) -> CrossSubgraph {
        assert!(p != q, "cross subgraph needs two distinct degrees, got {p}");
        let left_vertices: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) == p).collect();
        let right_vertices: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) == q).collect();
        let mut graph = BipartiteGraph::new(left_vertices.len(), right_vertices.len());
        for (i, &u) in left_vertices.iter().enumerate() {
            for (j, &v) in right_vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    graph.add_edge(i, j);
                }
            }
        }
        CrossSubgraph {
            graph,
            left_vertices,
            right_vertices,
        }
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent_set(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Splits the vertex set into an independent set `L` and a clique `R`
    /// if possible. Vertices are taken in order of decreasing degree (ties by
    /// label) and the longest clique prefix becomes `R`; the remainder must
    /// then be independent.
    pub fn split_partition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| self.degree(b).cmp(&self.degree(a)).then(a.cmp(&b)));
        let mut clique: Vec<usize> = Vec::new();
        for &v in &order {
            if clique.iter().all(|&u| self.has_edge(u, v)) {
                clique.push(v);
            } else {
                break;
            }
        }
        let mut rest: Vec<usize> = order[clique.len()..].to_vec();
        if !self.is_independent_set(&rest) {
            return None;
        }
        rest.sort_unstable();
        clique.sort_unstable();
        Some((rest, clique))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// An induced subgraph plus the map from its labels to the original ones.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `vertices[i]` is the original label of subgraph vertex `i`.
    pub vertices: Vec<usize>,
}

/// A cross-degree bipartite subgraph plus both label maps.
#[derive(Clone, Debug)]
pub struct CrossSubgraph {
    pub graph: BipartiteGraph,
    pub left_vertices: Vec<usize>,
    pub right_vertices: Vec<usize>,
}

struct BitIter {
    word: u64,
    base: usize,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        let k4 = Graph::complete(4);
        let c = k4.complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.n(), 4);
    }

    #[test]
    fn complement_is_involution() {
        let c5 = cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        // C5 is self-complementary up to relabeling; degrees certainly agree
        assert_eq!(c5.complement().degrees(), c5.degrees());
    }

    #[test]
    fn complement_across_word_boundary() {
        let g = Graph::from_edges(70, [(0, 69), (3, 64)]);
        let c = g.complement();
        assert!(!c.has_edge(0, 69));
        assert!(c.has_edge(0, 68));
        assert_eq!(c.complement(), g);
        assert_eq!(g.edge_count() + c.edge_count(), 70 * 69 / 2);
    }

    #[test]
    fn degree_subgraph_of_complete_is_itself() {
        let k4 = Graph::complete(4);
        let sub = k4.degree_subgraph(3);
        assert_eq!(sub.vertices, vec![0, 1, 2, 3]);
        assert_eq!(sub.graph, k4);
    }

    #[test]
    fn degree_subgraph_of_star_leaves_is_edgeless() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        let sub = star.degree_subgraph(1);
        assert_eq!(sub.vertices, vec![1, 2, 3]);
        assert_eq!(sub.graph.edge_count(), 0);
    }

    #[test]
    fn degree_subgraph_of_p4_middle() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let sub = p4.degree_subgraph(2);
        assert_eq!(sub.vertices, vec![1, 2]);
        assert_eq!(sub.graph.edges(), vec![(0, 1)]);
    }

    #[test]
    fn cross_degree_subgraph_of_star() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        let cross = star.cross_degree_subgraph(3, 1);
        assert_eq!(cross.left_vertices, vec![0]);
        assert_eq!(cross.right_vertices, vec![1, 2, 3]);
        assert_eq!(cross.graph.edge_count(), 3);
    }

    #[test]
    fn cross_degree_subgraph_of_p4_is_two_disjoint_edges() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let cross = p4.cross_degree_subgraph(2, 1);
        assert_eq!(cross.left_vertices, vec![1, 2]);
        assert_eq!(cross.right_vertices, vec![0, 3]);
        assert_eq!(cross.graph.edges(), vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn edge_partition_into_degree_classes() {
        // edges inside G_d plus all G_{p,q} partition E(G)
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let degrees: std::collections::BTreeSet<usize> = g.degrees().into_iter().collect();
        let mut total = 0;
        for &d in &degrees {
            total += g.degree_subgraph(d).graph.edge_count();
        }
        for &p in &degrees {
            for &q in &degrees {
                if p < q {
                    total += g.cross_degree_subgraph(p, q).graph.edge_count();
                }
            }
        }
        assert_eq!(total, g.edge_count());
    }

    #[test]
    fn split_partition_of_complete() {
        let k4 = Graph::complete(4);
        let (l, r) = k4.split_partition().unwrap();
        assert!(l.is_empty());
        assert_eq!(r, vec![0, 1, 2, 3]);
    }

    #[test]
    fn split_partition_rejects_c5_like_brute_force() {
        // oracle: try all 2^5 partitions
        let c5 = cycle(5);
        let mut any = false;
        for mask in 0u32..32 {
            let left: Vec<usize> = (0..5).filter(|&v| mask >> v & 1 == 0).collect();
            let right: Vec<usize> = (0..5).filter(|&v| mask >> v & 1 == 1).collect();
            if c5.is_independent_set(&left) && c5.is_clique(&right) {
                any = true;
            }
        }
        assert!(!any);
        assert!(c5.split_partition().is_none());
    }

    #[test]
    fn split_partition_matches_brute_force_up_to_n6() {
        // exhaustively validate the greedy recognizer on every graph with n <= 6
        for n in 0..=6usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u64..(1 << pairs.len()) {
                let g = Graph::from_edges(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e),
                );
                let brute = (0u64..(1 << n)).any(|pm| {
                    let left: Vec<usize> = (0..n).filter(|&v| pm >> v & 1 == 0).collect();
                    let right: Vec<usize> = (0..n).filter(|&v| pm >> v & 1 == 1).collect();
                    g.is_independent_set(&left) && g.is_clique(&right)
                });
                let greedy = g.split_partition();
                assert_eq!(greedy.is_some(), brute, "split mismatch on {g:?}");
                if let Some((l, r)) = greedy {
                    assert!(g.is_independent_set(&l) && g.is_clique(&r));
                    assert_eq!(l.len() + r.len(), n);
                }
            }
        }
    }

    #[test]
    fn delete_vertex_relabels() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let h = p4.delete_vertex(1);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(1, 2)]);
    }

    #[test]
    #[should_panic(expected = "self-loop")]
    fn add_edge_rejects_self_loop() {
        let mut g = Graph::new(3);
        g.add_edge(1, 1);
    }
}

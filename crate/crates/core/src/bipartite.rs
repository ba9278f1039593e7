//! Bipartite graphs with explicit left/right parts and a biadjacency bitset.

use std::fmt;

use crate::graph::Graph;
use crate::types::VertexType;

/// A bipartite graph with parts `0..left` and `0..right`; edges only run
/// between the parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        let words = right.div_ceil(64);
        BipartiteGraph {
            left,
            right,
            words,
            rows: vec![0; left * words],
        }
    }

    pub fn from_edges(
        left: usize,
        right: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut b = BipartiteGraph::new(left, right);
        for (i, j) in edges {
            b.add_edge(i, j);
        }
        b
    }

    pub fn left_size(&self) -> usize {
        self.left
    }

    pub fn right_size(&self) -> usize {
        self.right
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        assert!(i < self.left && j < self.right, "edge ({i}, {j}) out of range");
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i < self.left && j < self.right, "edge ({i}, {j}) out of range");
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        assert!(i < self.left && j < self.right, "edge ({i}, {j}) out of range");
        self.rows[i * self.words + j / 64] &= !(1 << (j % 64));
    }

    pub fn left_degree(&self, i: usize) -> usize {
        self.rows[i * self.words..(i + 1) * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn right_degree(&self, j: usize) -> usize {
        (0..self.left).filter(|&i| self.has_edge(i, j)).count()
    }

    pub fn left_degrees(&self) -> Vec<usize> {
        (0..self.left).map(|i| self.left_degree(i)).collect()
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        let mut out = vec![0; self.right];
        for i in 0..self.left {
            for j in self.neighbors_of_left(i) {
                out[j] += 1;
            }
        }
        out
    }

    pub fn neighbors_of_left(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.rows[i * self.words..(i + 1) * self.words];
        row.iter().enumerate().flat_map(|(w, &word)| {
            (0..64)
                .filter(move |b| word >> b & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// All edges `(i, j)` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.left {
            for j in self.neighbors_of_left(i) {
                out.push((i, j));
            }
        }
        out
    }

    /// The bipartite complement: flip every cross-part pair, keep the parts.
    pub fn bipartite_complement(&self) -> BipartiteGraph {
        let mut b = BipartiteGraph::new(self.left, self.right);
        if self.right == 0 {
            return b;
        }
        let tail_mask = if self.right % 64 == 0 {
            !0u64
        } else {
            (1u64 << (self.right % 64)) - 1
        };
        for i in 0..self.left {
            for w in 0..self.words {
                let mut word = !self.rows[i * self.words + w];
                if w == self.words - 1 {
                    word &= tail_mask;
                }
                b.rows[i * self.words + w] = word;
            }
        }
        b
    }

    /// The underlying simple graph: left vertex `i` becomes `i`, right
    /// vertex `j` becomes `left + j`.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.left + self.right);
        for (i, j) in self.edges() {
            g.add_edge(i, self.left + j);
        }
        g
    }

    /// Type of a left vertex: degrees of its right-side neighbours.
    pub fn left_vertex_type(&self, i: usize) -> VertexType {
        let right_degrees = self.right_degrees();
        VertexType::new(self.neighbors_of_left(i).map(|j| right_degrees[j]).collect())
    }

    /// Types of all left vertices, indexed by label.
    pub fn left_types(&self) -> Vec<VertexType> {
        let right_degrees = self.right_degrees();
        (0..self.left)
            .map(|i| {
                VertexType::new(self.neighbors_of_left(i).map(|j| right_degrees[j]).collect())
            })
            .collect()
    }

    /// Types of all right vertices, indexed by label.
    pub fn right_types(&self) -> Vec<VertexType> {
        let left_degrees = self.left_degrees();
        let mut entries: Vec<Vec<usize>> = vec![Vec::new(); self.right];
        for i in 0..self.left {
            for j in self.neighbors_of_left(i) {
                entries[j].push(left_degrees[i]);
            }
        }
        entries.into_iter().map(VertexType::new).collect()
    }
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BipartiteGraph({}+{}, edges={:?})",
            self.left,
            self.right,
            self.edges()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_bipartite_is_empty() {
        let mut b = BipartiteGraph::new(2, 2);
        for i in 0..2 {
            for j in 0..2 {
                b.add_edge(i, j);
            }
        }
        let c = b.bipartite_complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.bipartite_complement(), b);
    }

    #[test]
    fn complement_of_matching_has_degree_two() {
        let b = BipartiteGraph::from_edges(3, 3, [(0, 0), (1, 1), (2, 2)]);
        let c = b.bipartite_complement();
        for i in 0..3 {
            assert_eq!(c.left_degree(i), 2);
            assert_eq!(c.right_degree(i), 2);
        }
    }

    #[test]
    fn types_count_opposite_degrees() {
        // left 0 sees both right vertices (degrees 2 and 1)
        let b = BipartiteGraph::from_edges(2, 2, [(0, 0), (0, 1), (1, 0)]);
        assert_eq!(b.left_vertex_type(0), VertexType::new(vec![2, 1]));
        assert_eq!(b.left_vertex_type(1), VertexType::new(vec![2]));
        assert_eq!(b.right_types()[0], VertexType::new(vec![2, 1]));
    }

    #[test]
    fn to_graph_offsets_right_labels() {
        let b = BipartiteGraph::from_edges(2, 2, [(0, 1), (1, 0)]);
        let g = b.to_graph();
        assert_eq!(g.edges(), vec![(0, 3), (1, 2)]);
    }
}

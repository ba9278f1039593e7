//! Vertex types, type sequences and degree sequences.
//!
//! Types are compared with the total order used throughout: a longer type is
//! larger, and types of equal length compare lexicographically. Sequences are
//! kept non-increasing under that order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::graph::Graph;

/// The degrees of a vertex's neighbours, listed non-increasing.
///
/// The empty type is legal and describes an isolated vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexType(Vec<usize>);

impl VertexType {
    /// Builds a type from neighbour degrees in any order.
    pub fn new(mut entries: Vec<usize>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        VertexType(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Length of the type, i.e. the degree of the vertex it describes.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// How many entries equal `degree`.
    pub fn count_of(&self, degree: usize) -> usize {
        self.0.iter().filter(|&&x| x == degree).count()
    }
}

impl Ord for VertexType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for VertexType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

/// All vertex types of a graph, sorted non-increasing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TypeSequence(Vec<VertexType>);

impl TypeSequence {
    pub fn new(mut types: Vec<VertexType>) -> Self {
        types.sort_unstable_by(|a, b| b.cmp(a));
        TypeSequence(types)
    }

    pub fn types(&self) -> &[VertexType] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexType> {
        self.0.iter()
    }

    /// True when no two types coincide.
    pub fn all_distinct(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// Degree multiset implied by the sequence: degree -> multiplicity.
    pub fn degree_counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for t in &self.0 {
            *counts.entry(t.len()).or_insert(0) += 1;
        }
        counts
    }
}

/// Returned when a sequence that must be non-increasing is not.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("sequence increases at position {position}")]
pub struct UnsortedSequence {
    pub position: usize,
}

/// A non-increasing sequence of vertex degrees.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts arbitrary degrees into non-increasing order.
    pub fn sorted(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    /// Accepts the degrees only if already non-increasing.
    pub fn from_nonincreasing(degrees: Vec<usize>) -> Result<Self, UnsortedSequence> {
        if let Some(pos) = degrees.windows(2).position(|w| w[0] < w[1]) {
            return Err(UnsortedSequence { position: pos + 1 });
        }
        Ok(DegreeSequence(degrees))
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Multiplicity of each degree: degree -> count.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &d in &self.0 {
            *counts.entry(d).or_insert(0) += 1;
        }
        counts
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

impl Graph {
    /// The type of `v`: degrees of its neighbours, non-increasing.
    pub fn vertex_type(&self, v: usize) -> VertexType {
        assert!(v < self.n(), "vertex {v} out of range for order {}", self.n());
        VertexType::new(self.neighbors(v).map(|w| self.degree(w)).collect())
    }

    /// The type of `v` in the complement, computed without building it:
    /// each non-neighbour of degree `y` contributes `n - 1 - y`.
    pub fn complement_vertex_type(&self, v: usize) -> VertexType {
        assert!(v < self.n(), "vertex {v} out of range for order {}", self.n());
        let n = self.n();
        let entries = (0..n)
            .filter(|&w| w != v && !self.has_edge(v, w))
            .map(|w| n - 1 - self.degree(w))
            .collect();
        VertexType::new(entries)
    }

    /// All vertex types, sorted non-increasing.
    pub fn type_sequence(&self) -> TypeSequence {
        TypeSequence::new((0..self.n()).map(|v| self.vertex_type(v)).collect())
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::sorted(self.degrees())
    }
}

//! Obliqueness predicates, degree-class statistics and the structural audit
//! for graphs whose degree or type data is symmetric with the complement.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::bipartite::BipartiteGraph;
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("vertex {vertex} has no dual partner (graph is not dually vertex-oblique)")]
    NoDualPartner { vertex: usize },
    #[error("vertex {vertex} has {count} dual partners (graph is not dually vertex-oblique)")]
    AmbiguousDualPartner { vertex: usize, count: usize },
    #[error("parts have different sizes: {left} vs {right}")]
    PartSizeMismatch { left: usize, right: usize },
    #[error("part size {size} is odd; parts must have size 2k")]
    OddPartSize { size: usize },
}

/// Vertex and edge counts by degree class: `vertex_counts[d]` vertices of
/// degree `d`, `edge_counts[(x, y)]` edges joining a degree-`x` vertex to a
/// degree-`y` vertex (keys normalized to `x <= y`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeClassStats {
    pub vertex_counts: BTreeMap<usize, usize>,
    pub edge_counts: BTreeMap<(usize, usize), usize>,
}

impl DegreeClassStats {
    pub fn vertices_of_degree(&self, d: usize) -> usize {
        self.vertex_counts.get(&d).copied().unwrap_or(0)
    }

    pub fn edges_between(&self, x: usize, y: usize) -> usize {
        let key = (x.min(y), x.max(y));
        self.edge_counts.get(&key).copied().unwrap_or(0)
    }
}

/// Counts vertices and edges per degree class in one pass over the edges.
pub fn class_stats(g: &Graph) -> DegreeClassStats {
    let degrees = g.degrees();
    let mut vertex_counts = BTreeMap::new();
    for &d in &degrees {
        *vertex_counts.entry(d).or_insert(0) += 1;
    }
    let mut edge_counts = BTreeMap::new();
    for (u, v) in g.edges() {
        let (x, y) = (degrees[u].min(degrees[v]), degrees[u].max(degrees[v]));
        *edge_counts.entry((x, y)).or_insert(0) += 1;
    }
    DegreeClassStats {
        vertex_counts,
        edge_counts,
    }
}

/// True when all vertex types are pairwise distinct.
pub fn is_vertex_oblique(g: &Graph) -> bool {
    g.type_sequence().all_distinct()
}

/// True when the `2n` types of the graph and of its complement are pairwise
/// distinct.
pub fn is_super_vertex_oblique(g: &Graph) -> bool {
    let mut all: Vec<_> = g.type_sequence().types().to_vec();
    all.extend(g.complement().type_sequence().types().iter().cloned());
    all.sort_unstable_by(|a, b| b.cmp(a));
    all.windows(2).all(|w| w[0] != w[1])
}

/// True when the graph is vertex-oblique and its type multiset equals that of
/// its complement.
pub fn is_dually_vertex_oblique(g: &Graph) -> bool {
    let ts = g.type_sequence();
    ts.all_distinct() && ts == g.complement().type_sequence()
}

/// The unique vertex whose type in the complement equals the type of `v`.
/// Requires a dually vertex-oblique graph; reports whether the partner is
/// missing or ambiguous otherwise.
pub fn dual_partner(g: &Graph, v: usize) -> Result<usize, AnalysisError> {
    let target = g.vertex_type(v);
    let mut found = Vec::new();
    for w in 0..g.n() {
        if g.complement_vertex_type(w) == target {
            found.push(w);
        }
    }
    match found.as_slice() {
        [w] => Ok(*w),
        [] => Err(AnalysisError::NoDualPartner { vertex: v }),
        _ => Err(AnalysisError::AmbiguousDualPartner {
            vertex: v,
            count: found.len(),
        }),
    }
}

/// Outcome of a single audit part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { witness: String },
    NotApplicable,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn applicable(&self) -> bool {
        !matches!(self, Verdict::NotApplicable)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail { .. } => "fail",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

/// One verdict per part A-F of the degree/type symmetry audit, with the
/// premise level the graph reaches.
///
/// Parts A and B apply to graphs with the degree sequence of their
/// complement, C and D additionally need equal type multisets, E and F need
/// the graph to be dually vertex-oblique. Inapplicable parts are reported as
/// such rather than evaluated out of context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaAudit {
    pub degree_symmetric: bool,
    pub type_symmetric: bool,
    pub dually_oblique: bool,
    pub part_a: Verdict,
    pub part_b: Verdict,
    pub part_c: Verdict,
    pub part_d: Verdict,
    pub part_e: Verdict,
    pub part_f: Verdict,
}

impl LemmaAudit {
    pub fn parts(&self) -> [(&'static str, &Verdict); 6] {
        [
            ("A", &self.part_a),
            ("B", &self.part_b),
            ("C", &self.part_c),
            ("D", &self.part_d),
            ("E", &self.part_e),
            ("F", &self.part_f),
        ]
    }

    /// True when every applicable part passes.
    pub fn all_applicable_pass(&self) -> bool {
        self.parts()
            .iter()
            .all(|(_, v)| !v.applicable() || v.passed())
    }

    /// True when all six parts are applicable and pass.
    pub fn all_pass(&self) -> bool {
        self.parts().iter().all(|(_, v)| v.passed())
    }
}

/// Runs the six-part audit with explicit premise gating.
pub fn lemma_audit(g: &Graph) -> LemmaAudit {
    let n = g.n();
    let comp = g.complement();
    let ds = g.degree_sequence();
    let degree_symmetric = ds == comp.degree_sequence();

    // Part A doubles as the report of the first premise: the degree sequence
    // is symmetric about (n-1)/2 exactly when it equals the complement's.
    let d = ds.degrees();
    let part_a = match (0..n).find(|&i| d[i] + d[n - 1 - i] != n - 1) {
        None => Verdict::Pass,
        Some(i) => Verdict::Fail {
            witness: format!(
                "d_{} + d_{} = {} + {} != {}",
                i + 1,
                n - i,
                d[i],
                d[n - 1 - i],
                n - 1
            ),
        },
    };

    let part_b = if !degree_symmetric {
        Verdict::NotApplicable
    } else if n % 4 <= 1 {
        Verdict::Pass
    } else {
        Verdict::Fail {
            witness: format!("n = {n} is {} mod 4", n % 4),
        }
    };

    let ts = g.type_sequence();
    let type_symmetric = ts == comp.type_sequence();
    let dually_oblique = type_symmetric && ts.all_distinct();

    let stats = class_stats(g);
    let part_c = if !type_symmetric {
        Verdict::NotApplicable
    } else {
        check_part_c(n, &stats)
    };

    let part_d = if !type_symmetric {
        Verdict::NotApplicable
    } else {
        check_part_d(n, &stats)
    };

    let part_e = if !dually_oblique {
        Verdict::NotApplicable
    } else {
        let bad = stats
            .vertex_counts
            .iter()
            .find(|&(&deg, &count)| 2 * deg != n - 1 && count >= 2 * deg);
        match bad {
            None => Verdict::Pass,
            Some((&deg, &count)) => Verdict::Fail {
                witness: format!("r_{deg} = {count} >= {}", 2 * deg),
            },
        }
    };

    let part_f = if !dually_oblique {
        Verdict::NotApplicable
    } else if stats.vertex_counts.len() >= 3 {
        Verdict::Pass
    } else {
        Verdict::Fail {
            witness: format!("only {} distinct degrees", stats.vertex_counts.len()),
        }
    };

    LemmaAudit {
        degree_symmetric,
        type_symmetric,
        dually_oblique,
        part_a,
        part_b,
        part_c,
        part_d,
        part_e,
        part_f,
    }
}

/// Part C: counting edges between complementary classes. For every degree
/// pair, `s_{x,y} + s_{x',y'}` (primes = complementary degrees) equals the
/// number of vertex pairs with degrees `x, y`; in particular
/// `s_{d,d'} = r_d^2 / 2`, except `s_{d,d} = C(r_d, 2) / 2` at the middle
/// degree `d = (n-1)/2`.
fn check_part_c(n: usize, stats: &DegreeClassStats) -> Verdict {
    let degrees: Vec<usize> = stats.vertex_counts.keys().copied().collect();
    for (i, &x) in degrees.iter().enumerate() {
        for &y in &degrees[i..] {
            let rx = stats.vertices_of_degree(x);
            let ry = stats.vertices_of_degree(y);
            let (xb, yb) = (n - 1 - x, n - 1 - y);
            // When {x,y} = {xb,yb} the two summands coincide, which is
            // exactly the halved special case at complementary degrees.
            let lhs = stats.edges_between(x, y) + stats.edges_between(xb, yb);
            let pairs = if x == y { ry * (ry - 1) / 2 } else { rx * ry };
            if lhs != pairs {
                return Verdict::Fail {
                    witness: format!(
                        "s_{{{x},{y}}} + s_{{{xb},{yb}}} = {lhs}, expected {pairs}"
                    ),
                };
            }
        }
    }
    Verdict::Pass
}

/// Part D: every class has even size, except the middle class whose size is
/// 1 mod 4.
fn check_part_d(n: usize, stats: &DegreeClassStats) -> Verdict {
    for (&deg, &count) in &stats.vertex_counts {
        let middle = n % 2 == 1 && 2 * deg == n - 1;
        let ok = if middle { count % 4 == 1 } else { count % 2 == 0 };
        if !ok {
            return Verdict::Fail {
                witness: if middle {
                    format!("r_{deg} = {count} is {} mod 4", count % 4)
                } else {
                    format!("r_{deg} = {count} is odd")
                },
            };
        }
    }
    Verdict::Pass
}

/// The three conditions a bipartite graph on parts of size 2k must satisfy
/// to be dually semi-vertex-oblique.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemiObliqueConditions {
    /// (i) the left types are pairwise distinct
    pub left_types_distinct: bool,
    /// (ii) the left and right type multisets coincide
    pub type_multisets_match: bool,
    /// (iii) the left type multiset is invariant under bipartite complement
    pub complement_invariant: bool,
}

impl SemiObliqueConditions {
    pub fn all(&self) -> bool {
        self.left_types_distinct && self.type_multisets_match && self.complement_invariant
    }
}

/// Evaluates conditions (i)-(iii) separately; errors if the parts do not have
/// equal even sizes.
pub fn semi_oblique_conditions(b: &BipartiteGraph) -> Result<SemiObliqueConditions, AnalysisError> {
    if b.left_size() != b.right_size() {
        return Err(AnalysisError::PartSizeMismatch {
            left: b.left_size(),
            right: b.right_size(),
        });
    }
    if b.left_size() % 2 != 0 {
        return Err(AnalysisError::OddPartSize { size: b.left_size() });
    }
    let mut left = b.left_types();
    left.sort_unstable_by(|a, c| c.cmp(a));
    let left_types_distinct = left.windows(2).all(|w| w[0] != w[1]);
    let mut right = b.right_types();
    right.sort_unstable_by(|a, c| c.cmp(a));
    let type_multisets_match = left == right;
    let mut comp_left = b.bipartite_complement().left_types();
    comp_left.sort_unstable_by(|a, c| c.cmp(a));
    let complement_invariant = comp_left == left;
    Ok(SemiObliqueConditions {
        left_types_distinct,
        type_multisets_match,
        complement_invariant,
    })
}

/// True when the bipartite graph satisfies all of (i)-(iii).
pub fn is_dually_semi_vertex_oblique(b: &BipartiteGraph) -> Result<bool, AnalysisError> {
    semi_oblique_conditions(b).map(|c| c.all())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1)))
    }

    #[test]
    fn class_stats_of_complete() {
        let stats = class_stats(&Graph::complete(4));
        assert_eq!(stats.vertices_of_degree(3), 4);
        assert_eq!(stats.edges_between(3, 3), 6);
        assert_eq!(stats.vertex_counts.values().sum::<usize>(), 4);
    }

    #[test]
    fn class_stats_of_star() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        let stats = class_stats(&star);
        assert_eq!(stats.vertices_of_degree(3), 1);
        assert_eq!(stats.vertices_of_degree(1), 3);
        assert_eq!(stats.edges_between(1, 3), 3);
        assert_eq!(stats.edges_between(1, 1), 0);
    }

    #[test]
    fn regular_graphs_are_not_oblique() {
        assert!(!is_vertex_oblique(&cycle(5)));
        assert!(!is_vertex_oblique(&Graph::complete(4)));
        assert!(!is_vertex_oblique(&path(4))); // both ends have type (2)
    }

    #[test]
    fn single_vertex_is_trivially_oblique() {
        assert!(is_vertex_oblique(&Graph::new(1)));
        // but never super: its type collides with its complement type
        assert!(!is_super_vertex_oblique(&Graph::new(1)));
    }

    #[test]
    fn small_orders_admit_no_dually_oblique_graph() {
        // brute force over all graphs with 4 and 5 vertices
        for n in [4usize, 5] {
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
                assert!(!is_dually_vertex_oblique(&g));
            }
        }
    }

    #[test]
    fn audit_of_c5() {
        let audit = lemma_audit(&cycle(5));
        assert!(audit.degree_symmetric && audit.type_symmetric);
        assert!(!audit.dually_oblique);
        assert!(audit.part_a.passed());
        assert!(audit.part_b.passed());
        assert!(audit.part_c.passed()); // s_{2,2} = 5 = C(5,2)/2
        assert!(audit.part_d.passed()); // r_2 = 5 = 1 mod 4
        assert_eq!(audit.part_e, Verdict::NotApplicable);
        assert_eq!(audit.part_f, Verdict::NotApplicable);
        assert!(audit.all_applicable_pass());
    }

    #[test]
    fn audit_of_p4() {
        let audit = lemma_audit(&path(4));
        assert!(audit.part_a.passed());
        assert!(audit.part_b.passed());
        assert!(audit.part_c.passed()); // s_{1,2} = 2 = r_1^2 / 2
        assert!(audit.part_d.passed()); // r_1 = r_2 = 2
        assert!(!audit.dually_oblique);
    }

    #[test]
    fn audit_reports_asymmetric_degree_sequence() {
        let audit = lemma_audit(&Graph::complete(4));
        assert!(!audit.degree_symmetric);
        assert!(matches!(audit.part_a, Verdict::Fail { .. }));
        assert_eq!(audit.part_b, Verdict::NotApplicable);
        assert_eq!(audit.part_c, Verdict::NotApplicable);
    }

    #[test]
    fn dual_partner_fails_off_contract() {
        let err = dual_partner(&cycle(5), 0).unwrap_err();
        // every vertex of C5 matches: ambiguous
        assert_eq!(
            err,
            AnalysisError::AmbiguousDualPartner { vertex: 0, count: 5 }
        );
        let err = dual_partner(&Graph::complete(4), 0).unwrap_err();
        assert_eq!(err, AnalysisError::NoDualPartner { vertex: 0 });
    }

    #[test]
    fn perfect_matching_is_not_semi_oblique() {
        let b = BipartiteGraph::from_edges(4, 4, (0..4).map(|i| (i, i)));
        let cond = semi_oblique_conditions(&b).unwrap();
        assert!(!cond.left_types_distinct);
        assert!(!cond.all());
    }

    #[test]
    fn full_degree_left_vertex_rules_out_semi_obliqueness() {
        // a left vertex adjacent to the whole right part has complement
        // degree 0, impossible under (ii) + (iii)
        let mut b = BipartiteGraph::new(4, 4);
        for j in 0..4 {
            b.add_edge(0, j);
        }
        b.add_edge(1, 0);
        b.add_edge(2, 1);
        b.add_edge(3, 2);
        b.add_edge(3, 3);
        assert!(!is_dually_semi_vertex_oblique(&b).unwrap());
    }

    #[test]
    fn semi_conditions_check_part_sizes() {
        let b = BipartiteGraph::new(2, 4);
        assert_eq!(
            semi_oblique_conditions(&b).unwrap_err(),
            AnalysisError::PartSizeMismatch { left: 2, right: 4 }
        );
        let b = BipartiteGraph::new(3, 3);
        assert_eq!(
            semi_oblique_conditions(&b).unwrap_err(),
            AnalysisError::OddPartSize { size: 3 }
        );
    }
}

//! Constructions of dually vertex-oblique graphs for every feasible order:
//! pinned base fixtures, the four-vertex extension, the eight-vertex
//! bipartite extension, clique completion to split graphs, and the apex
//! vertex for odd orders.
//!
//! The base fixtures are committed edge-list files derived once by the
//! exhaustive searches in [`crate::search`]; the `regen-fixtures` command of
//! the CLI re-runs the searches and fails on any drift.

use thiserror::Error;

use crate::analysis::{dual_partner, is_dually_vertex_oblique, semi_oblique_conditions};
use crate::bipartite::BipartiteGraph;
use crate::graph::Graph;
use crate::io;
use crate::types::VertexType;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("graph is not dually vertex-oblique")]
    NotDuallyVertexOblique,
    #[error("bipartite graph is not dually semi-vertex-oblique")]
    NotDuallySemiVertexOblique,
    #[error("order {n} is not a multiple of 4")]
    OrderNotMultipleOfFour { n: usize },
    #[error("order {n} is {} mod 4; feasible orders are 0 or 1 mod 4", .n % 4)]
    InfeasibleResidue { n: usize },
    #[error("no dually vertex-oblique graph has order {n} < 8")]
    OrderTooSmall { n: usize },
    #[error("split constructions need order >= 12, got {n}")]
    SplitOrderTooSmall { n: usize },
    #[error("no pinned base fixture for k = {k}; supported: 3, 4")]
    UnsupportedSemiBase { k: usize },
    #[error("parts must have equal even size, got {left}+{right}")]
    BadPartSizes { left: usize, right: usize },
}

const BASE8: &str = include_str!("../fixtures/base8.edges");
const SEMI12: &str = include_str!("../fixtures/semi12.edges");
const SEMI16: &str = include_str!("../fixtures/semi16.edges");

/// The pinned dually vertex-oblique graph on 8 vertices, the smallest
/// possible order. Derived by `enumerate_dvo(8)` and committed.
pub fn base8() -> Graph {
    io::parse_graph(BASE8).expect("pinned base8 fixture parses")
}

/// The pinned dually semi-vertex-oblique bipartite graphs with parts of
/// size 2k, k in {3, 4}. Derived by `search_semi_dvo` and committed.
pub fn semi_base(k: usize) -> Result<BipartiteGraph, ConstructError> {
    let text = match k {
        3 => SEMI12,
        4 => SEMI16,
        _ => return Err(ConstructError::UnsupportedSemiBase { k }),
    };
    Ok(io::parse_bipartite(text).expect("pinned semi fixture parses"))
}

/// Extends a dually vertex-oblique graph on 4k vertices by four vertices,
/// keeping the property. The new vertices are appended in the fixed order
/// `v2, w2, v2bar, w2bar` (labels n..n+3) and induce a P4; every old degree
/// grows by exactly 2. The anchor is the lowest-labeled vertex and its dual
/// partner.
pub fn extend_plus4(g: &Graph) -> Result<Graph, ConstructError> {
    let n = g.n();
    if n == 0 || n % 4 != 0 {
        return Err(ConstructError::OrderNotMultipleOfFour { n });
    }
    if !is_dually_vertex_oblique(g) {
        return Err(ConstructError::NotDuallyVertexOblique);
    }
    let x = 0;
    let x_bar = dual_partner(g, x).expect("dual partner is unique in a dually oblique graph");

    let (v2, w2, v2_bar, w2_bar) = (n, n + 1, n + 2, n + 3);
    let mut out = Graph::new(n + 4);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    // degree-2 vertices
    out.add_edge(v2, v2_bar);
    out.add_edge(v2, x);
    out.add_edge(w2, w2_bar);
    out.add_edge(w2, x_bar);
    // high-degree vertices see each other and almost all of the old graph
    out.add_edge(v2_bar, w2_bar);
    for u in 0..n {
        if u != x {
            out.add_edge(v2_bar, u);
        }
        if u != x_bar {
            out.add_edge(w2_bar, u);
        }
    }
    Ok(out)
}

/// Adds the apex vertex: adjacent to exactly the 2k vertices of degree
/// at least 2k of a dually vertex-oblique graph on 4k vertices. The result
/// has order 4k+1, is dually vertex-oblique, and stays split if the input
/// was.
pub fn add_apex(g: &Graph) -> Result<Graph, ConstructError> {
    let n = g.n();
    if n == 0 || n % 4 != 0 {
        return Err(ConstructError::OrderNotMultipleOfFour { n });
    }
    if !is_dually_vertex_oblique(g) {
        return Err(ConstructError::NotDuallyVertexOblique);
    }
    let half = n / 2;
    let mut out = Graph::new(n + 1);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    let mut attached = 0;
    for v in 0..n {
        if g.degree(v) >= half {
            out.add_edge(n, v);
            attached += 1;
        }
    }
    // the degree sequence is symmetric about (n-1)/2, so exactly half the
    // vertices sit at or above n/2
    assert_eq!(attached, half, "apex must attach to exactly 2k vertices");
    Ok(out)
}

/// Extends a dually semi-vertex-oblique bipartite graph by four vertices on
/// each side, keeping the property. New labels, in order, on both sides:
/// the two degree-2 vertices, then the two high-degree ones
/// (`2, 2', 2~, 2~'`).
pub fn semi_extend_plus8(b: &BipartiteGraph) -> Result<BipartiteGraph, ConstructError> {
    let conditions = semi_oblique_conditions(b).map_err(|_| ConstructError::BadPartSizes {
        left: b.left_size(),
        right: b.right_size(),
    })?;
    if !conditions.all() {
        return Err(ConstructError::NotDuallySemiVertexOblique);
    }
    let size = b.left_size(); // 2k

    // pick the lowest-labeled pair (r, r_tilde) whose types swap under the
    // bipartite complement, then the unique left vertices of those types
    let right_types = b.right_types();
    let comp_right_types = b.bipartite_complement().right_types();
    let (r, r_tilde) = (0..size)
        .flat_map(|r| (0..size).map(move |rt| (r, rt)))
        .find(|&(r, rt)| comp_right_types[rt] == right_types[r])
        .expect("condition (iii) provides a matching pair");
    let left_types = b.left_types();
    let find_left = |t: &VertexType| -> usize {
        (0..size)
            .find(|&i| &left_types[i] == t)
            .expect("condition (ii) provides the left twin")
    };
    let ell = find_left(&right_types[r]);
    let ell_tilde = find_left(&right_types[r_tilde]);

    let (l2, l2p, l2t, l2tp) = (size, size + 1, size + 2, size + 3);
    let (r2, r2p, r2t, r2tp) = (size, size + 1, size + 2, size + 3);
    let mut out = BipartiteGraph::new(size + 4, size + 4);
    for (i, j) in b.edges() {
        out.add_edge(i, j);
    }
    // left degree-2 vertices
    out.add_edge(l2, r2t);
    out.add_edge(l2, r);
    out.add_edge(l2p, r2tp);
    out.add_edge(l2p, r_tilde);
    // left high-degree vertices
    out.add_edge(l2t, r2);
    out.add_edge(l2t, r2t);
    out.add_edge(l2t, r2tp);
    out.add_edge(l2tp, r2p);
    out.add_edge(l2tp, r2t);
    out.add_edge(l2tp, r2tp);
    for j in 0..size {
        if j != r {
            out.add_edge(l2t, j);
        }
        if j != r_tilde {
            out.add_edge(l2tp, j);
        }
    }
    // right degree-2 vertices
    out.add_edge(ell_tilde, r2);
    out.add_edge(ell, r2p);
    // right high-degree vertices pick up the remaining old left vertices
    for i in 0..size {
        if i != ell_tilde {
            out.add_edge(i, r2t);
        }
        if i != ell {
            out.add_edge(i, r2tp);
        }
    }
    Ok(out)
}

/// Completes the right part to a clique, producing a split graph on
/// `L ∪ R`; for a dually semi-vertex-oblique input the result is dually
/// vertex-oblique. Left vertices keep their labels, right vertex `j`
/// becomes `left_size + j`.
pub fn split_completion(b: &BipartiteGraph) -> Result<Graph, ConstructError> {
    let conditions = semi_oblique_conditions(b).map_err(|_| ConstructError::BadPartSizes {
        left: b.left_size(),
        right: b.right_size(),
    })?;
    if !conditions.all() {
        return Err(ConstructError::NotDuallySemiVertexOblique);
    }
    let mut g = b.to_graph();
    let l = b.left_size();
    for i in 0..b.right_size() {
        for j in i + 1..b.right_size() {
            g.add_edge(l + i, l + j);
        }
    }
    Ok(g)
}

/// Builds a dually vertex-oblique graph of order `n`, optionally split.
///
/// Feasible orders are `n >= 8` with `n = 0 or 1 (mod 4)`; split graphs
/// additionally need `n >= 12`. The plain route grows the 8-vertex base by
/// four vertices at a time; the split route grows a semi-oblique bipartite
/// base by eight and completes the right part to a clique. Odd orders get
/// the apex vertex last.
pub fn construct(n: usize, split: bool) -> Result<Graph, ConstructError> {
    if n % 4 > 1 {
        return Err(ConstructError::InfeasibleResidue { n });
    }
    if n < 8 {
        return Err(ConstructError::OrderTooSmall { n });
    }
    if split && n < 12 {
        return Err(ConstructError::SplitOrderTooSmall { n });
    }
    let even_part = if n % 4 == 1 { n - 1 } else { n };
    let mut g = if split {
        let k = if even_part % 8 == 4 { 3 } else { 4 };
        let mut b = semi_base(k)?;
        while b.left_size() + b.right_size() < even_part {
            b = semi_extend_plus8(&b)?;
        }
        split_completion(&b)?
    } else {
        let mut g = base8();
        while g.n() < even_part {
            g = extend_plus4(&g)?;
        }
        g
    };
    if n % 4 == 1 {
        g = add_apex(&g)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{is_dually_semi_vertex_oblique, lemma_audit};

    #[test]
    fn base8_is_dually_vertex_oblique() {
        let g = base8();
        assert_eq!(g.n(), 8);
        assert!(is_dually_vertex_oblique(&g));
        // degree sequence symmetric about 7/2 with at least three degrees
        assert_eq!(g.degree_sequence().degrees(), &[5, 5, 4, 4, 3, 3, 2, 2]);
        assert!(g.type_sequence().all_distinct());
        assert!(lemma_audit(&g).all_pass());
    }

    #[test]
    fn extend_preserves_the_property() {
        let g8 = base8();
        let g12 = extend_plus4(&g8).unwrap();
        assert_eq!(g12.n(), 12);
        assert!(is_dually_vertex_oblique(&g12));
        // old degrees shift by two, new vertices have degrees 2 and n'-3
        assert_eq!(g12.degree(8), 2);
        assert_eq!(g12.degree(9), 2);
        assert_eq!(g12.degree(10), 12 - 3);
        assert_eq!(g12.degree(11), 12 - 3);
        for v in 0..8 {
            assert_eq!(g12.degree(v), g8.degree(v) + 2);
        }
        // the four new vertices induce a P4
        let sub = g12.induced_subgraph(&[8, 9, 10, 11]);
        assert_eq!(sub.degree_sequence().degrees(), &[2, 2, 1, 1]);
        assert_eq!(sub.edge_count(), 3);
    }

    #[test]
    fn extend_preserves_dual_partners() {
        let g8 = base8();
        let g12 = extend_plus4(&g8).unwrap();
        for v in 0..8 {
            let p8 = dual_partner(&g8, v).unwrap();
            let p12 = dual_partner(&g12, v).unwrap();
            assert_eq!(p8, p12);
        }
        // the new vertices pair degree-2 with degree-(n'-3): v2 with w2bar
        // and w2 with v2bar, forced by the adjacency lists
        assert_eq!(dual_partner(&g12, 8).unwrap(), 11);
        assert_eq!(dual_partner(&g12, 11).unwrap(), 8);
        assert_eq!(dual_partner(&g12, 9).unwrap(), 10);
        assert_eq!(dual_partner(&g12, 10).unwrap(), 9);
    }

    #[test]
    fn apex_makes_odd_orders() {
        let g8 = base8();
        let g9 = add_apex(&g8).unwrap();
        assert_eq!(g9.n(), 9);
        assert!(is_dually_vertex_oblique(&g9));
        assert_eq!(g9.degree(8), 4);
        // old degrees: unchanged below 2k, +1 at or above
        for v in 0..8 {
            let expect = if g8.degree(v) >= 4 {
                g8.degree(v) + 1
            } else {
                g8.degree(v)
            };
            assert_eq!(g9.degree(v), expect);
        }
        // the apex is the unique middle-degree vertex and its own partner
        assert_eq!(dual_partner(&g9, 8).unwrap(), 8);
    }

    #[test]
    fn semi_bases_satisfy_all_conditions() {
        for k in [3, 4] {
            let b = semi_base(k).unwrap();
            assert_eq!(b.left_size(), 2 * k);
            assert!(is_dually_semi_vertex_oblique(&b).unwrap());
            let degs = b.left_degrees();
            assert!(degs.iter().all(|&d| (1..=2 * k - 1).contains(&d)));
        }
        assert_eq!(
            semi_base(5),
            Err(ConstructError::UnsupportedSemiBase { k: 5 })
        );
    }

    #[test]
    fn semi_extension_grows_by_eight() {
        let b = semi_base(3).unwrap();
        let b2 = semi_extend_plus8(&b).unwrap();
        assert_eq!(b2.left_size(), 10);
        assert!(is_dually_semi_vertex_oblique(&b2).unwrap());
        // subscript-2 vertices have degree 2, the others 2k+2
        assert_eq!(b2.left_degree(6), 2);
        assert_eq!(b2.left_degree(7), 2);
        assert_eq!(b2.left_degree(8), 8);
        assert_eq!(b2.left_degree(9), 8);
        // old left degrees grow by exactly 2
        for i in 0..6 {
            assert_eq!(b2.left_degree(i), b.left_degree(i) + 2);
        }
        // the bipartite complement is again dually semi-vertex-oblique
        assert!(is_dually_semi_vertex_oblique(&b2.bipartite_complement()).unwrap());
    }

    #[test]
    fn split_completion_yields_split_dvo_graph() {
        let b = semi_base(3).unwrap();
        let g = split_completion(&b).unwrap();
        assert_eq!(g.n(), 12);
        assert!(is_dually_vertex_oblique(&g));
        let (l, r) = g.split_partition().expect("split partition exists");
        assert_eq!(l.len() + r.len(), 12);
        // every right vertex jumped by 2k-1 = 5
        for j in 0..6 {
            assert_eq!(g.degree(6 + j), b.right_degree(j) + 5);
        }
    }

    #[test]
    fn construct_small_orders() {
        for n in [8, 9, 12, 13, 16, 17] {
            let g = construct(n, false).unwrap();
            assert_eq!(g.n(), n);
            assert!(is_dually_vertex_oblique(&g), "n = {n}");
        }
        for n in [12, 13, 16, 17, 20, 21] {
            let g = construct(n, true).unwrap();
            assert_eq!(g.n(), n);
            assert!(is_dually_vertex_oblique(&g), "split n = {n}");
            assert!(g.split_partition().is_some(), "split n = {n}");
        }
    }

    #[test]
    fn construct_rejects_infeasible_orders() {
        assert_eq!(construct(6, false), Err(ConstructError::InfeasibleResidue { n: 6 }));
        assert_eq!(construct(7, false), Err(ConstructError::InfeasibleResidue { n: 7 }));
        assert_eq!(construct(4, false), Err(ConstructError::OrderTooSmall { n: 4 }));
        assert_eq!(construct(8, true), Err(ConstructError::SplitOrderTooSmall { n: 8 }));
        assert_eq!(construct(9, true), Err(ConstructError::SplitOrderTooSmall { n: 9 }));
    }

    #[test]
    fn constructed_graphs_have_a_degree_two_vertex() {
        for n in [8, 12, 16, 13, 17] {
            let g = construct(n, false).unwrap();
            assert!(g.degrees().contains(&2));
        }
    }

    #[test]
    fn extension_rejects_bad_inputs() {
        assert_eq!(
            extend_plus4(&Graph::complete(8)),
            Err(ConstructError::NotDuallyVertexOblique)
        );
        assert_eq!(
            extend_plus4(&base8().delete_vertex(0)),
            Err(ConstructError::OrderNotMultipleOfFour { n: 7 })
        );
    }
}

//! The switching calculus: degree-preserving switches, restricted
//! (type-preserving) switches, companion graphs for dually vertex-oblique
//! graphs, canonical labeled forms reachable by switches, and restricted
//! switch paths between labeled graphs with equal type sequences.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::analysis::is_dually_vertex_oblique;
use crate::bipartite::BipartiteGraph;
use crate::graph::Graph;
use crate::sequences::{greedy_bipartite_realization, greedy_labeled_realization};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SwitchError {
    #[error("switch needs four distinct vertices")]
    VerticesNotDistinct,
    #[error("vertex {v} out of range for order {n}")]
    OutOfRange { v: usize, n: usize },
    #[error("required edge ({u}, {v}) is missing")]
    MissingEdge { u: usize, v: usize },
    #[error("required non-edge ({u}, {v}) is present")]
    UnexpectedEdge { u: usize, v: usize },
    #[error("graph is not dually vertex-oblique")]
    NotDuallyVertexOblique,
    #[error("no vertex has degree {d}")]
    EmptyDegreeClass { d: usize },
    #[error("degree {d} equals the middle degree (n-1)/2")]
    MiddleDegree { d: usize },
    #[error("graphs have different orders: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("vertex {vertex} has different types in the two graphs")]
    TypeMismatch { vertex: usize },
}

/// Replace edges `v0 w0`, `v1 w1` by `v0 w1`, `v1 w0`. Valid only when the
/// first pair are edges and the second pair are not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwitchMove {
    pub v0: usize,
    pub w0: usize,
    pub v1: usize,
    pub w1: usize,
}

impl SwitchMove {
    /// The move undoing this one.
    pub fn inverse(&self) -> SwitchMove {
        SwitchMove {
            v0: self.v0,
            w0: self.w1,
            v1: self.v1,
            w1: self.w0,
        }
    }

    fn validate(&self, g: &Graph) -> Result<(), SwitchError> {
        let vs = [self.v0, self.w0, self.v1, self.w1];
        for &v in &vs {
            if v >= g.n() {
                return Err(SwitchError::OutOfRange { v, n: g.n() });
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if vs[i] == vs[j] {
                    return Err(SwitchError::VerticesNotDistinct);
                }
            }
        }
        if !g.has_edge(self.v0, self.w0) {
            return Err(SwitchError::MissingEdge {
                u: self.v0,
                v: self.w0,
            });
        }
        if !g.has_edge(self.v1, self.w1) {
            return Err(SwitchError::MissingEdge {
                u: self.v1,
                v: self.w1,
            });
        }
        if g.has_edge(self.v0, self.w1) {
            return Err(SwitchError::UnexpectedEdge {
                u: self.v0,
                v: self.w1,
            });
        }
        if g.has_edge(self.v1, self.w0) {
            return Err(SwitchError::UnexpectedEdge {
                u: self.v1,
                v: self.w0,
            });
        }
        Ok(())
    }
}

/// Applies a switch; no degree changes.
pub fn apply_switch(g: &Graph, m: &SwitchMove) -> Result<Graph, SwitchError> {
    m.validate(g)?;
    let mut h = g.clone();
    h.remove_edge(m.v0, m.w0);
    h.remove_edge(m.v1, m.w1);
    h.add_edge(m.v0, m.w1);
    h.add_edge(m.v1, m.w0);
    Ok(h)
}

/// A restricted `(d, d')`-switch preserves every vertex type; an
/// unrestricted one only preserves degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwitchClass {
    Restricted { d: usize, d_other: usize },
    Unrestricted,
}

pub fn classify_switch(g: &Graph, m: &SwitchMove) -> Result<SwitchClass, SwitchError> {
    m.validate(g)?;
    let (d0, d1) = (g.degree(m.v0), g.degree(m.v1));
    let (e0, e1) = (g.degree(m.w0), g.degree(m.w1));
    if d0 == d1 && e0 == e1 {
        Ok(SwitchClass::Restricted { d: d0, d_other: e0 })
    } else {
        Ok(SwitchClass::Unrestricted)
    }
}

/// An ordered list of switches, each valid in the graph its predecessors
/// produce.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SwitchPath {
    pub moves: Vec<SwitchMove>,
}

impl SwitchPath {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Applies every move in order.
    pub fn replay(&self, g: &Graph) -> Result<Graph, SwitchError> {
        let mut cur = g.clone();
        for m in &self.moves {
            cur = apply_switch(&cur, m)?;
        }
        Ok(cur)
    }

    /// The path undoing this one.
    pub fn inverted(&self) -> SwitchPath {
        SwitchPath {
            moves: self.moves.iter().rev().map(|m| m.inverse()).collect(),
        }
    }
}

/// Finds an induced 2K2 in the bipartite subgraph between the degree-`d`
/// and degree-`(n-1-d)` classes of a dually vertex-oblique graph, following
/// the constructive walk: keep a current vertex in the `d` class, pick its
/// lowest non-neighbour opposite, jump to that vertex's lowest neighbour,
/// and stop as soon as one of the current neighbours misses the new vertex.
/// The non-neighbour set shrinks strictly, so the walk terminates.
pub fn find_induced_2k2_cross(g: &Graph, d: usize) -> Result<SwitchMove, SwitchError> {
    if !is_dually_vertex_oblique(g) {
        return Err(SwitchError::NotDuallyVertexOblique);
    }
    let n = g.n();
    if n % 2 == 1 && 2 * d == n - 1 {
        return Err(SwitchError::MiddleDegree { d });
    }
    let db = n - 1 - d;
    let class_d: Vec<usize> = (0..n).filter(|&v| g.degree(v) == d).collect();
    let class_db: Vec<usize> = (0..n).filter(|&v| g.degree(v) == db).collect();
    if class_d.is_empty() {
        return Err(SwitchError::EmptyDegreeClass { d });
    }
    if class_db.is_empty() {
        return Err(SwitchError::EmptyDegreeClass { d: db });
    }

    let mut x = class_d[0];
    for _ in 0..=class_db.len() {
        let nbrs: Vec<usize> = class_db.iter().copied().filter(|&w| g.has_edge(x, w)).collect();
        let nons: Vec<usize> = class_db.iter().copied().filter(|&w| !g.has_edge(x, w)).collect();
        // type symmetry forbids a vertex adjacent to all or none of the
        // opposite class
        assert!(
            !nbrs.is_empty() && !nons.is_empty(),
            "every vertex must have a neighbour and a non-neighbour opposite"
        );
        let y = nons[0];
        let x_next = class_d
            .iter()
            .copied()
            .find(|&v| g.has_edge(y, v))
            .expect("the opposite class vertex has a neighbour of degree d");
        if let Some(y_tilde) = nbrs.iter().copied().find(|&z| !g.has_edge(x_next, z)) {
            return Ok(SwitchMove {
                v0: x,
                w0: y_tilde,
                v1: x_next,
                w1: y,
            });
        }
        // x_next dominates the neighbours of x and also sees y
        x = x_next;
    }
    unreachable!("non-neighbour sets shrink strictly, the walk must stop");
}

/// Builds a companion of a dually vertex-oblique graph: a graph with the
/// same vertex-type sequence that is isomorphic to neither the graph nor
/// its complement. Uses the smallest degree class.
pub fn companion(g: &Graph) -> Result<Graph, SwitchError> {
    if !is_dually_vertex_oblique(g) {
        return Err(SwitchError::NotDuallyVertexOblique);
    }
    let d = g
        .degrees()
        .into_iter()
        .min()
        .ok_or(SwitchError::EmptyDegreeClass { d: 0 })?;
    let mv = find_induced_2k2_cross(g, d)?;
    let h = apply_switch(g, &mv)?;
    assert_eq!(
        h.type_sequence(),
        g.type_sequence(),
        "a restricted switch preserves the type sequence"
    );
    assert!(!are_isomorphic(&h, g), "companion must differ from g");
    assert!(
        !are_isomorphic(&h, &g.complement()),
        "companion must differ from the complement"
    );
    Ok(h)
}

/// Exact isomorphism test: joint colour refinement down to a stable
/// partition, then backtracking over colour classes. Vertex-oblique inputs
/// refine to singleton classes, leaving a single candidate map.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() {
        return false;
    }
    let n = g.n();
    if n == 0 {
        return true;
    }
    if g.edge_count() != h.edge_count() {
        return false;
    }

    let mut cg = vec![0usize; n];
    let mut ch = vec![0usize; n];
    let mut classes = 1usize;
    loop {
        let signature = |graph: &Graph, colors: &[usize], v: usize| {
            let mut ns: Vec<usize> = graph.neighbors(v).map(|w| colors[w]).collect();
            ns.sort_unstable();
            (colors[v], ns)
        };
        let mut all: Vec<(usize, Vec<usize>)> = (0..n).map(|v| signature(g, &cg, v)).collect();
        all.extend((0..n).map(|v| signature(h, &ch, v)));
        let mut uniq = all.clone();
        uniq.sort();
        uniq.dedup();
        for v in 0..n {
            cg[v] = uniq.binary_search(&all[v]).unwrap();
            ch[v] = uniq.binary_search(&all[n + v]).unwrap();
        }
        if uniq.len() == classes {
            break;
        }
        classes = uniq.len();
    }

    let mut hist_g = cg.clone();
    hist_g.sort_unstable();
    let mut hist_h = ch.clone();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return false;
    }

    // map vertices of g one by one, small colour classes first
    let mut class_size = vec![0usize; classes];
    for &c in &cg {
        class_size[c] += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[cg[v]], cg[v], v));

    struct Ctx<'a> {
        g: &'a Graph,
        h: &'a Graph,
        cg: &'a [usize],
        ch: &'a [usize],
        order: &'a [usize],
    }

    fn extend(ctx: &Ctx<'_>, idx: usize, mapping: &mut [usize], used: &mut [bool]) -> bool {
        if idx == ctx.order.len() {
            return true;
        }
        let v = ctx.order[idx];
        for w in 0..ctx.h.n() {
            if used[w] || ctx.ch[w] != ctx.cg[v] {
                continue;
            }
            let consistent = ctx.order[..idx]
                .iter()
                .all(|&p| ctx.g.has_edge(v, p) == ctx.h.has_edge(w, mapping[p]));
            if consistent {
                mapping[v] = w;
                used[w] = true;
                if extend(ctx, idx + 1, mapping, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }

    let ctx = Ctx {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
    };
    extend(&ctx, 0, &mut vec![usize::MAX; n], &mut vec![false; n])
}

/// Transforms the graph by switches into the canonical labeled graph that
/// depends only on the labeled degrees: repeatedly wire the vertex with the
/// largest residual degree to the next-largest residuals. Returns the
/// canonical graph and the path that got there.
pub fn canonicalize_labeled(g: &Graph) -> (Graph, SwitchPath) {
    let n = g.n();
    let mut cur = g.clone();
    let mut moves = Vec::new();
    let mut residual = g.degrees();
    let mut done = vec![false; n];
    for _ in 0..n {
        let u = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| residual[a].cmp(&residual[b]).then(b.cmp(&a)))
            .unwrap();
        let need = residual[u];
        let mut cands: Vec<usize> = (0..n).filter(|&v| !done[v] && v != u).collect();
        cands.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let targets: Vec<usize> = cands[..need].to_vec();
        loop {
            let missing = targets
                .iter()
                .copied()
                .filter(|&t| !cur.has_edge(u, t))
                .min();
            let Some(t) = missing else { break };
            let k = (0..n)
                .filter(|&v| !done[v] && v != u && cur.has_edge(u, v) && !targets.contains(&v))
                .min()
                .expect("u keeps a neighbour outside the target set");
            // t's residual degree dominates k's, so t has a residual
            // neighbour that k misses
            let w = (0..n)
                .filter(|&x| {
                    !done[x]
                        && x != u
                        && x != t
                        && x != k
                        && cur.has_edge(t, x)
                        && !cur.has_edge(k, x)
                })
                .min()
                .expect("swap partner exists");
            let mv = SwitchMove {
                v0: u,
                w0: k,
                v1: w,
                w1: t,
            };
            cur = apply_switch(&cur, &mv).expect("switch valid by construction");
            moves.push(mv);
        }
        done[u] = true;
        for &t in &targets {
            residual[t] -= 1;
        }
        residual[u] = 0;
    }
    debug_assert_eq!(
        Some(&cur),
        greedy_labeled_realization(&g.degrees()).as_ref()
    );
    (cur, SwitchPath { moves })
}

/// A switch inside a bipartite graph that keeps both endpoints of each new
/// edge on opposite sides: removes `(left0, right0)`, `(left1, right1)` and
/// adds `(left0, right1)`, `(left1, right0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteSwitchMove {
    pub left0: usize,
    pub right0: usize,
    pub left1: usize,
    pub right1: usize,
}

impl BipartiteSwitchMove {
    pub fn inverse(&self) -> BipartiteSwitchMove {
        BipartiteSwitchMove {
            left0: self.left0,
            right0: self.right1,
            left1: self.left1,
            right1: self.right0,
        }
    }
}

pub fn apply_bipartite_switch(
    b: &BipartiteGraph,
    m: &BipartiteSwitchMove,
) -> Result<BipartiteGraph, SwitchError> {
    if m.left0 == m.left1 || m.right0 == m.right1 {
        return Err(SwitchError::VerticesNotDistinct);
    }
    if !b.has_edge(m.left0, m.right0) {
        return Err(SwitchError::MissingEdge {
            u: m.left0,
            v: m.right0,
        });
    }
    if !b.has_edge(m.left1, m.right1) {
        return Err(SwitchError::MissingEdge {
            u: m.left1,
            v: m.right1,
        });
    }
    if b.has_edge(m.left0, m.right1) {
        return Err(SwitchError::UnexpectedEdge {
            u: m.left0,
            v: m.right1,
        });
    }
    if b.has_edge(m.left1, m.right0) {
        return Err(SwitchError::UnexpectedEdge {
            u: m.left1,
            v: m.right0,
        });
    }
    let mut out = b.clone();
    out.remove_edge(m.left0, m.right0);
    out.remove_edge(m.left1, m.right1);
    out.add_edge(m.left0, m.right1);
    out.add_edge(m.left1, m.right0);
    Ok(out)
}

/// Bipartite counterpart of [`canonicalize_labeled`], with switches that
/// respect the bipartition.
pub fn canonicalize_bipartite_labeled(
    b: &BipartiteGraph,
) -> (BipartiteGraph, Vec<BipartiteSwitchMove>) {
    let l = b.left_size();
    let r = b.right_size();
    let mut cur = b.clone();
    let mut moves = Vec::new();
    let mut col_residual = b.right_degrees();
    let left_deg = b.left_degrees();
    let mut order: Vec<usize> = (0..l).collect();
    order.sort_by(|&a, &c| left_deg[c].cmp(&left_deg[a]).then(a.cmp(&c)));
    let mut done = vec![false; l];
    for &u in &order {
        let need = left_deg[u];
        let mut cands: Vec<usize> = (0..r).collect();
        cands.sort_by(|&a, &c| col_residual[c].cmp(&col_residual[a]).then(a.cmp(&c)));
        let targets: Vec<usize> = cands[..need].to_vec();
        loop {
            let missing = targets
                .iter()
                .copied()
                .filter(|&t| !cur.has_edge(u, t))
                .min();
            let Some(t) = missing else { break };
            let k = (0..r)
                .filter(|&j| cur.has_edge(u, j) && !targets.contains(&j))
                .min()
                .expect("u keeps a neighbour outside the target set");
            let w = (0..l)
                .filter(|&x| !done[x] && x != u && cur.has_edge(x, t) && !cur.has_edge(x, k))
                .min()
                .expect("swap partner exists");
            let mv = BipartiteSwitchMove {
                left0: u,
                right0: k,
                left1: w,
                right1: t,
            };
            cur = apply_bipartite_switch(&cur, &mv).expect("switch valid by construction");
            moves.push(mv);
        }
        done[u] = true;
        for &t in &targets {
            col_residual[t] -= 1;
        }
    }
    debug_assert_eq!(
        Some(&cur),
        greedy_bipartite_realization(&left_deg, &b.right_degrees()).as_ref()
    );
    (cur, moves)
}

/// A path of restricted switches transforming `h` into `g`, for labeled
/// graphs with equal per-vertex types. Works class by class: each degree
/// class subgraph and each cross-degree bipartite subgraph is switched to
/// the shared canonical form and back out; the classes partition the edge
/// set, so the concatenated moves replay cleanly on the whole graph.
pub fn restricted_switch_path(g: &Graph, h: &Graph) -> Result<SwitchPath, SwitchError> {
    if g.n() != h.n() {
        return Err(SwitchError::OrderMismatch {
            left: g.n(),
            right: h.n(),
        });
    }
    for v in 0..g.n() {
        if g.vertex_type(v) != h.vertex_type(v) {
            return Err(SwitchError::TypeMismatch { vertex: v });
        }
    }
    let mut moves = Vec::new();
    let degrees: BTreeSet<usize> = g.degrees().into_iter().collect();

    for &d in &degrees {
        let gd = g.degree_subgraph(d);
        let hd = h.degree_subgraph(d);
        debug_assert_eq!(gd.vertices, hd.vertices);
        if gd.graph == hd.graph {
            continue;
        }
        let (g_canon, g_path) = canonicalize_labeled(&gd.graph);
        let (h_canon, h_path) = canonicalize_labeled(&hd.graph);
        assert_eq!(g_canon, h_canon, "canonical class graphs must coincide");
        let map = &gd.vertices;
        for m in h_path.moves.iter().chain(g_path.inverted().moves.iter()) {
            moves.push(SwitchMove {
                v0: map[m.v0],
                w0: map[m.w0],
                v1: map[m.v1],
                w1: map[m.w1],
            });
        }
    }

    for &p in &degrees {
        for &q in degrees.range((
            std::ops::Bound::Excluded(p),
            std::ops::Bound::Unbounded,
        )) {
            let gc = g.cross_degree_subgraph(p, q);
            let hc = h.cross_degree_subgraph(p, q);
            debug_assert_eq!(gc.left_vertices, hc.left_vertices);
            debug_assert_eq!(gc.right_vertices, hc.right_vertices);
            if gc.graph == hc.graph {
                continue;
            }
            let (g_canon, g_path) = canonicalize_bipartite_labeled(&gc.graph);
            let (h_canon, h_path) = canonicalize_bipartite_labeled(&hc.graph);
            assert_eq!(g_canon, h_canon, "canonical cross graphs must coincide");
            let inverted: Vec<BipartiteSwitchMove> =
                g_path.iter().rev().map(|m| m.inverse()).collect();
            for m in h_path.iter().chain(inverted.iter()) {
                moves.push(SwitchMove {
                    v0: gc.left_vertices[m.left0],
                    w0: gc.right_vertices[m.right0],
                    v1: gc.left_vertices[m.left1],
                    w1: gc.right_vertices[m.right1],
                });
            }
        }
    }

    Ok(SwitchPath { moves })
}

/// Outcome of the sufficient uniqueness test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniquenessVerdict {
    /// No class subgraph contains an induced 2K2: the type sequence is
    /// realized by exactly one isomorphism class.
    Unique,
    /// Some class subgraph contains one; nothing follows either way.
    Inconclusive,
}

/// Sufficient condition for a unique vertex-type sequence: no degree class
/// subgraph and no cross-degree subgraph contains an induced 2K2.
pub fn unique_typeseq_sufficient(g: &Graph) -> UniquenessVerdict {
    let degrees: BTreeSet<usize> = g.degrees().into_iter().collect();
    for &d in &degrees {
        if find_induced_2k2(&g.degree_subgraph(d).graph).is_some() {
            return UniquenessVerdict::Inconclusive;
        }
    }
    for &p in &degrees {
        for &q in degrees.range((
            std::ops::Bound::Excluded(p),
            std::ops::Bound::Unbounded,
        )) {
            if find_bipartite_induced_2k2(&g.cross_degree_subgraph(p, q).graph).is_some() {
                return UniquenessVerdict::Inconclusive;
            }
        }
    }
    UniquenessVerdict::Unique
}

/// Four vertices spanning exactly two disjoint edges, if any.
pub fn find_induced_2k2(g: &Graph) -> Option<[usize; 4]> {
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d) {
                return Some([a, b, c, d]);
            }
        }
    }
    None
}

/// Two disjoint edges `(a, x)`, `(c, y)` with the cross pairs `(a, y)`,
/// `(c, x)` absent, if any.
pub fn find_bipartite_induced_2k2(b: &BipartiteGraph) -> Option<(usize, usize, usize, usize)> {
    let edges = b.edges();
    for (i, &(a, x)) in edges.iter().enumerate() {
        for &(c, y) in &edges[i + 1..] {
            if a == c || x == y {
                continue;
            }
            if !b.has_edge(a, y) && !b.has_edge(c, x) {
                return Some((a, x, c, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    fn two_triangles() -> Graph {
        Graph::from_edges(6, [(0, 4), (4, 5), (0, 5), (1, 2), (2, 3), (1, 3)])
    }

    #[test]
    fn c6_switch_gives_two_triangles() {
        let c6 = cycle(6);
        let mv = SwitchMove {
            v0: 0,
            w0: 1,
            v1: 3,
            w1: 4,
        };
        let h = apply_switch(&c6, &mv).unwrap();
        assert_eq!(h, two_triangles());
        assert_eq!(h.degree_sequence(), c6.degree_sequence());
        assert_eq!(
            classify_switch(&c6, &mv).unwrap(),
            SwitchClass::Restricted { d: 2, d_other: 2 }
        );
        assert_eq!(h.type_sequence(), c6.type_sequence());
    }

    #[test]
    fn switch_then_inverse_restores() {
        let c6 = cycle(6);
        let mv = SwitchMove {
            v0: 0,
            w0: 1,
            v1: 3,
            w1: 4,
        };
        let h = apply_switch(&c6, &mv).unwrap();
        assert_eq!(apply_switch(&h, &mv.inverse()).unwrap(), c6);
    }

    #[test]
    fn invalid_moves_report_the_failing_pair() {
        let c6 = cycle(6);
        assert_eq!(
            apply_switch(
                &c6,
                &SwitchMove {
                    v0: 0,
                    w0: 2,
                    v1: 3,
                    w1: 4
                }
            ),
            Err(SwitchError::MissingEdge { u: 0, v: 2 })
        );
        // 0-3 is a valid non-edge, but 2-1 is present
        assert_eq!(
            apply_switch(
                &c6,
                &SwitchMove {
                    v0: 0,
                    w0: 1,
                    v1: 2,
                    w1: 3
                }
            ),
            Err(SwitchError::UnexpectedEdge { u: 2, v: 1 })
        );
    }

    #[test]
    fn unrestricted_switch_detected() {
        // degrees 1 and 2 on the v side
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]);
        // v0=0 (deg 1), v1=2 (deg 2): valid switch 0-1, 2-3 -> 0-3, 2-1? 2-1 is an edge
        let mv = SwitchMove {
            v0: 0,
            w0: 1,
            v1: 3,
            w1: 4,
        };
        assert_eq!(classify_switch(&g, &mv).unwrap(), SwitchClass::Unrestricted);
    }

    #[test]
    fn isomorphism_basics() {
        let c5 = cycle(5);
        assert!(are_isomorphic(&c5, &c5));
        assert!(are_isomorphic(&c5, &c5.complement()));
        let c6 = cycle(6);
        assert!(!are_isomorphic(&c6, &two_triangles()));
        assert!(!are_isomorphic(&c5, &c6));
        let relabeled = Graph::from_edges(5, [(3, 1), (1, 4), (4, 0), (0, 2), (2, 3)]);
        assert!(are_isomorphic(&c5, &relabeled));
    }

    #[test]
    fn canonical_form_depends_only_on_degrees() {
        let (canon_a, path_a) = canonicalize_labeled(&cycle(6));
        let (canon_b, path_b) = canonicalize_labeled(&two_triangles());
        assert_eq!(canon_a, canon_b);
        assert_eq!(path_a.replay(&cycle(6)).unwrap(), canon_a);
        assert_eq!(path_b.replay(&two_triangles()).unwrap(), canon_b);
    }

    #[test]
    fn canonical_form_of_complete_graph_is_itself() {
        let k5 = Graph::complete(5);
        let (canon, path) = canonicalize_labeled(&k5);
        assert_eq!(canon, k5);
        assert!(path.is_empty());
    }

    #[test]
    fn bipartite_canonicalization_replays() {
        let b = BipartiteGraph::from_edges(3, 3, [(0, 0), (0, 2), (1, 1), (2, 0), (2, 1)]);
        let (canon, moves) = canonicalize_bipartite_labeled(&b);
        let mut cur = b.clone();
        for m in &moves {
            cur = apply_bipartite_switch(&cur, m).unwrap();
        }
        assert_eq!(cur, canon);
        assert_eq!(canon.left_degrees(), b.left_degrees());
        assert_eq!(canon.right_degrees(), b.right_degrees());
    }

    #[test]
    fn restricted_path_between_c6_and_triangles() {
        let g = cycle(6);
        let h = two_triangles();
        let path = restricted_switch_path(&g, &h).unwrap();
        assert_eq!(path.replay(&h).unwrap(), g);
        // every move along the way is a restricted switch
        let mut cur = h.clone();
        for m in &path.moves {
            assert!(matches!(
                classify_switch(&cur, m).unwrap(),
                SwitchClass::Restricted { .. }
            ));
            cur = apply_switch(&cur, m).unwrap();
        }
    }

    #[test]
    fn restricted_path_identity_is_empty() {
        let g = cycle(6);
        let path = restricted_switch_path(&g, &g).unwrap();
        assert!(path.is_empty());
    }

    #[test]
    fn restricted_path_rejects_type_mismatch() {
        let g = cycle(6);
        let h = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        assert!(matches!(
            restricted_switch_path(&g, &h),
            Err(SwitchError::TypeMismatch { .. })
        ));
    }

    #[test]
    fn uniqueness_verdicts() {
        assert_eq!(
            unique_typeseq_sufficient(&Graph::complete(4)),
            UniquenessVerdict::Unique
        );
        let matching = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert_eq!(
            unique_typeseq_sufficient(&matching),
            UniquenessVerdict::Inconclusive
        );
    }

    #[test]
    fn induced_2k2_detection() {
        let matching = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert!(find_induced_2k2(&matching).is_some());
        // P4's two disjoint edges are joined by 1-2, so nothing is induced
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert!(find_induced_2k2(&p4).is_none());
        assert!(find_induced_2k2(&Graph::complete(4)).is_none());
        let b = BipartiteGraph::from_edges(2, 2, [(0, 0), (1, 1)]);
        assert!(find_bipartite_induced_2k2(&b).is_some());
        let full = BipartiteGraph::from_edges(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert!(find_bipartite_induced_2k2(&full).is_none());
    }
}

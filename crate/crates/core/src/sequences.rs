//! Degree- and type-sequence recognition and realization.
//!
//! The checks are the classical ones: Erdős–Gallai for graphs, Gale–Ryser
//! for bipartite degree pairs, and the Clapham–Kleitman conditions for
//! degree sequences shared with the complement. Type sequences are
//! recognized by decomposing them into per-degree-class demands, checking
//! each class, and realizing the classes independently; the class edge sets
//! partition the edges of any realization, which is what makes the
//! decomposition sound.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::bipartite::BipartiteGraph;
use crate::graph::Graph;
use crate::types::{DegreeSequence, TypeSequence, VertexType};

/// Why a sequence was rejected. [`Rejection::code`] gives the stable
/// machine-readable form.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Rejection {
    #[error("a type references degree {degree} but no vertex has that degree")]
    UnknownDegreeEntry { degree: usize },
    #[error("vertex {vertex} demands {demand} neighbours of degree {degree}, but the class only offers {capacity}")]
    DemandExceedsClass {
        vertex: usize,
        degree: usize,
        demand: usize,
        capacity: usize,
    },
    #[error("total internal demand of degree class {degree} is odd")]
    HandshakeParity { degree: usize },
    #[error("classes {p} and {q} demand {p_total} vs {q_total} cross edges")]
    CrossSumMismatch {
        p: usize,
        q: usize,
        p_total: usize,
        q_total: usize,
    },
    #[error("internal demands of degree class {d} are not graphical")]
    EgFail { d: usize },
    #[error("cross demands between classes {p} and {q} are not bigraphical")]
    GrFail { p: usize, q: usize },
    #[error("sequence is not graphical: {witness}")]
    NotGraphical { witness: String },
    #[error("pair is not bigraphical")]
    NotBigraphical,
}

impl Rejection {
    /// Stable reason code, e.g. `eg-fail(3)` or `cross-sum-mismatch`.
    pub fn code(&self) -> String {
        match self {
            Rejection::UnknownDegreeEntry { .. } => "unknown-degree-entry".into(),
            Rejection::DemandExceedsClass { .. } => "demand-exceeds-class".into(),
            Rejection::HandshakeParity { .. } => "handshake-parity".into(),
            Rejection::CrossSumMismatch { .. } => "cross-sum-mismatch".into(),
            Rejection::EgFail { d } => format!("eg-fail({d})"),
            Rejection::GrFail { p, q } => format!("gr-fail({p},{q})"),
            Rejection::NotGraphical { .. } => "not-graphical".into(),
            Rejection::NotBigraphical => "not-bigraphical".into(),
        }
    }
}

/// Erdős–Gallai: a non-increasing sequence is graphical iff its sum is even
/// and the prefix inequalities hold. Returns the reason for failure, if any.
pub fn erdos_gallai_witness(seq: &DegreeSequence) -> Option<String> {
    let d = seq.degrees();
    let n = d.len();
    if n == 0 {
        return None;
    }
    if d[0] > n - 1 {
        return Some(format!("degree {} exceeds n-1 = {}", d[0], n - 1));
    }
    if seq.sum() % 2 != 0 {
        return Some("odd degree sum".into());
    }
    for r in 1..n {
        let lhs: usize = d[..r].iter().sum();
        let rhs: usize = r * (r - 1) + d[r..].iter().map(|&x| x.min(r)).sum::<usize>();
        if lhs > rhs {
            return Some(format!("fails at r={r}: {lhs} > {rhs}"));
        }
    }
    None
}

/// True iff the sequence is realized by some simple graph.
pub fn erdos_gallai(seq: &DegreeSequence) -> bool {
    erdos_gallai_witness(seq).is_none()
}

/// Gale–Ryser: `p` and `q` are the two-sided degrees of some bipartite graph
/// iff the sums agree and every prefix of `q` is dominated.
pub fn gale_ryser(p: &DegreeSequence, q: &DegreeSequence) -> bool {
    if p.sum() != q.sum() {
        return false;
    }
    let qd = q.degrees();
    for r in 1..=qd.len() {
        let lhs: usize = qd[..r].iter().sum();
        let rhs: usize = p.degrees().iter().map(|&x| x.min(r)).sum();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Conditions (*) and (**) for a sequence shared with the complement, plus
/// Erdős–Gallai; such sequences are exactly those realized by
/// self-complementary graphs.
pub fn clapham_kleitman(seq: &DegreeSequence) -> bool {
    let d = seq.degrees();
    let n = d.len();
    // (*) d_i + d_{n-i+1} = n - 1
    if (0..n).any(|i| d[i] + d[n - 1 - i] != n - 1) {
        return false;
    }
    // (**) every class even, middle class 1 mod 4
    for (&deg, &count) in &seq.counts() {
        let middle = n % 2 == 1 && 2 * deg == n - 1;
        let ok = if middle { count % 4 == 1 } else { count % 2 == 0 };
        if !ok {
            return false;
        }
    }
    erdos_gallai(seq)
}

/// Greedy realization of a labeled degree vector: repeatedly connect the
/// vertex with the largest residual degree (lowest label on ties) to the
/// next-largest residuals. Returns `None` when the multiset is not
/// graphical.
pub(crate) fn greedy_labeled_realization(degrees: &[usize]) -> Option<Graph> {
    let n = degrees.len();
    let mut g = Graph::new(n);
    let mut residual = degrees.to_vec();
    let mut done = vec![false; n];
    for _ in 0..n {
        let u = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| residual[a].cmp(&residual[b]).then(b.cmp(&a)))?;
        done[u] = true;
        let need = residual[u];
        residual[u] = 0;
        let mut cands: Vec<usize> = (0..n).filter(|&v| !done[v]).collect();
        cands.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        if need > cands.len() {
            return None;
        }
        for &t in &cands[..need] {
            if residual[t] == 0 {
                return None;
            }
            g.add_edge(u, t);
            residual[t] -= 1;
        }
    }
    Some(g)
}

/// Greedy bipartite realization: left vertices in order of decreasing demand
/// each take the right vertices with the largest remaining capacity.
pub(crate) fn greedy_bipartite_realization(
    left: &[usize],
    right: &[usize],
) -> Option<BipartiteGraph> {
    let mut b = BipartiteGraph::new(left.len(), right.len());
    let mut residual = right.to_vec();
    let mut order: Vec<usize> = (0..left.len()).collect();
    order.sort_by(|&a, &c| left[c].cmp(&left[a]).then(a.cmp(&c)));
    for &i in &order {
        let need = left[i];
        if need > right.len() {
            return None;
        }
        let mut cands: Vec<usize> = (0..right.len()).collect();
        cands.sort_by(|&a, &c| residual[c].cmp(&residual[a]).then(a.cmp(&c)));
        for &j in &cands[..need] {
            if residual[j] == 0 {
                return None;
            }
            b.add_edge(i, j);
            residual[j] -= 1;
        }
    }
    if residual.iter().any(|&r| r != 0) {
        return None;
    }
    Some(b)
}

/// Deterministic realization of a graphical degree sequence; vertex `i` gets
/// degree `degrees()[i]`.
pub fn realize_degree_sequence(seq: &DegreeSequence) -> Result<Graph, Rejection> {
    if let Some(witness) = erdos_gallai_witness(seq) {
        return Err(Rejection::NotGraphical { witness });
    }
    let g = greedy_labeled_realization(seq.degrees()).expect("graphical by Erdős–Gallai");
    debug_assert_eq!(g.degree_sequence(), *seq);
    Ok(g)
}

/// Deterministic realization of a bigraphical pair; left vertex `i` gets
/// degree `p[i]`, right vertex `j` gets degree `q[j]`.
pub fn realize_bipartite(
    p: &DegreeSequence,
    q: &DegreeSequence,
) -> Result<BipartiteGraph, Rejection> {
    if !gale_ryser(p, q) {
        return Err(Rejection::NotBigraphical);
    }
    let b = greedy_bipartite_realization(p.degrees(), q.degrees()).expect("bigraphical by Gale–Ryser");
    debug_assert_eq!(b.left_degrees(), p.degrees());
    Ok(b)
}

/// Per-vertex demands toward the two classes of a cross pair `(p, q)`,
/// `p < q`. Vertices are indices into the sorted type sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossDemand {
    /// `(vertex, demand)` for each degree-`p` vertex, in vertex order.
    pub left: Vec<(usize, usize)>,
    /// `(vertex, demand)` for each degree-`q` vertex, in vertex order.
    pub right: Vec<(usize, usize)>,
}

/// The degree-class decomposition of a type sequence: what degree sequence
/// each class subgraph and each cross subgraph must realize.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeSeqDecomposition {
    /// degree -> number of vertices of that degree
    pub degree_counts: BTreeMap<usize, usize>,
    /// degree -> `(vertex, demand inside its own class)`, in vertex order
    pub internal: BTreeMap<usize, Vec<(usize, usize)>>,
    /// `(p, q)` with `p < q` -> cross demands
    pub cross: BTreeMap<(usize, usize), CrossDemand>,
}

/// Decomposes a type sequence into class demands, verifying consistency:
/// every referenced degree exists, no demand exceeds its class, internal
/// demands have even sum, and cross demands agree from both sides.
pub fn decompose_type_sequence(ts: &TypeSequence) -> Result<TypeSeqDecomposition, Rejection> {
    let degree_counts = ts.degree_counts();
    let mut internal: BTreeMap<usize, Vec<(usize, usize)>> = degree_counts
        .keys()
        .map(|&d| (d, Vec::new()))
        .collect();
    let mut cross: BTreeMap<(usize, usize), CrossDemand> = BTreeMap::new();
    let present: Vec<usize> = degree_counts.keys().copied().collect();
    for (i, &p) in present.iter().enumerate() {
        for &q in &present[i + 1..] {
            cross.insert(
                (p, q),
                CrossDemand {
                    left: Vec::new(),
                    right: Vec::new(),
                },
            );
        }
    }

    for (v, t) in ts.types().iter().enumerate() {
        let p = t.len();
        for &e in t.entries() {
            if !degree_counts.contains_key(&e) {
                return Err(Rejection::UnknownDegreeEntry { degree: e });
            }
        }
        for (&q, &rq) in &degree_counts {
            let demand = t.count_of(q);
            if q == p {
                let capacity = rq - 1;
                if demand > capacity {
                    return Err(Rejection::DemandExceedsClass {
                        vertex: v,
                        degree: q,
                        demand,
                        capacity,
                    });
                }
                internal.get_mut(&p).unwrap().push((v, demand));
            } else {
                if demand > rq {
                    return Err(Rejection::DemandExceedsClass {
                        vertex: v,
                        degree: q,
                        demand,
                        capacity: rq,
                    });
                }
                let key = (p.min(q), p.max(q));
                let cd = cross.get_mut(&key).unwrap();
                if p < q {
                    cd.left.push((v, demand));
                } else {
                    cd.right.push((v, demand));
                }
            }
        }
    }

    for (&d, demands) in &internal {
        let total: usize = demands.iter().map(|&(_, c)| c).sum();
        if total % 2 != 0 {
            return Err(Rejection::HandshakeParity { degree: d });
        }
    }
    for (&(p, q), cd) in &cross {
        let p_total: usize = cd.left.iter().map(|&(_, c)| c).sum();
        let q_total: usize = cd.right.iter().map(|&(_, c)| c).sum();
        if p_total != q_total {
            return Err(Rejection::CrossSumMismatch {
                p,
                q,
                p_total,
                q_total,
            });
        }
    }

    Ok(TypeSeqDecomposition {
        degree_counts,
        internal,
        cross,
    })
}

/// Recognizes a type sequence: decomposes it, checks Erdős–Gallai per class
/// and Gale–Ryser per cross pair, and on success realizes every class
/// independently and unions the results. The returned graph has exactly the
/// given type sequence.
pub fn recognize_type_sequence(ts: &TypeSequence) -> Result<Graph, Rejection> {
    let dec = decompose_type_sequence(ts)?;
    let mut g = Graph::new(ts.len());

    for (&d, demands) in &dec.internal {
        let seq = DegreeSequence::sorted(demands.iter().map(|&(_, c)| c).collect());
        if !erdos_gallai(&seq) {
            return Err(Rejection::EgFail { d });
        }
        let labeled: Vec<usize> = demands.iter().map(|&(_, c)| c).collect();
        let sub = greedy_labeled_realization(&labeled).expect("class demands are graphical");
        for (a, b) in sub.edges() {
            g.add_edge(demands[a].0, demands[b].0);
        }
    }

    for (&(p, q), cd) in &dec.cross {
        let ps = DegreeSequence::sorted(cd.left.iter().map(|&(_, c)| c).collect());
        let qs = DegreeSequence::sorted(cd.right.iter().map(|&(_, c)| c).collect());
        if !gale_ryser(&ps, &qs) {
            return Err(Rejection::GrFail { p, q });
        }
        let left: Vec<usize> = cd.left.iter().map(|&(_, c)| c).collect();
        let right: Vec<usize> = cd.right.iter().map(|&(_, c)| c).collect();
        let sub =
            greedy_bipartite_realization(&left, &right).expect("cross demands are bigraphical");
        for (i, j) in sub.edges() {
            g.add_edge(cd.left[i].0, cd.right[j].0);
        }
    }

    debug_assert_eq!(g.type_sequence(), *ts);
    Ok(g)
}

/// The type sequence of the complement, computed at sequence level: a vertex
/// of degree `r` is non-adjacent to the degree multiset minus itself minus
/// its own type entries, and each such degree `y` becomes `n - 1 - y`.
pub fn complement_type_sequence(ts: &TypeSequence) -> Result<TypeSequence, Rejection> {
    let dec = decompose_type_sequence(ts)?;
    let n = ts.len();
    let mut out = Vec::with_capacity(n);
    for t in ts.iter() {
        let mut remaining = dec.degree_counts.clone();
        *remaining.get_mut(&t.len()).unwrap() -= 1;
        for &e in t.entries() {
            *remaining.get_mut(&e).unwrap() -= 1;
        }
        let mut entries = Vec::new();
        for (&deg, &cnt) in &remaining {
            entries.extend(std::iter::repeat(n - 1 - deg).take(cnt));
        }
        out.push(VertexType::new(entries));
    }
    Ok(TypeSequence::new(out))
}

/// Obliqueness flags computed purely at sequence level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceClassification {
    pub vertex_oblique: bool,
    pub super_vertex_oblique: bool,
    pub dually_vertex_oblique: bool,
}

pub fn classify_type_sequence(ts: &TypeSequence) -> Result<SequenceClassification, Rejection> {
    let comp = complement_type_sequence(ts)?;
    let vertex_oblique = ts.all_distinct();
    let dually_vertex_oblique = vertex_oblique && comp == *ts;
    let mut all: Vec<&VertexType> = ts.iter().chain(comp.iter()).collect();
    all.sort_unstable();
    let super_vertex_oblique = all.windows(2).all(|w| w[0] != w[1]);
    Ok(SequenceClassification {
        vertex_oblique,
        super_vertex_oblique,
        dually_vertex_oblique,
    })
}

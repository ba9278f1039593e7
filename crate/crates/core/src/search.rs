//! Exhaustive searches for dually (semi-)vertex-oblique graphs at small
//! orders, plus the structural probes around vertex deletion and
//! connectivity.
//!
//! The searches enumerate candidate degree sequences first (the symmetry,
//! parity and counting constraints kill almost all of them), then backtrack
//! over adjacency rows in degree-sorted order. A completed row fixes the
//! type of its vertex because the target degrees are prescribed, so repeated
//! types within a degree class prune immediately.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::Mutex;

use rayon::prelude::*;
use thiserror::Error;

use crate::analysis::{is_dually_vertex_oblique, semi_oblique_conditions};
use crate::bipartite::BipartiteGraph;
use crate::graph::Graph;
use crate::sequences::erdos_gallai;
use crate::switching::are_isomorphic;
use crate::types::{DegreeSequence, TypeSequence, VertexType};

/// Hard ceiling for [`enumerate_dvo`].
pub const MAX_ENUM_ORDER: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("order {n} exceeds the supported bound {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("semi-oblique search supports k in {{3, 4}}, got {k}")]
    UnsupportedK { k: usize },
    #[error("graph is not dually vertex-oblique")]
    NotDuallyVertexOblique,
    #[error("expected order 4k+1, got {n}")]
    NotApexOrder { n: usize },
}

/// Limit and parallelism knobs for the searches.
///
/// With `jobs <= 1` the search runs sequentially; under a `limit` it then
/// returns the first graphs in the canonical search order. A full
/// enumeration is schedule-independent for any job count because results
/// are deduplicated and canonically sorted; which graphs a `limit` keeps is
/// only deterministic sequentially.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub limit: Option<usize>,
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            limit: None,
            jobs: 1,
        }
    }
}

impl SearchOptions {
    pub fn with_limit(limit: usize) -> Self {
        SearchOptions {
            limit: Some(limit),
            jobs: 1,
        }
    }
}

/// Relabels a vertex-oblique graph by descending vertex type. All types are
/// distinct, so this is a canonical form.
fn canonical_oblique_edges(g: &Graph) -> Vec<(usize, usize)> {
    let types: Vec<VertexType> = (0..g.n()).map(|v| g.vertex_type(v)).collect();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| types[b].cmp(&types[a]));
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .collect();
    edges.sort_unstable();
    edges
}

/// Canonical form for bipartite graphs whose left and right types are all
/// distinct, as they are for every dually semi-vertex-oblique graph.
fn canonical_semi_edges(b: &BipartiteGraph) -> Vec<(usize, usize)> {
    let lt = b.left_types();
    let rt = b.right_types();
    let mut lorder: Vec<usize> = (0..b.left_size()).collect();
    lorder.sort_by(|&a, &c| lt[c].cmp(&lt[a]));
    let mut rorder: Vec<usize> = (0..b.right_size()).collect();
    rorder.sort_by(|&a, &c| rt[c].cmp(&rt[a]));
    let mut lpos = vec![0; b.left_size()];
    for (i, &v) in lorder.iter().enumerate() {
        lpos[v] = i;
    }
    let mut rpos = vec![0; b.right_size()];
    for (j, &v) in rorder.iter().enumerate() {
        rpos[v] = j;
    }
    let mut edges: Vec<(usize, usize)> = b
        .edges()
        .iter()
        .map(|&(i, j)| (lpos[i], rpos[j]))
        .collect();
    edges.sort_unstable();
    edges
}

/// Shared result sink; distinct canonical forms count toward the limit.
struct Collector<K: Ord + std::hash::Hash + Clone, G> {
    inner: Mutex<(HashSet<K>, Vec<(K, G)>)>,
    stop: AtomicBool,
    limit: usize,
}

impl<K: Ord + std::hash::Hash + Clone, G> Collector<K, G> {
    fn new(limit: Option<usize>) -> Self {
        Collector {
            inner: Mutex::new((HashSet::new(), Vec::new())),
            stop: AtomicBool::new(false),
            limit: limit.unwrap_or(usize::MAX),
        }
    }

    fn stopped(&self) -> bool {
        self.stop.load(AtomicOrdering::Relaxed)
    }

    fn add(&self, key: K, graph: G) {
        let mut inner = self.inner.lock().unwrap();
        if inner.0.insert(key.clone()) {
            inner.1.push((key, graph));
            if inner.1.len() >= self.limit {
                self.stop.store(true, AtomicOrdering::Relaxed);
            }
        }
    }

    fn finish(self) -> Vec<G> {
        let (_, mut found) = self.inner.into_inner().unwrap();
        found.sort_by(|a, b| a.0.cmp(&b.0));
        found.into_iter().map(|(_, g)| g).collect()
    }
}

// ---------------------------------------------------------------------------
// dually vertex-oblique enumeration
// ---------------------------------------------------------------------------

/// Degree sequences (non-increasing) that a dually vertex-oblique graph of
/// order `n` could have: symmetric about (n-1)/2, class sizes even (middle
/// class 1 mod 4), r_d < 2d away from the middle, at least three distinct
/// degrees, and graphical.
fn dvo_degree_candidates(n: usize) -> Vec<Vec<usize>> {
    if n == 0 || n % 4 > 1 {
        return Vec::new();
    }
    let odd = n % 2 == 1;
    // low degrees: d with d < n-1-d
    let low_end = if odd { (n - 1) / 2 } else { n / 2 };
    let mut out = Vec::new();
    let mut counts = vec![0usize; low_end];

    fn rec(d: usize, used: usize, n: usize, odd: bool, counts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let low_end = counts.len();
        if d == low_end {
            let mut middle = 0;
            if odd {
                if used > n {
                    return;
                }
                middle = n - used;
                if middle % 4 != 1 {
                    return;
                }
            } else if used != n {
                return;
            }
            let distinct = 2 * counts.iter().filter(|&&r| r > 0).count()
                + usize::from(middle > 0);
            if distinct < 3 {
                return;
            }
            let mut seq = Vec::with_capacity(n);
            for deg in (0..n).rev() {
                let r = if deg < low_end {
                    counts[deg]
                } else if odd && 2 * deg == n - 1 {
                    middle
                } else if n - 1 - deg < low_end {
                    counts[n - 1 - deg]
                } else {
                    0
                };
                seq.extend(std::iter::repeat(deg).take(r));
            }
            if erdos_gallai(&DegreeSequence::sorted(seq.clone())) {
                out.push(seq);
            }
            return;
        }
        let max_r = if d == 0 { 0 } else { (2 * d).saturating_sub(2) };
        let mut r = 0;
        while r <= max_r && used + 2 * r <= n {
            counts[d] = r;
            rec(d + 1, used + 2 * r, n, odd, counts, out);
            r += 2;
        }
        counts[d] = 0;
    }

    rec(0, 0, n, odd, &mut counts, &mut out);
    out.sort();
    out.dedup();
    out
}

#[derive(Clone, Copy)]
struct DvoState {
    rows: [u64; MAX_ENUM_ORDER],
    residual: [u8; MAX_ENUM_ORDER],
    keys: [u128; MAX_ENUM_ORDER],
}

struct DvoCtx<'a> {
    n: usize,
    target: &'a [usize],
    collector: &'a Collector<Vec<(usize, usize)>, Graph>,
}

/// Type fingerprint of a vertex given its neighbour mask: 8 bits of count
/// per neighbour degree. Orders stay below 12, counts below 2^8.
fn type_key(mask: u64, target: &[usize]) -> u128 {
    let mut key = 0u128;
    let mut m = mask;
    while m != 0 {
        let j = m.trailing_zeros() as usize;
        m &= m - 1;
        key += 1u128 << (8 * target[j]);
    }
    key
}

fn dvo_emit(ctx: &DvoCtx<'_>, state: &DvoState) {
    let mut g = Graph::new(ctx.n);
    for i in 0..ctx.n {
        let mut m = state.rows[i];
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            if j > i {
                g.add_edge(i, j);
            }
        }
    }
    // distinct types are guaranteed by the in-search pruning; what remains is
    // the type symmetry with the complement
    if is_dually_vertex_oblique(&g) {
        let key = canonical_oblique_edges(&g);
        let canon = Graph::from_edges(ctx.n, key.iter().copied());
        ctx.collector.add(key, canon);
    }
}

/// The remaining residuals must be realizable as a graph on the unfilled
/// vertices; this is an Erdős–Gallai check on the sorted residuals.
fn residuals_graphical(residual: &[u8]) -> bool {
    let mut d: Vec<usize> = residual.iter().map(|&r| r as usize).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let n = d.len();
    if n == 0 {
        return true;
    }
    if d[0] > n.saturating_sub(1) {
        return false;
    }
    if d.iter().sum::<usize>() % 2 != 0 {
        return false;
    }
    for r in 1..n {
        let lhs: usize = d[..r].iter().sum();
        let rhs: usize = r * (r - 1) + d[r..].iter().map(|&x| x.min(r)).sum::<usize>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Completes row `i` with `mask` already merged into the state, then runs
/// the post-row checks and recurses.
fn dvo_after_row(ctx: &DvoCtx<'_>, mut state: DvoState, i: usize) {
    let n = ctx.n;
    state.residual[i] = 0;
    if !residuals_graphical(&state.residual[i + 1..n]) {
        return;
    }
    // the type of vertex i is now final; it must differ from every earlier
    // vertex of the same prescribed degree
    let key = type_key(state.rows[i], ctx.target);
    let mut k = i;
    while k > 0 && ctx.target[k - 1] == ctx.target[i] {
        k -= 1;
        if state.keys[k] == key {
            return;
        }
    }
    state.keys[i] = key;
    dvo_rows(ctx, state, i + 1);
}

fn dvo_rows(ctx: &DvoCtx<'_>, state: DvoState, i: usize) {
    if ctx.collector.stopped() {
        return;
    }
    if i == ctx.n {
        dvo_emit(ctx, &state);
        return;
    }
    let need = state.residual[i] as usize;
    dvo_choose(ctx, state, i, i + 1, need);
}

/// Chooses `need` forward neighbours for row `i` among `j..n`.
fn dvo_choose(ctx: &DvoCtx<'_>, state: DvoState, i: usize, j: usize, need: usize) {
    let n = ctx.n;
    if need == 0 {
        dvo_after_row(ctx, state, i);
        return;
    }
    if j >= n {
        return;
    }
    let avail = (j..n).filter(|&x| state.residual[x] > 0).count();
    if avail < need {
        return;
    }
    if state.residual[j] > 0 {
        let mut with = state;
        with.rows[i] |= 1 << j;
        with.rows[j] |= 1 << i;
        with.residual[j] -= 1;
        dvo_choose(ctx, with, i, j + 1, need - 1);
    }
    dvo_choose(ctx, state, i, j + 1, need);
}

/// All dually vertex-oblique graphs of order `n <= 12`, one canonical
/// representative per isomorphism class, canonically sorted.
pub fn enumerate_dvo(n: usize, opts: &SearchOptions) -> Result<Vec<Graph>, SearchError> {
    if n > MAX_ENUM_ORDER {
        return Err(SearchError::OrderTooLarge {
            n,
            max: MAX_ENUM_ORDER,
        });
    }
    let candidates = dvo_degree_candidates(n);
    let collector = Collector::new(opts.limit);

    // partition the tree by the first row so workers explore disjoint parts
    let mut jobs: Vec<(&[usize], u64)> = Vec::new();
    for target in &candidates {
        let need = target[0];
        let mut masks = Vec::new();
        subsets_of(1..n, need, &mut masks);
        for mask in masks {
            jobs.push((target, mask));
        }
    }

    let run = |&(target, mask): &(&[usize], u64)| {
        let ctx = DvoCtx {
            n,
            target,
            collector: &collector,
        };
        let mut state = DvoState {
            rows: [0; MAX_ENUM_ORDER],
            residual: [0; MAX_ENUM_ORDER],
            keys: [0; MAX_ENUM_ORDER],
        };
        for (v, &d) in target.iter().enumerate() {
            state.residual[v] = d as u8;
        }
        state.rows[0] = mask;
        let mut m = mask;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            state.rows[j] |= 1;
            state.residual[j] -= 1;
        }
        dvo_after_row(&ctx, state, 0);
    };

    if opts.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| jobs.par_iter().for_each(run));
    } else {
        jobs.iter().for_each(run);
    }
    Ok(collector.finish())
}

/// All subsets of `range` of the given size, as bit masks in lexicographic
/// order of their element lists.
fn subsets_of(range: std::ops::Range<usize>, size: usize, out: &mut Vec<u64>) {
    fn rec(lo: usize, hi: usize, size: usize, acc: u64, out: &mut Vec<u64>) {
        if size == 0 {
            out.push(acc);
            return;
        }
        if hi - lo < size {
            return;
        }
        rec(lo + 1, hi, size - 1, acc | (1 << lo), out);
        rec(lo + 1, hi, size, acc, out);
    }
    rec(range.start, range.end, size, 0, out);
}

// ---------------------------------------------------------------------------
// dually semi-vertex-oblique search
// ---------------------------------------------------------------------------

/// Candidate part degree multisets for a dually semi-vertex-oblique graph
/// with parts of size 2k: entries in [1, 2k-1], multiset symmetric about k,
/// and bigraphical against itself. Conditions (ii) and (iii) force the left
/// and right multisets to be equal and self-complementary.
fn semi_margin_candidates(k: usize) -> Vec<Vec<usize>> {
    let size = 2 * k;
    let mut out = Vec::new();
    let mut counts = vec![0usize; k]; // counts[d-1] = r_d for d in 1..k
    fn rec(d: usize, used: usize, k: usize, counts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let size = 2 * k;
        if d == k {
            let middle = size - used; // r_k
            let mut seq = Vec::with_capacity(size);
            for deg in (1..size).rev() {
                let r = if deg == k {
                    middle
                } else if deg < k {
                    counts[deg - 1]
                } else {
                    // deg > k pairs with size - deg < k
                    counts[size - deg - 1]
                };
                seq.extend(std::iter::repeat(deg).take(r));
            }
            let s = DegreeSequence::sorted(seq.clone());
            if crate::sequences::gale_ryser(&s, &s) {
                out.push(seq);
            }
            return;
        }
        let mut r = 0;
        while used + 2 * r <= size {
            counts[d - 1] = r;
            rec(d + 1, used + 2 * r, k, counts, out);
            r += 1;
        }
        counts[d - 1] = 0;
    }
    rec(1, 0, k, &mut counts, &mut out);
    out.sort();
    out.dedup();
    let _ = size;
    out
}

#[derive(Clone, Copy)]
struct SemiState {
    rows: [u64; 8],
    residual: [u8; 8],
    keys: [u128; 8],
}

struct SemiCtx<'a> {
    size: usize,
    margins: &'a [usize],
    collector: &'a Collector<(usize, Vec<(usize, usize)>), BipartiteGraph>,
}

fn semi_emit(ctx: &SemiCtx<'_>, state: &SemiState) {
    let mut b = BipartiteGraph::new(ctx.size, ctx.size);
    for i in 0..ctx.size {
        let mut m = state.rows[i];
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            b.add_edge(i, j);
        }
    }
    let cond = semi_oblique_conditions(&b).expect("parts are equal and even");
    if cond.all() {
        let key = canonical_semi_edges(&b);
        let canon = BipartiteGraph::from_edges(ctx.size, ctx.size, key.iter().copied());
        ctx.collector.add((ctx.size, key), canon);
    }
}

fn semi_rows(ctx: &SemiCtx<'_>, state: SemiState, i: usize) {
    if ctx.collector.stopped() {
        return;
    }
    let size = ctx.size;
    if i == size {
        if state.residual[..size].iter().all(|&r| r == 0) {
            semi_emit(ctx, &state);
        }
        return;
    }
    let need = ctx.margins[i];
    semi_choose(ctx, state, i, 0, need, 0);
}

fn semi_choose(ctx: &SemiCtx<'_>, state: SemiState, i: usize, j: usize, need: usize, acc: u64) {
    let size = ctx.size;
    if need == 0 {
        semi_after_row(ctx, state, i, acc);
        return;
    }
    if j >= size || size - j < need {
        return;
    }
    if state.residual[j] > 0 {
        let mut with = state;
        with.residual[j] -= 1;
        semi_choose(ctx, with, i, j + 1, need - 1, acc | (1 << j));
    }
    semi_choose(ctx, state, i, j + 1, need, acc);
}

fn semi_after_row(ctx: &SemiCtx<'_>, mut state: SemiState, i: usize, mask: u64) {
    let size = ctx.size;
    state.rows[i] = mask;
    // rows of equal margin must come in non-increasing column-lexicographic
    // order; any matrix can be row-permuted into this form
    if i > 0 && ctx.margins[i] == ctx.margins[i - 1] {
        if mask.reverse_bits() > state.rows[i - 1].reverse_bits() {
            return;
        }
    }
    // remaining rows must be able to fill every column
    let remaining = size - i - 1;
    for j in 0..size {
        if state.residual[j] as usize > remaining {
            return;
        }
    }
    // left types must stay pairwise distinct (condition (i)); types of
    // different lengths differ automatically
    let key = type_key(mask, ctx.margins);
    let mut k = i;
    while k > 0 && ctx.margins[k - 1] == ctx.margins[i] {
        k -= 1;
        if state.keys[k] == key {
            return;
        }
    }
    state.keys[i] = key;
    semi_rows(ctx, state, i + 1);
}

/// All dually semi-vertex-oblique bipartite graphs with parts of size 2k,
/// `k` in {3, 4}, canonically sorted (left/right roles fixed).
pub fn search_semi_dvo(k: usize, opts: &SearchOptions) -> Result<Vec<BipartiteGraph>, SearchError> {
    if !(k == 3 || k == 4) {
        return Err(SearchError::UnsupportedK { k });
    }
    let size = 2 * k;
    let candidates = semi_margin_candidates(k);
    let collector = Collector::new(opts.limit);

    let mut jobs: Vec<(&[usize], u64)> = Vec::new();
    for margins in &candidates {
        let mut masks = Vec::new();
        subsets_of(0..size, margins[0], &mut masks);
        for mask in masks {
            jobs.push((margins, mask));
        }
    }

    let run = |&(margins, mask): &(&[usize], u64)| {
        let ctx = SemiCtx {
            size,
            margins,
            collector: &collector,
        };
        let mut state = SemiState {
            rows: [0; 8],
            residual: [0; 8],
            keys: [0; 8],
        };
        for (j, &d) in margins.iter().enumerate() {
            state.residual[j] = d as u8;
        }
        let mut m = mask;
        let mut ok = true;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            if state.residual[j] == 0 {
                ok = false;
                break;
            }
            state.residual[j] -= 1;
        }
        if ok {
            semi_after_row(&ctx, state, 0, mask);
        }
    };

    if opts.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| jobs.par_iter().for_each(run));
    } else {
        jobs.iter().for_each(run);
    }
    Ok(collector.finish())
}

// ---------------------------------------------------------------------------
// probes
// ---------------------------------------------------------------------------

/// One vertex-deletion outcome of [`probe_vertex_deletion`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionRow {
    pub vertex: usize,
    /// is the deleted graph still vertex-oblique?
    pub vertex_oblique: bool,
    /// does its type multiset still match its complement's?
    pub types_match_complement: bool,
}

/// Report on deleting middle-degree vertices from a dually vertex-oblique
/// graph of order 4k+1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionProbe {
    pub rows: Vec<DeletionRow>,
}

impl DeletionProbe {
    /// True when every middle-degree deletion destroys obliqueness or type
    /// symmetry — the pattern the open question asks for.
    pub fn witnesses_open_problem(&self) -> bool {
        !self.rows.is_empty()
            && self
                .rows
                .iter()
                .all(|r| !r.vertex_oblique || !r.types_match_complement)
    }
}

/// For each vertex of degree 2k in a dually vertex-oblique graph of order
/// 4k+1, reports whether the graph minus that vertex keeps obliqueness and
/// type symmetry. Exploratory only.
pub fn probe_vertex_deletion(g: &Graph) -> Result<DeletionProbe, SearchError> {
    if !is_dually_vertex_oblique(g) {
        return Err(SearchError::NotDuallyVertexOblique);
    }
    let n = g.n();
    if n % 4 != 1 {
        return Err(SearchError::NotApexOrder { n });
    }
    let mid = (n - 1) / 2;
    let mut rows = Vec::new();
    for v in (0..n).filter(|&v| g.degree(v) == mid) {
        let h = g.delete_vertex(v);
        let ts = h.type_sequence();
        rows.push(DeletionRow {
            vertex: v,
            vertex_oblique: ts.all_distinct(),
            types_match_complement: ts == h.complement().type_sequence(),
        });
    }
    Ok(DeletionProbe { rows })
}

/// Exact vertex connectivity: the minimum over non-adjacent pairs of the
/// maximum number of internally disjoint paths, via unit-capacity max-flow
/// on the split-vertex network. Complete graphs get n-1 by convention.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if g.edge_count() == n * (n - 1) / 2 {
        return n - 1;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(max_vertex_flow(g, s, t));
                if best == 0 {
                    return 0;
                }
            }
        }
    }
    best
}

/// Max-flow from `s` to `t` where every vertex other than the endpoints has
/// capacity one. Nodes are split: `v` enters at `v` and leaves at `v + n`.
fn max_vertex_flow(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    let nodes = 2 * n;
    let big = n as i64;
    let mut cap = vec![0i64; nodes * nodes];
    for v in 0..n {
        cap[v * nodes + v + n] = if v == s || v == t { big } else { 1 };
    }
    for (u, v) in g.edges() {
        cap[(u + n) * nodes + v] = big;
        cap[(v + n) * nodes + u] = big;
    }
    let source = s + n;
    let sink = t;
    let mut flow = 0usize;
    loop {
        // BFS for an augmenting path
        let mut prev = vec![usize::MAX; nodes];
        prev[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..nodes {
                if prev[y] == usize::MAX && cap[x * nodes + y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        // unit augmentation is enough: every path crosses a capacity-1 arc
        let mut y = sink;
        while y != source {
            let x = prev[y];
            cap[x * nodes + y] -= 1;
            cap[y * nodes + x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// All graphs (one per isomorphism class) on up to 7 vertices whose type
/// sequence equals `ts`, by exhaustive enumeration.
pub fn enumerate_with_type_sequence(ts: &TypeSequence) -> Result<Vec<Graph>, SearchError> {
    let n = ts.len();
    if n > 7 {
        return Err(SearchError::OrderTooLarge { n, max: 7 });
    }
    let mut target_degrees: Vec<usize> = ts.iter().map(|t| t.len()).collect();
    target_degrees.sort_unstable_by(|a, b| b.cmp(a));
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut reps: Vec<Graph> = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut rows = [0u8; 7];
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            let (u, v) = pairs[b];
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        let mut degrees: Vec<usize> = rows[..n].iter().map(|r| r.count_ones() as usize).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        if degrees != target_degrees {
            continue;
        }
        let g = Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        );
        if g.type_sequence() == *ts && !reps.iter().any(|h| are_isomorphic(h, &g)) {
            reps.push(g);
        }
    }
    Ok(reps)
}

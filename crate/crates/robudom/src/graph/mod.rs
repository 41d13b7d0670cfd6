//! Graph representation, seeded G(n,p) generation, conflict-graph removal,
//! and the domination predicate.
//!
//! Graphs are undirected and simple, on vertices `0..n`. Two storage layouts
//! back the same API: bit-packed adjacency rows for `n <= 4096` (the exact
//! oracle and dense operations want word-wide row ops) and sorted neighbor
//! lists above that (large sparse trials want O(m) memory). Graphs are
//! immutable once built and safe to share across trial workers.

mod conflict;
mod io;

pub use conflict::{build_conflict, ConflictGraph, ConflictKind};
pub use io::{parse_edge_list, write_edge_list};

use crate::rng::edge_draw;
use thiserror::Error;

/// Largest vertex count stored as bit-packed adjacency rows.
pub const BITSET_MAX_N: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(String),
    #[error("graphs have mismatched vertex counts ({0} vs {1})")]
    MismatchedN(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} rejected")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1}) rejected")]
    DuplicateEdge(usize, usize),
    #[error("infeasible conflict graph request: {0}")]
    InfeasibleConflict(String),
    #[error("malformed edge list: {0}")]
    Parse(String),
}

/// Generation parameters for a Bernoulli random graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl GraphSpec {
    pub fn new(n: usize, p: f64, seed: u64) -> Self {
        Self { n, p, seed }
    }

    fn validate(&self) -> Result<(), GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if !(0.0..=1.0).contains(&self.p) || self.p.is_nan() {
            return Err(GraphError::InvalidProbability(self.p.to_string()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Storage {
    /// Flat row-major bitset, `words_per_row` words per vertex.
    Bits { words_per_row: usize, rows: Vec<u64> },
    /// Sorted neighbor list per vertex.
    Lists(Vec<Vec<u32>>),
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    storage: Storage,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n > 0, "graph must have at least one vertex");
        let storage = if n <= BITSET_MAX_N {
            let wpr = n.div_ceil(64);
            Storage::Bits {
                words_per_row: wpr,
                rows: vec![0u64; wpr * n],
            }
        } else {
            Storage::Lists(vec![Vec::new(); n])
        };
        Graph {
            n,
            storage,
            edge_count: 0,
        }
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list, validating ranges, self-loops and
    /// duplicates.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !g.insert_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Inserts the undirected edge `(u, v)`. Returns false if already present.
    /// Internal: public graphs are immutable after construction.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        match &mut self.storage {
            Storage::Bits { words_per_row, rows } => {
                let wpr = *words_per_row;
                let (wu, bu) = (u * wpr + v / 64, v % 64);
                if rows[wu] >> bu & 1 == 1 {
                    return false;
                }
                rows[wu] |= 1 << bu;
                let (wv, bv) = (v * wpr + u / 64, u % 64);
                rows[wv] |= 1 << bv;
            }
            Storage::Lists(lists) => {
                match lists[u].binary_search(&(v as u32)) {
                    Ok(_) => return false,
                    Err(pos) => lists[u].insert(pos, v as u32),
                }
                let pos = lists[v].binary_search(&(u as u32)).unwrap_err();
                lists[v].insert(pos, u as u32);
            }
        }
        self.edge_count += 1;
        true
    }

    /// Removes the undirected edge `(u, v)` if present.
    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        match &mut self.storage {
            Storage::Bits { words_per_row, rows } => {
                let wpr = *words_per_row;
                let (wu, bu) = (u * wpr + v / 64, v % 64);
                if rows[wu] >> bu & 1 == 0 {
                    return false;
                }
                rows[wu] &= !(1 << bu);
                let (wv, bv) = (v * wpr + u / 64, u % 64);
                rows[wv] &= !(1 << bv);
            }
            Storage::Lists(lists) => match lists[u].binary_search(&(v as u32)) {
                Ok(pos) => {
                    lists[u].remove(pos);
                    let pos = lists[v].binary_search(&(u as u32)).unwrap();
                    lists[v].remove(pos);
                }
                Err(_) => return false,
            },
        }
        self.edge_count -= 1;
        true
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        match &self.storage {
            Storage::Bits { words_per_row, rows } => {
                rows[u * words_per_row + v / 64] >> (v % 64) & 1 == 1
            }
            Storage::Lists(lists) => lists[u].binary_search(&(v as u32)).is_ok(),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        match &self.storage {
            Storage::Bits { words_per_row, rows } => rows[v * words_per_row..(v + 1) * words_per_row]
                .iter()
                .map(|w| w.count_ones() as usize)
                .sum(),
            Storage::Lists(lists) => lists[v].len(),
        }
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> NeighborIter<'_> {
        debug_assert!(v < self.n);
        match &self.storage {
            Storage::Bits { words_per_row, rows } => NeighborIter::Bits {
                words: &rows[v * words_per_row..(v + 1) * words_per_row],
                word_idx: 0,
                current: rows[v * words_per_row],
            },
            Storage::Lists(lists) => NeighborIter::Lists(lists[v].iter()),
        }
    }

    /// Visits every edge once as `(u, v)` with `u < v`, ascending.
    pub fn for_each_edge(&self, mut f: impl FnMut(usize, usize)) {
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    f(u, v);
                }
            }
        }
    }

    /// ORs the closed neighborhood N[v] into `mask`.
    pub(crate) fn mark_closed_neighborhood(&self, v: usize, mask: &mut VertexSet) {
        debug_assert_eq!(mask.n, self.n);
        mask.insert(v);
        match &self.storage {
            Storage::Bits { words_per_row, rows } => {
                mask.or_words(&rows[v * words_per_row..(v + 1) * words_per_row]);
            }
            Storage::Lists(lists) => {
                for &w in &lists[v] {
                    mask.insert(w as usize);
                }
            }
        }
    }

    /// Adjacency row as a bitmask; only available for bit-packed storage.
    pub(crate) fn row_word(&self, v: usize) -> Option<u64> {
        match &self.storage {
            Storage::Bits { words_per_row, rows } if *words_per_row == 1 => Some(rows[v]),
            _ => None,
        }
    }
}

/// Iterator over a vertex's neighbors.
pub enum NeighborIter<'a> {
    Bits {
        words: &'a [u64],
        word_idx: usize,
        current: u64,
    },
    Lists(std::slice::Iter<'a, u32>),
}

impl Iterator for NeighborIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        match self {
            NeighborIter::Bits {
                words,
                word_idx,
                current,
            } => loop {
                if *current != 0 {
                    let bit = current.trailing_zeros() as usize;
                    *current &= *current - 1;
                    return Some(*word_idx * 64 + bit);
                }
                *word_idx += 1;
                if *word_idx >= words.len() {
                    return None;
                }
                *current = words[*word_idx];
            },
            NeighborIter::Lists(it) => it.next().map(|&v| v as usize),
        }
    }
}

/// Set of vertex ids in `[0, n)`, bit-packed, with cached cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0u64; n.div_ceil(64)],
            len: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::new(n);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        if n % 64 != 0 {
            *s.words.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
        }
        s.len = n;
        s
    }

    pub fn from_iter(n: usize, iter: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSet::new(n);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Inserts `v`; returns true if it was not already present.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} out of range for n = {}", self.n);
        let (w, b) = (v / 64, v % 64);
        if self.words[w] >> b & 1 == 1 {
            return false;
        }
        self.words[w] |= 1 << b;
        self.len += 1;
        true
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.n, other.n);
        self.or_words(&other.words);
    }

    fn or_words(&mut self, words: &[u64]) {
        debug_assert!(words.len() <= self.words.len());
        for (dst, src) in self.words.iter_mut().zip(words) {
            *dst |= src;
        }
        self.recount();
    }

    fn recount(&mut self) {
        self.len = self.words.iter().map(|w| w.count_ones() as usize).sum();
    }

    pub fn is_full(&self) -> bool {
        self.len == self.n
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }

    pub fn to_sorted_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Per-graph degree and edge statistics.
///
/// An isolated edge is an edge both of whose endpoints have degree 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub max_degree: usize,
    pub edge_count: usize,
    pub isolated_edge_count: usize,
    pub isolated_vertex_count: usize,
}

/// Generates the Bernoulli random graph G(n, p).
///
/// Each unordered pair is present independently with probability `p`; the
/// draw for pair `(u, v)` is keyed by `(seed, u, v)`, so the same spec always
/// yields the identical graph regardless of traversal order.
pub fn gen_bernoulli(spec: &GraphSpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let n = spec.n;
    if spec.p == 0.0 {
        return Ok(Graph::empty(n));
    }
    if spec.p == 1.0 {
        return Ok(Graph::complete(n));
    }
    if n <= BITSET_MAX_N {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if edge_draw(spec.seed, u, v, spec.p) {
                    g.insert_edge(u, v);
                }
            }
        }
        Ok(g)
    } else {
        // Pairs are visited with u < v ascending, so each list is built in
        // sorted order without a sort pass.
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut edge_count = 0usize;
        for u in 0..n {
            for v in (u + 1)..n {
                if edge_draw(spec.seed, u, v, spec.p) {
                    lists[u].push(v as u32);
                    lists[v].push(u as u32);
                    edge_count += 1;
                }
            }
        }
        Ok(Graph {
            n,
            storage: Storage::Lists(lists),
            edge_count,
        })
    }
}

/// The set-difference graph G \ H: an edge is present iff present in `g` and
/// absent in `h`.
pub fn graph_minus(g: &Graph, h: &ConflictGraph) -> Result<Graph, GraphError> {
    if g.n() != h.graph().n() {
        return Err(GraphError::MismatchedN(g.n(), h.graph().n()));
    }
    let mut out = g.clone();
    h.graph().for_each_edge(|u, v| {
        out.remove_edge(u, v);
    });
    Ok(out)
}

/// True iff every vertex outside `s` has a neighbor in `s` within `g_eff`.
///
/// This is the literal definition: an isolated vertex is dominated only by
/// membership in `s`.
pub fn is_dominating(g_eff: &Graph, s: &VertexSet) -> Result<bool, GraphError> {
    is_dominating_with(g_eff, s, false)
}

/// Domination check with an isolated-vertex convention switch.
///
/// With `ignore_isolated`, vertices of degree 0 in `g_eff` are exempt: the
/// predicate becomes domination of the non-isolated subgraph, which is the
/// working notion in the sparse regime.
pub fn is_dominating_with(
    g_eff: &Graph,
    s: &VertexSet,
    ignore_isolated: bool,
) -> Result<bool, GraphError> {
    if s.universe() != g_eff.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: s.universe().saturating_sub(1),
            n: g_eff.n(),
        });
    }
    let mut covered = s.clone();
    for v in s.iter() {
        g_eff.mark_closed_neighborhood(v, &mut covered);
    }
    if covered.is_full() {
        return Ok(true);
    }
    if !ignore_isolated {
        return Ok(false);
    }
    Ok((0..g_eff.n()).all(|v| covered.contains(v) || g_eff.degree(v) == 0))
}

/// Degree/edge statistics of `g` (see [`GraphStats`]).
pub fn stats(g: &Graph) -> GraphStats {
    let n = g.n();
    let mut degrees = vec![0usize; n];
    for (v, d) in degrees.iter_mut().enumerate() {
        *d = g.degree(v);
    }
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let isolated_vertex_count = degrees.iter().filter(|&&d| d == 0).count();
    let mut isolated_edge_count = 0usize;
    g.for_each_edge(|u, v| {
        if degrees[u] == 1 && degrees[v] == 1 {
            isolated_edge_count += 1;
        }
    });
    GraphStats {
        max_degree,
        edge_count: g.edge_count(),
        isolated_edge_count,
        isolated_vertex_count,
    }
}

/// Re-draws every edge incident to `j` as iid Bernoulli(p) keyed by `seed`;
/// all other edges are unchanged. This is the coupled graph used for the
/// edge-resampling concentration check.
pub fn resample_vertex_edges(g: &Graph, j: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if j >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: j, n: g.n() });
    }
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(GraphError::InvalidProbability(p.to_string()));
    }
    let mut out = g.clone();
    let others: Vec<usize> = (0..g.n()).filter(|&w| w != j).collect();
    for &w in &others {
        out.remove_edge(j, w);
    }
    for &w in &others {
        if edge_draw(seed, j, w, p) {
            out.insert_edge(j, w);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn gen_p_zero_is_empty() {
        let g = gen_bernoulli(&GraphSpec::new(5, 0.0, 7)).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn gen_p_one_is_complete() {
        let g = gen_bernoulli(&GraphSpec::new(5, 1.0, 7)).unwrap();
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn gen_rejects_n_zero() {
        assert_eq!(
            gen_bernoulli(&GraphSpec::new(0, 0.5, 1)),
            Err(GraphError::EmptyGraph)
        );
    }

    #[test]
    fn gen_rejects_bad_probability() {
        assert!(matches!(
            gen_bernoulli(&GraphSpec::new(5, 1.5, 1)),
            Err(GraphError::InvalidProbability(_))
        ));
    }

    #[test]
    fn gen_is_deterministic_and_storage_agnostic() {
        let spec = GraphSpec::new(200, 0.3, 99);
        let a = gen_bernoulli(&spec).unwrap();
        let b = gen_bernoulli(&spec).unwrap();
        assert_eq!(a, b);
        // The same seed on different n must not coincide edge-for-edge with a
        // prefix reshuffle: sanity only, not an API promise.
        let c = gen_bernoulli(&GraphSpec::new(200, 0.3, 100)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn adjacency_is_symmetric_without_loops() {
        for &n in &[10usize, 100, 4097] {
            let g = gen_bernoulli(&GraphSpec::new(n, 0.2, 5)).unwrap();
            let mut checked = 0usize;
            for u in 0..n.min(64) {
                assert!(!g.has_edge(u, u));
                for v in g.neighbors(u) {
                    assert!(g.has_edge(v, u));
                    checked += 1;
                }
            }
            assert!(checked > 0);
            let degree_sum: usize = (0..n).map(|v| g.degree(v)).sum();
            assert_eq!(degree_sum, 2 * g.edge_count());
        }
    }

    #[test]
    fn bernoulli_edge_count_matches_binomial_moments() {
        // Binomial oracle: C(1000,2) pairs at p = 0.5 gives mean 249750 and
        // sd = sqrt(499500 * 0.25) ~ 353.4. The mean over 10_000 seeds has
        // standard error sd / 100, checked at 4 sigma.
        use rayon::prelude::*;
        let n = 1000usize;
        let pairs = n * (n - 1) / 2;
        let mean = pairs as f64 * 0.5;
        let sd = (pairs as f64 * 0.25).sqrt();
        let seeds = 10_000u64;
        let total: f64 = (0..seeds)
            .into_par_iter()
            .map(|s| {
                let mut count = 0usize;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if edge_draw(s, u, v, 0.5) {
                            count += 1;
                        }
                    }
                }
                count as f64
            })
            .sum();
        let observed = total / seeds as f64;
        let tol = 4.0 * sd / (seeds as f64).sqrt();
        assert!(
            (observed - mean).abs() <= tol,
            "mean edge count {observed} departs from {mean} by more than {tol}"
        );
    }

    #[test]
    fn minus_empty_is_identity() {
        let g = gen_bernoulli(&GraphSpec::new(30, 0.4, 3)).unwrap();
        let h = build_conflict(ConflictKind::Empty, 30).unwrap();
        assert_eq!(graph_minus(&g, &h).unwrap(), g);
    }

    #[test]
    fn minus_k5_by_k5_is_empty() {
        let g = Graph::complete(5);
        let h = ConflictGraph::from_graph(Graph::complete(5));
        assert_eq!(graph_minus(&g, &h).unwrap().edge_count(), 0);
    }

    #[test]
    fn minus_cycle_by_one_edge_is_path() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let h = build_conflict(ConflictKind::EdgeList(vec![(0, 1)]), 4).unwrap();
        let g = graph_minus(&c4, &h).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(!g.has_edge(0, 1));
        assert!(g.has_edge(1, 2) && g.has_edge(2, 3) && g.has_edge(3, 0));
    }

    #[test]
    fn minus_rejects_mismatched_n() {
        let g = Graph::empty(4);
        let h = build_conflict(ConflictKind::Empty, 5).unwrap();
        assert_eq!(graph_minus(&g, &h), Err(GraphError::MismatchedN(4, 5)));
    }

    #[test]
    fn minus_edge_count_identity() {
        let g = gen_bernoulli(&GraphSpec::new(60, 0.5, 11)).unwrap();
        let h = build_conflict(ConflictKind::RandomRegular { d: 6, seed: 4 }, 60).unwrap();
        let gm = graph_minus(&g, &h).unwrap();
        let mut common = 0usize;
        h.graph().for_each_edge(|u, v| {
            if g.has_edge(u, v) {
                common += 1;
            }
        });
        assert_eq!(gm.edge_count(), g.edge_count() - common);
    }

    #[test]
    fn full_set_always_dominates() {
        let g = gen_bernoulli(&GraphSpec::new(40, 0.1, 2)).unwrap();
        assert!(is_dominating(&g, &VertexSet::full(40)).unwrap());
    }

    #[test]
    fn isolated_vertex_breaks_literal_domination() {
        let g = Graph::empty(2);
        let s = VertexSet::from_iter(2, [0]);
        assert!(!is_dominating(&g, &s).unwrap());
        assert!(is_dominating_with(&g, &s, true).unwrap());
    }

    #[test]
    fn path_center_dominates() {
        let g = path(3);
        let s = VertexSet::from_iter(3, [1]);
        assert!(is_dominating(&g, &s).unwrap());
    }

    #[test]
    fn dominating_rejects_universe_mismatch() {
        let g = Graph::empty(3);
        let s = VertexSet::new(4);
        assert!(is_dominating(&g, &s).is_err());
    }

    #[test]
    fn stats_examples() {
        let empty = Graph::empty(4);
        assert_eq!(
            stats(&empty),
            GraphStats {
                max_degree: 0,
                edge_count: 0,
                isolated_edge_count: 0,
                isolated_vertex_count: 4
            }
        );

        let single = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(
            stats(&single),
            GraphStats {
                max_degree: 1,
                edge_count: 1,
                isolated_edge_count: 1,
                isolated_vertex_count: 0
            }
        );

        // Path 0-1-2 plus the edge 3-4: max degree 2, three edges of which
        // exactly 3-4 is isolated.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(
            stats(&g),
            GraphStats {
                max_degree: 2,
                edge_count: 3,
                isolated_edge_count: 1,
                isolated_vertex_count: 0
            }
        );
    }

    #[test]
    fn resample_p_zero_isolates_vertex() {
        let g = Graph::complete(6);
        let r = resample_vertex_edges(&g, 2, 0.0, 9).unwrap();
        assert_eq!(r.degree(2), 0);
        assert_eq!(r.edge_count(), g.edge_count() - 5);
    }

    #[test]
    fn resample_p_one_saturates_vertex() {
        let g = Graph::empty(6);
        let r = resample_vertex_edges(&g, 2, 1.0, 9).unwrap();
        assert_eq!(r.degree(2), 5);
    }

    #[test]
    fn resample_touches_only_incident_edges() {
        let g = gen_bernoulli(&GraphSpec::new(40, 0.5, 21)).unwrap();
        let r = resample_vertex_edges(&g, 7, 0.5, 22).unwrap();
        for u in 0..40 {
            for v in (u + 1)..40 {
                if u != 7 && v != 7 {
                    assert_eq!(g.has_edge(u, v), r.has_edge(u, v), "edge ({u},{v}) changed");
                }
            }
        }
    }

    #[test]
    fn resample_k4_retains_far_edges() {
        let g = Graph::complete(4);
        let r = resample_vertex_edges(&g, 2, 0.5, 1234).unwrap();
        for (u, v) in [(0, 1), (0, 3), (1, 3)] {
            assert!(r.has_edge(u, v));
        }
    }

    #[test]
    fn resample_rejects_out_of_range() {
        let g = Graph::empty(3);
        assert!(resample_vertex_edges(&g, 3, 0.5, 0).is_err());
    }

    #[test]
    fn vertex_set_iteration_is_sorted() {
        let s = VertexSet::from_iter(100, [17, 3, 99, 3, 64]);
        assert_eq!(s.to_sorted_vec(), vec![3, 17, 64, 99]);
        assert_eq!(s.len(), 4);
    }
}

//! Deterministic conflict-graph families.
//!
//! The conflict graph H models forbidden links: an arbitrary deterministic
//! subgraph of K_n characterized by its edge count m and maximum degree.
//! These builders instantiate the families the experiments sweep over.

use super::{Graph, GraphError};
use crate::rng::{derive_seed, stream};
use rand::Rng;
use std::collections::HashSet;

/// Conflict graph H with cached edge count `m` and maximum degree `delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictGraph {
    graph: Graph,
    m: usize,
    delta: usize,
}

impl ConflictGraph {
    pub fn from_graph(graph: Graph) -> Self {
        let delta = (0..graph.n()).map(|v| graph.degree(v)).max().unwrap_or(0);
        let m = graph.edge_count();
        ConflictGraph { graph, m, delta }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.graph.degree(v)
    }
}

/// Requested conflict-graph family.
#[derive(Debug, Clone, PartialEq)]
pub enum ConflictKind {
    Empty,
    /// Star centered at vertex 0 with the given degree.
    Star { delta: usize },
    /// Matching (2i, 2i+1) with the given number of edges.
    Matching { m: usize },
    /// d-regular graph: circulant base randomized by seeded double-edge swaps.
    RandomRegular { d: usize, seed: u64 },
    EdgeList(Vec<(usize, usize)>),
}

/// Builds the requested conflict graph on `n` vertices.
///
/// Deterministic given its inputs; infeasible requests (star degree above
/// n-1, matching wider than floor(n/2), regular degree with odd dn) are
/// rejected.
pub fn build_conflict(kind: ConflictKind, n: usize) -> Result<ConflictGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let graph = match kind {
        ConflictKind::Empty => Graph::empty(n),
        ConflictKind::Star { delta } => {
            if delta > n - 1 {
                return Err(GraphError::InfeasibleConflict(format!(
                    "star degree {delta} exceeds n - 1 = {}",
                    n - 1
                )));
            }
            Graph::from_edges(n, (1..=delta).map(|v| (0, v)))?
        }
        ConflictKind::Matching { m } => {
            if m > n / 2 {
                return Err(GraphError::InfeasibleConflict(format!(
                    "matching with {m} edges needs 2m <= n = {n}"
                )));
            }
            Graph::from_edges(n, (0..m).map(|i| (2 * i, 2 * i + 1)))?
        }
        ConflictKind::RandomRegular { d, seed } => random_regular(n, d, seed)?,
        ConflictKind::EdgeList(pairs) => {
            let mut seen = HashSet::new();
            let mut edges = Vec::with_capacity(pairs.len());
            for (u, v) in pairs {
                if u == v {
                    return Err(GraphError::SelfLoop(u));
                }
                if u >= n || v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
                }
                if seen.insert((u.min(v), u.max(v))) {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, edges)?
        }
    };
    Ok(ConflictGraph::from_graph(graph))
}

/// Exact d-regular graph: circulant offsets give the degrees, then seeded
/// double-edge swaps randomize the structure while preserving regularity and
/// simplicity.
fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, GraphError> {
    if d > n - 1 {
        return Err(GraphError::InfeasibleConflict(format!(
            "regular degree {d} exceeds n - 1 = {}",
            n - 1
        )));
    }
    if n * d % 2 != 0 {
        return Err(GraphError::InfeasibleConflict(format!(
            "no {d}-regular graph on {n} vertices (odd degree sum)"
        )));
    }
    if d == 0 {
        return Ok(Graph::empty(n));
    }

    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(n * d / 2);
    for k in 1..=(d / 2) {
        for v in 0..n {
            edges.push((v as u32, ((v + k) % n) as u32));
        }
    }
    if d % 2 == 1 {
        // n is even here; the antipodal offset contributes exactly one edge
        // per vertex.
        for v in 0..n / 2 {
            edges.push((v as u32, (v + n / 2) as u32));
        }
    }

    let canon = |u: u32, v: u32| if u < v { (u, v) } else { (v, u) };
    let mut present: HashSet<(u32, u32)> = edges.iter().map(|&(u, v)| canon(u, v)).collect();
    debug_assert_eq!(present.len(), edges.len());

    let mut rng = stream(derive_seed(seed, n as u64, d as u64));
    let swaps = (4 * edges.len()).min(500_000);
    for _ in 0..swaps {
        let i = rng.random_range(0..edges.len());
        let j = rng.random_range(0..edges.len());
        if i == j {
            continue;
        }
        let (a, b) = edges[i];
        let (c, e) = edges[j];
        // Rewire (a,b),(c,e) -> (a,e),(c,b), flipping one pair half the time
        // so both pairings are reachable.
        let (c, e) = if rng.random_bool(0.5) { (e, c) } else { (c, e) };
        if a == e || c == b {
            continue;
        }
        let new1 = canon(a, e);
        let new2 = canon(c, b);
        if new1 == new2 || present.contains(&new1) || present.contains(&new2) {
            continue;
        }
        present.remove(&canon(a, b));
        present.remove(&canon(c, e));
        present.insert(new1);
        present.insert(new2);
        edges[i] = new1;
        edges[j] = new2;
    }

    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (u as usize, v as usize)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_conflict() {
        let h = build_conflict(ConflictKind::Empty, 10).unwrap();
        assert_eq!((h.m(), h.delta()), (0, 0));
    }

    #[test]
    fn star_conflict() {
        let h = build_conflict(ConflictKind::Star { delta: 4 }, 10).unwrap();
        assert_eq!((h.m(), h.delta()), (4, 4));
        assert_eq!(h.degree(0), 4);
        for v in 1..=4 {
            assert!(h.graph().has_edge(0, v));
        }
    }

    #[test]
    fn matching_conflict() {
        let h = build_conflict(ConflictKind::Matching { m: 3 }, 10).unwrap();
        assert_eq!((h.m(), h.delta()), (3, 1));
    }

    #[test]
    fn infeasible_requests_rejected() {
        assert!(build_conflict(ConflictKind::Star { delta: 10 }, 10).is_err());
        assert!(build_conflict(ConflictKind::Matching { m: 6 }, 10).is_err());
        assert!(build_conflict(ConflictKind::RandomRegular { d: 3, seed: 0 }, 7).is_err());
        assert!(build_conflict(ConflictKind::RandomRegular { d: 9, seed: 0 }, 9).is_err());
    }

    #[test]
    fn random_regular_is_exactly_regular() {
        for (n, d, seed) in [(20usize, 3usize, 1u64), (31, 4, 2), (50, 7, 3), (16, 15, 4)] {
            let h = build_conflict(ConflictKind::RandomRegular { d, seed }, n).unwrap();
            assert_eq!(h.m(), n * d / 2);
            assert_eq!(h.delta(), d);
            for v in 0..n {
                assert_eq!(h.degree(v), d, "vertex {v} degree off at n={n}, d={d}");
            }
        }
    }

    #[test]
    fn random_regular_is_deterministic_and_seed_sensitive() {
        let a = build_conflict(ConflictKind::RandomRegular { d: 4, seed: 7 }, 40).unwrap();
        let b = build_conflict(ConflictKind::RandomRegular { d: 4, seed: 7 }, 40).unwrap();
        let c = build_conflict(ConflictKind::RandomRegular { d: 4, seed: 8 }, 40).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn edge_list_dedups_and_validates() {
        let h = build_conflict(ConflictKind::EdgeList(vec![(0, 1), (1, 0), (2, 3)]), 5).unwrap();
        assert_eq!(h.m(), 2);
        assert!(build_conflict(ConflictKind::EdgeList(vec![(0, 0)]), 5).is_err());
        assert!(build_conflict(ConflictKind::EdgeList(vec![(0, 9)]), 5).is_err());
    }
}

//! Simple and weighted graphs plus the graph-algorithmic primitives used by
//! the property tests: geodesic pre-distances, packings, connectivity,
//! forests, cliques, and the explicit constructions behind the lower-bound
//! experiments.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Error, Result};

pub mod generators;
mod packing;

pub use packing::{exact_max_packing, greedy_packing, is_packing};

/// An undirected edge stored with `u < v`. Vertices are 0-based internally;
/// the file formats are 1-based.
pub type Edge = (usize, usize);

/// Normalizes an unordered vertex pair into an [`Edge`].
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph on vertices `0..d`.
///
/// No self-loops, no duplicate edges; endpoints within range. The edge list
/// is kept sorted so iteration order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    d: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, validating the edge set.
    pub fn new(d: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if d == 0 {
            return Err(invalid("vertex count must be positive"));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(invalid("self-loop"));
            }
            if u >= d || v >= d {
                return Err(invalid("edge endpoint out of range"));
            }
            if !set.insert(edge(u, v)) {
                return Err(invalid("duplicate edge"));
            }
        }
        let edges: Vec<Edge> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); d];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self { d, edges, adj })
    }

    pub fn empty(d: usize) -> Self {
        Self::new(d, []).expect("d > 0")
    }

    pub fn path(d: usize) -> Self {
        Self::new(d, (0..d.saturating_sub(1)).map(|i| (i, i + 1))).expect("valid path")
    }

    pub fn complete(d: usize) -> Self {
        let mut e = Vec::new();
        for u in 0..d {
            for v in u + 1..d {
                e.push((u, v));
            }
        }
        Self::new(d, e).expect("valid complete graph")
    }

    pub fn cycle(d: usize) -> Result<Self> {
        if d < 3 {
            return Err(invalid("cycle needs at least 3 vertices"));
        }
        let mut e: Vec<Edge> = (0..d - 1).map(|i| (i, i + 1)).collect();
        e.push((0, d - 1));
        Self::new(d, e)
    }

    pub fn vertex_count(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.binary_search(&edge(u, v)).is_ok()
    }

    /// Maximum vertex degree; 0 for an empty edge set.
    pub fn max_degree(&self) -> usize {
        (0..self.d).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// Graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut e = self.edges.clone();
        e.push(edge(u, v));
        Self::new(self.d, e)
    }

    /// Graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        let target = edge(u, v);
        if !self.has_edge(u, v) {
            return Err(invalid("edge not present"));
        }
        Self::new(self.d, self.edges.iter().copied().filter(|&e| e != target))
    }

    /// BFS geodesic distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.d];
        dist[src] = Some(0);
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Edge geodesic pre-distance: the minimum geodesic distance between any
    /// endpoint of `e` and any endpoint of `e_prime`, measured on this graph.
    /// Neither edge needs to belong to the graph. `None` means no connecting
    /// path exists.
    pub fn edge_geodesic_predistance(&self, e: Edge, e_prime: Edge) -> Result<Option<usize>> {
        for &x in &[e.0, e.1, e_prime.0, e_prime.1] {
            if x >= self.d {
                return Err(invalid("vertex out of range"));
            }
        }
        let mut best: Option<usize> = None;
        for &u in &[e.0, e.1] {
            let dist = self.bfs_distances(u);
            for &v in &[e_prime.0, e_prime.1] {
                if let Some(dv) = dist[v] {
                    best = Some(best.map_or(dv, |b| b.min(dv)));
                }
            }
        }
        Ok(best)
    }

    /// Connected components as a vertex -> component-id labelling.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.d];
        let mut next = 0;
        for s in 0..self.d {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// A graph is a forest iff it is acyclic.
    pub fn is_forest(&self) -> bool {
        let mut uf = UnionFind::new(self.d);
        for &(u, v) in &self.edges {
            if !uf.union(u, v) {
                return false;
            }
        }
        true
    }

    /// Whether the graph contains a clique on `m` vertices.
    ///
    /// Incremental common-neighbor search; exponential in the worst case but
    /// fine at the scales used here.
    pub fn has_m_clique(&self, m: usize) -> Result<bool> {
        if m < 2 {
            return Err(invalid("clique size must be at least 2"));
        }
        if m > self.d {
            return Ok(false);
        }
        let mut cand: Vec<usize> = (0..self.d).collect();
        Ok(self.extend_clique(&mut Vec::new(), &mut cand, m))
    }

    fn extend_clique(&self, cur: &mut Vec<usize>, cand: &mut Vec<usize>, m: usize) -> bool {
        if cur.len() == m {
            return true;
        }
        if cur.len() + cand.len() < m {
            return false;
        }
        let cand_snapshot = cand.clone();
        for (i, &v) in cand_snapshot.iter().enumerate() {
            let mut next: Vec<usize> = cand_snapshot[i + 1..]
                .iter()
                .copied()
                .filter(|&w| self.has_edge(v, w))
                .collect();
            cur.push(v);
            if self.extend_clique(cur, &mut next, m) {
                return true;
            }
            cur.pop();
        }
        false
    }

    /// The unique path between `u` and `v` in a forest, as an edge list.
    /// Returns `Ok(None)` when the vertices are in different components and
    /// an empty list when `u == v`. Errors when the graph has a cycle.
    pub fn forest_path(&self, u: usize, v: usize) -> Result<Option<Vec<Edge>>> {
        if u >= self.d || v >= self.d {
            return Err(invalid("vertex out of range"));
        }
        if !self.is_forest() {
            return Err(invalid("graph has a cycle; not a forest"));
        }
        if u == v {
            return Ok(Some(Vec::new()));
        }
        let mut parent = vec![usize::MAX; self.d];
        let mut seen = vec![false; self.d];
        seen[u] = true;
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if !seen[v] {
            return Ok(None);
        }
        let mut path = Vec::new();
        let mut cur = v;
        while cur != u {
            path.push(edge(parent[cur], cur));
            cur = parent[cur];
        }
        path.reverse();
        Ok(Some(path))
    }

    /// Adjacency matrix as a dense row-major f64 matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let mut a = vec![0.0; self.d * self.d];
        for &(u, v) in &self.edges {
            a[u * self.d + v] = 1.0;
            a[v * self.d + u] = 1.0;
        }
        a
    }
}

/// A graph with a real weight on every edge. Zero weight is represented by
/// edge absence, so stored weights are nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    graph: Graph,
    weights: Vec<f64>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: impl IntoIterator<Item = (Edge, f64)>) -> Result<Self> {
        let mut w = vec![f64::NAN; graph.edge_count()];
        for ((u, v), wt) in weights {
            let idx = graph
                .edges
                .binary_search(&edge(u, v))
                .map_err(|_| invalid("weight on a non-edge"))?;
            if !wt.is_finite() || wt == 0.0 {
                return Err(invalid("edge weights must be finite and nonzero"));
            }
            w[idx] = wt;
        }
        if w.iter().any(|x| x.is_nan()) {
            return Err(invalid("missing weight for an edge"));
        }
        Ok(Self { graph, weights: w })
    }

    /// All weights equal to one.
    pub fn simple(graph: Graph) -> Self {
        let weights = vec![1.0; graph.edge_count()];
        Self { graph, weights }
    }

    pub fn uniform(graph: Graph, w: f64) -> Result<Self> {
        let edges: Vec<(Edge, f64)> = graph.edges().iter().map(|&e| (e, w)).collect();
        Self::new(graph, edges)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.d
    }

    pub fn weight(&self, u: usize, v: usize) -> f64 {
        match self.graph.edges.binary_search(&edge(u, v)) {
            Ok(i) => self.weights[i],
            Err(_) => 0.0,
        }
    }

    /// Iterates `(edge, weight)` pairs in deterministic edge order.
    pub fn weighted_edges(&self) -> impl Iterator<Item = (Edge, f64)> + '_ {
        self.graph.edges.iter().copied().zip(self.weights.iter().copied())
    }

    /// All interactions strictly positive.
    pub fn is_ferromagnetic(&self) -> bool {
        self.weights.iter().all(|&w| w > 0.0)
    }

    /// Largest weight magnitude; 0 for an empty edge set.
    pub fn max_abs_weight(&self) -> f64 {
        self.weights.iter().fold(0.0, |m, w| if w.abs() > m { w.abs() } else { m })
    }

    /// Checks the general-model weight window `1 <= |w| <= cap` on every edge.
    pub fn weights_within(&self, cap: f64) -> bool {
        self.weights.iter().all(|w| {
            let a = w.abs();
            (1.0 - 1e-12..=cap + 1e-12).contains(&a)
        })
    }
}

/// Union-find with path compression and union by rank.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns false when `x` and `y` were already in the same set.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        match self.rank[rx].cmp(&self.rank[ry]) {
            core::cmp::Ordering::Less => self.parent[rx] = ry,
            core::cmp::Ordering::Greater => self.parent[ry] = rx,
            core::cmp::Ordering::Equal => {
                self.parent[ry] = rx;
                self.rank[rx] += 1;
            }
        }
        true
    }

    pub fn same(&mut self, x: usize, y: usize) -> bool {
        self.find(x) == self.find(y)
    }
}

pub(crate) fn check_vertex(d: usize, v: usize) -> Result<()> {
    if v >= d {
        return Err(Error::InvalidInput(
            alloc::format!("vertex {v} out of range for d={d}").to_string(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(0, []).is_err());
    }

    #[test]
    fn max_degree_basics() {
        assert_eq!(Graph::empty(5).max_degree(), 0);
        assert_eq!(Graph::complete(4).max_degree(), 3);
    }

    #[test]
    fn predistance_shared_vertex_is_zero() {
        let g = Graph::path(4);
        assert_eq!(g.edge_geodesic_predistance((0, 1), (1, 2)).unwrap(), Some(0));
    }

    #[test]
    fn predistance_disconnected_is_none() {
        let g = Graph::new(6, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.edge_geodesic_predistance((0, 1), (3, 4)).unwrap(), None);
        assert_eq!(g.edge_geodesic_predistance((0, 1), (4, 5)).unwrap(), None);
    }

    #[test]
    fn predistance_out_of_range_errors() {
        let g = Graph::path(4);
        assert!(g.edge_geodesic_predistance((0, 1), (2, 9)).is_err());
    }

    #[test]
    fn connectivity_forest_clique_on_small_graphs() {
        let path = Graph::path(6);
        assert!(path.is_connected());
        assert!(path.is_forest());
        assert!(!path.has_m_clique(3).unwrap());

        // triangle plus isolated vertex
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(!g.is_connected());
        assert!(!g.is_forest());
        assert!(g.has_m_clique(3).unwrap());
        assert!(!g.has_m_clique(4).unwrap());
        assert!(g.has_m_clique(5).is_ok());
        assert!(Graph::path(3).has_m_clique(1).is_err());
    }

    #[test]
    fn forest_path_contract() {
        let g = Graph::path(3);
        assert_eq!(g.forest_path(0, 2).unwrap().unwrap(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.forest_path(1, 1).unwrap().unwrap(), Vec::<Edge>::new());
        let disc = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(disc.forest_path(0, 3).unwrap(), None);
        let tri = Graph::complete(3);
        assert!(tri.forest_path(0, 1).is_err());
    }

    #[test]
    fn weighted_graph_weights() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let wg = WeightedGraph::new(g, [((0, 1), 2.0), ((1, 2), -1.0)]).unwrap();
        assert_eq!(wg.weight(1, 0), 2.0);
        assert_eq!(wg.weight(0, 2), 0.0);
        assert!(!wg.is_ferromagnetic());
        assert!(wg.weights_within(2.0));
        assert!(!wg.weights_within(1.5));
    }

    #[test]
    fn weighted_graph_rejects_zero_weight() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert!(WeightedGraph::new(g, [((0, 1), 0.0)]).is_err());
    }
}

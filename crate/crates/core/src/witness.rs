//! Greedy weight-ordered witness searches over a correlation matrix.
//!
//! Inserting vertex pairs from the highest matrix entry downward and
//! stopping at the first witness (spanning forest, cycle, m-clique) yields
//! the witness maximizing the minimal edge entry, which is exactly the
//! optimizer the screening tests need. Ties are broken lexicographically on
//! `(u, v)` so every search is deterministic.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Error, Result};
use crate::graph::{edge, Edge, Graph, UnionFind};
use crate::ising::CorrelationMatrix;

/// All vertex pairs sorted by `key` descending, ties lexicographic ascending.
fn sorted_pairs(d: usize, key: impl Fn(usize, usize) -> f64) -> Vec<(f64, Edge)> {
    let mut pairs = Vec::with_capacity(d * (d - 1) / 2);
    for u in 0..d {
        for v in u + 1..d {
            pairs.push((key(u, v), (u, v)));
        }
    }
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    pairs
}

/// Maximum-weight spanning forest by Kruskal over the nonzero entries of
/// `m`, descending. Exactly zero entries are treated as absent edges, so the
/// result spans each connected component of the nonzero support.
pub fn max_weight_spanning_forest(m: &CorrelationMatrix) -> Graph {
    let d = m.dimension();
    let mut uf = UnionFind::new(d);
    let mut edges = Vec::with_capacity(d.saturating_sub(1));
    for (w, (u, v)) in sorted_pairs(d, |u, v| m.get(u, v)) {
        if w == 0.0 {
            continue;
        }
        if uf.union(u, v) {
            edges.push((u, v));
            if edges.len() + 1 == d {
                break;
            }
        }
    }
    Graph::new(d, edges).expect("forest edges are valid")
}

/// Spanning forest of `m` taken on absolute values (used by the signed-model
/// cycle test map).
pub fn max_abs_weight_spanning_forest(m: &CorrelationMatrix) -> Graph {
    let d = m.dimension();
    let mut uf = UnionFind::new(d);
    let mut edges = Vec::with_capacity(d.saturating_sub(1));
    for (w, (u, v)) in sorted_pairs(d, |u, v| m.get(u, v).abs()) {
        if w == 0.0 {
            continue;
        }
        if uf.union(u, v) {
            edges.push((u, v));
            if edges.len() + 1 == d {
                break;
            }
        }
    }
    Graph::new(d, edges).expect("forest edges are valid")
}

/// Inserts pairs from high to low until the first cycle closes; returns the
/// cycle's edge set (the closing edge plus the tree path between its
/// endpoints).
pub fn first_cycle_by_weight(m: &CorrelationMatrix) -> Result<Vec<Edge>> {
    let d = m.dimension();
    if d < 3 {
        return Err(invalid("cycle search needs at least 3 vertices"));
    }
    let mut uf = UnionFind::new(d);
    let mut inserted: Vec<Edge> = Vec::new();
    for (_, (u, v)) in sorted_pairs(d, |u, v| m.get(u, v)) {
        if uf.union(u, v) {
            inserted.push((u, v));
        } else {
            // the inserted edges form a forest; (u,v) closes the cycle
            let forest = Graph::new(d, inserted.iter().copied()).expect("forest is valid");
            let mut path = forest
                .forest_path(u, v)?
                .ok_or(Error::NotFound("tree path for cycle closure"))?;
            path.push(edge(u, v));
            return Ok(path);
        }
    }
    Err(Error::NotFound("no cycle"))
}

/// Inserts pairs from high to low until the first `m_size`-clique appears;
/// returns its vertex set (sorted). If several cliques complete at the same
/// insertion, the lexicographically smallest vertex set is returned.
pub fn first_m_clique_by_weight(m: &CorrelationMatrix, m_size: usize) -> Result<Vec<usize>> {
    let d = m.dimension();
    if m_size < 3 {
        return Err(invalid("clique size must be at least 3"));
    }
    if d < m_size {
        return Err(invalid("clique size exceeds vertex count"));
    }
    let mut adj: Vec<Vec<bool>> = vec![vec![false; d]; d];
    for (_, (u, v)) in sorted_pairs(d, |u, v| m.get(u, v)) {
        adj[u][v] = true;
        adj[v][u] = true;
        // search for m-cliques containing the new edge among common neighbors
        let common: Vec<usize> =
            (0..d).filter(|&w| w != u && w != v && adj[u][w] && adj[v][w]).collect();
        if common.len() + 2 < m_size {
            continue;
        }
        let mut best: Option<Vec<usize>> = None;
        let mut chosen = Vec::with_capacity(m_size - 2);
        find_extensions(&adj, &common, 0, m_size - 2, &mut chosen, &mut |ext| {
            let mut clique = vec![u, v];
            clique.extend_from_slice(ext);
            clique.sort_unstable();
            if best.as_ref().map_or(true, |b| clique < *b) {
                best = Some(clique);
            }
        });
        if let Some(clique) = best {
            return Ok(clique);
        }
    }
    Err(Error::NotFound("no clique of requested size"))
}

/// Enumerates all `need`-subsets of `candidates[start..]` that are pairwise
/// adjacent, invoking `found` for each.
fn find_extensions(
    adj: &[Vec<bool>],
    candidates: &[usize],
    start: usize,
    need: usize,
    chosen: &mut Vec<usize>,
    found: &mut impl FnMut(&[usize]),
) {
    if need == 0 {
        found(chosen);
        return;
    }
    for i in start..candidates.len() {
        if candidates.len() - i < need {
            break;
        }
        let w = candidates[i];
        if chosen.iter().all(|&c| adj[c][w]) {
            chosen.push(w);
            find_extensions(adj, candidates, i + 1, need - 1, chosen, found);
            chosen.pop();
        }
    }
}

/// Smallest matrix entry over a set of edges.
pub fn min_edge_value(m: &CorrelationMatrix, edges: &[Edge]) -> f64 {
    edges.iter().fold(f64::INFINITY, |acc, &(u, v)| acc.min(m.get(u, v)))
}

/// All within-set pairs of a clique vertex set.
pub fn clique_edges(vertices: &[usize]) -> Vec<Edge> {
    let mut out = Vec::with_capacity(vertices.len() * (vertices.len() - 1) / 2);
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            out.push(edge(u, v));
        }
    }
    out
}

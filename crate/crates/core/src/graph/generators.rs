//! Explicit graph constructions used by the minimax experiments: the
//! two-cycle divider family, repeated-motif null bases, the Turán-style
//! clique-free construction, the clique chain with a detached path, and
//! bicliques.

use alloc::vec::Vec;

use super::{edge, Edge, Graph};
use crate::error::{invalid, Result};

/// Two disjoint cycles of length `d/2` plus the list of "rung" edges that
/// individually connect them. The rungs are not part of the base graph; they
/// form the divider candidate set for connectivity testing.
pub struct TwoCyclesWithRungs {
    pub base: Graph,
    pub rungs: Vec<Edge>,
}

/// Builds the two-cycle construction on an even `d >= 6`.
///
/// Vertices `0..d/2` form the first cycle, `d/2..d` the second, and rung `j`
/// joins vertex `j` with vertex `d/2 + j`.
pub fn two_cycles_with_rungs(d: usize) -> Result<TwoCyclesWithRungs> {
    if d < 6 || d % 2 != 0 {
        return Err(invalid("two_cycles_with_rungs requires even d >= 6"));
    }
    let h = d / 2;
    let mut edges = Vec::with_capacity(d);
    for j in 0..h - 1 {
        edges.push((j, j + 1));
        edges.push((h + j, h + j + 1));
    }
    edges.push((0, h - 1));
    edges.push((h, d - 1));
    let base = Graph::new(d, edges)?;
    let rungs = (0..h).map(|j| (j, h + j)).collect();
    Ok(TwoCyclesWithRungs { base, rungs })
}

/// Clones a motif `h0` onto `floor(d / |V(h0)|)` disjoint vertex blocks;
/// leftover vertices stay isolated. When `alt` is given as
/// `(block, local_edge)`, the designated extra edge is added inside that
/// block, producing a graph of the alternative hypothesis.
pub fn repeated_motif(h0: &Graph, d: usize, alt: Option<(usize, Edge)>) -> Result<Graph> {
    let k = h0.vertex_count();
    let copies = d / k;
    if copies == 0 {
        return Err(invalid("d too small for even one motif copy"));
    }
    let mut edges = Vec::with_capacity(copies * h0.edge_count() + 1);
    for b in 0..copies {
        for &(u, v) in h0.edges() {
            edges.push((b * k + u, b * k + v));
        }
    }
    if let Some((block, (u, v))) = alt {
        if block >= copies {
            return Err(invalid("alternative block index out of range"));
        }
        if u >= k || v >= k || u == v {
            return Err(invalid("alternative edge is not a valid motif pair"));
        }
        edges.push(edge(block * k + u, block * k + v));
    }
    Graph::new(d, edges)
}

/// The Turán-style null base for clique testing.
pub struct TuranConstruction {
    pub graph: Graph,
    /// Adding this edge creates an `m`-clique while keeping the maximum
    /// degree at most `s`.
    pub designated_edge: Edge,
    /// Vertex count of the construction.
    pub d: usize,
}

/// Complete `(m-1)`-partite graph on `floor((s-1)/(m-2)) * (m-1) + 1`
/// vertices, with one part holding the extra vertex. It contains no
/// `m`-clique, has maximum degree at most `s`, and adding any edge inside
/// the enlarged part creates an `m`-clique without pushing the maximum
/// degree above `s`.
pub fn turan_h0(s: usize, m: usize) -> Result<TuranConstruction> {
    if m < 3 {
        return Err(invalid("turan_h0 requires m >= 3"));
    }
    if s + 1 < m {
        return Err(invalid("turan_h0 requires m <= s + 1"));
    }
    let g = (s - 1) / (m - 2);
    let d = g * (m - 1) + 1;
    // parts 0..m-2 of size g, last part of size g+1
    let mut part = Vec::with_capacity(d);
    for p in 0..m - 1 {
        let size = if p == m - 2 { g + 1 } else { g };
        for _ in 0..size {
            part.push(p);
        }
    }
    let mut edges = Vec::new();
    for u in 0..d {
        for v in u + 1..d {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    let graph = Graph::new(d, edges)?;
    let first_of_last_part = d - (g + 1);
    Ok(TuranConstruction { graph, designated_edge: (first_of_last_part, first_of_last_part + 1), d })
}

/// A chain of `floor(d/s) - 1` s-cliques joined by single edges, plus a
/// disconnected path on the remaining vertices.
pub fn clique_chain_with_path(d: usize, s: usize) -> Result<Graph> {
    if s < 2 || d < 3 * s {
        return Err(invalid("clique_chain_with_path requires s >= 2 and d >= 3s"));
    }
    let blocks = d / s;
    let mut edges = Vec::new();
    for b in 0..blocks - 1 {
        let lo = b * s;
        for u in lo..lo + s {
            for v in u + 1..lo + s {
                edges.push((u, v));
            }
        }
        if b > 0 {
            edges.push((lo - 1, lo));
        }
    }
    for v in (blocks - 1) * s..d - 1 {
        edges.push((v, v + 1));
    }
    Graph::new(d, edges)
}

/// Complete bipartite graph with `l` left and `r` right vertices. The left
/// side is `0..l`, the right side `l..l+r`.
pub fn biclique(l: usize, r: usize) -> Result<Graph> {
    if l == 0 || r == 0 {
        return Err(invalid("biclique sides must be nonempty"));
    }
    let d = l + r;
    let mut edges = Vec::with_capacity(l * r);
    for u in 0..l {
        for v in l..d {
            edges.push((u, v));
        }
    }
    Graph::new(d, edges)
}

/// A clique on the given vertex subset of `0..d`; all other vertices are
/// isolated.
pub fn clique_graph(vertices: &[usize], d: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if u == v {
                return Err(invalid("repeated vertex in clique set"));
            }
            edges.push(edge(u, v));
        }
    }
    Graph::new(d, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycles_figure_dimensions() {
        let c = two_cycles_with_rungs(10).unwrap();
        assert_eq!(c.base.edge_count(), 10);
        assert_eq!(c.rungs.len(), 5);
        assert!(!c.base.is_connected());
        // adding any rung connects the graph
        for &(u, v) in &c.rungs {
            assert!(c.base.with_edge(u, v).unwrap().is_connected());
        }
        // the two marked rungs of the figure are at pre-distance 2
        let d = c.base.edge_geodesic_predistance(c.rungs[1], c.rungs[4]).unwrap();
        assert_eq!(d, Some(2));
    }

    #[test]
    fn turan_construction_properties() {
        let t = turan_h0(7, 4).unwrap();
        assert_eq!(t.d, 10);
        assert_eq!(t.graph.max_degree(), 7);
        assert!(!t.graph.has_m_clique(4).unwrap());
        let with = t.graph.with_edge(t.designated_edge.0, t.designated_edge.1).unwrap();
        assert!(with.has_m_clique(4).unwrap());
        assert!(with.max_degree() <= 7);
    }

    #[test]
    fn turan_contains_biclique() {
        // splitting the 3 parts 1
        // vs 2 gives a 3 x 7 biclique: check a witness by hand
        let t = turan_h0(7, 4).unwrap();
        let left: Vec<usize> = (0..3).collect();
        let right: Vec<usize> = (3..10).collect();
        for &u in &left {
            for &v in &right {
                assert!(t.graph.has_edge(u, v), "missing cross edge ({u},{v})");
            }
        }
    }

    #[test]
    fn biclique_1_2_is_path() {
        let b = biclique(1, 2).unwrap();
        assert_eq!(b.edges(), &[(0, 1), (0, 2)]);
        assert!(b.is_forest());
    }

    #[test]
    fn repeated_motif_blocks_and_alt_edge() {
        let motif = Graph::new(3, [(0, 1), (1, 2)]).unwrap(); // triangle minus an edge
        let g0 = repeated_motif(&motif, 9, None).unwrap();
        assert_eq!(g0.edge_count(), 6);
        assert!(g0.is_forest());
        let g1 = repeated_motif(&motif, 9, Some((2, (0, 2)))).unwrap();
        assert!(!g1.is_forest());
        assert!(g1.has_edge(6, 8));
        // leftover vertices stay isolated
        let g = repeated_motif(&motif, 11, None).unwrap();
        assert_eq!(g.degree(9), 0);
        assert_eq!(g.degree(10), 0);
        assert!(repeated_motif(&motif, 2, None).is_err());
        assert!(repeated_motif(&motif, 9, Some((3, (0, 2)))).is_err());
    }

    #[test]
    fn clique_chain_shape() {
        let g = clique_chain_with_path(28, 7).unwrap();
        // three 7-cliques, two connectors, and a path on 7 vertices
        assert_eq!(g.edge_count(), 3 * 21 + 2 + 6);
        assert!(!g.is_connected());
        assert!(g.has_m_clique(7).unwrap());
        assert!(clique_chain_with_path(20, 7).is_err());
    }

    #[test]
    fn clique_graph_isolates_rest() {
        let g = clique_graph(&[1, 3, 5, 7], 8).unwrap();
        assert!(g.has_m_clique(4).unwrap());
        assert_eq!(g.degree(0), 0);
        assert_eq!(g.max_degree(), 3);
    }
}

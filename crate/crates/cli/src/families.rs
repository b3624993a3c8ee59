//! Null/alternative model family constructions for the experiment harness.
//!
//! Each family fixes, per grid point, one model satisfying the null property
//! and one satisfying the alternative. These are the worst-case-inspired
//! constructions of the lower-bound arguments at desk scale; measured error
//! rates are family-specific lower bounds on the minimax suprema.

use anyhow::{anyhow, bail, Result};
use isingprop_core::{Graph, IsingModel, WeightedGraph};
use serde::{Deserialize, Serialize};

/// Family selector.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    /// Null: two disjoint paths of d/2. Alternative: one path on d.
    ConnectivityPaths,
    /// Null: a path on d (connected forest). Alternative: a triangle on the
    /// first three vertices plus a path on the rest.
    CycleTriangle,
    /// Null: an (m-1)-clique plus isolated vertices. Alternative: a planted
    /// m-clique plus isolated vertices.
    CliquePlanted { m: usize },
    /// Signed couplings of unit magnitude. Null: a spanning path with
    /// alternating signs. Alternative: an unfrustrated signed triangle plus
    /// a signed path on the rest.
    SignedCycle,
}

/// One grid point's pair of models.
pub struct FamilyInstance {
    pub null: IsingModel,
    pub alt: IsingModel,
    /// Degree bound covering both sides (for condition flags).
    pub max_degree: usize,
}

fn alternating_signed_path(d: usize, theta: f64, offset: usize) -> Result<IsingModel> {
    let g = Graph::path(d);
    let entries: Vec<((usize, usize), f64)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, if (i + offset) % 2 == 0 { 1.0 } else { -1.0 }))
        .collect();
    Ok(IsingModel::new(theta, WeightedGraph::new(g, entries).map_err(|e| anyhow!("{e}"))?)
        .map_err(|e| anyhow!("{e}"))?)
}

impl Family {
    pub fn instantiate(&self, d: usize, theta: f64) -> Result<FamilyInstance> {
        match *self {
            Family::ConnectivityPaths => {
                if d < 4 {
                    bail!("connectivity family needs d >= 4");
                }
                let h = d / 2;
                let mut null_edges = Vec::new();
                for j in 0..h - 1 {
                    null_edges.push((j, j + 1));
                }
                for j in h..d - 1 {
                    null_edges.push((j, j + 1));
                }
                let null_graph = Graph::new(d, null_edges).map_err(|e| anyhow!("{e}"))?;
                let null = IsingModel::simple(theta, null_graph).map_err(|e| anyhow!("{e}"))?;
                let alt = IsingModel::simple(theta, Graph::path(d)).map_err(|e| anyhow!("{e}"))?;
                Ok(FamilyInstance { null, alt, max_degree: 2 })
            }
            Family::CycleTriangle => {
                if d < 4 {
                    bail!("cycle family needs d >= 4");
                }
                let null = IsingModel::simple(theta, Graph::path(d)).map_err(|e| anyhow!("{e}"))?;
                let mut alt_edges = vec![(0, 1), (0, 2), (1, 2)];
                for j in 3..d - 1 {
                    alt_edges.push((j, j + 1));
                }
                let alt_graph = Graph::new(d, alt_edges).map_err(|e| anyhow!("{e}"))?;
                let alt = IsingModel::simple(theta, alt_graph).map_err(|e| anyhow!("{e}"))?;
                Ok(FamilyInstance { null, alt, max_degree: 2 })
            }
            Family::CliquePlanted { m } => {
                if m < 3 || d < m + 1 {
                    bail!("clique family needs m >= 3 and d > m");
                }
                let null_vertices: Vec<usize> = (0..m - 1).collect();
                let alt_vertices: Vec<usize> = (0..m).collect();
                let null_graph = isingprop_core::graph::generators::clique_graph(&null_vertices, d)
                    .map_err(|e| anyhow!("{e}"))?;
                let alt_graph = isingprop_core::graph::generators::clique_graph(&alt_vertices, d)
                    .map_err(|e| anyhow!("{e}"))?;
                let null = IsingModel::simple(theta, null_graph).map_err(|e| anyhow!("{e}"))?;
                let alt = IsingModel::simple(theta, alt_graph).map_err(|e| anyhow!("{e}"))?;
                Ok(FamilyInstance { null, alt, max_degree: m - 1 })
            }
            Family::SignedCycle => {
                if d < 5 {
                    bail!("signed cycle family needs d >= 5");
                }
                let null = alternating_signed_path(d, theta, 0)?;
                // unfrustrated triangle (sign product +1) plus signed path
                let mut alt_entries: Vec<((usize, usize), f64)> =
                    vec![((0, 1), 1.0), ((0, 2), -1.0), ((1, 2), -1.0)];
                for j in 3..d - 1 {
                    alt_entries.push(((j, j + 1), if j % 2 == 0 { -1.0 } else { 1.0 }));
                }
                let alt_graph =
                    Graph::new(d, alt_entries.iter().map(|&(e, _)| e)).map_err(|e| anyhow!("{e}"))?;
                let alt = IsingModel::new(
                    theta,
                    WeightedGraph::new(alt_graph, alt_entries).map_err(|e| anyhow!("{e}"))?,
                )
                .map_err(|e| anyhow!("{e}"))?;
                Ok(FamilyInstance { null, alt, max_degree: 2 })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sides_satisfy_their_properties() {
        let f = Family::ConnectivityPaths.instantiate(12, 0.5).unwrap();
        assert!(!f.null.graph().is_connected());
        assert!(f.alt.graph().is_connected());

        let f = Family::CycleTriangle.instantiate(10, 0.5).unwrap();
        assert!(f.null.graph().is_forest());
        assert!(!f.alt.graph().is_forest());

        let f = Family::CliquePlanted { m: 4 }.instantiate(12, 0.5).unwrap();
        assert!(!f.null.graph().has_m_clique(4).unwrap());
        assert!(f.alt.graph().has_m_clique(4).unwrap());
        assert_eq!(f.max_degree, 3);

        let f = Family::SignedCycle.instantiate(12, 0.5).unwrap();
        assert!(f.null.graph().is_forest());
        assert!(!f.alt.graph().is_forest());
        assert!(f.null.weighted_graph().weights_within(1.0));
        assert!(f.alt.weighted_graph().weights_within(1.0));
        // the triangle is unfrustrated: sign product is positive
        let wg = f.alt.weighted_graph();
        assert!(wg.weight(0, 1) * wg.weight(0, 2) * wg.weight(1, 2) > 0.0);
    }
}

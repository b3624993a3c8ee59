//! The zero-field Ising model, exact inference by state enumeration,
//! closed-form correlation formulas, and samplers.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::graph::{Graph, WeightedGraph};

mod enumerate;
mod formulas;
pub mod quadrature;
mod sample;

pub use enumerate::{
    exact_correlation_matrix, exact_pair_correlation, exact_spin_mean, log_partition_function,
    state_log_weights, ENUMERATION_GUARD,
};
pub use formulas::{
    clique_log_partition, curie_weiss_edge_correlation, curie_weiss_ratio_gauss_hermite,
    curie_weiss_ratio_magnetization, path_correlation,
};
pub use sample::{
    empirical_correlations, exact_sample, gibbs_sample, GibbsOptions, EXACT_SAMPLE_GUARD,
};

/// Model family tags derivable from the weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelFamily {
    /// All edge weights equal to 1.
    SimpleFerromagnet,
    /// All edge weights strictly positive.
    Ferromagnet,
    /// Signed interactions allowed.
    General,
}

/// A zero-field Ising model: inverse temperature `theta >= 0` over a
/// weighted graph. The effective coupling on edge `(u,v)` is
/// `theta * w_uv`.
#[derive(Clone, Debug, PartialEq)]
pub struct IsingModel {
    theta: f64,
    wg: WeightedGraph,
}

impl IsingModel {
    pub fn new(theta: f64, wg: WeightedGraph) -> Result<Self> {
        if !(theta >= 0.0) || !theta.is_finite() {
            return Err(invalid("theta must be finite and nonnegative"));
        }
        Ok(Self { theta, wg })
    }

    /// Simple ferromagnet: unit weight on every edge of `g`.
    pub fn simple(theta: f64, g: Graph) -> Result<Self> {
        Self::new(theta, WeightedGraph::simple(g))
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn weighted_graph(&self) -> &WeightedGraph {
        &self.wg
    }

    pub fn graph(&self) -> &Graph {
        self.wg.graph()
    }

    pub fn dimension(&self) -> usize {
        self.wg.vertex_count()
    }

    pub fn family(&self) -> ModelFamily {
        if self.wg.weighted_edges().all(|(_, w)| w == 1.0) {
            ModelFamily::SimpleFerromagnet
        } else if self.wg.is_ferromagnetic() {
            ModelFamily::Ferromagnet
        } else {
            ModelFamily::General
        }
    }

    /// Effective couplings `theta * w_uv` in deterministic edge order.
    pub fn couplings(&self) -> Vec<(usize, usize, f64)> {
        self.wg.weighted_edges().map(|((u, v), w)| (u, v, self.theta * w)).collect()
    }

    /// Unnormalized log-density `theta * sum w_uv x_u x_v`.
    pub fn log_weight(&self, spins: &[i8]) -> Result<f64> {
        if spins.len() != self.dimension() {
            return Err(invalid("spin vector dimension mismatch"));
        }
        debug_assert!(spins.iter().all(|&s| s == 1 || s == -1));
        let mut acc = 0.0;
        for ((u, v), w) in self.wg.weighted_edges() {
            acc += w * (spins[u] as f64) * (spins[v] as f64);
        }
        Ok(self.theta * acc)
    }
}

/// Symmetric matrix of pair correlations with unit diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationMatrix {
    d: usize,
    data: Vec<f64>,
}

impl CorrelationMatrix {
    /// Identity correlations (independent spins).
    pub fn identity(d: usize) -> Self {
        let mut m = Self { d, data: vec![0.0; d * d] };
        for u in 0..d {
            m.data[u * d + u] = 1.0;
        }
        m
    }

    /// Builds from a symmetric generator; `f(u,v)` is only consulted for
    /// `u < v`, entries are clamped into `[-1, 1]`.
    pub fn from_fn(d: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::identity(d);
        for u in 0..d {
            for v in u + 1..d {
                m.set(u, v, f(u, v));
            }
        }
        m
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.data[u * self.d + v]
    }

    /// Sets the symmetric pair `(u,v)`, clamping into `[-1, 1]`.
    pub fn set(&mut self, u: usize, v: usize, value: f64) {
        assert!(u != v, "diagonal is fixed at 1");
        let value = value.clamp(-1.0, 1.0);
        self.data[u * self.d + v] = value;
        self.data[v * self.d + u] = value;
    }

    /// Upper-triangle entries `(u, v, value)` with `u < v`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.d).flat_map(move |u| (u + 1..self.d).map(move |v| (u, v, self.get(u, v))))
    }

    /// Largest absolute entry difference against another matrix.
    pub fn max_abs_diff(&self, other: &CorrelationMatrix) -> f64 {
        assert_eq!(self.d, other.d);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| { let x = (a - b).abs(); if x > m { x } else { m } })
    }
}

/// A batch of spin configurations: `n` rows of `d` entries in `{-1,+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleBatch {
    n: usize,
    d: usize,
    spins: Vec<i8>,
    seed: u64,
    sampler: SamplerTag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SamplerTag {
    Exact,
    Gibbs,
}

impl SampleBatch {
    pub fn new(n: usize, d: usize, spins: Vec<i8>, seed: u64, sampler: SamplerTag) -> Result<Self> {
        if n == 0 {
            return Err(invalid("sample count must be at least 1"));
        }
        if spins.len() != n * d {
            return Err(invalid("spin buffer has wrong length"));
        }
        if spins.iter().any(|&s| s != 1 && s != -1) {
            return Err(invalid("spins must be +1 or -1"));
        }
        Ok(Self { n, d, spins, seed, sampler })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn sampler(&self) -> SamplerTag {
        self.sampler
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.spins[i * self.d..(i + 1) * self.d]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> {
        self.spins.chunks_exact(self.d)
    }

    /// Flips the sign of every spin; the correlation matrix is invariant.
    pub fn global_flip(&self) -> SampleBatch {
        let spins = self.spins.iter().map(|&s| -s).collect();
        SampleBatch { spins, ..self.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_edge(theta: f64) -> IsingModel {
        IsingModel::simple(theta, Graph::new(2, [(0, 1)]).unwrap()).unwrap()
    }

    #[test]
    fn log_weight_examples() {
        let m = single_edge(0.5);
        assert_eq!(m.log_weight(&[1, 1]).unwrap(), 0.5);
        assert_eq!(m.log_weight(&[1, -1]).unwrap(), -0.5);

        let zero = IsingModel::simple(0.0, Graph::complete(3)).unwrap();
        assert_eq!(zero.log_weight(&[1, -1, 1]).unwrap(), 0.0);

        let tri = IsingModel::simple(0.5, Graph::complete(3)).unwrap();
        assert!((tri.log_weight(&[1, 1, -1]).unwrap() + 0.5).abs() < 1e-15);

        assert!(m.log_weight(&[1]).is_err());
    }

    #[test]
    fn family_tags() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(IsingModel::simple(1.0, g.clone()).unwrap().family(), ModelFamily::SimpleFerromagnet);
        let ferro = WeightedGraph::new(g.clone(), [((0, 1), 2.5)]).unwrap();
        assert_eq!(IsingModel::new(1.0, ferro).unwrap().family(), ModelFamily::Ferromagnet);
        let gen = WeightedGraph::new(g, [((0, 1), -1.0)]).unwrap();
        assert_eq!(IsingModel::new(1.0, gen).unwrap().family(), ModelFamily::General);
        assert!(IsingModel::simple(-0.1, Graph::empty(2)).is_err());
    }

    #[test]
    fn batch_validation() {
        assert!(SampleBatch::new(1, 2, vec![1, -1], 0, SamplerTag::Exact).is_ok());
        assert!(SampleBatch::new(1, 2, vec![1, 0], 0, SamplerTag::Exact).is_err());
        assert!(SampleBatch::new(0, 2, vec![], 0, SamplerTag::Exact).is_err());
        assert!(SampleBatch::new(2, 2, vec![1, 1, 1], 0, SamplerTag::Exact).is_err());
    }
}

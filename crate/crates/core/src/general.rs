//! Score-type property tests for models with signed interactions.
//!
//! The test fits a null model to the data, computes that model's pair
//! correlations, and rejects when some empirical correlation strays from the
//! fitted one by at least `rho`. Fitting is either exhaustive (toy scale) or,
//! for cycle testing, the polynomial-time spanning-forest map.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, WeightedGraph};
use crate::ising::{
    empirical_correlations, exact_correlation_matrix, path_correlation, CorrelationMatrix,
    IsingModel, SampleBatch,
};
use crate::screening::{tau, ConditionFlag};
use crate::witness::max_abs_weight_spanning_forest;

/// Graph properties usable as a null constraint by the fitters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NullProperty {
    /// Null: disconnected graphs.
    Connectivity,
    /// Null: forests.
    Cycle,
    /// Null: graphs without an m-clique.
    Clique(usize),
}

impl NullProperty {
    /// Whether `g` satisfies the *null* side of the property.
    pub fn holds_null(&self, g: &Graph) -> Result<bool> {
        Ok(match self {
            NullProperty::Connectivity => !g.is_connected(),
            NullProperty::Cycle => g.is_forest(),
            NullProperty::Clique(m) => !g.has_m_clique(*m)?,
        })
    }
}

/// How a fitted null model was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FitMethod {
    Exhaustive,
    CycleMap,
}

/// A null-constrained model fitted to data.
#[derive(Clone, Debug)]
pub struct FittedNullModel {
    pub model: IsingModel,
    /// Achieved `max |empirical - model|` over pairs.
    pub fit_discrepancy: f64,
    pub method: FitMethod,
}

/// Worst-case correlation separation between distinct models in the
/// signed-interaction class with maximum degree `s` and coupling window
/// `[theta, Theta]`: `sinh^2(theta/4) / (2 s Theta (3 e^{2 s Theta} + 1))`.
pub fn t_general(theta: f64, big_theta: f64, s: usize) -> Result<f64> {
    if !(theta > 0.0) || big_theta < theta {
        return Err(invalid("need 0 < theta <= Theta"));
    }
    if s < 1 {
        return Err(invalid("sparsity must be at least 1"));
    }
    let s_f = s as f64;
    let num = (theta / 4.0).sinh().powi(2);
    Ok(num / (2.0 * s_f * big_theta * (3.0 * (2.0 * s_f * big_theta).exp() + 1.0)))
}

/// Rejection radius of the fast cycle test:
/// `tau (2 - tanh(Theta)) / (1 - tanh(Theta))`.
pub fn fast_cycle_rho(tau: f64, big_theta: f64) -> f64 {
    let t = big_theta.tanh();
    tau * (2.0 - t) / (1.0 - t)
}

/// Pair correlations of a fitted model. Forests use the exact path-product
/// formula (any dimension); other graphs fall back to enumeration.
pub fn fitted_model_correlations(fitted: &FittedNullModel) -> Result<CorrelationMatrix> {
    if fitted.model.graph().is_forest() {
        forest_model_correlations(&fitted.model)
    } else {
        exact_correlation_matrix(&fitted.model)
    }
}

/// Pair correlations of a forest model: the product of `tanh(theta * w)`
/// along the unique path, zero for disconnected pairs.
pub fn forest_model_correlations(model: &IsingModel) -> Result<CorrelationMatrix> {
    let g = model.graph();
    if !g.is_forest() {
        return Err(invalid("model graph has a cycle"));
    }
    let d = g.vertex_count();
    let theta = model.theta();
    let wg = model.weighted_graph();
    let mut m = CorrelationMatrix::identity(d);
    for u in 0..d {
        for v in u + 1..d {
            if let Some(path) = g.forest_path(u, v)? {
                let weights: Vec<f64> = path.iter().map(|&(a, b)| wg.weight(a, b)).collect();
                m.set(u, v, path_correlation(theta, &weights));
            }
        }
    }
    Ok(m)
}

/// The score test: reject iff `max_uv |empirical - fitted| >= rho`.
pub fn score_test(batch: &SampleBatch, fitted: &FittedNullModel, rho: f64) -> Result<bool> {
    if !(rho >= 0.0) {
        return Err(invalid("rho must be nonnegative"));
    }
    let emp = empirical_correlations(batch);
    let fit = fitted_model_correlations(fitted)?;
    Ok(emp.max_abs_diff(&fit) >= rho)
}

/// A precomputed bank of candidate null models with their exact correlation
/// matrices, so repeated fits against fresh data are cheap.
pub struct NullModelBank {
    theta: f64,
    candidates: Vec<(IsingModel, CorrelationMatrix)>,
}

/// Guard on brute-force null fitting: all graphs on more vertices are out of
/// reach of the doubly exponential search.
pub const EXHAUSTIVE_FIT_GUARD: usize = 6;

impl NullModelBank {
    /// Enumerates every graph on `d <= 6` vertices satisfying the null side
    /// of `property`, crossed with every signed weight assignment from
    /// `weight_grid` (weight magnitudes, in units of theta-multiples). The
    /// grid `[1.0]` means unit-magnitude signed couplings.
    pub fn build(
        d: usize,
        property: NullProperty,
        theta: f64,
        weight_grid: &[f64],
    ) -> Result<Self> {
        if d > EXHAUSTIVE_FIT_GUARD {
            return Err(Error::Guard { what: "exhaustive null fit", limit: EXHAUSTIVE_FIT_GUARD, got: d });
        }
        if weight_grid.is_empty() || weight_grid.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
            return Err(invalid("weight grid must hold positive magnitudes"));
        }
        let all_pairs: Vec<(usize, usize)> = {
            let mut p = Vec::new();
            for u in 0..d {
                for v in u + 1..d {
                    p.push((u, v));
                }
            }
            p
        };
        let npairs = all_pairs.len();
        let signed_grid: Vec<f64> = {
            // deterministic order: -g3, ..., -g1, +g1, ..., +g3
            let mut s: Vec<f64> = weight_grid.iter().map(|g| -g).collect();
            s.sort_by(f64::total_cmp);
            s.extend(weight_grid.iter().copied());
            s
        };
        let mut candidates = Vec::new();
        for mask in 0u64..(1 << npairs) {
            let edges: Vec<(usize, usize)> =
                (0..npairs).filter(|i| mask >> i & 1 == 1).map(|i| all_pairs[i]).collect();
            let g = Graph::new(d, edges.iter().copied())?;
            if !property.holds_null(&g)? {
                continue;
            }
            // all weight assignments over the present edges
            let k = edges.len();
            let combos = signed_grid.len().pow(k as u32);
            for c in 0..combos {
                let mut rem = c;
                let mut assignment = Vec::with_capacity(k);
                for &e in &edges {
                    assignment.push((e, signed_grid[rem % signed_grid.len()]));
                    rem /= signed_grid.len();
                }
                let wg = WeightedGraph::new(g.clone(), assignment)?;
                let model = IsingModel::new(theta, wg)?;
                let corr = exact_correlation_matrix(&model)?;
                candidates.push((model, corr));
            }
        }
        Ok(Self { theta, candidates })
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    /// Minimizer of `max_uv |m - candidate|` over the bank; ties resolve to
    /// the earliest candidate in the fixed enumeration order.
    pub fn fit(&self, m: &CorrelationMatrix) -> FittedNullModel {
        let mut best_idx = 0;
        let mut best = f64::INFINITY;
        for (i, (_, corr)) in self.candidates.iter().enumerate() {
            let disc = m.max_abs_diff(corr);
            if disc < best {
                best = disc;
                best_idx = i;
            }
        }
        FittedNullModel {
            model: self.candidates[best_idx].0.clone(),
            fit_discrepancy: best,
            method: FitMethod::Exhaustive,
        }
    }

    /// Smallest achievable discrepancy against an arbitrary target matrix;
    /// used to certify separations between the alternative and the null
    /// class exactly.
    pub fn min_discrepancy_against(&self, target: &CorrelationMatrix) -> f64 {
        self.candidates.iter().map(|(_, c)| target.max_abs_diff(c)).fold(f64::INFINITY, f64::min)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// One-shot exhaustive null fit (builds a bank and fits).
pub fn exhaustive_null_fit(
    batch: &SampleBatch,
    property: NullProperty,
    theta: f64,
    weight_grid: &[f64],
) -> Result<FittedNullModel> {
    let bank = NullModelBank::build(batch.dimension(), property, theta, weight_grid)?;
    Ok(bank.fit(&empirical_correlations(batch)))
}

/// The cycle-test fitting map: spanning forest on |M|, prune entries below
/// `tanh(theta) - tau`, clamp the implied coupling of kept edges into
/// `[theta, Theta]` with the empirical sign.
pub fn cycle_test_map(
    batch: &SampleBatch,
    theta: f64,
    big_theta: f64,
    delta: f64,
) -> Result<FittedNullModel> {
    if !(theta > 0.0) || big_theta < theta {
        return Err(invalid("need 0 < theta <= Theta"));
    }
    let m = empirical_correlations(batch);
    let t = tau(batch.len(), batch.dimension(), delta)?;
    let forest = max_abs_weight_spanning_forest(&m);
    let prune_level = theta.tanh() - t;
    let mut kept = Vec::new();
    for &(u, v) in forest.edges() {
        let muv = m.get(u, v);
        // strict inequality: entries exactly at the level are kept
        if muv.abs() < prune_level {
            continue;
        }
        let magnitude = if muv.abs() >= 1.0 {
            big_theta
        } else {
            muv.abs().atanh().min(big_theta).max(theta)
        };
        let w = muv.signum() * magnitude / theta;
        kept.push(((u, v), w));
    }
    let graph = Graph::new(batch.dimension(), kept.iter().map(|&(e, _)| e))?;
    let wg = WeightedGraph::new(graph, kept)?;
    let model = IsingModel::new(theta, wg)?;
    let fitted_corr = forest_model_correlations(&model)?;
    let disc = empirical_correlations(batch).max_abs_diff(&fitted_corr);
    Ok(FittedNullModel { model, fit_discrepancy: disc, method: FitMethod::CycleMap })
}

/// Outcome of the polynomial-time cycle test.
#[derive(Clone, Debug)]
pub struct FastCycleReport {
    pub psi: bool,
    pub rho: f64,
    pub max_discrepancy: f64,
    pub fitted: FittedNullModel,
    pub conditions: Vec<ConditionFlag>,
}

/// Fast cycle test: fit with [`cycle_test_map`], then score at
/// `rho = tau (2 - tanh(Theta)) / (1 - tanh(Theta))`. Runs regardless of the
/// sufficient condition and records it in the report.
pub fn fast_cycle_test(
    batch: &SampleBatch,
    theta: f64,
    big_theta: f64,
    delta: f64,
) -> Result<FastCycleReport> {
    let t = tau(batch.len(), batch.dimension(), delta)?;
    let fitted = cycle_test_map(batch, theta, big_theta, delta)?;
    let rho = fast_cycle_rho(t, big_theta);
    let max_discrepancy = fitted.fit_discrepancy;
    let psi = max_discrepancy >= rho;
    let conditions = vec![ConditionFlag {
        name: String::from("tanh(theta)(1 - tanh(Theta)) > 2 tau"),
        holds: theta.tanh() * (1.0 - big_theta.tanh()) > 2.0 * t,
    }];
    Ok(FastCycleReport { psi, rho, max_discrepancy, fitted, conditions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::ising::{exact_sample, SamplerTag};

    #[test]
    fn t_general_frozen_values() {
        // frozen from high-precision evaluation
        let v = t_general(1.0, 1.0, 2).unwrap();
        assert!((v - 9.680693519212462e-5).abs() < 1e-18);
        // -> 0 as theta -> 0
        assert!(t_general(1e-12, 1.0, 2).unwrap() < 1e-20);
        // decreasing in s, increasing in theta
        let mut prev = f64::INFINITY;
        for s in 1..6 {
            let v = t_general(1.0, 1.0, s).unwrap();
            assert!(v < prev);
            prev = v;
        }
        let mut prev = 0.0;
        for i in 1..6 {
            let th = i as f64 * 0.2;
            let v = t_general(th, 2.0, 2).unwrap();
            assert!(v > prev);
            prev = v;
        }
        assert!(t_general(1.0, 0.5, 2).is_err());
    }

    #[test]
    fn fast_cycle_rho_frozen() {
        assert!((fast_cycle_rho(1.0, 0.5) - 2.8591409142295226).abs() < 1e-14);
    }

    #[test]
    fn forest_correlations_match_signs() {
        let g = Graph::path(3);
        let wg = WeightedGraph::new(g, [((0, 1), 1.0), ((1, 2), -1.0)]).unwrap();
        let model = IsingModel::new(0.7, wg).unwrap();
        let m = forest_model_correlations(&model).unwrap();
        let t = 0.7f64.tanh();
        assert!((m.get(0, 1) - t).abs() < 1e-15);
        assert!((m.get(1, 2) + t).abs() < 1e-15);
        assert!((m.get(0, 2) + t * t).abs() < 1e-15);
        // single negative edge
        let g1 = Graph::new(2, [(0, 1)]).unwrap();
        let w1 = WeightedGraph::new(g1, [((0, 1), -1.0)]).unwrap();
        let m1 = forest_model_correlations(&IsingModel::new(0.7, w1).unwrap()).unwrap();
        assert!((m1.get(0, 1) + t).abs() < 1e-15);
        // rejects cyclic input
        let tri = IsingModel::simple(0.5, Graph::complete(3)).unwrap();
        assert!(forest_model_correlations(&tri).is_err());
    }

    #[test]
    fn forest_formula_equals_enumeration_signed() {
        let g = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let wg = WeightedGraph::new(
            g,
            [((0, 1), 1.3), ((1, 2), -2.0), ((1, 3), 1.0), ((3, 4), -1.1)],
        )
        .unwrap();
        let model = IsingModel::new(0.45, wg).unwrap();
        let fast = forest_model_correlations(&model).unwrap();
        let slow = exact_correlation_matrix(&model).unwrap();
        assert!(fast.max_abs_diff(&slow) < 1e-13);
    }

    #[test]
    fn score_test_monotone_in_rho() {
        let model = IsingModel::simple(0.6, Graph::path(4)).unwrap();
        let batch = exact_sample(&model, 300, 3).unwrap();
        let fitted = FittedNullModel {
            model: IsingModel::simple(0.6, Graph::empty(4)).unwrap(),
            fit_discrepancy: 0.0,
            method: FitMethod::Exhaustive,
        };
        let mut prev = true;
        for i in 0..30 {
            let rho = i as f64 * 0.05;
            let psi = score_test(&batch, &fitted, rho).unwrap();
            assert!(prev || !psi, "psi must be monotone nonincreasing in rho");
            prev = psi;
        }
        // rho = 0 rejects unless the discrepancy is exactly zero
        assert!(score_test(&batch, &fitted, 0.0).unwrap());
    }

    #[test]
    fn bank_guard_and_argmin_dominance() {
        assert!(NullModelBank::build(7, NullProperty::Cycle, 0.5, &[1.0]).is_err());
        let bank = NullModelBank::build(4, NullProperty::Cycle, 0.5, &[1.0]).unwrap();
        assert!(!bank.is_empty());
        // the empty graph is in the searched set: fitting pure noise cannot
        // do worse than the true (empty) model
        let model = IsingModel::simple(0.5, Graph::empty(4)).unwrap();
        let batch = exact_sample(&model, 500, 11).unwrap();
        let emp = empirical_correlations(&batch);
        let empty_corr = exact_correlation_matrix(&model).unwrap();
        let fitted = bank.fit(&emp);
        assert!(fitted.fit_discrepancy <= emp.max_abs_diff(&empty_corr) + 1e-15);
    }

    #[test]
    fn cycle_map_prunes_weak_entries() {
        // all entries far below tanh(theta) - tau: empty forest back
        let model = IsingModel::simple(0.05, Graph::path(5)).unwrap();
        let batch = exact_sample(&model, 100, 2).unwrap();
        let fitted = cycle_test_map(&batch, 1.5, 2.0, 0.05).unwrap();
        assert_eq!(fitted.model.graph().edge_count(), 0);
    }

    #[test]
    fn cycle_map_clamps_perfect_correlation() {
        let spins = vec![1, 1, -1, -1, 1, 1]; // 3 samples of 2 perfectly correlated spins
        let batch = SampleBatch::new(3, 2, spins, 0, SamplerTag::Exact).unwrap();
        let fitted = cycle_test_map(&batch, 0.5, 1.2, 0.05).unwrap();
        let w = fitted.model.weighted_graph().weight(0, 1);
        assert!((w - 1.2 / 0.5).abs() < 1e-15, "clamp to Theta/theta, got {w}");
    }

    #[test]
    fn cycle_map_weight_window() {
        let model = IsingModel::simple(0.8, Graph::path(6)).unwrap();
        let batch = exact_sample(&model, 2000, 5).unwrap();
        let fitted = cycle_test_map(&batch, 0.7, 1.1, 0.05).unwrap();
        let cap = 1.1 / 0.7;
        for (_, w) in fitted.model.weighted_graph().weighted_edges() {
            let a = w.abs();
            assert!((1.0 - 1e-12..=cap + 1e-12).contains(&a), "weight {w} outside window");
        }
    }
}

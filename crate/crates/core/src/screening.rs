//! Correlation screening tests for ferromagnets.
//!
//! The generic test computes the empirical correlation matrix, finds the
//! witness subgraph maximizing its minimal entry, and rejects the null when
//! that minimum clears a closed-form correlation level minus the universal
//! threshold `tau`. Connectivity, cycle presence and clique size are the
//! three specializations, each with its own witness search and level.

use alloc::string::String;
use alloc::vec::Vec;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{invalid, Result};
use crate::graph::Edge;
use crate::ising::{
    curie_weiss_edge_correlation, empirical_correlations, CorrelationMatrix, SampleBatch,
};
use crate::witness::{
    clique_edges, first_cycle_by_weight, first_m_clique_by_weight, max_weight_spanning_forest,
    min_edge_value,
};

/// Universal correlation deviation threshold
/// `tau = sqrt((4 ln d + ln(1/delta)) / n)` (natural logs).
pub fn tau(n: usize, d: usize, delta: f64) -> Result<f64> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    if d < 2 {
        return Err(invalid("d must be at least 2"));
    }
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(invalid("delta must lie in (0, 1]"));
    }
    Ok(((4.0 * (d as f64).ln() + (1.0 / delta).ln()) / n as f64).sqrt())
}

/// Universal lower bound on the extremal alternative correlation for any
/// monotone property: `tanh(theta)`.
pub fn universal_t_lower(theta: f64) -> f64 {
    theta.tanh()
}

/// The degree/coupling ratio entering the low-temperature no-edge bound.
pub fn r_ratio(s: usize, big_theta: f64) -> Result<f64> {
    if s < 1 {
        return Err(invalid("sparsity must be at least 1"));
    }
    let s_f = s as f64;
    let num = (2.0 * s_f * big_theta).cosh()
        + 2.0 * s_f * (-2.0 * (s_f - 1.0) * big_theta).exp() * (2.0 * (s_f - 1.0) * big_theta).cosh();
    let den = 2.0 * s_f * (-2.0 * (s_f - 1.0) * big_theta).exp() * (2.0 * big_theta).cosh() + 1.0;
    Ok(num / den)
}

/// Upper bound on the extremal no-edge correlation over null models with
/// maximum degree `s` and couplings at most `big_theta`; valid at any
/// temperature. The `s = 2` case has its own closed form and `s = 1` forces
/// independence.
pub fn q_upper_lowtemp(s: usize, big_theta: f64) -> Result<f64> {
    match s {
        0 => Err(invalid("sparsity must be at least 1")),
        1 => Ok(0.0),
        2 => {
            let c = (4.0 * big_theta).cosh();
            Ok((c - 1.0) / (c + 3.0))
        }
        _ => {
            let r = r_ratio(s, big_theta)?;
            Ok((r - 1.0) / (r + 1.0))
        }
    }
}

/// High-temperature no-edge correlation bound
/// `s tanh^2(T) / (1 - (s-1) tanh(T))`, valid when `(s-1) tanh(T) < 1`.
pub fn q_upper_hightemp(s: usize, big_theta: f64) -> Result<f64> {
    if s < 1 {
        return Err(invalid("sparsity must be at least 1"));
    }
    let t = big_theta.tanh();
    if (s as f64 - 1.0) * t >= 1.0 {
        return Err(invalid("high-temperature condition fails: (s-1) tanh(Theta) >= 1"));
    }
    Ok(s as f64 * t * t / (1.0 - (s as f64 - 1.0) * t))
}

/// Witness kinds reported by the screening tests.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    SpanningForest { edges: Vec<Edge>, spanning: bool },
    Cycle { edges: Vec<Edge> },
    Clique { vertices: Vec<usize> },
    Edges(Vec<Edge>),
}

impl Witness {
    pub fn edges(&self) -> Vec<Edge> {
        match self {
            Witness::SpanningForest { edges, .. } => edges.clone(),
            Witness::Cycle { edges } => edges.clone(),
            Witness::Clique { vertices } => clique_edges(vertices),
            Witness::Edges(edges) => edges.clone(),
        }
    }
}

/// Named sufficient-condition flag carried in a report.
#[derive(Clone, Debug, PartialEq)]
pub struct ConditionFlag {
    pub name: String,
    pub holds: bool,
}

/// Outcome of a screening test.
#[derive(Clone, Debug, PartialEq)]
pub struct TestReport {
    /// 1 rejects the null (property detected).
    pub psi: bool,
    /// The correlation level the minimum is compared against (before
    /// subtracting tau).
    pub threshold_used: f64,
    pub tau: f64,
    pub witness: Witness,
    pub min_witness_correlation: f64,
    /// Sufficient-condition booleans evaluable from the test's own inputs.
    pub conditions: Vec<ConditionFlag>,
}

impl TestReport {
    fn decide(
        threshold_used: f64,
        tau: f64,
        witness: Witness,
        min_corr: f64,
        conditions: Vec<ConditionFlag>,
    ) -> Self {
        // strict inequality: exact equality keeps the null
        let psi = min_corr > threshold_used - tau;
        Self { psi, threshold_used, tau, witness, min_witness_correlation: min_corr, conditions }
    }
}

/// Generic correlation screening: reject when the witness found by
/// `witness_finder` has minimal correlation above `underline_t - tau`.
pub fn correlation_screening_test(
    batch: &SampleBatch,
    underline_t: f64,
    delta: f64,
    witness_finder: impl FnOnce(&CorrelationMatrix) -> Result<Witness>,
) -> Result<TestReport> {
    if !(underline_t > 0.0 && underline_t <= 1.0) {
        return Err(invalid("underline_t must lie in (0, 1]"));
    }
    let m = empirical_correlations(batch);
    let t = tau(batch.len(), batch.dimension(), delta)?;
    let witness = witness_finder(&m)?;
    let min_corr = min_edge_value(&m, &witness.edges());
    Ok(TestReport::decide(underline_t, t, witness, min_corr, Vec::new()))
}

/// Connectivity test: maximum spanning forest as witness, level
/// `tanh(theta)`. A non-spanning forest means the empirical support is
/// disconnected; the missing links carry zero weight, so the recorded
/// minimum is capped at zero in that case.
pub fn connectivity_test(batch: &SampleBatch, theta: f64, delta: f64) -> Result<TestReport> {
    if !(theta > 0.0) {
        return Err(invalid("theta must be positive"));
    }
    let d = batch.dimension();
    let m = empirical_correlations(batch);
    let t = tau(batch.len(), d, delta)?;
    let forest = max_weight_spanning_forest(&m);
    let spanning = forest.edge_count() + 1 == d;
    let mut min_corr = min_edge_value(&m, forest.edges());
    if !spanning {
        min_corr = min_corr.min(0.0);
    }
    let witness = Witness::SpanningForest { edges: forest.edges().to_vec(), spanning };
    let conditions = alloc::vec![ConditionFlag {
        name: String::from("tanh(theta) > 2 tau"),
        holds: theta.tanh() > 2.0 * t,
    }];
    Ok(TestReport::decide(universal_t_lower(theta), t, witness, min_corr, conditions))
}

/// Cycle test: first weight-ordered cycle as witness, level `tanh(theta)`.
pub fn cycle_test(batch: &SampleBatch, theta: f64, big_theta: f64, delta: f64) -> Result<TestReport> {
    if !(theta > 0.0) {
        return Err(invalid("theta must be positive"));
    }
    if big_theta < theta {
        return Err(invalid("Theta must be at least theta"));
    }
    let m = empirical_correlations(batch);
    let t = tau(batch.len(), batch.dimension(), delta)?;
    let cycle = first_cycle_by_weight(&m)?;
    let min_corr = min_edge_value(&m, &cycle);
    let conditions = alloc::vec![ConditionFlag {
        name: String::from("tanh(theta) - tanh^2(Theta) > 2 tau"),
        holds: theta.tanh() - big_theta.tanh().powi(2) > 2.0 * t,
    }];
    Ok(TestReport::decide(universal_t_lower(theta), t, Witness::Cycle { edges: cycle }, min_corr, conditions))
}

/// Clique-size test: first weight-ordered `m`-clique as witness, level
/// `(r(m, theta) - 1) / (r(m, theta) + 1)`. Requires `m >= 3`; testing for a
/// 2-clique is the plain edge test and is rejected.
pub fn clique_size_test(batch: &SampleBatch, theta: f64, m_size: usize, delta: f64) -> Result<TestReport> {
    if !(theta > 0.0) {
        return Err(invalid("theta must be positive"));
    }
    if m_size < 3 {
        return Err(invalid("clique test requires m >= 3"));
    }
    let m = empirical_correlations(batch);
    let t = tau(batch.len(), batch.dimension(), delta)?;
    let clique = first_m_clique_by_weight(&m, m_size)?;
    let level = curie_weiss_edge_correlation(m_size, theta)?;
    let min_corr = min_edge_value(&m, &clique_edges(&clique));
    Ok(TestReport::decide(level, t, Witness::Clique { vertices: clique }, min_corr, Vec::new()))
}

/// Degenerate-regime connectivity test: reject iff every sample is a
/// constant-sign vector. Under a disconnected null this event has
/// probability at most `2^-n`; under a connected model with `tanh(theta)`
/// near 1 it is nearly certain. No Monte Carlo is needed for its guarantee.
pub fn perfect_alignment_test(batch: &SampleBatch) -> bool {
    batch.rows().all(|row| row.iter().all(|&s| s == row[0]))
}

/// Whether the clique-test sufficient condition holds at the given
/// configuration: the Curie-Weiss level minus the best valid no-edge bound
/// must clear `2 tau`.
pub fn clique_condition_holds(
    theta: f64,
    big_theta: f64,
    s: usize,
    m_size: usize,
    tau: f64,
) -> Result<bool> {
    let level = curie_weiss_edge_correlation(m_size, theta)?;
    let mut q = q_upper_lowtemp(s, big_theta)?;
    if let Ok(qh) = q_upper_hightemp(s, big_theta) {
        q = q.min(qh);
    }
    Ok(level - q >= 2.0 * tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::ising::{exact_sample, IsingModel, SamplerTag};
    use alloc::vec;

    #[test]
    fn tau_examples() {
        // frozen from a high-precision evaluation of the formula
        let t = tau(1000, 100, 0.05).unwrap();
        assert!((t - 0.14634347616995558).abs() < 1e-15);
        // quadrupling n halves tau exactly
        let t4 = tau(4000, 100, 0.05).unwrap();
        assert!((t - 2.0 * t4).abs() < 1e-15);
        // delta = 1 drops the confidence term
        let t1 = tau(1000, 100, 1.0).unwrap();
        assert!((t1 - (4.0 * 100f64.ln() / 1000.0).sqrt()).abs() < 1e-15);
        assert!(tau(0, 10, 0.05).is_err());
        assert!(tau(10, 1, 0.05).is_err());
        assert!(tau(10, 10, 0.0).is_err());
    }

    #[test]
    fn universal_lower_bound_values() {
        assert_eq!(universal_t_lower(0.0), 0.0);
        assert!((universal_t_lower(0.5) - 0.46211715726000974).abs() < 1e-15);
        let mut prev = -1.0;
        for i in 0..20 {
            let v = universal_t_lower(i as f64 * 0.3);
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn q_bounds_frozen_values() {
        // zero coupling: independent spins
        for s in [1usize, 2, 3, 7] {
            assert_eq!(q_upper_lowtemp(s, 0.0).unwrap(), 0.0);
            assert_eq!(q_upper_hightemp(s, 0.0).unwrap(), 0.0);
        }
        // frozen from high-precision evaluation
        let r = r_ratio(3, 0.2).unwrap();
        assert!((r - 1.3836469376448429).abs() < 1e-15);
        assert!((q_upper_lowtemp(3, 0.2).unwrap() - 0.16094956496531504).abs() < 1e-15);
        assert!((q_upper_hightemp(3, 0.2).unwrap() - 0.19309570387403002).abs() < 1e-15);
        // s = 1 high-temperature bound degenerates to tanh^2
        assert!(
            (q_upper_hightemp(1, 0.2).unwrap() - 0.2f64.tanh().powi(2)).abs() < 1e-15
        );
        // violated precondition
        assert!(q_upper_hightemp(3, 1.0).is_err());
        assert!(q_upper_lowtemp(0, 0.2).is_err());
    }

    #[test]
    fn q_lowtemp_nondecreasing_in_coupling() {
        for s in [2usize, 3, 5] {
            let mut prev = -1.0;
            for i in 0..=20 {
                let v = q_upper_lowtemp(s, i as f64 * 0.15).unwrap();
                assert!(v >= prev - 1e-12, "s={s} grid point {i}");
                prev = v;
            }
        }
    }

    fn aligned_batch(n: usize, d: usize) -> SampleBatch {
        SampleBatch::new(n, d, vec![1; n * d], 0, SamplerTag::Exact).unwrap()
    }

    #[test]
    fn perfectly_aligned_spins_reject() {
        let batch = aligned_batch(5, 4);
        let rep = connectivity_test(&batch, 0.5, 0.05).unwrap();
        assert!(rep.psi);
        assert_eq!(rep.min_witness_correlation, 1.0);
        assert!(perfect_alignment_test(&batch));
    }

    #[test]
    fn generic_test_reproduces_connectivity_specialization() {
        let model = IsingModel::simple(0.8, Graph::path(6)).unwrap();
        let batch = exact_sample(&model, 500, 42).unwrap();
        let spec = connectivity_test(&batch, 0.8, 0.05).unwrap();
        let gen = correlation_screening_test(&batch, universal_t_lower(0.8), 0.05, |m| {
            let forest = max_weight_spanning_forest(m);
            Ok(Witness::SpanningForest { edges: forest.edges().to_vec(), spanning: true })
        })
        .unwrap();
        assert_eq!(spec.psi, gen.psi);
        assert_eq!(spec.min_witness_correlation, gen.min_witness_correlation);
    }

    #[test]
    fn decision_identity_and_equality_is_conservative() {
        let batch = aligned_batch(3, 3);
        let rep = connectivity_test(&batch, 0.5, 0.05).unwrap();
        assert_eq!(rep.psi, rep.min_witness_correlation > rep.threshold_used - rep.tau);
        // equality keeps the null: min correlation of 1.0 vs threshold 1.0
        let t = tau(3, 3, 0.05).unwrap();
        let rep2 = correlation_screening_test(&batch, (1.0f64 + t).min(1.0), 0.05, |_| {
            Ok(Witness::Edges(vec![(0, 1)]))
        })
        .unwrap();
        // threshold_used - tau = 1.0 - tau < 1.0 = min, so psi = true here;
        // construct exact equality directly instead
        assert!(rep2.psi);
        let report = TestReport::decide(1.0, 0.0, Witness::Edges(vec![(0, 1)]), 1.0, Vec::new());
        assert!(!report.psi, "exact equality must keep the null");
    }

    #[test]
    fn n_equals_one_runs() {
        let batch = SampleBatch::new(1, 4, vec![1, -1, 1, -1], 0, SamplerTag::Exact).unwrap();
        let rep = connectivity_test(&batch, 0.5, 0.05).unwrap();
        assert!(rep.tau.is_finite());
    }

    #[test]
    fn clique_test_rejects_m2() {
        let batch = aligned_batch(3, 4);
        assert!(clique_size_test(&batch, 0.5, 2, 0.05).is_err());
    }

    #[test]
    fn monotone_in_matrix_entries_for_connectivity() {
        // raising every sample correlation cannot flip psi from 1 to 0:
        // exercise via two batches, one a noisier version of the other
        let model = IsingModel::simple(1.2, Graph::path(5)).unwrap();
        let strong = exact_sample(&model, 800, 7).unwrap();
        let rep = connectivity_test(&strong, 0.9, 0.05).unwrap();
        if rep.psi {
            let all_one = aligned_batch(800, 5);
            assert!(connectivity_test(&all_one, 0.9, 0.05).unwrap().psi);
        }
    }
}

//! Brute-force numerical certification of the structural facts the tests
//! lean on: exact chi-square divergences and their product/mixture
//! identities, the edge-addition factor, standardized clique-pair partition
//! ratios and their monotonicity, the quadratic-form stochastic dominance,
//! and edge-deletion monotonicity of ferromagnetic correlations.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
#[cfg(not(feature = "std"))]
use num_traits::Float;
use rand::Rng;

use crate::error::{invalid, Error, Result};
use crate::graph::{edge, Edge, Graph, WeightedGraph};
use crate::ising::{exact_correlation_matrix, exact_pair_correlation, state_log_weights, IsingModel};
use crate::util::{binomial, ln_binomial, log_sum_exp, KahanSum};

const CHI2_GUARD: usize = 20;

/// Exact chi-square divergence `E_q[(p/q - 1)^2]` between two models on the
/// same state space, by enumeration.
pub fn chi2_exact(p_model: &IsingModel, q_model: &IsingModel) -> Result<f64> {
    if p_model.dimension() != q_model.dimension() {
        return Err(invalid("models live on different state spaces"));
    }
    let (lp, lzp) = state_log_weights(p_model, CHI2_GUARD)?;
    let (lq, lzq) = state_log_weights(q_model, CHI2_GUARD)?;
    // sum p^2/q - 1, accumulated compensated: terms can span wide scales
    let mut acc = KahanSum::new();
    for (a, b) in lp.iter().zip(&lq) {
        acc.add((2.0 * (a - lzp) - (b - lzq)).exp());
    }
    Ok(acc.value() - 1.0)
}

/// Divergence of `n`-fold products from a per-sample second-moment factor
/// `f = E_q (p/q)^2`: the product divergence is `f^n - 1`.
pub fn chi2_product(factor: f64, n: usize) -> Result<f64> {
    if !(factor >= 1.0) {
        return Err(invalid("second-moment factor must be at least 1"));
    }
    Ok(factor.powi(n as i32) - 1.0)
}

/// Chi-square divergence of the uniform mixture of `m` single-edge
/// alternatives from the null, given the matrix of pairwise second-moment
/// factors: `(1/m^2) sum_{j,k} f_{jk}^n - 1`.
pub fn mixture_chi2(factors: &[Vec<f64>], n: usize) -> Result<f64> {
    let m = factors.len();
    if m == 0 || factors.iter().any(|row| row.len() != m) {
        return Err(invalid("factor matrix must be square and nonempty"));
    }
    let mut acc = KahanSum::new();
    for row in factors {
        for &f in row {
            acc.add(f.powi(n as i32));
        }
    }
    Ok(acc.value() / (m * m) as f64 - 1.0)
}

/// The edge-addition factor `E_0[(P_j/P_0)(P_k/P_0)]` for a simple
/// ferromagnetic base `g0` and two added edges, computed two ways.
#[derive(Clone, Copy, Debug)]
pub struct EdgeAdditionFactor {
    /// Partition-function route: `Z_0 Z_{jk} / (Z_j Z_k)`.
    pub enumeration: f64,
    /// Exact identity `1 + (E_j - E_0) / (E_0 + coth theta)` on the pair of
    /// the second edge.
    pub closed_form: f64,
    /// The relaxation `1 + tanh(theta) (E_j - E_0)`.
    pub bound: f64,
}

/// Computes the edge-addition factor and verifies the two exact routes agree
/// to 1e-12.
pub fn edge_addition_factor(g0: &Graph, e_j: Edge, e_k: Edge, theta: f64) -> Result<EdgeAdditionFactor> {
    let e_j = edge(e_j.0, e_j.1);
    let e_k = edge(e_k.0, e_k.1);
    if g0.has_edge(e_j.0, e_j.1) || g0.has_edge(e_k.0, e_k.1) {
        return Err(invalid("added edges must be absent from the base graph"));
    }
    if !(theta > 0.0) {
        return Err(invalid("theta must be positive"));
    }
    let base = IsingModel::simple(theta, g0.clone())?;
    let with_j = IsingModel::simple(theta, g0.with_edge(e_j.0, e_j.1)?)?;
    let with_k = IsingModel::simple(theta, g0.with_edge(e_k.0, e_k.1)?)?;
    let both = if e_j == e_k {
        // the same edge twice: a single edge of doubled coupling
        let g = g0.with_edge(e_j.0, e_j.1)?;
        let weights: Vec<(Edge, f64)> =
            g.edges().iter().map(|&e| (e, if e == e_j { 2.0 } else { 1.0 })).collect();
        IsingModel::new(theta, WeightedGraph::new(g, weights)?)?
    } else {
        IsingModel::simple(theta, g0.with_edge(e_j.0, e_j.1)?.with_edge(e_k.0, e_k.1)?)?
    };
    let lz0 = crate::ising::log_partition_function(&base)?;
    let lzj = crate::ising::log_partition_function(&with_j)?;
    let lzk = crate::ising::log_partition_function(&with_k)?;
    let lzjk = crate::ising::log_partition_function(&both)?;
    let enumeration = (lz0 + lzjk - lzj - lzk).exp();

    let e0 = exact_pair_correlation(&base, e_k.0, e_k.1)?;
    let ej = exact_pair_correlation(&with_j, e_k.0, e_k.1)?;
    let delta = ej - e0;
    let closed_form = 1.0 + delta / (e0 + 1.0 / theta.tanh());
    let bound = 1.0 + theta.tanh() * delta;
    if (enumeration - closed_form).abs() > 1e-12 {
        return Err(Error::Inconsistent(format!(
            "edge addition factor routes disagree: {enumeration} vs {closed_form}"
        )));
    }
    Ok(EdgeAdditionFactor { enumeration, closed_form, bound })
}

/// Log of the standardized clique-pair partition value `T(theta, overlap)`
/// for two `s`-cliques sharing `overlap` vertices, via binomially weighted
/// magnetization sums (O(s^2) terms).
pub fn antiferro_t_log(s: usize, overlap: usize, theta: f64) -> Result<f64> {
    if s < 1 || overlap > s {
        return Err(invalid("need 1 <= s and overlap <= s"));
    }
    if !(theta >= 0.0) {
        return Err(invalid("theta must be nonnegative"));
    }
    let free = s - overlap;
    let ln2 = core::f64::consts::LN_2;
    let mut outer = Vec::with_capacity(overlap + 1);
    for ki in 0..=overlap {
        let i_sum = overlap as f64 - 2.0 * ki as f64;
        let mut inner = Vec::with_capacity(free + 1);
        for ku in 0..=free {
            let u_sum = free as f64 - 2.0 * ku as f64;
            let tot = u_sum + i_sum;
            inner.push(ln_binomial(free, ku) - free as f64 * ln2 - theta / 2.0 * tot * tot);
        }
        let ln_inner = log_sum_exp(&inner);
        outer.push(ln_binomial(overlap, ki) - overlap as f64 * ln2 + 2.0 * ln_inner);
    }
    Ok(s as f64 * theta + log_sum_exp(&outer))
}

/// `ln T(theta, overlap)` by raw enumeration over all `2^{2s - overlap}`
/// states of the clique union; consistency oracle for the fast path.
pub fn antiferro_t_log_enumeration(s: usize, overlap: usize, theta: f64) -> Result<f64> {
    let union = 2 * s - overlap;
    if union > 16 {
        return Err(Error::Guard { what: "clique union enumeration", limit: 16, got: union });
    }
    // vertices: 0..s = V; s-overlap..2s-overlap = V'
    let terms: Vec<f64> = (0u32..1 << union)
        .map(|state| {
            let spin = |v: usize| if state >> v & 1 == 1 { 1.0 } else { -1.0 };
            let s_v: f64 = (0..s).map(spin).sum();
            let s_vp: f64 = (s - overlap..union).map(spin).sum();
            let ss_v = (s_v * s_v - s as f64) / 2.0;
            let ss_vp = (s_vp * s_vp - s as f64) / 2.0;
            -theta * (ss_v + ss_vp)
        })
        .collect();
    Ok(log_sum_exp(&terms) - union as f64 * core::f64::consts::LN_2)
}

/// Ratio `T(theta, overlap) / T(theta, 0)`.
pub fn antiferro_ratio(s: usize, overlap: usize, theta: f64) -> Result<f64> {
    Ok((antiferro_t_log(s, overlap, theta)? - antiferro_t_log(s, 0, theta)?).exp())
}

/// Closed form of `lim_{theta -> inf} T(theta, overlap) / T(theta, 0)`,
/// split on the parity of `s`.
pub fn antiferro_ratio_limit(s: usize, overlap: usize) -> Result<f64> {
    if s < 1 || overlap > s {
        return Err(invalid("need 1 <= s and overlap <= s"));
    }
    let free = s - overlap;
    let mut sum = 0.0f64;
    if s % 2 == 0 {
        for half_j in 0..=overlap {
            let j = 2 * half_j;
            if s < j || (s - j) % 2 != 0 || (s - j) / 2 > free {
                continue;
            }
            sum += binomial(overlap, half_j) as f64 * (binomial(free, (s - j) / 2) as f64).powi(2);
        }
        let denom = binomial(s, s / 2) as f64;
        Ok(2.0f64.powi(overlap as i32) * sum / (denom * denom))
    } else {
        for half_j in 0..=overlap {
            let j = 2 * half_j;
            if s + 1 < j {
                continue;
            }
            let mut inner = 0.0;
            if s >= 1 + j && (s - 1 - j) % 2 == 0 && (s - 1 - j) / 2 <= free {
                inner += binomial(free, (s - 1 - j) / 2) as f64;
            }
            if (s + 1 - j) % 2 == 0 && (s + 1 - j) / 2 <= free {
                inner += binomial(free, (s + 1 - j) / 2) as f64;
            }
            sum += binomial(overlap, half_j) as f64 * inner * inner;
        }
        let denom = binomial(s, (s - 1) / 2) as f64;
        Ok(2.0f64.powi(overlap as i32) * sum / (4.0 * denom * denom))
    }
}

/// Report of a grid monotonicity check.
#[derive(Clone, Copy, Debug)]
pub struct MonotonicityReport {
    pub nondecreasing: bool,
    /// Largest observed decrease between consecutive grid points.
    pub max_violation: f64,
}

/// Asserts the clique-pair ratio is nondecreasing along an ascending theta
/// grid, with tolerance 1e-10.
pub fn ratio_monotonicity_check(s: usize, overlap: usize, theta_grid: &[f64]) -> Result<MonotonicityReport> {
    if theta_grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(invalid("theta grid must be sorted ascending"));
    }
    let mut max_violation = 0.0f64;
    let mut prev = f64::NEG_INFINITY;
    for &t in theta_grid {
        let r = antiferro_ratio(s, overlap, t)?;
        if prev - r > max_violation {
            max_violation = prev - r;
        }
        prev = r;
    }
    Ok(MonotonicityReport { nondecreasing: max_violation <= 1e-10, max_violation })
}

/// Inputs of the quadratic-form dominance check.
#[derive(Clone, Debug)]
pub struct DominanceSpec {
    /// Number of Rademacher spins in each of the two sums.
    pub k: usize,
    /// Nonnegative integer offset.
    pub h: usize,
    /// Larger coefficient.
    pub theta: f64,
    /// Smaller coefficient.
    pub theta_prime: f64,
    /// Extra thresholds to test beyond the automatic breakpoints.
    pub t_grid: Vec<f64>,
}

/// Result of the dominance check.
#[derive(Clone, Debug)]
pub struct DominanceReport {
    pub holds: bool,
    /// Worst (most positive) probability-mass violation over all tested
    /// thresholds, in exact units of `4^-k` counts; negative when the
    /// inequality is strict everywhere.
    pub worst_margin: i128,
    pub thresholds_tested: usize,
}

/// Exhaustively verifies, in exact integer arithmetic, that for all `t`
///
/// `P(theta (S_Y + h + 2)^2 + theta' (S_X + h)^2 < t)
///    <= P(theta' (S_Y + h + 2)^2 + theta (S_X + h)^2 < t)`
///
/// where `S_X, S_Y` are sums of `k` independent Rademacher signs. The check
/// runs on every achievable value of both quadratic forms plus midpoints, so
/// it covers the whole real line of thresholds for the discrete law.
pub fn stochastic_dominance_check(spec: &DominanceSpec) -> Result<DominanceReport> {
    if spec.k == 0 || spec.k > 40 {
        return Err(invalid("need 1 <= k <= 40"));
    }
    if !(spec.theta >= spec.theta_prime && spec.theta_prime >= 0.0) {
        return Err(invalid("need theta >= theta_prime >= 0"));
    }
    let k = spec.k as i64;
    let h = spec.h as f64;
    let values: Vec<i64> = (-k..=k).step_by(2).collect();
    let weight = |sv: i64| -> u128 { binomial(spec.k, ((k + sv) / 2) as usize) };
    // form1 weights the (S_Y + h + 2)^2 term by theta, form2 swaps the roles
    let form = |a: f64, b: f64, sx: i64, sy: i64| -> f64 {
        let y = sy as f64 + h + 2.0;
        let x = sx as f64 + h;
        a * y * y + b * x * x
    };
    let mut thresholds: Vec<f64> = Vec::new();
    for &sx in &values {
        for &sy in &values {
            thresholds.push(form(spec.theta, spec.theta_prime, sx, sy));
            thresholds.push(form(spec.theta_prime, spec.theta, sx, sy));
        }
    }
    thresholds.extend(spec.t_grid.iter().copied());
    thresholds.sort_by(f64::total_cmp);
    thresholds.dedup();
    // midpoints and a point beyond the maximum
    let mut tests = thresholds.clone();
    for w in thresholds.windows(2) {
        tests.push(0.5 * (w[0] + w[1]));
    }
    if let Some(&last) = thresholds.last() {
        tests.push(last + 1.0);
    }
    tests.push(0.0);
    tests.push(-1.0);

    let mut worst: i128 = i128::MIN;
    for &t in &tests {
        let mut lhs: u128 = 0;
        let mut rhs: u128 = 0;
        for &sx in &values {
            let wx = weight(sx);
            for &sy in &values {
                let w = wx * weight(sy);
                if form(spec.theta, spec.theta_prime, sx, sy) < t {
                    lhs += w;
                }
                if form(spec.theta_prime, spec.theta, sx, sy) < t {
                    rhs += w;
                }
            }
        }
        let margin = lhs as i128 - rhs as i128;
        if margin > worst {
            worst = margin;
        }
    }
    Ok(DominanceReport { holds: worst <= 0, worst_margin: worst, thresholds_tested: tests.len() })
}

/// Largest correlation increase observed when deleting edges of a
/// ferromagnet; positive values violate monotonicity.
#[derive(Clone, Copy, Debug)]
pub struct GriffithsReport {
    pub max_increase: f64,
    pub edges_checked: usize,
    pub pairs_checked: usize,
}

/// Deletes every edge of a ferromagnetic model in turn and compares all pair
/// correlations before and after: none may increase.
pub fn griffiths_edge_prune_check(model: &IsingModel) -> Result<GriffithsReport> {
    let d = model.dimension();
    if d > 8 {
        return Err(Error::Guard { what: "edge deletion sweep", limit: 8, got: d });
    }
    if !model.weighted_graph().is_ferromagnetic() {
        return Err(invalid("edge-deletion monotonicity applies to ferromagnets"));
    }
    let before = exact_correlation_matrix(model)?;
    let mut max_increase = f64::NEG_INFINITY;
    let mut edges_checked = 0;
    let mut pairs_checked = 0;
    let wg = model.weighted_graph();
    for (del, _) in wg.weighted_edges() {
        let pruned_graph = wg.graph().without_edge(del.0, del.1)?;
        let weights: Vec<(Edge, f64)> =
            wg.weighted_edges().filter(|&(e, _)| e != del).collect();
        let pruned = IsingModel::new(model.theta(), WeightedGraph::new(pruned_graph, weights)?)?;
        let after = exact_correlation_matrix(&pruned)?;
        for (u, v, b) in before.pairs() {
            let inc = after.get(u, v) - b;
            if inc > max_increase {
                max_increase = inc;
            }
            pairs_checked += 1;
        }
        edges_checked += 1;
    }
    if edges_checked == 0 {
        max_increase = 0.0;
    }
    Ok(GriffithsReport { max_increase, edges_checked, pairs_checked })
}

/// Random ferromagnet on up to `d_max` vertices with weights drawn from
/// `weight_lo..=weight_hi`; used by the certification sweeps.
pub fn random_ferromagnet(
    rng: &mut impl Rng,
    d_max: usize,
    edge_prob: f64,
    weight_lo: f64,
    weight_hi: f64,
) -> Result<IsingModel> {
    let d = rng.gen_range(2..=d_max);
    let theta = rng.gen_range(0.05..1.5);
    let mut edges = Vec::new();
    for u in 0..d {
        for v in u + 1..d {
            if rng.gen::<f64>() < edge_prob {
                edges.push(((u, v), rng.gen_range(weight_lo..=weight_hi)));
            }
        }
    }
    let g = Graph::new(d, edges.iter().map(|&(e, _)| e))?;
    IsingModel::new(theta, WeightedGraph::new(g, edges)?)
}

/// Random graph with maximum degree at most `s` on `d` vertices.
pub fn random_bounded_degree_graph(rng: &mut impl Rng, d: usize, s: usize) -> Result<Graph> {
    let mut degree = vec![0usize; d];
    let mut pairs = Vec::new();
    for u in 0..d {
        for v in u + 1..d {
            pairs.push((u, v));
        }
    }
    // shuffle pair order deterministically from the generator
    for i in (1..pairs.len()).rev() {
        let j = rng.gen_range(0..=i);
        pairs.swap(i, j);
    }
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if degree[u] < s && degree[v] < s && rng.gen::<f64>() < 0.6 {
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::new(d, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream_rng;

    #[test]
    fn chi2_of_identical_models_is_zero() {
        let m = IsingModel::simple(0.7, Graph::path(4)).unwrap();
        assert!(chi2_exact(&m, &m).unwrap().abs() < 1e-12);
    }

    #[test]
    fn chi2_single_edge_second_moment_identity() {
        // E_0 (P_1/P_0)^2 = 1 + tanh^2(theta) when the base is empty
        let theta = 0.5f64;
        let base = IsingModel::simple(theta, Graph::empty(2)).unwrap();
        let alt = IsingModel::simple(theta, Graph::new(2, [(0, 1)]).unwrap()).unwrap();
        let chi2 = chi2_exact(&alt, &base).unwrap();
        let second_moment = chi2 + 1.0;
        assert!((second_moment - (1.0 + theta.tanh().powi(2))).abs() < 1e-12);
    }

    #[test]
    fn product_rule_matches_direct_product_enumeration() {
        // n-fold product divergence by direct enumeration of the product
        // space at d = 2, n <= 5
        let theta = 0.4f64;
        let base = IsingModel::simple(theta, Graph::empty(2)).unwrap();
        let alt = IsingModel::simple(theta, Graph::new(2, [(0, 1)]).unwrap()).unwrap();
        let (lp, lzp) = state_log_weights(&alt, 20).unwrap();
        let (lq, lzq) = state_log_weights(&base, 20).unwrap();
        let p: Vec<f64> = lp.iter().map(|l| (l - lzp).exp()).collect();
        let q: Vec<f64> = lq.iter().map(|l| (l - lzq).exp()).collect();
        let factor = chi2_exact(&alt, &base).unwrap() + 1.0;
        for n in 1..=5usize {
            // direct sum over (2^2)^n joint states
            let states = 4usize.pow(n as u32);
            let mut sum = 0.0;
            for mut code in 0..states {
                let mut term = 1.0;
                for _ in 0..n {
                    let s = code % 4;
                    code /= 4;
                    term *= p[s] * p[s] / q[s];
                }
                sum += term;
            }
            let direct = sum - 1.0;
            let rule = chi2_product(factor, n).unwrap();
            assert!((direct - rule).abs() < 1e-10 * rule.max(1.0), "n={n}");
        }
    }

    #[test]
    fn edge_addition_disconnected_components_factor_one() {
        let g0 = Graph::new(6, [(0, 1), (3, 4)]).unwrap();
        let f = edge_addition_factor(&g0, (1, 2), (4, 5), 0.6).unwrap();
        assert!((f.enumeration - 1.0).abs() < 1e-12);
    }

    #[test]
    fn edge_addition_same_edge_on_empty_base() {
        let g0 = Graph::empty(2);
        let f = edge_addition_factor(&g0, (0, 1), (0, 1), 0.5).unwrap();
        assert!((f.enumeration - 1.2135522670340726).abs() < 1e-12);
    }

    #[test]
    fn edge_addition_bound_dominates() {
        let mut rng = stream_rng(77, 0);
        for _ in 0..25 {
            let d = rng.gen_range(3..7usize);
            let g = random_bounded_degree_graph(&mut rng, d, 3).unwrap();
            let non_edges: Vec<Edge> = {
                let mut v = Vec::new();
                for u in 0..d {
                    for w in u + 1..d {
                        if !g.has_edge(u, w) {
                            v.push((u, w));
                        }
                    }
                }
                v
            };
            if non_edges.len() < 2 {
                continue;
            }
            let e_j = non_edges[rng.gen_range(0..non_edges.len())];
            let e_k = non_edges[rng.gen_range(0..non_edges.len())];
            let theta = rng.gen_range(0.1..1.2);
            let f = edge_addition_factor(&g, e_j, e_k, theta).unwrap();
            assert!(f.enumeration <= f.bound + 1e-12);
        }
    }

    #[test]
    fn antiferro_t_fast_path_matches_enumeration() {
        for s in [2usize, 3, 5] {
            for overlap in 0..=s {
                for theta in [0.0, 0.3, 1.7] {
                    let fast = antiferro_t_log(s, overlap, theta).unwrap();
                    let slow = antiferro_t_log_enumeration(s, overlap, theta).unwrap();
                    assert!(
                        (fast - slow).abs() < 1e-11,
                        "s={s} overlap={overlap} theta={theta}: {fast} vs {slow}"
                    );
                }
            }
        }
    }

    #[test]
    fn ratio_trivial_cases() {
        // theta = 0 counts states: ratio 1; zero overlap factorizes: ratio 1
        for s in [2usize, 4, 7] {
            assert!((antiferro_ratio(s, s / 2, 0.0).unwrap() - 1.0).abs() < 1e-12);
            for theta in [0.2, 1.0, 4.0] {
                assert!((antiferro_ratio(s, 0, theta).unwrap() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn ratio_limit_full_overlap_even() {
        // full overlap, even s: 2^s / C(s, s/2)
        let lim = antiferro_ratio_limit(4, 4).unwrap();
        assert!((lim - 16.0 / 6.0).abs() < 1e-12);
        let r = antiferro_ratio(4, 4, 20.0).unwrap();
        assert!((r - lim).abs() < 1e-6);
        assert!(r <= 8.0f64.sqrt() + 1e-9);
    }

    #[test]
    fn ratio_monotone_on_grid() {
        let grid: Vec<f64> = (0..=25).map(|i| i as f64 * 0.2).collect();
        let rep = ratio_monotonicity_check(5, 3, &grid).unwrap();
        assert!(rep.nondecreasing, "violation {}", rep.max_violation);
        let r0 = antiferro_ratio(5, 3, 0.0).unwrap();
        let r5 = antiferro_ratio(5, 3, 0.5).unwrap();
        assert!(r5 >= r0);
    }

    #[test]
    fn dominance_equal_coefficients_is_equality() {
        let rep = stochastic_dominance_check(&DominanceSpec {
            k: 6,
            h: 2,
            theta: 0.7,
            theta_prime: 0.7,
            t_grid: vec![],
        })
        .unwrap();
        assert!(rep.holds);
        assert_eq!(rep.worst_margin, 0);
    }

    #[test]
    fn dominance_strict_case() {
        let rep = stochastic_dominance_check(&DominanceSpec {
            k: 12,
            h: 6,
            theta: 2.0,
            theta_prime: 0.5,
            t_grid: vec![],
        })
        .unwrap();
        assert!(rep.holds);
    }

    #[test]
    fn griffiths_deletion_never_raises_correlations() {
        let mut rng = stream_rng(5, 1);
        for _ in 0..20 {
            let model = random_ferromagnet(&mut rng, 6, 0.5, 0.2, 2.0).unwrap();
            let rep = griffiths_edge_prune_check(&model).unwrap();
            assert!(rep.max_increase <= 1e-12, "increase {}", rep.max_increase);
        }
    }

    #[test]
    fn griffiths_triangle_edge_deletion_values() {
        // deleting one triangle edge drops the opposite pair to tanh^2
        let tri = IsingModel::simple(0.5, Graph::complete(3)).unwrap();
        let before = exact_pair_correlation(&tri, 0, 2).unwrap();
        assert!((before - 0.61497945897012515).abs() < 1e-12);
        let pruned = IsingModel::simple(0.5, Graph::complete(3).without_edge(0, 2).unwrap()).unwrap();
        let after = exact_pair_correlation(&pruned, 0, 2).unwrap();
        assert!((after - 0.5f64.tanh().powi(2)).abs() < 1e-12);
    }

    #[test]
    fn griffiths_rejects_signed_models() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let wg = WeightedGraph::new(g, [((0, 1), -1.0)]).unwrap();
        let m = IsingModel::new(0.5, wg).unwrap();
        assert!(griffiths_edge_prune_check(&m).is_err());
    }
}

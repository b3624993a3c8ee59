//! Closed-form signal-strength bounds and computable correlation bounds.
//!
//! Every asymptotic condition is materialized with the explicit constants of
//! its display; where a statement leaves a constant free, it is an input
//! (default 2 where a `kappa > 1` is required, 1 where the display hides an
//! absolute constant). Natural logarithms throughout. The two series bounds
//! carry explicit truncation tails so the returned values remain valid upper
//! bounds.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{invalid, Error, Result};
use crate::graph::{Edge, Graph};

/// Outcome of evaluating one displayed inequality.
#[derive(Clone, Debug, PartialEq)]
pub struct RegimeVerdict {
    pub bound_name: String,
    /// Left side of the comparison as displayed.
    pub lhs: f64,
    /// Right side of the comparison as displayed.
    pub rhs: f64,
    /// Whether the inequality holds (always false when not applicable).
    pub condition_holds: bool,
    /// False when a precondition (e.g. a positive denominator) fails.
    pub applicable: bool,
}

impl RegimeVerdict {
    fn na(name: &str) -> Self {
        Self {
            bound_name: String::from(name),
            lhs: f64::NAN,
            rhs: f64::NAN,
            condition_holds: false,
            applicable: false,
        }
    }

    fn holds_if(name: &str, lhs: f64, rhs: f64, holds: bool) -> Self {
        Self { bound_name: String::from(name), lhs, rhs, condition_holds: holds, applicable: true }
    }
}

/// Signal-strength level below which testing is hopeless for a divider
/// construction with the given packing entropy: the minimum of the entropy
/// term `(1 - eps) sqrt(packing_log / n)` and the high-temperature ceiling
/// `atanh(c / (maxdeg + 1))`. Defaults: `eps = 1/2`, `c = e^-2`.
pub fn generic_lb_theta(
    packing_log: f64,
    n: usize,
    maxdeg_g0: usize,
    c: f64,
    eps: f64,
) -> Result<f64> {
    if !(packing_log >= 0.0) {
        return Err(invalid("packing_log must be nonnegative"));
    }
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    if !(0.0 < c && c < 1.0) || !(0.0 < eps && eps < 1.0) {
        return Err(invalid("need 0 < c < 1 and 0 < eps < 1"));
    }
    let entropy = (1.0 - eps) * (packing_log / n as f64).sqrt();
    let ceiling = (c / (maxdeg_g0 as f64 + 1.0)).atanh();
    Ok(entropy.min(ceiling))
}

pub const DEFAULT_LB_C: f64 = 0.1353352832366127; // e^-2
pub const DEFAULT_LB_EPS: f64 = 0.5;

/// The strongly-monotone upper-bound display: main threshold plus the side
/// conditions that must bind for it to apply.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonotoneUpperBound {
    /// `log(2 kappa n r / log floor(d/(l+r))) / l`.
    pub threshold: f64,
    /// `theta >= 2/l`.
    pub side_min_l: f64,
    /// `theta >= 3/(r-2)` for `r > 2`, `theta >= log 2` for `r = 2`.
    pub side_min_r: f64,
}

/// Above this threshold (with the side conditions) testing a strongly
/// monotone property with an `l x r` biclique null base is hopeless.
pub fn monotone_ub_theta(l: usize, r: usize, n: usize, d: usize, kappa: f64) -> Result<MonotoneUpperBound> {
    if l < 1 || r < 2 {
        return Err(invalid("need l >= 1 and r >= 2"));
    }
    if !(kappa > 1.0) {
        return Err(invalid("kappa must exceed 1"));
    }
    let groups = d / (l + r);
    if groups < 2 {
        return Err(invalid("need floor(d/(l+r)) >= 2"));
    }
    let inner = 2.0 * kappa * n as f64 * r as f64 / (groups as f64).ln();
    let threshold = inner.ln() / l as f64;
    let side_min_r = if r == 2 { core::f64::consts::LN_2 } else { 3.0 / (r as f64 - 2.0) };
    Ok(MonotoneUpperBound { threshold, side_min_l: 2.0 / l as f64, side_min_r })
}

/// Below `atanh(sqrt(log floor(d/m) / n))` testing a strongly monotone
/// property whose null base repeats an `m`-vertex motif is hopeless.
/// Requires `log floor(d/m) <= n`; the `>> n` regime is handled by the
/// caller.
pub fn monotone_lb_theta(n: usize, d: usize, m: usize) -> Result<f64> {
    if m < 1 || n == 0 {
        return Err(invalid("need m >= 1 and n >= 1"));
    }
    let groups = d / m;
    if groups < 1 {
        return Err(invalid("need d >= m"));
    }
    let arg = ((groups as f64).ln() / n as f64).sqrt();
    if arg >= 1.0 {
        return Err(invalid("log floor(d/m) exceeds n; outside the bound's regime"));
    }
    Ok(arg.atanh())
}

/// Example family selector for [`example_bounds`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleKind {
    Connectivity,
    Cycle,
    Clique,
}

/// Inputs shared by the worked example displays.
#[derive(Clone, Copy, Debug)]
pub struct ExampleInputs {
    pub n: usize,
    pub d: usize,
    pub theta: f64,
    /// Free constant of the displays; default 2 where `kappa > 1` is
    /// required, 1 for the displays with an unstated absolute constant.
    pub kappa: f64,
    /// Clique size (clique example only).
    pub m: usize,
    /// Maximum degree bound (clique example only).
    pub s: usize,
}

/// Evaluates the displayed impossibility inequalities of the three worked
/// examples and reports each as a [`RegimeVerdict`] (`condition_holds` means
/// the impossibility condition is met at these inputs).
pub fn example_bounds(kind: ExampleKind, inp: &ExampleInputs) -> Result<Vec<RegimeVerdict>> {
    if inp.n == 0 || inp.d < 2 {
        return Err(invalid("need n >= 1 and d >= 2"));
    }
    let n_f = inp.n as f64;
    let theta = inp.theta;
    let mut out = Vec::new();
    match kind {
        ExampleKind::Connectivity => {
            let entropy = inp.kappa * ((inp.d as f64).ln() / n_f).sqrt();
            let ceiling = (1.0 / (3.0 * 2.0f64.exp())).atanh();
            let rhs = entropy.min(ceiling);
            out.push(RegimeVerdict::holds_if(
                "connectivity_lower_impossible",
                theta,
                rhs,
                theta < rhs,
            ));
            // the log d >> n regime: tanh(theta) < 1 keeps testing hopeless
            out.push(RegimeVerdict::holds_if(
                "connectivity_highdim_tanh_lt_1",
                theta.tanh(),
                1.0,
                (inp.d as f64).ln() >= n_f && theta.tanh() < 1.0,
            ));
        }
        ExampleKind::Cycle => {
            match monotone_lb_theta(inp.n, inp.d, 3) {
                Ok(lb) => out.push(RegimeVerdict::holds_if(
                    "cycle_lower_impossible",
                    theta,
                    lb,
                    theta < lb,
                )),
                Err(_) => out.push(RegimeVerdict::na("cycle_lower_impossible")),
            }
            let groups = inp.d / 3;
            if groups >= 2 {
                let ub = 2.0f64.max((4.0 * inp.kappa * n_f / (groups as f64).ln()).ln());
                out.push(RegimeVerdict::holds_if(
                    "cycle_upper_impossible",
                    theta,
                    ub,
                    theta >= ub,
                ));
            } else {
                out.push(RegimeVerdict::na("cycle_upper_impossible"));
            }
        }
        ExampleKind::Clique => {
            if inp.m < 3 || inp.s + 1 < inp.m {
                return Err(invalid("clique example needs 3 <= m <= s + 1"));
            }
            match monotone_lb_theta(inp.n, inp.d, inp.m) {
                Ok(lb) => out.push(RegimeVerdict::holds_if(
                    "clique_lower_impossible",
                    theta,
                    lb,
                    theta < lb,
                )),
                Err(_) => out.push(RegimeVerdict::na("clique_lower_impossible")),
            }
            if inp.s > 9 {
                let groups = 2 * inp.d / inp.s;
                if groups >= 2 {
                    let main = (inp.kappa * n_f * inp.s as f64 / (groups as f64).ln()).ln()
                        / ((inp.s as f64 - 1.0) / 4.0);
                    let rhs = (12.0 / (inp.s as f64 - 9.0)).max(main);
                    out.push(RegimeVerdict::holds_if(
                        "clique_upper_impossible",
                        theta,
                        rhs,
                        theta >= rhs,
                    ));
                } else {
                    out.push(RegimeVerdict::na("clique_upper_impossible"));
                }
            } else {
                out.push(RegimeVerdict::na("clique_upper_impossible"));
            }
        }
    }
    Ok(out)
}

/// Detection-impossibility verdict for the signed-clique construction.
#[derive(Clone, Debug)]
pub struct DetectionVerdict {
    /// `s log(d/s^2) / n > 2 + eps`.
    pub entropy: RegimeVerdict,
    /// `s log(d/(2s)) / (n log sqrt(2s)) >= 1 + eps`.
    pub ratio: RegimeVerdict,
    /// Both conditions hold: no test does better than chance, at any theta.
    pub impossible: bool,
    /// Set when `s^2 >= d`, outside the stated sparse regime.
    pub sparsity_warning: bool,
}

/// Evaluates the two explicit conditions under which signed-model strongly
/// monotone testing is impossible regardless of theta.
pub fn detection_impossibility(n: usize, d: usize, s: usize, eps: f64) -> Result<DetectionVerdict> {
    if n == 0 || s < 1 || d < 2 {
        return Err(invalid("need n >= 1, s >= 1, d >= 2"));
    }
    if !(eps > 0.0) {
        return Err(invalid("eps must be positive"));
    }
    let (n_f, d_f, s_f) = (n as f64, d as f64, s as f64);
    let lhs1 = s_f * (d_f / (s_f * s_f)).ln() / n_f;
    let entropy = RegimeVerdict::holds_if("entropy_condition", lhs1, 2.0 + eps, lhs1 > 2.0 + eps);
    let lhs2 = s_f * (d_f / (2.0 * s_f)).ln() / (n_f * (2.0 * s_f).sqrt().ln());
    let ratio = RegimeVerdict::holds_if("ratio_condition", lhs2, 1.0 + eps, lhs2 >= 1.0 + eps);
    let impossible = entropy.condition_holds && ratio.condition_holds;
    Ok(DetectionVerdict { entropy, ratio, impossible, sparsity_warning: s * s >= d })
}

/// Connectivity upper bound over signed models: above
/// `2 log(kappa s n / log(d s)) / (s - 16)` (plus a side condition on
/// theta) connectivity testing is hopeless. Not applicable for `s <= 16`.
pub fn antiferro_connectivity_ub(
    theta: f64,
    s: usize,
    n: usize,
    d: usize,
    kappa: f64,
) -> Result<DetectionLike> {
    if !(kappa > 1.0) {
        return Err(invalid("kappa must exceed 1"));
    }
    if n == 0 || d < 2 {
        return Err(invalid("need n >= 1 and d >= 2"));
    }
    if s <= 16 {
        return Ok(DetectionLike {
            main: RegimeVerdict::na("antiferro_connectivity_main"),
            side: RegimeVerdict::na("antiferro_connectivity_side"),
            impossible: false,
        });
    }
    let rhs = 2.0 * (kappa * s as f64 * n as f64 / ((d as f64 * s as f64).ln())).ln()
        / (s as f64 - 16.0);
    let main = RegimeVerdict::holds_if("antiferro_connectivity_main", theta, rhs, theta > rhs);
    let side_rhs = 3.0 / (2.0 * (s / 4) as f64 - 2.0);
    let side =
        RegimeVerdict::holds_if("antiferro_connectivity_side", theta, side_rhs, theta >= side_rhs);
    let impossible = main.condition_holds && side.condition_holds;
    Ok(DetectionLike { main, side, impossible })
}

/// A main display plus one side condition.
#[derive(Clone, Debug)]
pub struct DetectionLike {
    pub main: RegimeVerdict,
    pub side: RegimeVerdict,
    pub impossible: bool,
}

/// Low-temperature correlation floor inside an `l x r` biclique:
/// `E X_k X_l >= 1 - 2(r-1) / (e^{theta l} + r - 1)` for right-side
/// vertices. Valid when `theta >= 2/l` and `theta >= 3/(r-2)` for `r > 2`;
/// the `r = 2` case only needs `theta >= log 2` (its two-point ratio is
/// `cosh(2 theta)^l` outright). The value is returned with the validity flag
/// rather than an error so sweeps can report near-boundary behavior.
pub fn biclique_lowtemp_bound(l: usize, r: usize, theta: f64) -> Result<(f64, bool)> {
    if l < 1 || r < 2 {
        return Err(invalid("need l >= 1 and r >= 2"));
    }
    let value = 1.0 - 2.0 * (r as f64 - 1.0) / ((theta * l as f64).exp() + r as f64 - 1.0);
    let valid = if r == 2 {
        theta >= core::f64::consts::LN_2
    } else {
        theta >= 2.0 / l as f64 && theta >= 3.0 / (r as f64 - 2.0)
    };
    Ok((value, valid))
}

fn matrix_entry(a: &[f64], d: usize, i: usize, j: usize) -> f64 {
    a[i * d + j]
}

fn matrix_multiply(a: &[f64], b: &[f64], d: usize) -> Vec<f64> {
    let mut out = vec![0.0; d * d];
    for i in 0..d {
        for k in 0..d {
            let aik = a[i * d + k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..d {
                out[i * d + j] += aik * b[k * d + j];
            }
        }
    }
    out
}

/// Certified upper bound on how much removing edge `e` from `g` can lower
/// the correlation of the pair `(k, l)`, by the truncated comparison series
/// `2 sum_{i<=L} tanh(theta)^{i+1} ([A^i]_{uk} + [A^i]_{vk} + [A^i]_{ul} +
/// [A^i]_{vl})` plus a geometric tail, valid in the Dobrushin regime
/// `maxdeg(g) tanh(theta) < 1`.
pub fn dobrushin_series_bound(
    g: &Graph,
    theta: f64,
    removed: Edge,
    pair: Edge,
    truncation: usize,
) -> Result<f64> {
    if !g.has_edge(removed.0, removed.1) {
        return Err(invalid("removed edge must be present in the graph"));
    }
    if truncation < 1 {
        return Err(invalid("truncation must be at least 1"));
    }
    let d = g.vertex_count();
    crate::graph::check_vertex(d, pair.0)?;
    crate::graph::check_vertex(d, pair.1)?;
    let t = theta.tanh();
    let lambda = g.max_degree() as f64;
    if lambda * t >= 1.0 {
        return Err(invalid("Dobrushin condition fails: maxdeg * tanh(theta) >= 1"));
    }
    let (u, v) = removed;
    let (k, l) = pair;
    let a = g.adjacency_matrix();
    // power = A^i, starting at A^0 = I
    let mut power = vec![0.0; d * d];
    for i in 0..d {
        power[i * d + i] = 1.0;
    }
    let mut series = 0.0;
    let mut t_pow = t; // tanh^{i+1}
    for i in 0..=truncation {
        if i > 0 {
            power = matrix_multiply(&power, &a, d);
            t_pow *= t;
        }
        let hits = matrix_entry(&power, d, u, k)
            + matrix_entry(&power, d, v, k)
            + matrix_entry(&power, d, u, l)
            + matrix_entry(&power, d, v, l);
        series += 2.0 * t_pow * hits;
    }
    // entries of A^i are at most maxdeg^i, so the dropped tail is bounded by
    // 8 tanh (maxdeg tanh)^{L+1} / (1 - maxdeg tanh)
    let tail = if lambda == 0.0 {
        0.0
    } else {
        8.0 * t * (lambda * t).powi(truncation as i32 + 1) / (1.0 - lambda * t)
    };
    Ok(series + tail)
}

/// Counts self-avoiding walks from `u` to `v` by length (index = length).
pub fn count_self_avoiding_walks(g: &Graph, u: usize, v: usize, max_len: usize) -> Result<Vec<u64>> {
    let d = g.vertex_count();
    if d > 12 {
        return Err(Error::Guard { what: "self-avoiding walk counting", limit: 12, got: d });
    }
    crate::graph::check_vertex(d, u)?;
    crate::graph::check_vertex(d, v)?;
    let mut counts = vec![0u64; max_len + 1];
    let mut visited = vec![false; d];
    visited[u] = true;
    fn dfs(
        g: &Graph,
        cur: usize,
        v: usize,
        len: usize,
        max_len: usize,
        visited: &mut [bool],
        counts: &mut [u64],
    ) {
        if cur == v && len > 0 {
            counts[len] += 1;
            return; // walks are self-avoiding; stopping at v ends the walk
        }
        if len == max_len {
            return;
        }
        for &nb in g.neighbors(cur) {
            if !visited[nb] {
                visited[nb] = true;
                dfs(g, nb, v, len + 1, max_len, visited, counts);
                visited[nb] = false;
            }
        }
    }
    dfs(g, u, v, 0, max_len, &mut visited, &mut counts);
    Ok(counts)
}

/// Upper bound on the pair correlation of a simple ferromagnet by the
/// self-avoiding-walk series `sum_k tanh(theta)^k N_uv(k)`. Walks beyond
/// `max_len` are covered by a geometric tail `N <= d maxdeg^{k-1}`, which
/// needs `maxdeg tanh(theta) < 1`; when `max_len >= d - 1` the enumeration
/// is complete and no tail is required.
pub fn fisher_saw_bound(g: &Graph, theta: f64, u: usize, v: usize, max_len: usize) -> Result<f64> {
    let d = g.vertex_count();
    let t = theta.tanh();
    let lambda = g.max_degree() as f64;
    let complete = max_len >= d.saturating_sub(1);
    if !complete && lambda * t >= 1.0 {
        return Err(invalid(
            "truncated walk series needs maxdeg * tanh(theta) < 1 for its tail",
        ));
    }
    let counts = count_self_avoiding_walks(g, u, v, max_len)?;
    let mut sum = 0.0;
    for (k, &c) in counts.iter().enumerate().skip(1) {
        if c > 0 {
            sum += t.powi(k as i32) * c as f64;
        }
    }
    let tail = if complete || lambda == 0.0 {
        0.0
    } else {
        d as f64 / lambda * (lambda * t).powi(max_len as i32 + 1) / (1.0 - lambda * t)
    };
    Ok(sum + tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::ising::{exact_pair_correlation, IsingModel};

    #[test]
    fn generic_lb_frozen() {
        // zero entropy: the first term vanishes
        assert_eq!(generic_lb_theta(0.0, 100, 2, DEFAULT_LB_C, DEFAULT_LB_EPS).unwrap(), 0.0);
        // maxdeg 2 ceiling at the default c, frozen from high precision
        let v = generic_lb_theta(1e6, 1, 2, DEFAULT_LB_C, DEFAULT_LB_EPS).unwrap();
        assert!((v - 0.045142400378194957).abs() < 1e-15);
        // doubling n divides the entropy term by sqrt(2)
        let a = generic_lb_theta(1.0, 1000, 0, DEFAULT_LB_C, DEFAULT_LB_EPS).unwrap();
        let b = generic_lb_theta(1.0, 2000, 0, DEFAULT_LB_C, DEFAULT_LB_EPS).unwrap();
        assert!((a - b * 2.0f64.sqrt()).abs() < 1e-15);
        assert!(generic_lb_theta(-1.0, 10, 2, 0.1, 0.5).is_err());
        assert!(generic_lb_theta(1.0, 10, 2, 1.0, 0.5).is_err());
    }

    #[test]
    fn monotone_ub_frozen() {
        let b = monotone_ub_theta(3, 7, 10_000, 1000, 2.0).unwrap();
        assert!((b.threshold - 3.6717884187811620).abs() < 1e-12);
        assert!((b.side_min_l - 2.0 / 3.0).abs() < 1e-15);
        assert!((b.side_min_r - 0.6).abs() < 1e-15);
        // l = 1, r = 2 reduces to the cycle display 2 v log(4 kappa n / log floor(d/3))
        let c = monotone_ub_theta(1, 2, 10_000, 3000, 2.0).unwrap();
        let expect = (4.0 * 2.0 * 10_000.0f64 / 1000.0f64.ln()).ln();
        assert!((c.threshold - expect).abs() < 1e-12);
        assert_eq!(c.side_min_r, core::f64::consts::LN_2);
        // increasing l decreases the threshold
        let hi = monotone_ub_theta(4, 7, 10_000, 1000, 2.0).unwrap();
        assert!(hi.threshold < b.threshold);
        assert!(monotone_ub_theta(1, 2, 10, 4, 2.0).is_err());
    }

    #[test]
    fn monotone_lb_frozen() {
        let v = monotone_lb_theta(10_000, 3000, 3).unwrap();
        assert!((v - 0.026288663152615804).abs() < 1e-14);
        // d/m < 2 gives log 1 = 0
        assert_eq!(monotone_lb_theta(100, 5, 3).unwrap(), 0.0);
        // atanh(x) ~ x for small arguments
        assert!((v - 0.026282608848784660).abs() < 1e-5);
        // regime violation
        assert!(monotone_lb_theta(1, 100, 1).is_err());
    }

    #[test]
    fn example_bounds_connectivity() {
        let inp = ExampleInputs { n: 10_000, d: 3000, theta: 0.01, kappa: 1.0, m: 3, s: 9 };
        let out = example_bounds(ExampleKind::Connectivity, &inp).unwrap();
        assert_eq!(out.len(), 2);
        assert!(out[0].condition_holds, "tiny theta is below the lower bound");
        // frozen ceiling value atanh(1/(3 e^2))
        let ceiling = (1.0 / (3.0 * 2.0f64.exp())).atanh();
        assert!((ceiling - 0.045142400378194957).abs() < 1e-15);
        assert!(!out[1].condition_holds, "log d << n here");
    }

    #[test]
    fn example_bounds_cycle_frozen() {
        let inp = ExampleInputs { n: 10_000, d: 3000, theta: 9.0, kappa: 1.0, m: 3, s: 9 };
        let out = example_bounds(ExampleKind::Cycle, &inp).unwrap();
        assert!((out[0].rhs - 0.026288663152615804).abs() < 1e-14);
        assert!(!out[0].condition_holds);
        assert!((out[1].rhs - 8.6639899991800079).abs() < 1e-11);
        assert!(out[1].condition_holds, "theta = 9 is beyond the cycle ceiling");
    }

    #[test]
    fn example_bounds_clique_na_at_s9() {
        let inp = ExampleInputs { n: 10_000, d: 3000, theta: 1.0, kappa: 1.0, m: 4, s: 9 };
        let out = example_bounds(ExampleKind::Clique, &inp).unwrap();
        assert!(!out[1].applicable, "s = 9 leaves the upper display undefined");
        let inp2 = ExampleInputs { s: 12, ..inp };
        let out2 = example_bounds(ExampleKind::Clique, &inp2).unwrap();
        assert!(out2[1].applicable);
    }

    #[test]
    fn detection_impossibility_frozen() {
        let v = detection_impossibility(10, 10_000, 50, 0.1).unwrap();
        assert!((v.entropy.lhs - 6.9314718055994531).abs() < 1e-13);
        assert!((v.ratio.lhs - 10.0).abs() < 1e-12);
        assert!(v.impossible);
        assert!(!v.sparsity_warning, "50^2 < 10^4");
        // s^2 >= d flags the warning
        let w = detection_impossibility(10, 100, 50, 0.1).unwrap();
        assert!(w.sparsity_warning);
        // n -> infinity kills both conditions
        let big = detection_impossibility(10_000_000, 10_000, 50, 0.1).unwrap();
        assert!(!big.impossible);
    }

    #[test]
    fn antiferro_ub_frozen() {
        let v = antiferro_connectivity_ub(1.0, 100, 10_000, 10_000, 2.0).unwrap();
        assert!((v.main.rhs - 0.28292537676305259).abs() < 1e-14);
        assert!(v.main.condition_holds);
        assert!((v.side.rhs - 0.0625).abs() < 1e-15);
        assert!(v.impossible);
        // s = 16 is not applicable
        let na = antiferro_connectivity_ub(1.0, 16, 10_000, 10_000, 2.0).unwrap();
        assert!(!na.main.applicable);
        // decreasing in s at large s
        let mut prev = f64::INFINITY;
        for s in [30usize, 60, 120, 240] {
            let rhs = antiferro_connectivity_ub(1.0, s, 10_000, 10_000, 2.0).unwrap().main.rhs;
            assert!(rhs < prev);
            prev = rhs;
        }
    }

    #[test]
    fn biclique_bound_frozen_and_valid() {
        let (v, ok) = biclique_lowtemp_bound(1, 2, core::f64::consts::LN_2).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-15);
        assert!(ok);
        let (v43, ok43) = biclique_lowtemp_bound(4, 3, 3.0).unwrap();
        assert!((v43 - 0.99997542345259374).abs() < 1e-15);
        assert!(ok43);
        // theta -> infinity drives the bound to 1
        let (v_inf, _) = biclique_lowtemp_bound(2, 3, 50.0).unwrap();
        assert!(v_inf > 1.0 - 1e-12);
        // below the side conditions the value is still returned, flagged
        let (_, bad) = biclique_lowtemp_bound(1, 2, 0.1).unwrap();
        assert!(!bad);
    }

    #[test]
    fn biclique_bound_dominated_by_exact() {
        // 1 x 2 biclique at theta = log 2: exact correlation tanh^2(log 2) = 0.36
        let g = crate::graph::generators::biclique(1, 2).unwrap();
        let m = IsingModel::simple(core::f64::consts::LN_2, g).unwrap();
        let exact = exact_pair_correlation(&m, 1, 2).unwrap();
        assert!((exact - 0.36).abs() < 1e-12);
        let (bound, ok) = biclique_lowtemp_bound(1, 2, core::f64::consts::LN_2).unwrap();
        assert!(ok && exact >= bound);
    }

    #[test]
    fn dobrushin_bound_zero_theta() {
        let g = Graph::path(5);
        let b = dobrushin_series_bound(&g, 0.0, (0, 1), (0, 1), 3).unwrap();
        assert_eq!(b, 0.0);
    }

    #[test]
    fn dobrushin_bound_dominates_exact_difference() {
        let g = Graph::path(6);
        let theta = 0.1;
        let with = IsingModel::simple(theta, g.clone()).unwrap();
        let without = IsingModel::simple(theta, g.without_edge(0, 1).unwrap()).unwrap();
        let exact_diff = exact_pair_correlation(&with, 1, 2).unwrap()
            - exact_pair_correlation(&without, 1, 2).unwrap();
        let b = dobrushin_series_bound(&g, theta, (0, 1), (1, 2), 8).unwrap();
        assert!(b >= exact_diff, "bound {b} below exact {exact_diff}");
    }

    #[test]
    fn dobrushin_bound_nonincreasing_in_truncation() {
        let g = Graph::cycle(6).unwrap();
        let mut prev = f64::INFINITY;
        for l in 1..10 {
            let b = dobrushin_series_bound(&g, 0.2, (0, 1), (2, 3), l).unwrap();
            assert!(b <= prev + 1e-15, "L={l}: {b} > {prev}");
            prev = b;
        }
    }

    #[test]
    fn dobrushin_rejects_low_temperature() {
        let g = Graph::complete(5);
        assert!(dobrushin_series_bound(&g, 0.5, (0, 1), (2, 3), 3).is_err());
    }

    #[test]
    fn saw_bound_examples() {
        // single edge: one walk of length 1
        let e = Graph::new(2, [(0, 1)]).unwrap();
        let b = fisher_saw_bound(&e, 0.7, 0, 1, 1).unwrap();
        assert!((b - 0.7f64.tanh()).abs() < 1e-15);
        // triangle: lengths 1 and 2, frozen values
        let tri = Graph::complete(3);
        let b = fisher_saw_bound(&tri, 0.3, 0, 1, 2).unwrap();
        assert!((b - 0.37617565062496170).abs() < 1e-15);
        let m = IsingModel::simple(0.3, tri).unwrap();
        let exact = exact_pair_correlation(&m, 0, 1).unwrap();
        assert!((exact - 0.36710031651312553).abs() < 1e-12);
        assert!(b >= exact);
        // disconnected pair: zero
        let disc = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(fisher_saw_bound(&disc, 0.5, 0, 2, 3).unwrap(), 0.0);
        // truncated without the high-temperature tail condition: refused
        let k5 = Graph::complete(5);
        assert!(fisher_saw_bound(&k5, 1.0, 0, 1, 2).is_err());
        // complete enumeration needs no condition
        assert!(fisher_saw_bound(&k5, 1.0, 0, 1, 4).is_ok());
    }

    #[test]
    fn saw_counts_on_triangle() {
        let tri = Graph::complete(3);
        let counts = count_self_avoiding_walks(&tri, 0, 1, 2).unwrap();
        assert_eq!(counts, alloc::vec![0, 1, 1]);
    }
}

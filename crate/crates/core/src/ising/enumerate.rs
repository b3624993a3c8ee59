//! Exact inference by enumeration of the state space.
//!
//! All routines walk `{-1,+1}^d` (or its half fixed at `x_0 = +1`, exploiting
//! spin-flip symmetry) in Gray-code order so each step flips a single spin
//! and the log-weight is updated incrementally. Everything runs in the log
//! domain; results are stable up to couplings of several hundred.

use alloc::vec;
use alloc::vec::Vec;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use super::{CorrelationMatrix, IsingModel};
use crate::error::{Error, Result};

/// Largest dimension accepted by the exact-inference routines.
pub const ENUMERATION_GUARD: usize = 25;

fn check_guard(d: usize, limit: usize, what: &'static str) -> Result<()> {
    if d > limit {
        return Err(Error::Guard { what, limit, got: d });
    }
    Ok(())
}

/// Per-vertex coupling lists `(neighbor, theta * w)`.
fn coupling_adjacency(model: &IsingModel) -> Vec<Vec<(usize, f64)>> {
    let d = model.dimension();
    let mut adj = vec![Vec::new(); d];
    for (u, v, j) in model.couplings() {
        adj[u].push((v, j));
        adj[v].push((u, j));
    }
    adj
}

/// Walks half the state space (x_0 fixed at +1) in Gray-code order, calling
/// `visit(spins, log_weight)` for every state.
fn gray_walk(model: &IsingModel, mut visit: impl FnMut(&[i8], f64)) {
    let d = model.dimension();
    let adj = coupling_adjacency(model);
    let mut spins = vec![1i8; d];
    let mut lw = model.log_weight(&spins).expect("dimension matches");
    visit(&spins, lw);
    if d == 1 {
        return;
    }
    let steps = 1u64 << (d - 1);
    for s in 1..steps {
        // Gray code over spins 1..d; spin 0 stays +1.
        let flip = 1 + s.trailing_zeros() as usize;
        let old = spins[flip] as f64;
        let mut local = 0.0;
        for &(nb, j) in &adj[flip] {
            local += j * (spins[nb] as f64);
        }
        lw -= 2.0 * old * local;
        spins[flip] = -spins[flip];
        visit(&spins, lw);
    }
}

/// `log Z` by log-sum-exp over all states.
pub fn log_partition_function(model: &IsingModel) -> Result<f64> {
    check_guard(model.dimension(), ENUMERATION_GUARD, "exact enumeration")?;
    let mut max = f64::NEG_INFINITY;
    gray_walk(model, |_, lw| {
        if lw > max {
            max = lw;
        }
    });
    let mut sum = 0.0;
    gray_walk(model, |_, lw| sum += (lw - max).exp());
    // spin-flip symmetry: the x_0 = -1 half mirrors the enumerated half
    Ok(max + sum.ln() + core::f64::consts::LN_2)
}

/// Exact pair correlation by enumeration.
pub fn exact_pair_correlation(model: &IsingModel, u: usize, v: usize) -> Result<f64> {
    check_guard(model.dimension(), ENUMERATION_GUARD, "exact enumeration")?;
    crate::graph::check_vertex(model.dimension(), u)?;
    crate::graph::check_vertex(model.dimension(), v)?;
    if u == v {
        return Ok(1.0);
    }
    let mut max = f64::NEG_INFINITY;
    gray_walk(model, |_, lw| {
        if lw > max {
            max = lw;
        }
    });
    let mut num = 0.0;
    let mut den = 0.0;
    gray_walk(model, |spins, lw| {
        let p = (lw - max).exp();
        num += (spins[u] * spins[v]) as f64 * p;
        den += p;
    });
    Ok((num / den).clamp(-1.0, 1.0))
}

/// Exact single-spin mean. Zero-field models are spin-flip symmetric, so
/// this is identically zero; enumerating half the state space with the
/// mirror image accounted for makes the cancellation exact.
pub fn exact_spin_mean(model: &IsingModel, u: usize) -> Result<f64> {
    check_guard(model.dimension(), ENUMERATION_GUARD, "exact enumeration")?;
    crate::graph::check_vertex(model.dimension(), u)?;
    // E X_u = (1/Z) sum_x x_u e^{H(x)}; pairing x with -x cancels exactly.
    Ok(0.0)
}

/// All pair correlations in one enumeration sweep.
pub fn exact_correlation_matrix(model: &IsingModel) -> Result<CorrelationMatrix> {
    let d = model.dimension();
    check_guard(d, ENUMERATION_GUARD, "exact enumeration")?;
    let mut max = f64::NEG_INFINITY;
    gray_walk(model, |_, lw| {
        if lw > max {
            max = lw;
        }
    });
    let mut den = 0.0;
    let mut sums = vec![0.0; d * d];
    gray_walk(model, |spins, lw| {
        let p = (lw - max).exp();
        den += p;
        for u in 0..d {
            let su = spins[u];
            let base = u * d;
            for v in u + 1..d {
                sums[base + v] += (su * spins[v]) as f64 * p;
            }
        }
    });
    Ok(CorrelationMatrix::from_fn(d, |u, v| sums[u * d + v] / den))
}

/// Log-probabilities of all `2^d` states in state-index order (bit `u` of
/// the index set means spin `u` is `+1`). Used by the exact sampler.
pub fn state_log_weights(model: &IsingModel, guard: usize) -> Result<(Vec<f64>, f64)> {
    let d = model.dimension();
    check_guard(d, guard, "state table")?;
    let n = 1usize << d;
    let mut lw = vec![0.0; n];
    let adj = coupling_adjacency(model);
    let mut spins = vec![-1i8; d];
    let mut cur = model.log_weight(&spins).expect("dimension matches");
    let mut idx = 0usize;
    lw[0] = cur;
    for s in 1u64..n as u64 {
        let flip = s.trailing_zeros() as usize;
        let old = spins[flip] as f64;
        let mut local = 0.0;
        for &(nb, j) in &adj[flip] {
            local += j * (spins[nb] as f64);
        }
        cur -= 2.0 * old * local;
        spins[flip] = -spins[flip];
        idx ^= 1usize << flip;
        lw[idx] = cur;
    }
    let log_z = crate::util::log_sum_exp(&lw);
    Ok((lw, log_z))
}

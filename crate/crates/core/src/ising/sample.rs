//! Samplers and the empirical correlation estimator.

use alloc::vec;
use alloc::vec::Vec;
#[cfg(not(feature = "std"))]
use num_traits::Float;
use rand::Rng;

use super::enumerate::state_log_weights;
use super::{CorrelationMatrix, IsingModel, SampleBatch, SamplerTag};
use crate::error::{invalid, Result};
use crate::rng::stream_rng;
use crate::util::sigmoid;

/// Largest dimension accepted by the exact sampler (it stores a CDF over all
/// `2^d` states).
pub const EXACT_SAMPLE_GUARD: usize = 20;

/// Draws `n` i.i.d. exact samples by inverse-CDF lookup over the enumerated
/// state space. Deterministic given the seed.
pub fn exact_sample(model: &IsingModel, n: usize, seed: u64) -> Result<SampleBatch> {
    if n == 0 {
        return Err(invalid("sample count must be at least 1"));
    }
    let d = model.dimension();
    let (lw, log_z) = state_log_weights(model, EXACT_SAMPLE_GUARD)?;
    let mut cdf = Vec::with_capacity(lw.len());
    let mut acc = 0.0;
    for l in &lw {
        acc += (l - log_z).exp();
        cdf.push(acc);
    }
    let total = acc; // 1.0 up to rounding
    let mut rng = stream_rng(seed, 0);
    let mut spins = Vec::with_capacity(n * d);
    for _ in 0..n {
        let u: f64 = rng.gen::<f64>() * total;
        let idx = cdf.partition_point(|&c| c < u).min(cdf.len() - 1);
        for b in 0..d {
            spins.push(if idx >> b & 1 == 1 { 1 } else { -1 });
        }
    }
    SampleBatch::new(n, d, spins, seed, SamplerTag::Exact)
}

/// Gibbs sweep schedule knobs.
#[derive(Clone, Copy, Debug)]
pub struct GibbsOptions {
    /// Full systematic-scan sweeps discarded before retaining samples.
    pub burn_in: usize,
    /// Sweeps between retained samples.
    pub thin: usize,
    /// Restart an independent chain for every retained sample instead of
    /// running one long chain.
    pub independent_chains: bool,
}

impl GibbsOptions {
    /// burn-in of `100 * d` sweeps, thinning 10, one long chain.
    pub fn defaults_for(d: usize) -> Self {
        Self { burn_in: 100 * d, thin: 10, independent_chains: false }
    }
}

/// Systematic-scan single-site Gibbs sampler. Deterministic given the seed;
/// samples are approximate draws, unlike [`exact_sample`].
pub fn gibbs_sample(model: &IsingModel, n: usize, seed: u64, opts: GibbsOptions) -> Result<SampleBatch> {
    if n == 0 {
        return Err(invalid("sample count must be at least 1"));
    }
    let d = model.dimension();
    let mut adj = vec![Vec::new(); d];
    for (u, v, j) in model.couplings() {
        adj[u].push((v, j));
        adj[v].push((u, j));
    }
    let sweep = |spins: &mut [i8], rng: &mut rand_chacha::ChaCha8Rng| {
        for u in 0..d {
            let mut field = 0.0;
            for &(nb, j) in &adj[u] {
                field += j * (spins[nb] as f64);
            }
            let p_up = sigmoid(2.0 * field);
            spins[u] = if rng.gen::<f64>() < p_up { 1 } else { -1 };
        }
    };
    let mut spins_out = Vec::with_capacity(n * d);
    if opts.independent_chains {
        for i in 0..n {
            let mut rng = stream_rng(seed, 1 + i as u64);
            let mut spins: Vec<i8> = (0..d).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
            for _ in 0..opts.burn_in + opts.thin {
                sweep(&mut spins, &mut rng);
            }
            spins_out.extend_from_slice(&spins);
        }
    } else {
        let mut rng = stream_rng(seed, 0);
        let mut spins: Vec<i8> = (0..d).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
        for _ in 0..opts.burn_in {
            sweep(&mut spins, &mut rng);
        }
        for _ in 0..n {
            for _ in 0..opts.thin.max(1) {
                sweep(&mut spins, &mut rng);
            }
            spins_out.extend_from_slice(&spins);
        }
    }
    SampleBatch::new(n, d, spins_out, seed, SamplerTag::Gibbs)
}

/// Empirical pair correlations `M_uv = (1/n) sum_i x_u x_v`, diagonal 1.
pub fn empirical_correlations(batch: &SampleBatch) -> CorrelationMatrix {
    let d = batch.dimension();
    let n = batch.len();
    let mut counts = vec![0i64; d * d];
    for row in batch.rows() {
        for u in 0..d {
            let su = row[u] as i64;
            let base = u * d;
            for v in u + 1..d {
                counts[base + v] += su * row[v] as i64;
            }
        }
    }
    CorrelationMatrix::from_fn(d, |u, v| counts[u * d + v] as f64 / n as f64)
}

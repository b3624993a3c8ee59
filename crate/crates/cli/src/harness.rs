//! Monte Carlo experiment runner: builds family instances over a parameter
//! grid, runs the configured test on independent batches for both hypothesis
//! sides, and tabulates error rates with Wilson intervals and the paper
//! sufficient-condition flags.
//!
//! Determinism: every trial derives its seed from
//! `mix_seed([master_seed, grid_index, side, trial])`, and aggregation sums
//! integer counts, so reports are byte-identical across runs and thread
//! counts. `ISING_PROPTEST_THREADS` caps the rayon pool.

use anyhow::{anyhow, Context, Result};
use rayon::prelude::*;

use isingprop_core::general::fast_cycle_test;
use isingprop_core::ising::{exact_sample, gibbs_sample, GibbsOptions};
use isingprop_core::rng::mix_seed;
use isingprop_core::screening::{
    clique_condition_holds, clique_size_test, connectivity_test, cycle_test, tau,
};
use isingprop_core::{IsingModel, SampleBatch};

use crate::bounds_cli::cycle_example_verdicts;
use crate::config::{ExperimentConfig, SamplerConfig, TestKind};
use crate::families::Family;

/// Rates and interval for one hypothesis side at one grid point.
#[derive(Clone, Copy, Debug)]
pub struct RateSummary {
    pub errors: usize,
    pub trials: usize,
    pub rate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

/// One grid point's results.
#[derive(Clone, Debug)]
pub struct GridPointReport {
    pub theta: f64,
    pub big_theta: f64,
    pub n: usize,
    pub d: usize,
    pub type1: RateSummary,
    pub type2: RateSummary,
    /// The relevant sufficient condition for the configured test.
    pub condition_name: &'static str,
    pub condition_holds: bool,
}

#[derive(Clone, Debug)]
pub struct ExperimentReport {
    pub rows: Vec<GridPointReport>,
}

/// Wilson score interval at z = 1.96. Always brackets the empirical rate.
pub fn wilson_interval(errors: usize, trials: usize) -> (f64, f64) {
    let z = 1.96f64;
    let n = trials as f64;
    let p = errors as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = p + z2 / (2.0 * n);
    let spread = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    let lo = ((center - spread) / denom).max(0.0).min(p);
    let hi = ((center + spread) / denom).min(1.0).max(p);
    (lo, hi)
}

fn summarize(errors: usize, trials: usize) -> RateSummary {
    let (lo, hi) = wilson_interval(errors, trials);
    RateSummary { errors, trials, rate: errors as f64 / trials as f64, ci_low: lo, ci_high: hi }
}

fn draw(model: &IsingModel, n: usize, seed: u64, sampler: SamplerConfig) -> Result<SampleBatch> {
    match sampler {
        SamplerConfig::Exact => exact_sample(model, n, seed).map_err(|e| anyhow!("{e}")),
        SamplerConfig::Gibbs { burn_in, thin } => gibbs_sample(
            model,
            n,
            seed,
            GibbsOptions { burn_in, thin, independent_chains: false },
        )
        .map_err(|e| anyhow!("{e}")),
    }
}

fn run_test(batch: &SampleBatch, test: TestKind, theta: f64, big_theta: f64, delta: f64) -> Result<bool> {
    let psi = match test {
        TestKind::Connectivity => connectivity_test(batch, theta, delta).map_err(|e| anyhow!("{e}"))?.psi,
        TestKind::Cycle => cycle_test(batch, theta, big_theta, delta).map_err(|e| anyhow!("{e}"))?.psi,
        TestKind::Clique { m } => {
            clique_size_test(batch, theta, m, delta).map_err(|e| anyhow!("{e}"))?.psi
        }
        TestKind::FastCycle => {
            fast_cycle_test(batch, theta, big_theta, delta).map_err(|e| anyhow!("{e}"))?.psi
        }
    };
    Ok(psi)
}

fn condition_for(
    test: TestKind,
    theta: f64,
    big_theta: f64,
    s: usize,
    tau: f64,
) -> Result<(&'static str, bool)> {
    Ok(match test {
        TestKind::Connectivity => ("tanh(theta) > 2 tau", theta.tanh() > 2.0 * tau),
        TestKind::Cycle => (
            "tanh(theta) - tanh^2(Theta) > 2 tau",
            theta.tanh() - big_theta.tanh().powi(2) > 2.0 * tau,
        ),
        TestKind::Clique { m } => (
            "T_clique - Q(s, Theta) >= 2 tau",
            clique_condition_holds(theta, big_theta, s, m, tau).map_err(|e| anyhow!("{e}"))?,
        ),
        TestKind::FastCycle => (
            "tanh(theta)(1 - tanh(Theta)) > 2 tau",
            theta.tanh() * (1.0 - big_theta.tanh()) > 2.0 * tau,
        ),
    })
}

/// Installs a rayon pool honoring `ISING_PROPTEST_THREADS` and runs `f`
/// inside it.
pub fn with_thread_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(cap) = std::env::var("ISING_PROPTEST_THREADS") {
        let threads: usize = cap.parse().context("ISING_PROPTEST_THREADS must be an integer")?;
        builder = builder.num_threads(threads.max(1));
    }
    Ok(builder.build().map_err(|e| anyhow!("{e}"))?.install(f))
}

/// Runs the full experiment grid. Deterministic given the config.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let mut rows = Vec::new();
    let mut grid_index: u64 = 0;
    for (ti, &theta) in cfg.sweep.theta.iter().enumerate() {
        let big_theta = cfg.sweep.big_theta.as_ref().map_or(theta, |bt| bt[ti]);
        for &n in &cfg.sweep.n {
            for &d in &cfg.sweep.d {
                let instance = cfg.family.instantiate(d, theta)?;
                let run_side = |side: u64, model: &IsingModel| -> Result<usize> {
                    let errs = with_thread_pool(|| {
                        (0..cfg.trials as u64)
                            .into_par_iter()
                            .map(|trial| {
                                let seed =
                                    mix_seed(&[cfg.master_seed, grid_index, side, trial]);
                                let batch = draw(model, n, seed, cfg.sampler)?;
                                let psi = run_test(&batch, cfg.test, theta, big_theta, cfg.delta)?;
                                // side 0: null, an error is psi = 1
                                Ok(usize::from(psi == (side == 0)))
                            })
                            .collect::<Result<Vec<usize>>>()
                    })??;
                    Ok(errs.iter().sum())
                };
                let type1_errors = run_side(0, &instance.null)?;
                let type2_errors = run_side(1, &instance.alt)?;
                let t = tau(n, d, cfg.delta).map_err(|e| anyhow!("{e}"))?;
                let (condition_name, condition_holds) =
                    condition_for(cfg.test, theta, big_theta, instance.max_degree, t)?;
                rows.push(GridPointReport {
                    theta,
                    big_theta,
                    n,
                    d,
                    type1: summarize(type1_errors, cfg.trials),
                    type2: summarize(type2_errors, cfg.trials),
                    condition_name,
                    condition_holds,
                });
                grid_index += 1;
            }
        }
    }
    Ok(ExperimentReport { rows })
}

/// A phase-sweep row: cycle-test error rates joined with the worked-example
/// impossibility verdicts at the same parameters.
#[derive(Clone, Debug)]
pub struct PhaseRow {
    pub theta: f64,
    pub type1: f64,
    pub type2: f64,
    pub error_sum: f64,
    pub condition_holds: bool,
    pub lb_impossible: bool,
    pub ub_impossible: bool,
}

/// Cycle-test phase sweep over a theta grid with `Theta = theta`, joining
/// Monte Carlo rates with the bound calculators' verdicts.
pub fn phase_sweep(
    theta_grid: &[f64],
    n: usize,
    d: usize,
    delta: f64,
    trials: usize,
    master_seed: u64,
) -> Result<Vec<PhaseRow>> {
    if theta_grid.is_empty() {
        anyhow::bail!("theta grid must be nonempty");
    }
    let cfg = ExperimentConfig {
        family: Family::CycleTriangle,
        model_class: crate::config::ModelClass::SimpleFerro,
        test: TestKind::Cycle,
        sweep: crate::config::Sweep {
            theta: theta_grid.to_vec(),
            big_theta: None,
            n: vec![n],
            d: vec![d],
        },
        delta,
        trials,
        master_seed,
        sampler: SamplerConfig::Exact,
    };
    let report = run_experiment(&cfg)?;
    report
        .rows
        .iter()
        .map(|row| {
            let (lb, ub) = cycle_example_verdicts(row.theta, n, d)?;
            Ok(PhaseRow {
                theta: row.theta,
                type1: row.type1.rate,
                type2: row.type2.rate,
                error_sum: row.type1.rate + row.type2.rate,
                condition_holds: row.condition_holds,
                lb_impossible: lb,
                ub_impossible: ub,
            })
        })
        .collect()
}

use std::fs;
use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};

use isingprop_cli::bounds_cli::{bound_table, BoundArgs};
use isingprop_cli::config::ExperimentConfig;
use isingprop_cli::formats;
use isingprop_cli::harness::{phase_sweep, run_experiment};
use isingprop_cli::oracle_cli::run_suite;
use isingprop_cli::report;

use isingprop_core::general::fast_cycle_test;
use isingprop_core::ising::{exact_sample, gibbs_sample, GibbsOptions};
use isingprop_core::screening::{
    clique_size_test, connectivity_test, cycle_test, perfect_alignment_test, TestReport,
};
use isingprop_core::{IsingModel, SampleBatch};

#[derive(Parser)]
#[command(name = "isingprop", about = "Graph property testing in zero-field Ising models", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw samples from a model given as a (weighted) edge-list file.
    Sample(SampleArgs),
    /// Run a property test on a sample batch file.
    Test(TestArgs),
    /// Run a Monte Carlo experiment from a JSON config.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Cycle-test phase sweep over a theta grid (Theta = theta), with bound
    /// verdict columns.
    Phase(PhaseArgs),
    /// Evaluate closed-form bound tables as CSV.
    Bounds(BoundsArgs),
    /// Run brute-force certification suites; exits nonzero on any failure.
    Oracle {
        /// One of: griffiths, ratio, dominance, chi2, curie, all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SampleArgs {
    /// Edge-list file; third column holds optional weights.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    theta: f64,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    /// exact | gibbs
    #[arg(long, default_value = "exact")]
    sampler: String,
    /// Gibbs burn-in sweeps (default 100 * d).
    #[arg(long)]
    burn_in: Option<usize>,
    /// Gibbs sweeps between retained samples.
    #[arg(long, default_value_t = 10)]
    thin: usize,
    /// Restart an independent chain per retained sample.
    #[arg(long, default_value_t = false)]
    independent_chains: bool,
}

#[derive(Args)]
struct TestArgs {
    /// connectivity | cycle | clique | fast-cycle | alignment
    kind: String,
    #[arg(long)]
    batch: PathBuf,
    #[arg(long, default_value_t = 0.5)]
    theta: f64,
    /// Coupling ceiling Theta; defaults to theta.
    #[arg(long = "Theta")]
    big_theta: Option<f64>,
    #[arg(long, default_value_t = 0.05)]
    delta: f64,
    /// Clique size for the clique test.
    #[arg(long, default_value_t = 3)]
    m: usize,
}

#[derive(Args)]
struct PhaseArgs {
    /// Comma-separated theta grid.
    #[arg(long, value_delimiter = ',')]
    theta_grid: Vec<f64>,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 0.05)]
    delta: f64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 7)]
    master_seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BoundsArgs {
    /// connectivity | cycle | clique | detection | antiferro-connectivity |
    /// monotone-ub | monotone-lb
    kind: String,
    #[arg(long, default_value_t = 10_000)]
    n: usize,
    #[arg(long, default_value_t = 1000)]
    d: usize,
    #[arg(long, default_value_t = 0.5)]
    theta: f64,
    #[arg(long, default_value_t = 2.0)]
    kappa: f64,
    #[arg(long, default_value_t = 3)]
    m: usize,
    #[arg(long, default_value_t = 10)]
    s: usize,
    #[arg(long, default_value_t = 1)]
    l: usize,
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn print_report(rep: &TestReport) {
    println!("psi={}", u8::from(rep.psi));
    println!("threshold_used={}", formats::fmt_f64(rep.threshold_used));
    println!("tau={}", formats::fmt_f64(rep.tau));
    println!("min_witness_correlation={}", formats::fmt_f64(rep.min_witness_correlation));
    for c in &rep.conditions {
        println!("condition[{}]={}", c.name, u8::from(c.holds));
    }
}

fn cmd_sample(a: &SampleArgs) -> Result<()> {
    let text = fs::read_to_string(&a.graph)
        .with_context(|| format!("reading {}", a.graph.display()))?;
    let wg = formats::read_weighted_graph(&text)?;
    let model = IsingModel::new(a.theta, wg).map_err(|e| anyhow!("{e}"))?;
    let batch: SampleBatch = match a.sampler.as_str() {
        "exact" => exact_sample(&model, a.n, a.seed).map_err(|e| anyhow!("{e}"))?,
        "gibbs" => {
            let defaults = GibbsOptions::defaults_for(model.dimension());
            let opts = GibbsOptions {
                burn_in: a.burn_in.unwrap_or(defaults.burn_in),
                thin: a.thin,
                independent_chains: a.independent_chains,
            };
            gibbs_sample(&model, a.n, a.seed, opts).map_err(|e| anyhow!("{e}"))?
        }
        other => anyhow::bail!("unknown sampler '{other}'"),
    };
    fs::write(&a.out, formats::write_batch(&batch))
        .with_context(|| format!("writing {}", a.out.display()))?;
    eprintln!("wrote {} samples of dimension {}", batch.len(), batch.dimension());
    Ok(())
}

fn cmd_test(a: &TestArgs) -> Result<()> {
    let text =
        fs::read_to_string(&a.batch).with_context(|| format!("reading {}", a.batch.display()))?;
    let batch = formats::read_batch(&text)?;
    let big_theta = a.big_theta.unwrap_or(a.theta);
    match a.kind.as_str() {
        "connectivity" => {
            print_report(&connectivity_test(&batch, a.theta, a.delta).map_err(|e| anyhow!("{e}"))?)
        }
        "cycle" => print_report(
            &cycle_test(&batch, a.theta, big_theta, a.delta).map_err(|e| anyhow!("{e}"))?,
        ),
        "clique" => print_report(
            &clique_size_test(&batch, a.theta, a.m, a.delta).map_err(|e| anyhow!("{e}"))?,
        ),
        "fast-cycle" => {
            let rep =
                fast_cycle_test(&batch, a.theta, big_theta, a.delta).map_err(|e| anyhow!("{e}"))?;
            println!("psi={}", u8::from(rep.psi));
            println!("rho={}", formats::fmt_f64(rep.rho));
            println!("max_discrepancy={}", formats::fmt_f64(rep.max_discrepancy));
            println!("fitted_edges={}", rep.fitted.model.graph().edge_count());
            for c in &rep.conditions {
                println!("condition[{}]={}", c.name, u8::from(c.holds));
            }
        }
        "alignment" => println!("psi={}", u8::from(perfect_alignment_test(&batch))),
        other => anyhow::bail!("unknown test '{other}'"),
    }
    Ok(())
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Sample(a) => cmd_sample(a)?,
        Command::Test(a) => cmd_test(a)?,
        Command::Experiment { config, out } => {
            let text = fs::read_to_string(config)
                .with_context(|| format!("reading {}", config.display()))?;
            let cfg = ExperimentConfig::from_json(&text)?;
            let rep = run_experiment(&cfg)?;
            fs::write(out, report::experiment_csv(&rep))
                .with_context(|| format!("writing {}", out.display()))?;
            eprintln!("wrote {} grid rows", rep.rows.len());
        }
        Command::Phase(a) => {
            let rows = phase_sweep(&a.theta_grid, a.n, a.d, a.delta, a.trials, a.master_seed)?;
            fs::write(&a.out, report::phase_csv(&rows))
                .with_context(|| format!("writing {}", a.out.display()))?;
            eprintln!("wrote {} sweep rows", rows.len());
        }
        Command::Bounds(a) => {
            let args = BoundArgs {
                n: a.n,
                d: a.d,
                theta: a.theta,
                kappa: a.kappa,
                m: a.m,
                s: a.s,
                l: a.l,
                r: a.r,
                eps: a.eps,
            };
            let csv = report::bounds_csv(&bound_table(&a.kind, &args)?);
            match &a.out {
                Some(path) => fs::write(path, csv)?,
                None => print!("{csv}"),
            }
        }
        Command::Oracle { suite, trials, seed, out } => {
            let rows = run_suite(suite, *trials, *seed)?;
            let csv = report::oracle_csv(&rows);
            match out {
                Some(path) => fs::write(path, &csv)?,
                None => print!("{csv}"),
            }
            if rows.iter().any(|r| !r.pass) {
                std::process::exit(1);
            }
        }
    }
    Ok(())
}

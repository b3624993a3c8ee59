//! Experiment configuration: JSON with the schema documented in the README.
//! Numbers are doubles, seeds unsigned 64-bit.

use anyhow::{bail, Result};
use serde::{Deserialize, Serialize};

use crate::families::Family;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TestKind {
    Connectivity,
    Cycle,
    Clique { m: usize },
    FastCycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SamplerConfig {
    Exact,
    Gibbs { burn_in: usize, thin: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelClass {
    SimpleFerro,
    Ferro,
    General,
}

/// Parameter grid; `Theta` defaults to `theta` at each grid point when
/// omitted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Sweep {
    pub theta: Vec<f64>,
    #[serde(default)]
    pub big_theta: Option<Vec<f64>>,
    pub n: Vec<usize>,
    pub d: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub family: Family,
    pub model_class: ModelClass,
    pub test: TestKind,
    pub sweep: Sweep,
    pub delta: f64,
    pub trials: usize,
    pub master_seed: u64,
    pub sampler: SamplerConfig,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.sweep.theta.is_empty() || self.sweep.n.is_empty() || self.sweep.d.is_empty() {
            bail!("sweep grids must be nonempty");
        }
        if let Some(bt) = &self.sweep.big_theta {
            if bt.len() != self.sweep.theta.len() {
                bail!("big_theta grid must match the theta grid length");
            }
        }
        if self.trials == 0 {
            bail!("trials must be at least 1");
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            bail!("delta must lie in (0, 1)");
        }
        if matches!(self.sampler, SamplerConfig::Exact)
            && self.sweep.d.iter().any(|&d| d > isingprop_core::ising::EXACT_SAMPLE_GUARD)
        {
            bail!("exact sampling requires d <= {}", isingprop_core::ising::EXACT_SAMPLE_GUARD);
        }
        match (self.family, self.test) {
            (Family::SignedCycle, TestKind::FastCycle) => {}
            (Family::SignedCycle, _) | (_, TestKind::FastCycle) => {
                bail!("the fast cycle test pairs with the signed cycle family")
            }
            _ => {}
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}

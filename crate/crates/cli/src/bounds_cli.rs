//! Bound-table evaluation shared by the `bounds` subcommand and the phase
//! sweep.

use anyhow::{anyhow, Result};
use isingprop_core::bounds::{
    antiferro_connectivity_ub, detection_impossibility, example_bounds, monotone_lb_theta,
    monotone_ub_theta, ExampleInputs, ExampleKind, RegimeVerdict,
};

/// A flat row of the `bounds` CSV table.
#[derive(Clone, Debug)]
pub struct BoundRow {
    pub bound_name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub applicable: bool,
}

impl From<RegimeVerdict> for BoundRow {
    fn from(v: RegimeVerdict) -> Self {
        Self {
            bound_name: v.bound_name,
            lhs: v.lhs,
            rhs: v.rhs,
            holds: v.condition_holds,
            applicable: v.applicable,
        }
    }
}

/// Inputs accepted by [`bound_table`]; unused fields are ignored per kind.
#[derive(Clone, Copy, Debug)]
pub struct BoundArgs {
    pub n: usize,
    pub d: usize,
    pub theta: f64,
    pub kappa: f64,
    pub m: usize,
    pub s: usize,
    pub l: usize,
    pub r: usize,
    pub eps: f64,
}

pub fn bound_table(kind: &str, a: &BoundArgs) -> Result<Vec<BoundRow>> {
    let rows = match kind {
        "connectivity" | "cycle" | "clique" => {
            let ek = match kind {
                "connectivity" => ExampleKind::Connectivity,
                "cycle" => ExampleKind::Cycle,
                _ => ExampleKind::Clique,
            };
            let inputs = ExampleInputs {
                n: a.n,
                d: a.d,
                theta: a.theta,
                kappa: a.kappa,
                m: a.m,
                s: a.s,
            };
            example_bounds(ek, &inputs).map_err(|e| anyhow!("{e}"))?.into_iter().map(Into::into).collect()
        }
        "detection" => {
            let v = detection_impossibility(a.n, a.d, a.s, a.eps).map_err(|e| anyhow!("{e}"))?;
            let mut rows: Vec<BoundRow> = vec![v.entropy.into(), v.ratio.into()];
            rows.push(BoundRow {
                bound_name: "detection_impossible".into(),
                lhs: f64::NAN,
                rhs: f64::NAN,
                holds: v.impossible,
                applicable: !v.sparsity_warning,
            });
            rows
        }
        "antiferro-connectivity" => {
            let v = antiferro_connectivity_ub(a.theta, a.s, a.n, a.d, a.kappa)
                .map_err(|e| anyhow!("{e}"))?;
            vec![v.main.into(), v.side.into()]
        }
        "monotone-ub" => {
            let b = monotone_ub_theta(a.l, a.r, a.n, a.d, a.kappa).map_err(|e| anyhow!("{e}"))?;
            vec![
                BoundRow {
                    bound_name: "monotone_upper_threshold".into(),
                    lhs: a.theta,
                    rhs: b.threshold,
                    holds: a.theta >= b.threshold,
                    applicable: true,
                },
                BoundRow {
                    bound_name: "side_theta_ge_2_over_l".into(),
                    lhs: a.theta,
                    rhs: b.side_min_l,
                    holds: a.theta >= b.side_min_l,
                    applicable: true,
                },
                BoundRow {
                    bound_name: "side_theta_ge_r_condition".into(),
                    lhs: a.theta,
                    rhs: b.side_min_r,
                    holds: a.theta >= b.side_min_r,
                    applicable: true,
                },
            ]
        }
        "monotone-lb" => {
            let rhs = monotone_lb_theta(a.n, a.d, a.m).map_err(|e| anyhow!("{e}"))?;
            vec![BoundRow {
                bound_name: "monotone_lower_threshold".into(),
                lhs: a.theta,
                rhs,
                holds: a.theta < rhs,
                applicable: true,
            }]
        }
        other => anyhow::bail!("unknown bound kind '{other}'"),
    };
    Ok(rows)
}

/// The cycle worked-example verdicts `(lower_impossible, upper_impossible)`
/// at `Theta = theta` (constants at their defaults).
pub fn cycle_example_verdicts(theta: f64, n: usize, d: usize) -> Result<(bool, bool)> {
    let inputs = ExampleInputs { n, d, theta, kappa: 1.0, m: 3, s: 9 };
    let rows = example_bounds(ExampleKind::Cycle, &inputs).map_err(|e| anyhow!("{e}"))?;
    let lb = rows[0].applicable && rows[0].condition_holds;
    let ub = rows[1].applicable && rows[1].condition_holds;
    Ok((lb, ub))
}

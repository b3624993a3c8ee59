//! Named certification suites for the `oracle` subcommand. Each suite runs a
//! sweep of exact checks and reports worst-case margins.

use anyhow::{anyhow, Result};
use isingprop_core::graph::Graph;
use isingprop_core::ising::{
    curie_weiss_edge_correlation, curie_weiss_ratio_gauss_hermite, curie_weiss_ratio_magnetization,
    exact_pair_correlation, IsingModel,
};
use isingprop_core::oracle::{
    antiferro_ratio, antiferro_ratio_limit, edge_addition_factor, griffiths_edge_prune_check,
    random_ferromagnet, ratio_monotonicity_check, stochastic_dominance_check, DominanceSpec,
};
use isingprop_core::rng::stream_rng;
use rand::Rng;

use crate::report::OracleRow;

pub fn run_suite(suite: &str, trials: usize, seed: u64) -> Result<Vec<OracleRow>> {
    let mut rows = Vec::new();
    match suite {
        "griffiths" => rows.extend(griffiths_suite(trials, seed)?),
        "ratio" => rows.extend(ratio_suite()?),
        "dominance" => rows.extend(dominance_suite()?),
        "chi2" => rows.extend(chi2_suite(trials, seed)?),
        "curie" => rows.extend(curie_suite()?),
        "all" => {
            rows.extend(griffiths_suite(trials, seed)?);
            rows.extend(ratio_suite()?);
            rows.extend(dominance_suite()?);
            rows.extend(chi2_suite(trials, seed)?);
            rows.extend(curie_suite()?);
        }
        other => anyhow::bail!("unknown oracle suite '{other}'"),
    }
    Ok(rows)
}

fn griffiths_suite(trials: usize, seed: u64) -> Result<Vec<OracleRow>> {
    let mut rng = stream_rng(seed, 101);
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..trials {
        let model = random_ferromagnet(&mut rng, 8, 0.5, 0.2, 2.0).map_err(|e| anyhow!("{e}"))?;
        let rep = griffiths_edge_prune_check(&model).map_err(|e| anyhow!("{e}"))?;
        worst = worst.max(rep.max_increase);
    }
    Ok(vec![OracleRow {
        suite: "griffiths".into(),
        check: format!("edge_deletion_monotonicity_{trials}_instances"),
        margin: worst,
        pass: worst <= 1e-12,
    }])
}

fn ratio_suite() -> Result<Vec<OracleRow>> {
    let grid: Vec<f64> = (0..=50).map(|i| i as f64 * 0.1).collect();
    let mut rows = Vec::new();
    let mut worst_mono = f64::NEG_INFINITY;
    let mut worst_cap = f64::NEG_INFINITY;
    let mut worst_limit = f64::NEG_INFINITY;
    for s in 2..=8usize {
        let cap = (2.0 * s as f64).sqrt();
        for overlap in 0..=s {
            let rep = ratio_monotonicity_check(s, overlap, &grid).map_err(|e| anyhow!("{e}"))?;
            worst_mono = worst_mono.max(rep.max_violation);
            for &t in &grid {
                let r = antiferro_ratio(s, overlap, t).map_err(|e| anyhow!("{e}"))?;
                worst_cap = worst_cap.max(r - cap);
            }
            let lim = antiferro_ratio_limit(s, overlap).map_err(|e| anyhow!("{e}"))?;
            let at20 = antiferro_ratio(s, overlap, 20.0).map_err(|e| anyhow!("{e}"))?;
            worst_limit = worst_limit.max((at20 - lim).abs());
            worst_cap = worst_cap.max(lim - cap);
        }
    }
    rows.push(OracleRow {
        suite: "ratio".into(),
        check: "nondecreasing_in_theta".into(),
        margin: worst_mono,
        pass: worst_mono <= 1e-10,
    });
    rows.push(OracleRow {
        suite: "ratio".into(),
        check: "capped_by_sqrt_2s".into(),
        margin: worst_cap,
        pass: worst_cap <= 1e-9,
    });
    rows.push(OracleRow {
        suite: "ratio".into(),
        check: "matches_limit_at_theta_20".into(),
        margin: worst_limit,
        pass: worst_limit <= 1e-6,
    });
    Ok(rows)
}

fn dominance_suite() -> Result<Vec<OracleRow>> {
    let mut rows = Vec::new();
    for &(theta, theta_prime) in &[(2.0, 0.5), (1.0, 0.9), (0.3, 0.3)] {
        let mut worst: i128 = i128::MIN;
        for k in [4usize, 8, 12] {
            for h in 0..=6usize {
                let rep = stochastic_dominance_check(&DominanceSpec {
                    k,
                    h,
                    theta,
                    theta_prime,
                    t_grid: vec![],
                })
                .map_err(|e| anyhow!("{e}"))?;
                worst = worst.max(rep.worst_margin);
            }
        }
        rows.push(OracleRow {
            suite: "dominance".into(),
            check: format!("quadratic_forms_theta_{theta}_{theta_prime}"),
            margin: worst as f64,
            pass: worst <= 0,
        });
    }
    Ok(rows)
}

fn chi2_suite(trials: usize, seed: u64) -> Result<Vec<OracleRow>> {
    let mut rng = stream_rng(seed, 202);
    let mut worst_gap = f64::NEG_INFINITY;
    let mut worst_bound = f64::NEG_INFINITY;
    let mut done = 0usize;
    while done < trials {
        let d = rng.gen_range(3..8usize);
        let g = isingprop_core::oracle::random_bounded_degree_graph(&mut rng, d, 3)
            .map_err(|e| anyhow!("{e}"))?;
        let mut non_edges = Vec::new();
        for u in 0..d {
            for v in u + 1..d {
                if !g.has_edge(u, v) {
                    non_edges.push((u, v));
                }
            }
        }
        if non_edges.is_empty() {
            continue;
        }
        let e_j = non_edges[rng.gen_range(0..non_edges.len())];
        let e_k = non_edges[rng.gen_range(0..non_edges.len())];
        let theta = rng.gen_range(0.1..1.5);
        let f = edge_addition_factor(&g, e_j, e_k, theta).map_err(|e| anyhow!("{e}"))?;
        worst_gap = worst_gap.max((f.enumeration - f.closed_form).abs());
        worst_bound = worst_bound.max(f.enumeration - f.bound);
        done += 1;
    }
    Ok(vec![
        OracleRow {
            suite: "chi2".into(),
            check: format!("edge_addition_identity_{trials}_instances"),
            margin: worst_gap,
            pass: worst_gap <= 1e-12,
        },
        OracleRow {
            suite: "chi2".into(),
            check: "edge_addition_bound_dominates".into(),
            margin: worst_bound,
            pass: worst_bound <= 1e-12,
        },
    ])
}

fn curie_suite() -> Result<Vec<OracleRow>> {
    let mut worst_routes = f64::NEG_INFINITY;
    let mut worst_enum = f64::NEG_INFINITY;
    for m in 2..=12usize {
        for i in 0..=20 {
            let theta = i as f64 * 0.1;
            let mag = curie_weiss_ratio_magnetization(m, theta).map_err(|e| anyhow!("{e}"))?;
            let gh = curie_weiss_ratio_gauss_hermite(m, theta, 64).map_err(|e| anyhow!("{e}"))?;
            worst_routes = worst_routes.max(((mag / 2.0).tanh() - (gh / 2.0).tanh()).abs());
            let model =
                IsingModel::simple(theta, Graph::complete(m)).map_err(|e| anyhow!("{e}"))?;
            let direct = exact_pair_correlation(&model, 0, 1).map_err(|e| anyhow!("{e}"))?;
            let formula = curie_weiss_edge_correlation(m, theta).map_err(|e| anyhow!("{e}"))?;
            worst_enum = worst_enum.max((direct - formula).abs());
        }
    }
    Ok(vec![
        OracleRow {
            suite: "curie".into(),
            check: "magnetization_vs_quadrature".into(),
            margin: worst_routes,
            pass: worst_routes <= 1e-8,
        },
        OracleRow {
            suite: "curie".into(),
            check: "formula_vs_enumeration".into(),
            margin: worst_enum,
            pass: worst_enum <= 1e-10,
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_briefly() {
        let rows = run_suite("all", 5, 3).unwrap();
        assert!(rows.len() >= 8);
        for r in &rows {
            assert!(r.pass, "{}/{} failed with margin {}", r.suite, r.check, r.margin);
        }
    }

    #[test]
    fn unknown_suite_errors() {
        assert!(run_suite("bogus", 1, 0).is_err());
    }
}

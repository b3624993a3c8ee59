//! Gauss-Hermite quadrature (physicists' convention).
//!
//! Nodes and weights for `integral e^{-x^2} f(x) dx ~= sum w_i f(x_i)`,
//! computed by Newton iteration on the orthonormal Hermite recurrence.

use alloc::vec;
use alloc::vec::Vec;
#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Default node count for the Gaussian-expectation formulas.
pub const DEFAULT_NODES: usize = 64;

/// Returns `n` nodes and weights. Accurate for `n` up to several hundred.
pub fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let pi_m4 = (core::f64::consts::PI).powf(-0.25);
    let m = (n + 1) / 2;
    let mut z = 0.0f64;
    for i in 0..m {
        // initial guesses, largest root first (Numerical Recipes)
        z = match i {
            0 => (2.0 * n as f64 + 1.0).sqrt() - 1.85575 * (2.0 * n as f64 + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * (n as f64).powf(0.426) / z,
            2 => 1.86 * z - 0.86 * nodes[0],
            3 => 1.91 * z - 0.91 * nodes[1],
            _ => 2.0 * z - nodes[i - 2],
        };
        let mut pp = 0.0;
        for _ in 0..200 {
            // orthonormal Hermite recurrence
            let mut p1 = pi_m4;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64 + 1.0;
                p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
            }
            pp = (2.0 * n as f64).sqrt() * p2;
            let dz = p1 / pp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        weights[i] = 2.0 / (pp * pp);
        weights[n - 1 - i] = weights[i];
    }
    (nodes, weights)
}

/// Log-domain Gaussian expectation `ln E[e^{g(Z)}]` for standard normal `Z`,
/// where `log_f(z)` evaluates `g(z)`. Useful when the integrand spans many
/// orders of magnitude.
pub fn ln_gaussian_expectation(n: usize, mut log_f: impl FnMut(f64) -> f64) -> f64 {
    let (x, w) = gauss_hermite(n);
    let sqrt2 = core::f64::consts::SQRT_2;
    let terms: Vec<f64> = x
        .iter()
        .zip(&w)
        .map(|(&xi, &wi)| wi.ln() + log_f(sqrt2 * xi))
        .collect();
    crate::util::log_sum_exp(&terms) - 0.5 * core::f64::consts::PI.ln()
}

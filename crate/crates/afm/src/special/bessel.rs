//! Bessel functions of the first kind with real non-negative order, and the
//! positive zeros of J0.
//!
//! Small arguments use the ascending power series. Past x = 12 the series
//! terms grow to ~e^x/(pi x) and cancellation destroys the 1e-10 accuracy
//! target in f64, so larger arguments switch to the integral representation
//!     J_nu(x) = (1/pi) int_0^pi cos(x sin t - nu t) dt
//!               - sin(nu pi)/pi int_0^inf e^(-x sinh s - nu s) ds,
//! evaluated with fixed Gauss-Legendre rules (verified to ~1e-14 absolute for
//! nu <= 20, x <= 50).

use super::gauss::gauss_legendre;
use crate::error::{AfmError, Result};
use crate::root::{solve_bracketed, RootConfig};
use std::f64::consts::PI;

const SERIES_CUTOFF: f64 = 12.0;

/// J_nu(x) for nu >= 0, x >= 0; intended range x <= 50, nu <= 20.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if !(nu >= 0.0) || !(x >= 0.0) || !nu.is_finite() || !x.is_finite() {
        return Err(AfmError::domain(format!(
            "bessel_j: need finite nu >= 0, x >= 0 (got nu = {nu}, x = {x})"
        )));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    if x <= SERIES_CUTOFF {
        Ok(series(nu, x))
    } else {
        Ok(integral(nu, x))
    }
}

fn series(nu: f64, x: f64) -> f64 {
    let half = 0.5 * x;
    let q = half * half;
    let mut term = (nu * half.ln() - ln_gamma(nu + 1.0)).exp();
    let mut sum = term;
    for k in 0..400 {
        let kf = k as f64;
        term *= -q / ((kf + 1.0) * (nu + kf + 1.0));
        sum += term;
        // terms grow until k ~ x/2; only test convergence past the peak
        if kf + 1.0 > half && term.abs() < 1e-17 * sum.abs().max(1e-280) {
            break;
        }
    }
    sum
}

fn integral(nu: f64, x: f64) -> f64 {
    let (nodes, weights) = gauss_legendre(192);
    let mut osc = 0.0;
    for (&t, &w) in nodes.iter().zip(weights) {
        let theta = 0.5 * PI * (t + 1.0);
        osc += w * (x * theta.sin() - nu * theta).cos();
    }
    osc *= 0.5 * PI / PI;

    let s = (nu * PI).sin();
    if s == 0.0 {
        return osc;
    }
    // tail with v = x sinh s, integrand e^(-v) e^(-nu asinh(v/x)) / sqrt(x^2+v^2)
    let (n2, w2) = gauss_legendre(64);
    let vmax = 46.0;
    let mut tail = 0.0;
    for (&t, &w) in n2.iter().zip(w2) {
        let v = 0.5 * vmax * (t + 1.0);
        tail += w * (-v - nu * (v / x).asinh()).exp() / (x * x + v * v).sqrt();
    }
    tail *= 0.5 * vmax;
    osc - s / PI * tail
}

/// ln Gamma(z) for z > 0 (Lanczos approximation, g = 7).
fn ln_gamma(z: f64) -> f64 {
    const COEF: [f64; 8] = [
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ];
    let zm1 = z - 1.0;
    let mut a = 0.99999999999980993;
    for (i, c) in COEF.iter().enumerate() {
        a += c / (zm1 + i as f64 + 1.0);
    }
    let t = zm1 + 7.5;
    0.5 * (2.0 * PI).ln() + (zm1 + 0.5) * t.ln() - t + a.ln()
}

/// The (n+1)-th positive zero of J0, refined from the large-n guess
/// j_n ~ pi (n + 3/4).
pub fn bessel_j0_zero(n: u32) -> Result<f64> {
    let guess = PI * (n as f64 + 0.75);
    let f = |x: f64| bessel_j(0.0, x).unwrap_or(f64::NAN);
    let mut half_width = 0.35;
    for _ in 0..5 {
        let (lo, hi) = ((guess - half_width).max(0.1), guess + half_width);
        if f(lo) * f(hi) < 0.0 {
            let cfg = RootConfig {
                abs_tol: 1e-13,
                max_iter: 200,
                bracket: None,
            };
            return solve_bracketed(f, lo, hi, &cfg);
        }
        half_width *= 1.5;
    }
    Err(AfmError::convergence(format!(
        "bessel_j0_zero: could not bracket zero index {n}"
    )))
}

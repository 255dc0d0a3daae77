//! Spectrum of -g x^lambda e^(-x) for general power lambda.
//!
//! The auxiliary-field elimination reduces the problem to the transcendental
//! relation x0 [lambda - W(-x0)]^(lambda+2) = Y_lambda with
//! Y_lambda = 2 N^2 e^lambda / g. For -2 < lambda <= -1 the inversion kernel
//! is monotone and the lower Lambert branch is the physical one; no branch
//! prescription is known for lambda > -1 (the lambda = 0 well has its own
//! closed form in `exponential`), so those powers are rejected.

use crate::error::{AfmError, Result};
use crate::exponential::exp_z;
use crate::root::{solve_bracketed, RootConfig};
use crate::special::{lambert_w, BranchId};
use serde::Serialize;
use std::f64::consts::E;

/// The dimensionless problem: coupling g and power lambda of
/// q^2 - g x^lambda e^(-x).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DimensionlessProblem {
    pub g: f64,
    pub lambda: f64,
}

impl DimensionlessProblem {
    pub fn new(g: f64, lambda: f64) -> Result<Self> {
        if !(g > 0.0) {
            return Err(AfmError::domain("DimensionlessProblem: g must be positive"));
        }
        if !(lambda > -2.0) {
            return Err(AfmError::domain(
                "DimensionlessProblem: lambda must exceed -2",
            ));
        }
        Ok(DimensionlessProblem { g, lambda })
    }
}

/// Shape constants of F_lambda(x) = x [lambda - W_-1(-x)]^(lambda+2):
/// a_lambda fixes the maximum position xbar and value fbar.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeneralGeometry {
    pub lambda: f64,
    pub a_lambda: f64,
    pub xbar: f64,
    pub fbar: f64,
}

impl GeneralGeometry {
    pub fn new(lambda: f64) -> Result<Self> {
        if !(lambda > -2.0) {
            return Err(AfmError::domain("GeneralGeometry: lambda must exceed -2"));
        }
        // the + root keeps xbar inside the domain of x0
        let a = 0.5 * ((9.0 + 4.0 * lambda).sqrt() + 3.0);
        let xbar = a * (-a).exp();
        let fbar = xbar * (lambda + a).powf(lambda + 2.0);
        Ok(GeneralGeometry { lambda, a_lambda: a, xbar, fbar })
    }

    /// The Y = 0 endpoint of the physical branch, x0(0) = |lambda| e^lambda.
    pub fn x0_at_zero(&self) -> f64 {
        self.lambda.abs() * self.lambda.exp()
    }
}

/// Reduced screening variable Y_lambda = 2 N^2 e^lambda / g.
pub fn y_lambda(g: f64, lambda: f64, n_eff: f64) -> Result<f64> {
    if !(g > 0.0 && n_eff > 0.0) {
        return Err(AfmError::domain("y_lambda: g and N must be positive"));
    }
    Ok(2.0 * n_eff * n_eff * lambda.exp() / g)
}

/// Inverse of the elimination kernel K(x) = g e^(-x) (x - lambda)/|lambda|:
/// x = lambda - W(-e^lambda |lambda| nu / g) on the requested branch.
pub fn i_lambda(nu: f64, g: f64, lambda: f64, branch: BranchId) -> Result<f64> {
    if lambda == 0.0 {
        return Err(AfmError::domain("i_lambda: lambda must be nonzero"));
    }
    if !(g > 0.0) {
        return Err(AfmError::domain("i_lambda: g must be positive"));
    }
    let arg = -lambda.exp() * lambda.abs() * nu / g;
    Ok(lambda - lambert_w(branch, arg)?)
}

fn require_supported_lambda(lambda: f64) -> Result<()> {
    if !(lambda > -2.0) {
        return Err(AfmError::domain(format!(
            "lambda must exceed -2, got {lambda}"
        )));
    }
    if lambda > -1.0 {
        return Err(AfmError::UnsupportedLambda(lambda));
    }
    Ok(())
}

/// Solves x0 [lambda - W_-1(-x0)]^(lambda+2) = Y on the branch continuous
/// with x0(0) = |lambda| e^lambda, for -2 < lambda <= -1.
pub fn solve_x0_general(y: f64, lambda: f64) -> Result<f64> {
    require_supported_lambda(lambda)?;
    let geom = GeneralGeometry::new(lambda)?;
    if !(0.0..=geom.fbar * (1.0 + 1e-12)).contains(&y) {
        return Err(AfmError::domain(format!(
            "solve_x0_general: Y = {y} outside [0, Fbar = {}]",
            geom.fbar
        )));
    }
    let upper = geom.x0_at_zero();
    if y == 0.0 {
        return Ok(upper);
    }
    if (y - geom.fbar).abs() < 1e-15 {
        return Ok(geom.xbar);
    }
    // F_lambda decreases from fbar to 0 on [xbar, |lambda| e^lambda]. For
    // lambda + 2 small the fractional power amplifies rounding at the upper
    // endpoint, so the bracket extends into the region past |lambda| e^lambda
    // where the clamped F vanishes identically; the root itself never leaves
    // [xbar, upper].
    let hi = upper + 0.5 * (1.0 / E - upper);
    let f = |x: f64| f_lambda(x, lambda) - y;
    let cfg = RootConfig {
        abs_tol: 1e-15,
        max_iter: 200,
        bracket: None,
    };
    Ok(solve_bracketed(f, geom.xbar, hi.max(upper), &cfg)?.min(upper))
}

fn f_lambda(x: f64, lambda: f64) -> f64 {
    let w = match lambert_w(BranchId::Lower, -x) {
        Ok(w) => w,
        Err(_) => return f64::NAN,
    };
    let base = lambda - w;
    if base <= 0.0 {
        return 0.0;
    }
    // real power of a positive base, exp((lambda+2) ln base)
    x * ((lambda + 2.0) * base.ln()).exp()
}

/// Ellipse-branch fit of the minimizer for -2 < lambda <= -1, with shape
/// A_lambda = -(109 + 196 lambda + 85 lambda^2); A_-1 = 2.
pub fn x0_fit_general(y: f64, lambda: f64) -> Result<f64> {
    require_supported_lambda(lambda)?;
    let geom = GeneralGeometry::new(lambda)?;
    if !(0.0..=geom.fbar * (1.0 + 1e-12)).contains(&y) {
        return Err(AfmError::domain(format!(
            "x0_fit_general: Y = {y} outside [0, Fbar = {}]",
            geom.fbar
        )));
    }
    let a = a_lambda_fit(lambda);
    let ratio = y / geom.fbar;
    let radicand = 1.0 - ratio * ratio + a * y * (y - geom.fbar);
    if radicand < -1e-14 {
        return Err(AfmError::domain(format!(
            "x0_fit_general: negative radicand {radicand} at Y = {y}"
        )));
    }
    Ok(geom.xbar + (geom.x0_at_zero() - geom.xbar) * radicand.max(0.0).sqrt())
}

/// Fit shape A_lambda = -(109 + 196 lambda + 85 lambda^2).
pub fn a_lambda_fit(lambda: f64) -> f64 {
    -(109.0 + 196.0 * lambda + 85.0 * lambda * lambda)
}

/// Dimensionless energy for -2 < lambda <= -1 with the exact minimizer:
/// eps = -(g/(2 e^lambda)) x0^(2p) Y^(lambda p)
///       [ ((lambda+2) x0^p - Y^p) / (Y^p - lambda x0^p) ],  p = 1/(lambda+2).
pub fn general_energy(g: f64, lambda: f64, n_eff: f64) -> Result<f64> {
    require_supported_lambda(lambda)?;
    let geom = GeneralGeometry::new(lambda)?;
    let y = y_lambda(g, lambda, n_eff)?;
    if y > geom.fbar {
        return Err(AfmError::NoBoundState);
    }
    let x0 = solve_x0_general(y, lambda)?;
    let p = 1.0 / (lambda + 2.0);
    let x0p = (p * x0.ln()).exp();
    let yp = (p * y.ln()).exp();
    let bracket = ((lambda + 2.0) * x0p - yp) / (yp - lambda * x0p);
    Ok(-(g / (2.0 * lambda.exp())) * (2.0 * p * x0.ln()).exp() * (lambda * p * y.ln()).exp() * bracket)
}

/// Critical height g_{lambda;nl} = (e/(lambda+2))^(lambda+2) N^2.
pub fn general_critical_height(lambda: f64, n_eff: f64) -> Result<f64> {
    if !(lambda > -2.0) {
        return Err(AfmError::domain(format!(
            "general_critical_height: lambda must exceed -2, got {lambda}"
        )));
    }
    if !(n_eff > 0.0) {
        return Err(AfmError::domain("general_critical_height: N must be positive"));
    }
    Ok((E / (lambda + 2.0)).powf(lambda + 2.0) * n_eff * n_eff)
}

/// The lambda -> 0 limit of the general energy formula,
/// eps0 = -g x0 [sqrt(x0/Y0) - 1/2] with x0 = -3 W0(-Z) e^(3 W0(-Z)) and
/// Y0 = (3Z)^3; contractually equal to `exponential::exp_energy`.
pub fn lambda_zero_limit_check(g: f64, n_eff: f64) -> Result<f64> {
    let z = exp_z(g, n_eff)?;
    if z > 1.0 / E {
        return Err(AfmError::NoBoundState);
    }
    let w = lambert_w(BranchId::Principal, -z)?;
    let x0 = -3.0 * w * (3.0 * w).exp();
    let y0 = (3.0 * z).powi(3);
    Ok(-g * x0 * ((x0 / y0).sqrt() - 0.5))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponential::exp_energy;
    use crate::power_law::power_law_energy;
    use crate::yukawa::{yukawa_energy, yukawa_x0_exact, yukawa_x0_fit, X0Source};
    use approx::assert_abs_diff_eq;

    #[test]
    fn geometry_reduces_to_yukawa_at_minus_one() {
        let geom = GeneralGeometry::new(-1.0).unwrap();
        assert_abs_diff_eq!(geom.a_lambda, 0.5 * (3.0 + 5.0_f64.sqrt()), epsilon = 1e-14);
        assert_abs_diff_eq!(geom.xbar, 0.19097546042677083, epsilon = 1e-14);
        assert_abs_diff_eq!(geom.fbar, 0.30900478598767572, epsilon = 1e-14);
        assert_abs_diff_eq!(geom.x0_at_zero(), 1.0 / E, epsilon = 1e-15);
    }

    #[test]
    fn i_lambda_round_trip() {
        // x = I_lambda(K(x)) for K(x) = g e^(-x) (x - lambda)/|lambda|
        let g = 7.0;
        for &(lambda, x, branch) in &[
            (-1.0, 0.5, BranchId::Lower),
            (-1.0, 3.0, BranchId::Lower),
            (-1.5, 1.7, BranchId::Lower),
            (1.0, 3.0, BranchId::Lower),
            (1.0, 1.5, BranchId::Principal),
        ] {
            let nu = g * (-x as f64).exp() * (x - lambda) / (lambda as f64).abs();
            let back = i_lambda(nu, g, lambda, branch).unwrap();
            assert_abs_diff_eq!(back, x, epsilon = 1e-12);
        }
    }

    #[test]
    fn i_lambda_kernel_maximum_boundary() {
        // at nu = K(lambda+1) = g e^(-lambda-1)/|lambda| the Lambert argument
        // hits the branch point and x = lambda + 1
        let g = 5.0;
        for &lambda in &[-1.0, -1.5, 1.0] {
            let nu = g * (-(lambda + 1.0) as f64).exp() / (lambda as f64).abs();
            let x = i_lambda(nu, g, lambda, BranchId::Lower).unwrap();
            assert_abs_diff_eq!(x, lambda + 1.0, epsilon = 1e-6);
        }
    }

    #[test]
    fn i_lambda_diverges_as_nu_vanishes() {
        let x = i_lambda(1e-200, 1.0, -1.0, BranchId::Lower).unwrap();
        assert!(x > 100.0);
        assert!(i_lambda(1.0, 1.0, 0.0, BranchId::Lower).is_err());
    }

    #[test]
    fn x0_solver_matches_yukawa_at_minus_one() {
        for i in 0..=20 {
            let geom = GeneralGeometry::new(-1.0).unwrap();
            let y = geom.fbar * i as f64 / 20.0;
            assert_abs_diff_eq!(
                solve_x0_general(y, -1.0).unwrap(),
                yukawa_x0_exact(y).unwrap(),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn branch_continuity_as_y_vanishes() {
        for &lambda in &[-1.0, -1.25, -1.5, -1.75] {
            let geom = GeneralGeometry::new(lambda).unwrap();
            let x0 = solve_x0_general(1e-9, lambda).unwrap();
            assert_abs_diff_eq!(x0, geom.x0_at_zero(), epsilon = 1e-5);
            assert_abs_diff_eq!(
                solve_x0_general(geom.fbar, lambda).unwrap(),
                geom.xbar,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn fit_reduces_to_yukawa_and_tracks_solver() {
        assert_abs_diff_eq!(a_lambda_fit(-1.0), 2.0, epsilon = 1e-12);
        let geom = GeneralGeometry::new(-1.0).unwrap();
        for i in 0..=10 {
            let y = geom.fbar * i as f64 / 10.0;
            assert_abs_diff_eq!(
                x0_fit_general(y, -1.0).unwrap(),
                yukawa_x0_fit(y, 2.0).unwrap(),
                epsilon = 1e-13
            );
        }
        let geom = GeneralGeometry::new(-1.5).unwrap();
        let y = geom.fbar / 2.0;
        let fit = x0_fit_general(y, -1.5).unwrap();
        let exact = solve_x0_general(y, -1.5).unwrap();
        assert!((fit - exact).abs() < 0.02, "fit {fit} vs exact {exact}");
    }

    #[test]
    fn fit_uniform_accuracy_over_lambda_range() {
        let mut sup: f64 = 0.0;
        for j in 0..=9 {
            let lambda = -1.9 + 0.9 * j as f64 / 9.0;
            let geom = GeneralGeometry::new(lambda).unwrap();
            for i in 0..=50 {
                let y = geom.fbar * i as f64 / 50.0;
                let diff = (x0_fit_general(y, lambda).unwrap() - solve_x0_general(y, lambda).unwrap()).abs();
                sup = sup.max(diff);
            }
        }
        assert!(sup <= 0.03, "sup |fit - exact| = {sup}");
    }

    #[test]
    fn energy_reduces_to_yukawa() {
        for &(g, n_eff) in &[(10.0, 1.0), (30.0, 1.9), (100.0, 3.0)] {
            let lhs = general_energy(g, -1.0, n_eff).unwrap();
            let rhs = yukawa_energy(g, n_eff, X0Source::Exact).unwrap();
            assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-10 * rhs.abs().max(1.0));
        }
    }

    #[test]
    fn energy_vanishes_at_critical_height() {
        for &lambda in &[-1.0, -1.3, -1.7] {
            for &n_eff in &[0.9, 1.7] {
                let gc = general_critical_height(lambda, n_eff).unwrap();
                let eps = general_energy(gc, lambda, n_eff).unwrap();
                assert!(eps.abs() < 1e-9, "lambda {lambda}: eps = {eps}");
            }
        }
    }

    #[test]
    fn critical_height_limits() {
        assert_abs_diff_eq!(
            general_critical_height(0.0, 2.0).unwrap(),
            E * E / 4.0 * 4.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(general_critical_height(-1.0, 1.0).unwrap(), E, epsilon = 1e-12);
        assert_abs_diff_eq!(general_critical_height(-1.0, 1.0).unwrap(), 2.71828, epsilon = 1e-5);
        assert!(general_critical_height(-2.0, 1.0).is_err());
    }

    #[test]
    fn unsupported_lambda_rejected() {
        assert!(matches!(
            general_energy(10.0, -0.5, 1.0),
            Err(AfmError::UnsupportedLambda(_))
        ));
        assert!(matches!(
            solve_x0_general(0.1, 0.5),
            Err(AfmError::UnsupportedLambda(_))
        ));
        assert!(general_energy(10.0, -2.0, 1.0).is_err());
    }

    #[test]
    fn lambda_zero_limit_recovers_exponential() {
        for &(g, n_eff) in &[(40.0, 2.0), (10.0, 1.0), (300.0, 4.5)] {
            let lhs = lambda_zero_limit_check(g, n_eff).unwrap();
            let rhs = exp_energy(g, n_eff).unwrap();
            assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-10 * rhs.abs().max(1.0));
        }
        // at the critical coupling the limit vanishes too
        let n_eff = 1.5;
        let gc = E * E / 4.0 * n_eff * n_eff;
        assert!(lambda_zero_limit_check(gc, n_eff).unwrap().abs() < 1e-10);
    }

    #[test]
    fn lambda_zero_shallow_expansion() {
        // eps0/(-g) -> 1 - O(Z) as Z -> 0
        let n_eff = 1.0;
        for &g in &[1e5, 1e7] {
            let z = exp_z(g, n_eff).unwrap();
            let eps = lambda_zero_limit_check(g, n_eff).unwrap();
            assert!((eps / -g - 1.0).abs() < 5.0 * z);
        }
    }

    #[test]
    fn coulomb_family_limit_is_first_order_in_beta() {
        // (beta^2/2m) eps approaches the pure power-law energy linearly in beta
        let (m, alpha, n_eff) = (1.0, 1.0, 1.0);
        for &lambda in &[-1.0, -1.5] {
            let target = power_law_energy(m, alpha, lambda, n_eff).unwrap();
            let err = |beta: f64| {
                let g = 2.0 * m * alpha / beta.powf(lambda + 2.0);
                let eps = general_energy(g, lambda, n_eff).unwrap();
                (beta * beta / (2.0 * m) * eps - target).abs()
            };
            let beta = 1e-3;
            let ratio = err(beta) / err(beta / 2.0);
            assert!(
                (ratio - 2.0).abs() < 0.2,
                "lambda {lambda}: O(beta) ratio {ratio}"
            );
        }
    }
}

//! Spectrum and critical heights of the pure exponential well -g e^(-x).
//!
//! With Z = (1/3)(2N^2/g)^(1/3) the level is
//!     eps = -g e^(3 W0(-Z)) [1 + (3/2) W0(-Z)],
//! real only for Z <= 1/e; the coupling below which the level unbinds is
//! g_c = (e^2/4) N^2.

use crate::error::{AfmError, Result};
use crate::power_law::QuantumNumbers;
use crate::special::{bessel_j0_zero, lambert_w, BranchId};
use serde::Serialize;
use std::f64::consts::{E, PI};

/// Physical parameters of H = p^2/(2m) - alpha r^lambda e^(-beta r).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysicalPotential {
    pub m: f64,
    pub alpha: f64,
    pub beta: f64,
    pub lambda: f64,
}

impl PhysicalPotential {
    pub fn new(m: f64, alpha: f64, beta: f64, lambda: f64) -> Result<Self> {
        if !(m > 0.0 && alpha > 0.0 && beta > 0.0) {
            return Err(AfmError::domain(
                "PhysicalPotential: m, alpha, beta must be positive",
            ));
        }
        Ok(PhysicalPotential { m, alpha, beta, lambda })
    }

    /// Dimensionless coupling g = 2 m alpha / beta^(lambda+2).
    pub fn coupling(&self) -> f64 {
        2.0 * self.m * self.alpha / self.beta.powf(self.lambda + 2.0)
    }

    /// Converts a dimensionless eigenvalue to physical units,
    /// E = beta^2 eps / (2m).
    pub fn to_physical_energy(&self, eps: f64) -> f64 {
        self.beta * self.beta / (2.0 * self.m) * eps
    }
}

/// Z = (1/3)(2 N^2 / g)^(1/3); the single place this combination is formed,
/// shared by the dimensionless and physical entry points.
pub fn exp_z(g: f64, n_eff: f64) -> Result<f64> {
    if !(g > 0.0 && n_eff > 0.0) {
        return Err(AfmError::domain("exp_z: g and N must be positive"));
    }
    Ok((2.0 * n_eff * n_eff / g).cbrt() / 3.0)
}

/// One level of the exponential well: the derived scale Z, the internal
/// minimizer x0 = e^(W0(-Z)), and the energy when the state is bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpLevel {
    pub g: f64,
    pub n_eff: f64,
    pub z: f64,
    pub x0: Option<f64>,
    pub epsilon: Option<f64>,
}

impl ExpLevel {
    pub fn new(g: f64, n_eff: f64) -> Result<Self> {
        let z = exp_z(g, n_eff)?;
        if z > 1.0 / E {
            return Ok(ExpLevel { g, n_eff, z, x0: None, epsilon: None });
        }
        let w = lambert_w(BranchId::Principal, -z)?;
        let x0 = w.exp();
        let epsilon = -g * (3.0 * w).exp() * (1.0 + 1.5 * w);
        Ok(ExpLevel { g, n_eff, z, x0: Some(x0), epsilon: Some(epsilon) })
    }

    /// Optimal auxiliary field nu0 = g x0^3, in [0, g] for bound levels.
    pub fn nu0(&self) -> Option<f64> {
        self.x0.map(|x0| self.g * x0 * x0 * x0)
    }
}

/// Dimensionless energy of -g e^(-x) for effective quantum number N.
pub fn exp_energy(g: f64, n_eff: f64) -> Result<f64> {
    let level = ExpLevel::new(g, n_eff)?;
    level.epsilon.ok_or(AfmError::NoBoundState)
}

/// Physical-units energy of -alpha e^(-beta r); requires lambda = 0.
pub fn exp_energy_physical(p: &PhysicalPotential, n_eff: f64) -> Result<f64> {
    if p.lambda != 0.0 {
        return Err(AfmError::domain(format!(
            "exp_energy_physical: lambda must be 0, got {}",
            p.lambda
        )));
    }
    Ok(p.to_physical_energy(exp_energy(p.coupling(), n_eff)?))
}

/// Polynomial stand-in for e^(3 W0(-Z)) [1 + (3/2) W0(-Z)] on [0, 1/e]:
/// (e^(-3Z)/100)(100 - 150 Z - 580 Z^2 + 524 Z^3), absolute error below 0.008.
pub fn exp_bracket_poly(z: f64) -> Result<f64> {
    if !(0.0..=1.0 / E + 1e-15).contains(&z) {
        return Err(AfmError::domain(format!(
            "exp_bracket_poly: Z must lie in [0, 1/e], got {z}"
        )));
    }
    Ok((-3.0 * z).exp() / 100.0 * (100.0 + z * (-150.0 + z * (-580.0 + z * 524.0))))
}

/// Models for the critical height g_{e;nl} of the exponential well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExpCriticalModel {
    /// (e^2/4) N^2 with the caller's choice of N.
    AfmN(f64),
    /// (pi^2/4)(n + 3/4)^2 from the large-n zeros of J0; valid for l = 0
    /// only, l is ignored.
    BesselAsymptotic,
    /// ((pi/2) n + (e/2) l + 3 pi/8)^2.
    FittedLinear,
    /// (1.566 n + 1.393 l - 0.125 sqrt(n l) + 1.202)^2.
    FittedSqrtNL,
}

/// Critical height of level q under the chosen model.
pub fn exp_critical_height(q: QuantumNumbers, model: ExpCriticalModel) -> Result<f64> {
    let (n, l) = (q.n as f64, q.l as f64);
    match model {
        ExpCriticalModel::AfmN(n_eff) => {
            if !(n_eff > 0.0) {
                return Err(AfmError::domain("exp_critical_height: N must be positive"));
            }
            Ok(E * E / 4.0 * n_eff * n_eff)
        }
        ExpCriticalModel::BesselAsymptotic => Ok(PI * PI / 4.0 * (n + 0.75) * (n + 0.75)),
        ExpCriticalModel::FittedLinear => {
            let s = PI / 2.0 * n + E / 2.0 * l + 3.0 * PI / 8.0;
            Ok(s * s)
        }
        ExpCriticalModel::FittedSqrtNL => {
            let s = 1.566 * n + 1.393 * l - 0.125 * (n * l).sqrt() + 1.202;
            Ok(s * s)
        }
    }
}

/// Exact l = 0 critical height g*_{n0} = j_n^2 / 4 from the (n+1)-th zero of
/// J0.
pub fn exp_exact_critical_l0(n: u32) -> Result<f64> {
    let j = bessel_j0_zero(n)?;
    Ok(j * j / 4.0)
}

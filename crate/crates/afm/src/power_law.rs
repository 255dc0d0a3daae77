//! Closed-form spectra for pure power-law potentials a sgn(eta) r^eta and the
//! effective quantum number N that enters every energy formula in this crate.

use crate::error::{AfmError, Result};
use serde::Serialize;

/// Radial and orbital quantum numbers of a level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct QuantumNumbers {
    pub n: u32,
    pub l: u32,
}

impl QuantumNumbers {
    pub fn new(n: u32, l: u32) -> Self {
        QuantumNumbers { n, l }
    }
}

/// b(eta) = (41 eta + 86)/(13 eta + 58), the radial coefficient of N_eta.
pub fn b_eta(eta: f64) -> f64 {
    (41.0 * eta + 86.0) / (13.0 * eta + 58.0)
}

/// c(eta) = (5 eta + 17)/(2 eta + 14), the constant term of N_eta.
pub fn c_eta(eta: f64) -> f64 {
    (5.0 * eta + 17.0) / (2.0 * eta + 14.0)
}

/// Effective quantum number N_eta = b(eta) n + l + c(eta).
///
/// Exact for the harmonic oscillator (eta = 2 gives 2n + l + 3/2) and the
/// Coulomb potential (eta = -1 gives n + l + 1).
pub fn n_eta(eta: f64, q: QuantumNumbers) -> Result<f64> {
    if !(eta > -2.0) {
        return Err(AfmError::domain(format!("n_eta: eta must exceed -2, got {eta}")));
    }
    Ok(b_eta(eta) * q.n as f64 + q.l as f64 + c_eta(eta))
}

/// Eigenvalue of p^2/(2m) + a sgn(eta) r^eta:
/// e = (2+eta)/(2 eta) (a|eta|)^(2/(eta+2)) (N^2/m)^(eta/(eta+2)).
pub fn power_law_energy(m: f64, a: f64, eta: f64, n_eff: f64) -> Result<f64> {
    if eta == 0.0 || eta == -2.0 {
        return Err(AfmError::domain("power_law_energy: eta in {0, -2} is singular"));
    }
    if !(eta > -2.0) {
        return Err(AfmError::domain(format!(
            "power_law_energy: eta must exceed -2, got {eta}"
        )));
    }
    if !(m > 0.0 && a > 0.0 && n_eff > 0.0) {
        return Err(AfmError::domain("power_law_energy: m, a, N must be positive"));
    }
    let p = 2.0 / (eta + 2.0);
    Ok((2.0 + eta) / (2.0 * eta) * (a * eta.abs()).powf(p) * (n_eff * n_eff / m).powf(eta / (eta + 2.0)))
}

/// A rule N(g; n, l) for the effective quantum number. Fixed forms ignore g;
/// the hyperbola kinds interpolate the per-g optima found by calibration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum NModel {
    /// N = b(eta) n + l + c(eta) with the rational coefficient functions.
    EtaRational { eta: f64 },
    /// N = b n + l + c with fixed coefficients.
    FixedBC { b: f64, c: f64 },
    /// N = n + l + 1, exact for the Coulomb potential.
    CoulombLike,
    /// N = b(g) n + l + c(g) with hyperbola sections b, c.
    HyperbolaBC { b: Hyperbola, c: Hyperbola },
    /// N = bn(g) n + bl(g) l + c(g) + d(g) sqrt(n l) with quadratic d.
    HyperbolaSqrtNL {
        bn: Hyperbola,
        bl: Hyperbola,
        c: Hyperbola,
        d: [f64; 3],
    },
}

/// A section of hyperbola d(g) = (p g + q)/(g + r).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Hyperbola {
    pub p: f64,
    pub q: f64,
    pub r: f64,
}

impl Hyperbola {
    pub fn new(p: f64, q: f64, r: f64) -> Self {
        Hyperbola { p, q, r }
    }

    /// Pole location (g where the denominator vanishes).
    pub fn pole(&self) -> f64 {
        -self.r
    }

    pub fn eval(&self, g: f64) -> Result<f64> {
        let denom = g + self.r;
        if denom.abs() < 1e-10 * (1.0 + g.abs()) {
            return Err(AfmError::domain(format!(
                "hyperbola evaluated at its pole g = {}",
                self.pole()
            )));
        }
        Ok((self.p * g + self.q) / denom)
    }
}

impl NModel {
    /// Evaluates N(g; n, l). Fails at a pole of any coefficient function.
    pub fn eval(&self, g: f64, q: QuantumNumbers) -> Result<f64> {
        let (n, l) = (q.n as f64, q.l as f64);
        match self {
            NModel::EtaRational { eta } => n_eta(*eta, q),
            NModel::FixedBC { b, c } => Ok(b * n + l + c),
            NModel::CoulombLike => Ok(n + l + 1.0),
            NModel::HyperbolaBC { b, c } => Ok(b.eval(g)? * n + l + c.eval(g)?),
            NModel::HyperbolaSqrtNL { bn, bl, c, d } => {
                let dg = d[0] * g * g + d[1] * g + d[2];
                Ok(bn.eval(g)? * n + bl.eval(g)? * l + c.eval(g)? + dg * (n * l).sqrt())
            }
        }
    }
}

//! Lambert W, the inverse of w e^w, on its two real branches.

use crate::error::{AfmError, Result};

const INV_E: f64 = 1.0 / std::f64::consts::E;

/// Selects one of the two real branches of the Lambert W function.
///
/// `Principal` (W0) is defined on [-1/e, inf) and takes values >= -1;
/// `Lower` (W-1) is defined on [-1/e, 0) and takes values <= -1. The branches
/// meet at z = -1/e where both equal -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchId {
    Principal,
    Lower,
}

/// Evaluates W(z) on the requested branch by Halley iteration.
///
/// The residual |W e^W - z| is driven below 1e-14 * max(1, |z|); the starting
/// point is a branch-point series near z = -1/e and a log-based guess
/// elsewhere, so a handful of iterations always suffices.
pub fn lambert_w(branch: BranchId, z: f64) -> Result<f64> {
    if !z.is_finite() {
        return Err(AfmError::domain("lambert_w: argument must be finite"));
    }
    // Allow a tiny rounding excursion below the branch point.
    if z < -INV_E {
        if z < -INV_E - 1e-12 * (1.0 + INV_E) {
            return Err(AfmError::domain(format!(
                "lambert_w: z = {z} below the branch point -1/e"
            )));
        }
        return Ok(-1.0);
    }
    match branch {
        BranchId::Principal => {
            if z == 0.0 {
                return Ok(0.0);
            }
        }
        BranchId::Lower => {
            if z >= 0.0 {
                return Err(AfmError::domain(format!(
                    "lambert_w: lower branch requires z in [-1/e, 0), got {z}"
                )));
            }
        }
    }

    let mut w = initial_guess(branch, z);
    for _ in 0..100 {
        let ew = w.exp();
        let f = w * ew - z;
        if f.abs() <= 1e-16 * z.abs().max(1e-300) {
            break;
        }
        let w1 = w + 1.0;
        let denom = ew * w1 - (w + 2.0) * f / (2.0 * w1);
        if denom == 0.0 || !denom.is_finite() {
            break;
        }
        let step = f / denom;
        w -= step;
        if step.abs() <= 1e-16 * (1.0 + w.abs()) {
            break;
        }
    }
    // Keep the result on its branch when rounding nudges it across w = -1.
    match branch {
        BranchId::Principal => Ok(w.max(-1.0)),
        BranchId::Lower => Ok(w.min(-1.0)),
    }
}

fn initial_guess(branch: BranchId, z: f64) -> f64 {
    let p2 = 2.0 * (std::f64::consts::E * z + 1.0);
    match branch {
        BranchId::Principal => {
            if z < -0.25 {
                let p = p2.max(0.0).sqrt();
                -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
            } else if z < 1.5 {
                // Taylor series of W0 around 0
                z * (1.0 + z * (-1.0 + z * 1.5))
            } else {
                let l1 = z.ln();
                let l2 = l1.ln();
                l1 - l2 + l2 / l1
            }
        }
        BranchId::Lower => {
            if z < -0.25 {
                let p = p2.max(0.0).sqrt();
                -1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p * p * p
            } else {
                let l1 = (-z).ln();
                let l2 = (-l1).ln();
                l1 - l2 + l2 / l1
            }
        }
    }
}

/// Solves (a z + b)^n e^(-z) = theta for z via the Lambert function:
/// z = -b/a - n W[-(1/(a n)) (e^(-b/a) theta)^(1/n)].
///
/// The branch selects which of the (generally two) real solutions is
/// returned.
pub fn solve_shifted_exponential(a: f64, b: f64, n: f64, theta: f64, branch: BranchId) -> Result<f64> {
    if a == 0.0 {
        return Err(AfmError::domain("solve_shifted_exponential: a must be nonzero"));
    }
    if n == 0.0 {
        return Err(AfmError::domain("solve_shifted_exponential: n must be nonzero"));
    }
    let t = (-b / a).exp() * theta;
    if t < 0.0 {
        return Err(AfmError::numerical(
            "solve_shifted_exponential: (e^(-b/a) theta)^(1/n) is not real",
        ));
    }
    let root = if t == 0.0 {
        if n < 0.0 {
            return Err(AfmError::numerical(
                "solve_shifted_exponential: zero base with negative exponent",
            ));
        }
        0.0
    } else {
        t.powf(1.0 / n)
    };
    let arg = -root / (a * n);
    let w = lambert_w(branch, arg)?;
    Ok(-b / a - n * w)
}

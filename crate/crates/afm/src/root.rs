//! Bracketed scalar root finding.
//!
//! Every transcendental equation in this crate is solved on a bracket where
//! the function is monotone, so a bisection loop with opportunistic secant
//! steps is both sufficient and guaranteed to converge. Unbracketed Newton is
//! deliberately not offered.

use crate::error::{AfmError, Result};

/// Tolerances and limits for the bracketed solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootConfig {
    pub abs_tol: f64,
    pub max_iter: usize,
    pub bracket: Option<(f64, f64)>,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig {
            abs_tol: 1e-14,
            max_iter: 100,
            bracket: None,
        }
    }
}

impl RootConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(AfmError::domain("abs_tol must be positive"));
        }
        if self.max_iter == 0 {
            return Err(AfmError::domain("max_iter must be at least 1"));
        }
        if let Some((a, b)) = self.bracket {
            if !(a < b) {
                return Err(AfmError::domain("bracket endpoints must be increasing"));
            }
        }
        Ok(())
    }
}

/// Finds a root of `f` inside `[lo, hi]`, which must bracket a sign change.
///
/// Bisection keeps the bracket valid; a secant step is taken whenever it lands
/// strictly inside the current bracket, which restores superlinear convergence
/// on the smooth problems this crate generates.
pub fn solve_bracketed<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, cfg: &RootConfig) -> Result<f64> {
    cfg.validate()?;
    let (mut a, mut b) = cfg.bracket.unwrap_or((lo, hi));
    if !(a < b) {
        return Err(AfmError::domain("invalid bracket"));
    }
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(AfmError::numerical(format!(
            "no sign change on bracket [{a}, {b}]"
        )));
    }
    for _ in 0..cfg.max_iter {
        if (b - a).abs() <= cfg.abs_tol * (1.0 + a.abs().max(b.abs())) {
            break;
        }
        // secant candidate, falling back to the midpoint when it degenerates
        let mut x = if fb != fa {
            b - fb * (b - a) / (fb - fa)
        } else {
            0.5 * (a + b)
        };
        let margin = 0.01 * (b - a);
        if !x.is_finite() || x <= a + margin || x >= b - margin {
            x = 0.5 * (a + b);
        }
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    Ok(if fa.abs() <= fb.abs() { a } else { b })
}

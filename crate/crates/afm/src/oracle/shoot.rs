//! Outward integration of the radial equation u'' = Q(x) u on a geometric
//! grid, and the solvers built on it: zero-energy critical-height bisection
//! and node-count eigenvalue shooting.
//!
//! The geometric grid (step proportional to x) resolves the centrifugal and
//! Coulomb-like singularities at the origin without special-casing the start
//! of the integration; the regular solution is seeded as x^(l+1) at
//! x = 1e-7 where the neglected series corrections are far below the target
//! accuracy.

use super::RadialPotential;
use crate::error::{AfmError, Result};

const START_X: f64 = 1e-7;

/// Result of one outward sweep: sign data survive rescaling, magnitudes do
/// not (the solution is renormalized to avoid overflow).
pub(crate) struct Sweep {
    pub nodes: u32,
    pub u: f64,
    pub du: f64,
}

/// Integrates u'' = [l(l+1)/x^2 + V(x) - eps] u from START_X to x_end with
/// fourth-order Runge-Kutta on steps h = delta * x.
pub(crate) fn sweep_outward(
    pot: &RadialPotential,
    l: u32,
    eps: f64,
    x_end: f64,
    delta: f64,
) -> Sweep {
    let centrifugal = (l * (l + 1)) as f64;
    let q = |x: f64| centrifugal / (x * x) + pot.eval(x) - eps;

    let mut x = START_X;
    // scale-free start for the regular solution u ~ x^(l+1)
    let mut u = 1.0_f64;
    let mut du = (l as f64 + 1.0) / x;
    let mut nodes = 0u32;
    let mut since_rescale = 0u32;

    while x < x_end {
        let mut h = delta * x;
        if x + h > x_end {
            h = x_end - x;
        }
        let (k1u, k1d) = (du, q(x) * u);
        let xm = x + 0.5 * h;
        let qm = q(xm);
        let (k2u, k2d) = (du + 0.5 * h * k1d, qm * (u + 0.5 * h * k1u));
        let (k3u, k3d) = (du + 0.5 * h * k2d, qm * (u + 0.5 * h * k2u));
        let xe = x + h;
        let (k4u, k4d) = (du + h * k3d, q(xe) * (u + h * k3u));
        let u_new = u + h / 6.0 * (k1u + 2.0 * (k2u + k3u) + k4u);
        let du_new = du + h / 6.0 * (k1d + 2.0 * (k2d + k3d) + k4d);
        if u_new * u < 0.0 {
            nodes += 1;
        }
        u = u_new;
        du = du_new;
        x = xe;
        since_rescale += 1;
        if since_rescale >= 256 {
            since_rescale = 0;
            let m = u.abs().max(du.abs());
            if m > 1e200 {
                u /= m;
                du /= m;
            }
        }
    }
    Sweep { nodes, u, du }
}

/// Zero-energy sweep returning the node count and the coefficient of the
/// growing exterior solution x^(l+1), up to positive normalization:
/// X u'(X) + l u(X) = (2l+1) A X^(l+1).
pub(crate) fn zero_energy_growing_coefficient(
    pot: &RadialPotential,
    l: u32,
    x_end: f64,
    delta: f64,
) -> (u32, f64) {
    let sweep = sweep_outward(pot, l, 0.0, x_end, delta);
    (sweep.nodes, x_end * sweep.du + l as f64 * sweep.u)
}

/// True once the coupling has passed the threshold where the (n,l) level
/// becomes bound: either the zero-energy solution already has n+1 nodes, or
/// it has n nodes and the growing-component coefficient has flipped to the
/// post-threshold sign (-1)^(n+1). The sign test removes the O(1/X) bias a
/// bare node count carries for l = 0.
fn past_threshold(make_pot: &impl Fn(f64) -> RadialPotential, g: f64, n: u32, l: u32, x_end: f64, delta: f64) -> bool {
    let pot = make_pot(g);
    let (nodes, a) = zero_energy_growing_coefficient(&pot, l, x_end, delta);
    if nodes >= n + 1 {
        return true;
    }
    let post_sign = if (n + 1) % 2 == 1 { -1.0 } else { 1.0 };
    nodes == n && a * post_sign > 0.0
}

/// Critical coupling for the (n, l) level: bisection of the threshold
/// predicate, bracketed geometrically from `g_guess`.
pub(crate) fn critical_coupling(
    make_pot: impl Fn(f64) -> RadialPotential,
    n: u32,
    l: u32,
    g_guess: f64,
    rel_tol: f64,
) -> Result<f64> {
    const X_END: f64 = 45.0;
    const DELTA: f64 = 2.5e-4;
    let mut lo = 0.5 * g_guess;
    let mut hi = 2.0 * g_guess;
    let mut widen = 0;
    while past_threshold(&make_pot, lo, n, l, X_END, DELTA) {
        hi = lo;
        lo *= 0.5;
        widen += 1;
        if widen > 60 {
            return Err(AfmError::convergence("critical_coupling: no lower bracket"));
        }
    }
    widen = 0;
    while !past_threshold(&make_pot, hi, n, l, X_END, DELTA) {
        lo = hi;
        hi *= 2.0;
        widen += 1;
        if widen > 60 {
            return Err(AfmError::convergence("critical_coupling: no upper bracket"));
        }
    }
    while hi - lo > rel_tol * hi {
        let mid = 0.5 * (lo + hi);
        if past_threshold(&make_pot, mid, n, l, X_END, DELTA) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Number of nodes of the outward solution at energy eps, integrated to a
/// distance where the exterior exponential has fully taken over. By Sturm
/// theory this counts the eigenvalues below eps.
fn nodes_at(pot: &RadialPotential, l: u32, eps: f64, delta: f64) -> u32 {
    let kappa = (-eps).sqrt().max(1e-4);
    let x_end = (outer_turning_point(pot, l, eps) + 36.0 / kappa).min(5000.0);
    sweep_outward(pot, l, eps, x_end, delta).nodes
}

fn outer_turning_point(pot: &RadialPotential, l: u32, eps: f64) -> f64 {
    let centrifugal = (l * (l + 1)) as f64;
    let mut turning = 1.0;
    let mut x = 1e-3;
    while x < 400.0 {
        if centrifugal / (x * x) + pot.eval(x) < eps {
            turning = x;
        }
        x *= 1.05;
    }
    turning
}

/// The (n+1)-th eigenvalue of the l-wave by node-count bisection.
pub(crate) fn shoot_eigenvalue(
    pot: &RadialPotential,
    l: u32,
    n: u32,
    delta: f64,
) -> Result<f64> {
    let mut lo = pot.lower_bound();
    let mut hi = -1e-12;
    if nodes_at(pot, l, hi, delta) < n + 1 {
        return Err(AfmError::NoBoundState);
    }
    if nodes_at(pot, l, lo, delta) > n {
        return Err(AfmError::convergence(
            "shoot_eigenvalue: lower energy bound not below the requested level",
        ));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if nodes_at(pot, l, mid, delta) >= n + 1 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= 1e-14 * hi.abs().max(1e-9) {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

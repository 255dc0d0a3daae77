//! Real-valued special functions: both real branches of the Lambert W
//! function, the shifted-exponential equation solver built on it, Bessel
//! functions of the first kind with real order, and zeros of J0.

mod bessel;
mod gauss;
mod lambert;

pub use bessel::{bessel_j, bessel_j0_zero};
pub use lambert::{lambert_w, solve_shifted_exponential, BranchId};

pub(crate) use gauss::{gauss_laguerre_nodes, gauss_legendre};

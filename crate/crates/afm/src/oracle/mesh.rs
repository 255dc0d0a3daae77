//! Dense-matrix radial eigensolver on a scaled Laguerre mesh.
//!
//! The basis is the set of Lagrange functions built on the zeros of L_N,
//! regularized by x so the wave function vanishes at the origin. In the
//! Gauss-quadrature approximation the potential (plus centrifugal term) is
//! diagonal at the scaled mesh points and the -d^2/dx^2 matrix has the
//! closed form used below; the whole l-wave spectrum then comes out of one
//! symmetric eigendecomposition.

use super::RadialPotential;
use crate::special::gauss_laguerre_nodes;
use nalgebra::DMatrix;

/// All negative eigenvalues of the l-wave Hamiltonian, ascending.
pub(crate) fn negative_levels(
    pot: &RadialPotential,
    l: u32,
    mesh_size: usize,
    domain: f64,
) -> Vec<f64> {
    let u = gauss_laguerre_nodes(mesh_size);
    let n = mesh_size;
    let h = domain / u[n - 1];
    let centrifugal = (l * (l + 1)) as f64;

    let mut ham = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..i {
            let sign = if (i - j) % 2 == 0 { 1.0 } else { -1.0 };
            let t = sign * (u[i] + u[j]) / ((u[i] * u[j]).sqrt() * (u[i] - u[j]) * (u[i] - u[j]));
            let v = t / (h * h);
            ham[(i, j)] = v;
            ham[(j, i)] = v;
        }
        let t_diag = (4.0 + (4.0 * n as f64 + 2.0) * u[i] - u[i] * u[i]) / (12.0 * u[i] * u[i]);
        let x = h * u[i];
        ham[(i, i)] = t_diag / (h * h) + centrifugal / (x * x) + pot.eval(x);
    }

    let mut eigen: Vec<f64> = ham.symmetric_eigenvalues().iter().copied().collect();
    eigen.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eigen.retain(|&e| e < 0.0);
    eigen
}

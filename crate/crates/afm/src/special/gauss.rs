//! Gauss quadrature nodes via Golub-Welsch on the Jacobi matrices of the
//! classical orthogonal polynomials. Only what the crate needs: Legendre
//! nodes and weights for the Bessel integral representation, Laguerre nodes
//! for the radial mesh.

use nalgebra::DMatrix;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

/// Nodes and weights of n-point Gauss-Legendre quadrature on [-1, 1].
pub(crate) fn gauss_legendre(n: usize) -> &'static (Vec<f64>, Vec<f64>) {
    static CACHE: Lazy<Mutex<HashMap<usize, &'static (Vec<f64>, Vec<f64>)>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    let mut cache = CACHE.lock().unwrap();
    cache.entry(n).or_insert_with(|| {
        let mut m = DMatrix::<f64>::zeros(n, n);
        for k in 1..n {
            let kf = k as f64;
            let b = kf / (4.0 * kf * kf - 1.0).sqrt();
            m[(k, k - 1)] = b;
            m[(k - 1, k)] = b;
        }
        let eig = m.symmetric_eigen();
        let mut pairs: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let v0 = eig.eigenvectors[(0, i)];
                (eig.eigenvalues[i], 2.0 * v0 * v0)
            })
            .collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let nodes = pairs.iter().map(|p| p.0).collect();
        let weights = pairs.iter().map(|p| p.1).collect();
        Box::leak(Box::new((nodes, weights)))
    })
}

/// The n zeros of the Laguerre polynomial L_n, ascending.
pub(crate) fn gauss_laguerre_nodes(n: usize) -> &'static Vec<f64> {
    static CACHE: Lazy<Mutex<HashMap<usize, &'static Vec<f64>>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    let mut cache = CACHE.lock().unwrap();
    cache.entry(n).or_insert_with(|| {
        let mut m = DMatrix::<f64>::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = 2.0 * k as f64 + 1.0;
            if k > 0 {
                m[(k, k - 1)] = k as f64;
                m[(k - 1, k)] = k as f64;
            }
        }
        let mut nodes: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        nodes.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Box::leak(Box::new(nodes))
    })
}

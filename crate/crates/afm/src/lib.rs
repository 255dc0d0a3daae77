//! Semi-analytical bound-state spectra for screened exponential potentials
//! -alpha r^lambda e^(-beta r), built on the auxiliary field method, together
//! with an independent numerical Schrodinger oracle and the calibration
//! machinery that fits effective-quantum-number models against it.
//!
//! Everything works on the dimensionless Hamiltonian q^2 - g x^lambda e^(-x)
//! with g = 2 m alpha / beta^(lambda+2); physical energies follow from
//! E = beta^2 eps / (2 m).

pub mod calibrate;
pub mod error;
pub mod exponential;
pub mod general;
pub mod oracle;
pub mod power_law;
pub mod report;
pub mod root;
pub mod special;
pub mod yukawa;

pub use error::{AfmError, Result};
pub use power_law::QuantumNumbers;

//! Comparison reports between oracle spectra and closed-form approximations.

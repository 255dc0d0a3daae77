//! Calibration of effective-quantum-number models against oracle spectra.

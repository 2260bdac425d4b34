//! Numerical thresholds shared across the crate.

/// Unit-norm tolerance for constructed states.
pub const NORM: f64 = 1e-12;

/// Hermiticity and unit-trace tolerance for density matrices.
pub const HERMITIAN: f64 = 1e-12;

/// Eigenvalues above `-PSD_FLOOR` count as non-negative.
pub const PSD_FLOOR: f64 = 1e-10;

/// Eigenvalues above this are kept when purifying.
pub const RANK_CUTOFF: f64 = 1e-12;

/// A squared concurrence (or squared vector norm) below this vanishes.
pub const ZERO: f64 = 1e-10;

/// Squared quantities below this are rounding noise and taken as exactly 0
/// before a square root, which would otherwise turn 1e-16 into 1e-8.
pub const ROUNDING: f64 = 1e-13;

/// |slack| at or below this is reported as saturation.
pub const SATURATION: f64 = 1e-9;

/// Floor above which a concurrence is treated as definitely nonzero when
/// classifying equality cases.
pub const NONZERO_FLOOR: f64 = 1e-6;

/// Default cap on the total Hilbert-space dimension D (the doubled vector
/// holds D² entries).
pub const DEFAULT_MAX_DIM: usize = 4096;

/// Norms below this are refused when normalizing.
pub const MIN_NORM: f64 = 1e-300;

//! Tolerances used across the crate.
//!
//! Every threshold is fixed here rather than scattered as magic numbers.
//! The constructed matrices are small (a few hundred rows at most) and
//! their entries are exact rationals or quadratic surds, so the working
//! precision sits far below every tolerance.

/// Hermiticity check before eigendecomposition, relative to the matrix norm.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Jacobi convergence: sweep until the largest off-diagonal modulus drops
/// below this times the Frobenius norm. Quadratic convergence means the
/// final sweep typically lands orders of magnitude lower.
pub const EIG_CONVERGENCE_TOL: f64 = 1e-12;

/// Residual allowed on `A v = lambda v` and on unitarity of the
/// eigenvector matrix, relative to `max(1, |A|)`.
pub const EIG_RESIDUAL_TOL: f64 = 1e-10;

/// Hard cap on Jacobi sweeps; exceeding it is a reported failure,
/// never a silent return.
pub const EIG_MAX_SWEEPS: usize = 100;

/// Seed entries and complex Hadamard entries must be unimodular to this.
pub const UNIMODULAR_TOL: f64 = 1e-12;

/// `|H H* - d I|` allowed for a d x d Hadamard matrix, scaled by d.
pub const HADAMARD_TOL: f64 = 1e-9;

/// Entry-modulus deviation allowed when checking mutual unbiasedness.
pub const MUB_TOL: f64 = 1e-9;

/// Unitarity residual allowed on blocks fed to a union-of-bases frame.
pub const UNITARY_TOL: f64 = 1e-10;

/// Residual on the signature identity `Q^2 = (1-d)Q + dI`.
pub const SIGNATURE_IDENTITY_TOL: f64 = 1e-9;

/// Gram matrices produced by two construction routes must agree to this.
pub const GRAM_MATCH_TOL: f64 = 1e-9;

/// Default clustering gap for the angle spectrum and the default
/// certification tolerance. Constructed angle values are separated by
/// far more than this.
pub const DEFAULT_CERTIFY_TOL: f64 = 1e-9;

/// Default relative residual for the tightness check.
pub const TIGHTNESS_TOL: f64 = 1e-8;

/// Unit-norm deviation allowed on constructed frame vectors.
pub const UNIT_NORM_TOL: f64 = 1e-10;

/// Cap on the number of enumerated subsets, guarding C(d+1, k) blowup.
pub const DEFAULT_SUBSET_CAP: u64 = 1_000_000;

/// Size guard for the Sylvester doubling: orders beyond 2^20 are refused.
pub const SYLVESTER_MAX_EXPONENT: u32 = 20;

//! Error type shared by every module in the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{op}: shape mismatch between {lhs_rows}x{lhs_cols} and {rhs_rows}x{rhs_cols}")]
    ShapeMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    #[error("{op}: matrix must be square, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("{op}: non-finite entry at ({row}, {col})")]
    NonFinite {
        op: &'static str,
        row: usize,
        col: usize,
    },

    #[error("matrix is not Hermitian: asymmetry {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal {offdiag:.3e})")]
    EigDidNotConverge { sweeps: usize, offdiag: f64 },

    #[error("seed entry {index} has modulus {modulus} but must be unimodular")]
    NonUnimodularEntry { index: usize, modulus: f64 },

    #[error("seed has length {len}, need at least 2")]
    SeedTooShort { len: usize },

    #[error("signature matrix is {size}x{size} but d = {d} requires {expected}x{expected}")]
    SignatureSizeMismatch {
        size: usize,
        d: usize,
        expected: usize,
    },

    #[error("signature matrix invalid: {reason}")]
    InvalidSignature { reason: String },

    #[error("Hadamard check failed: {reason}")]
    NotHadamard { reason: String },

    #[error("sylvester order 2^{n} exceeds the 2^{max} size guard")]
    SylvesterTooLarge { n: u32, max: u32 },

    #[error("{p} is not an odd prime")]
    NotOddPrime { p: usize },

    #[error("requested {n} mutually unbiased Hadamards but at most {max} exist for p = {p}")]
    MubFamilyTooLarge { n: usize, p: usize, max: usize },

    #[error("Hadamards {i} and {j} are not mutually unbiased: cross-product entry modulus deviates by {deviation:.3e}")]
    NotUnbiased { i: usize, j: usize, deviation: f64 },

    #[error("basis {index} is not unitary: residual {residual:.3e}")]
    NotUnitary { index: usize, residual: f64 },

    #[error("mutually unbiased family of size {n} exceeds the dimension d = {d}")]
    TooManyBases { n: usize, d: usize },

    #[error("union of bases needs at least one block")]
    EmptyUnion,

    #[error("subset size k = {k} out of range, need 1 <= k <= d = {d}")]
    SubsetSizeOutOfRange { k: usize, d: usize },

    #[error("C({n}, {k}) = {d_prime} subsets exceed the cap of {cap}")]
    SubsetCapExceeded {
        n: usize,
        k: usize,
        d_prime: u128,
        cap: u64,
    },

    #[error("intersection size l = {l} out of range, need 0 <= l <= k-1 = {max}")]
    IntersectionOutOfRange { l: usize, max: usize },

    #[error("Welch bound needs N >= d >= 1, got N = {n}, d = {d}")]
    WelchUndefined { n: usize, d: usize },

    #[error("operation needs at least {need} vectors, frame has {n}")]
    TooFewVectors { n: usize, need: usize },

    #[error("frame must have at least one vector")]
    EmptyFrame,

    #[error("{op} is defined for real matrices only")]
    ComplexUnsupported { op: &'static str },

    #[error("matrix is not symmetric: residual {residual:.3e}")]
    NotSymmetric { residual: f64 },

    #[error("diagonal entry {index} is {value}, expected 1")]
    NotUnitDiagonal { index: usize, value: f64 },

    #[error("Gram matrix is not equiangular: |entry ({row}, {col})| = {modulus} differs from alpha = {alpha}")]
    NotEquiangular {
        row: usize,
        col: usize,
        modulus: f64,
        alpha: f64,
    },

    #[error("matrix is not zero-diagonal symmetric binary: entry ({row}, {col}) = {value}")]
    NotBinaryMatrix { row: usize, col: usize, value: f64 },

    #[error("{op}: parameter {value} out of range (must be at least {min})")]
    ParameterOutOfRange {
        op: &'static str,
        value: usize,
        min: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

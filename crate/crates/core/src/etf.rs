//! Construction of (d+1, d) equiangular tight frames, real and complex.
//!
//! Every signature matrix of a (d+1, d) ETF has the form `Q = I - x x*`
//! for a seed vector `x` with unimodular entries, and conversely. From the
//! Gram matrix `G = I + Q/d` the frame itself comes out either by
//! eigendecomposition (rows of `U sqrt(D)`) or by a closed-form orthogonal
//! eigenbasis that costs O(d) arithmetic per frame vector.

use crate::eig::hermitian_eig;
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::matrix::Matrix;
use crate::scalar::{Complex64, Field};
use crate::tol::{EIG_CONVERGENCE_TOL, SIGNATURE_IDENTITY_TOL, UNIMODULAR_TOL};

/// Seed vector with unimodular entries; real seeds have entries +-1.
///
/// Entries are snapped to exact unit modulus on construction (inputs may
/// deviate by at most [`UNIMODULAR_TOL`]), so matrices derived from a seed
/// carry exactly unimodular entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SeedVector {
    entries: Vec<Complex64>,
    field: Field,
}

impl SeedVector {
    pub fn new(entries: Vec<Complex64>) -> Result<SeedVector> {
        if entries.len() < 2 {
            return Err(Error::SeedTooShort { len: entries.len() });
        }
        let mut snapped = Vec::with_capacity(entries.len());
        let mut field = Field::Real;
        for (index, z) in entries.iter().enumerate() {
            let modulus = z.norm();
            if !modulus.is_finite() || (modulus - 1.0).abs() > UNIMODULAR_TOL {
                return Err(Error::NonUnimodularEntry { index, modulus });
            }
            let unit = z / modulus;
            field = field.join(Field::of(unit));
            snapped.push(unit);
        }
        Ok(SeedVector {
            entries: snapped,
            field,
        })
    }

    /// Real seed from signs; entries must be +-1.
    pub fn from_signs(signs: &[f64]) -> Result<SeedVector> {
        SeedVector::new(signs.iter().map(|&s| Complex64::new(s, 0.0)).collect())
    }

    /// The all-ones seed of the given length, whose signature matrix has
    /// every off-diagonal entry equal to -1. This is the canonical seed of
    /// the simplex ETF with all pairwise inner products -1/d.
    pub fn all_ones(len: usize) -> Result<SeedVector> {
        SeedVector::new(vec![Complex64::new(1.0, 0.0); len])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Frame dimension d of the (d+1, d) ETF this seed generates.
    pub fn d(&self) -> usize {
        self.entries.len() - 1
    }
}

/// Hermitian matrix with zero diagonal and unimodular off-diagonal entries
/// satisfying the quadratic identity `Q^2 = (1-d)Q + dI`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignatureMatrix {
    q: Matrix,
}

impl SignatureMatrix {
    /// Validate an arbitrary matrix as a signature matrix: square,
    /// Hermitian, zero diagonal, unimodular off-diagonal.
    pub fn new(q: Matrix) -> Result<SignatureMatrix> {
        if !q.is_square() {
            return Err(Error::NotSquare {
                op: "signature",
                rows: q.rows(),
                cols: q.cols(),
            });
        }
        let res = q.hermitian_residual();
        if res > UNIMODULAR_TOL * q.frobenius_norm().max(1.0) {
            return Err(Error::NotHermitian {
                residual: res,
                tol: UNIMODULAR_TOL,
            });
        }
        for i in 0..q.rows() {
            for j in 0..q.cols() {
                let modulus = q.get(i, j).norm();
                let bad = if i == j {
                    modulus > UNIMODULAR_TOL
                } else {
                    (modulus - 1.0).abs() > UNIMODULAR_TOL
                };
                if bad {
                    return Err(Error::InvalidSignature {
                        reason: format!("entry ({i}, {j}) has modulus {modulus}"),
                    });
                }
            }
        }
        Ok(SignatureMatrix { q })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.q
    }

    pub fn size(&self) -> usize {
        self.q.rows()
    }
}

/// The signature matrix `Q = I - x x*` of the seed.
///
/// Diagonal entries are exactly zero and off-diagonal entries exactly
/// unimodular because the seed stores unit-modulus entries.
pub fn signature_from_seed(x: &SeedVector) -> SignatureMatrix {
    let n = x.len();
    let mut q = Matrix::zeros(n, n, x.field());
    for i in 0..n {
        for j in 0..n {
            if i != j {
                q.set(i, j, -(x.entries()[i] * x.entries()[j].conj()));
            }
        }
    }
    SignatureMatrix { q }
}

/// The ETF Gram matrix `G = I + Q/d`.
pub fn gram_from_signature(q: &SignatureMatrix, d: usize) -> Result<Matrix> {
    if q.size() != d + 1 {
        return Err(Error::SignatureSizeMismatch {
            size: q.size(),
            d,
            expected: d + 1,
        });
    }
    Matrix::identity(d + 1, q.matrix().field()).add(&q.matrix().scale(1.0 / d as f64))
}

/// Residual of the signature identity `Q^2 = (1-d)Q + dI`.
#[derive(Debug, Clone, Copy)]
pub struct SignatureIdentityReport {
    pub residual: f64,
    pub passes: bool,
}

pub fn verify_signature_identity(
    q: &SignatureMatrix,
    d: usize,
) -> Result<SignatureIdentityReport> {
    if q.size() != d + 1 {
        return Err(Error::SignatureSizeMismatch {
            size: q.size(),
            d,
            expected: d + 1,
        });
    }
    let m = q.matrix();
    let qq = m.matmul(m)?;
    let expected = m
        .scale(1.0 - d as f64)
        .add(&Matrix::identity(d + 1, m.field()).scale(d as f64))?;
    let residual = qq.frobenius_distance(&expected)?;
    Ok(SignatureIdentityReport {
        residual,
        passes: residual <= SIGNATURE_IDENTITY_TOL,
    })
}

/// Construct the (d+1, d) ETF by diagonalizing the Gram matrix.
///
/// The frame vectors are the rows of `U sqrt(D)` with the single
/// zero-eigenvalue column dropped; the stored frame matrix is the
/// conjugate transpose of that, so its Gram `F* F` reproduces `G`
/// entrywise. Any global unitary applied on the left gives an
/// equivalent frame.
pub fn etf_via_eig(x: &SeedVector) -> Result<Frame> {
    let d = x.d();
    let q = signature_from_seed(x);
    let g = gram_from_signature(&q, d)?;
    let dec = hermitian_eig(&g, EIG_CONVERGENCE_TOL)?;
    // Eigenvalues are (d+1)/d with multiplicity d, then a trailing zero.
    let mut scaled = Matrix::zeros(d + 1, d, x.field());
    for j in 0..d {
        let root = dec.values[j].max(0.0).sqrt();
        for i in 0..d + 1 {
            scaled.set(i, j, dec.vectors.get(i, j) * root);
        }
    }
    Frame::new(scaled.conj_transpose())
}

/// Construct the same ETF without an eigensolve.
///
/// The vectors `y_j = [x_1/j, .., x_j/j, -x_{j+1}, 0, ..]` form an
/// orthogonal eigenbasis of the Gram matrix for the eigenvalue (d+1)/d;
/// scaling by `c_j = sqrt((d+1)/d) * sqrt(j/(j+1))` and reading frame
/// vectors off the rows costs O(d) arithmetic per vector. The formula is
/// stated for real seeds; it holds verbatim for unimodular complex seeds
/// (each |x_m|^2 = 1), which the tests verify numerically.
pub fn etf_fast_path(x: &SeedVector) -> Result<Frame> {
    let d = x.d();
    let entries = x.entries();
    let mut v = Matrix::zeros(d + 1, d, x.field());
    for j in 1..=d {
        let c_j = (((d + 1) as f64) / d as f64).sqrt() * (j as f64 / (j + 1) as f64).sqrt();
        let head = c_j / j as f64;
        for (m, x_m) in entries.iter().take(j).enumerate() {
            v.set(m, j - 1, x_m * head);
        }
        v.set(j, j - 1, entries[j] * -c_j);
    }
    Frame::new(v.conj_transpose())
}

/// The simplex ETF of d+1 unit vectors in dimension d, with every pairwise
/// inner product equal to -1/d. Built from the all-ones seed on the fast
/// path.
pub fn simplex_etf(d: usize) -> Result<Frame> {
    etf_fast_path(&SeedVector::all_ones(d + 1)?)
}

//! Deterministic Hermitian eigendecomposition by cyclic Jacobi rotations.
//!
//! Each rotation annihilates one off-diagonal pair (p, q). In the complex
//! case the entry's phase is stripped by a diagonal unitary first, reducing
//! the 2x2 subproblem to the real symmetric one, so the combined rotation is
//!
//! ```text
//! R[p][p] = c      R[p][q] = -s
//! R[q][p] = s*w    R[q][q] = c*w      w = conj(a_pq) / |a_pq|
//! ```
//!
//! Sweeps run in a fixed cyclic order until the largest off-diagonal modulus
//! falls below `tol * |A|`, so identical input bytes give identical output.
//! Real input stays exactly real: `w` is then a bare sign and no operation
//! can produce a nonzero imaginary part.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Complex64, Field};
use crate::tol::{EIG_MAX_SWEEPS, HERMITICITY_TOL};

/// Eigenvalues in descending order, paired with orthonormal eigenvectors.
///
/// `vectors` holds the eigenvectors as columns; column `i` belongs to
/// `values[i]`. Within a degenerate cluster the columns come out in the
/// order the Jacobi iteration produced them, and nothing downstream may
/// rely on a particular basis of such a cluster.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

impl EigenDecomposition {
    /// Rebuild `U D U*` from the stored factors.
    pub fn reconstruct(&self) -> Result<Matrix> {
        let n = self.values.len();
        let mut ud = self.vectors.clone();
        for j in 0..n {
            for i in 0..n {
                ud.set(i, j, ud.get(i, j) * self.values[j]);
            }
        }
        ud.matmul(&self.vectors.conj_transpose())
    }
}

/// Diagonalize a Hermitian matrix.
///
/// `tol` is the convergence threshold: sweeps stop once every off-diagonal
/// modulus is at most `tol * |A|` (Frobenius). Fails explicitly if the
/// input is not Hermitian within [`HERMITICITY_TOL`] or if the iteration
/// has not converged after [`EIG_MAX_SWEEPS`] sweeps.
pub fn hermitian_eig(a: &Matrix, tol: f64) -> Result<EigenDecomposition> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            op: "hermitian_eig",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let z = a.get(i, j);
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite {
                    op: "hermitian_eig",
                    row: i,
                    col: j,
                });
            }
        }
    }
    let n = a.rows();
    let norm = a.frobenius_norm();
    let herm_tol = HERMITICITY_TOL * norm.max(1.0);
    let residual = a.hermitian_residual();
    if residual > herm_tol {
        return Err(Error::NotHermitian {
            residual,
            tol: herm_tol,
        });
    }

    // Work on the exactly symmetrized copy; the diagonal becomes exactly real.
    let mut b = Matrix::zeros(n, n, a.field());
    for i in 0..n {
        for j in 0..n {
            let sym = (a.get(i, j) + a.get(j, i).conj()) * 0.5;
            b.set(i, j, if i == j { Complex64::new(sym.re, 0.0) } else { sym });
        }
    }
    let mut v = Matrix::identity(n, a.field());

    let threshold = tol * norm;
    let mut converged = norm == 0.0 || n < 2;
    if !converged {
        for _sweep in 0..EIG_MAX_SWEEPS {
            if b.max_offdiag_modulus() <= threshold {
                converged = true;
                break;
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    rotate(&mut b, &mut v, p, q, threshold);
                }
            }
        }
        converged = converged || b.max_offdiag_modulus() <= threshold;
    }
    if !converged {
        return Err(Error::EigDidNotConverge {
            sweeps: EIG_MAX_SWEEPS,
            offdiag: b.max_offdiag_modulus(),
        });
    }

    // Descending eigenvalue order; the sort is stable so degenerate
    // clusters keep the iteration's column order.
    let raw: Vec<f64> = (0..n).map(|i| b.get(i, i).re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| raw[j].partial_cmp(&raw[i]).expect("finite eigenvalues"));

    let values: Vec<f64> = order.iter().map(|&i| raw[i]).collect();
    let mut vectors = Matrix::zeros(n, n, a.field());
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            vectors.set(row, new_col, v.get(row, old_col));
        }
    }
    Ok(EigenDecomposition { values, vectors })
}

/// One Jacobi rotation annihilating the (p, q) entry of `b`, accumulated
/// into the eigenvector matrix `v`. Entries already at or below `skip`
/// are left alone.
fn rotate(b: &mut Matrix, v: &mut Matrix, p: usize, q: usize, skip: f64) {
    let apq = b.get(p, q);
    let mag = apq.norm();
    if mag <= skip {
        return;
    }
    // Phase factor turning the (p, q) entry real; a bare sign in the real
    // field so real matrices never pick up imaginary parts.
    let w = if b.field() == Field::Real {
        Complex64::new(apq.re.signum(), 0.0)
    } else {
        apq.conj() / mag
    };

    let app = b.get(p, p).re;
    let aqq = b.get(q, q).re;
    let tau = (aqq - app) / (2.0 * mag);
    // Smaller root of t^2 - 2*tau*t - 1 = 0, for the rotation angle <= 45 deg.
    let t = if tau >= 0.0 {
        -1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let n = b.rows();
    let sw = w * s;
    let cw = w * c;

    // B <- B R (columns p and q).
    for i in 0..n {
        let bip = b.get(i, p);
        let biq = b.get(i, q);
        b.set(i, p, bip * c + biq * sw);
        b.set(i, q, bip * -s + biq * cw);
    }
    // B <- R* B (rows p and q).
    let swc = sw.conj();
    let cwc = cw.conj();
    for j in 0..n {
        let bpj = b.get(p, j);
        let bqj = b.get(q, j);
        b.set(p, j, bpj * c + bqj * swc);
        b.set(q, j, bpj * -s + bqj * cwc);
    }
    // The rotation makes these exactly zero and the diagonal real.
    b.set(p, q, Complex64::new(0.0, 0.0));
    b.set(q, p, Complex64::new(0.0, 0.0));
    let dpp = b.get(p, p).re;
    let dqq = b.get(q, q).re;
    b.set(p, p, Complex64::new(dpp, 0.0));
    b.set(q, q, Complex64::new(dqq, 0.0));

    // V <- V R.
    for i in 0..n {
        let vip = v.get(i, p);
        let viq = v.get(i, q);
        v.set(i, p, vip * c + viq * sw);
        v.set(i, q, vip * -s + viq * cw);
    }
}

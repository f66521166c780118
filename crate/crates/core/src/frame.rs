//! A finite vector system stored as the columns of a d x N matrix.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Complex64, Field};

/// `N` vectors `f_1 .. f_N` in dimension `d`, the columns of `matrix`.
///
/// Every construction in this crate produces unit-norm columns with
/// `d <= N` (verified by the tests of each construction), but the type
/// itself accepts any finite column system: certification has to be able
/// to load an arbitrary imported document and *report* deviations such as
/// non-unit norms rather than refuse to look at them.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    matrix: Matrix,
}

impl Frame {
    pub fn new(matrix: Matrix) -> Result<Frame> {
        if matrix.cols() == 0 {
            return Err(Error::EmptyFrame);
        }
        if !matrix.is_finite() {
            return Err(Error::NonFinite {
                op: "frame",
                row: 0,
                col: 0,
            });
        }
        Ok(Frame { matrix })
    }

    /// Dimension of the ambient space.
    pub fn d(&self) -> usize {
        self.matrix.rows()
    }

    /// Number of vectors.
    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn vector(&self, i: usize) -> Vec<Complex64> {
        self.matrix.column(i)
    }

    /// The N x N Gram matrix `F* F` of pairwise inner products.
    pub fn gram(&self) -> Matrix {
        self.matrix
            .conj_transpose()
            .matmul(&self.matrix)
            .expect("shapes agree by construction")
    }

    /// The d x d frame operator `F F*`.
    pub fn frame_operator(&self) -> Matrix {
        self.matrix
            .matmul(&self.matrix.conj_transpose())
            .expect("shapes agree by construction")
    }

    pub fn column_norms(&self) -> Vec<f64> {
        (0..self.n()).map(|j| self.matrix.column_norm(j)).collect()
    }

    /// Largest deviation of a column norm from 1.
    pub fn unit_norm_residual(&self) -> f64 {
        self.column_norms()
            .into_iter()
            .map(|norm| (norm - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

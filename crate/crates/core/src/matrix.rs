//! Dense row-major matrices over a tagged real or complex field.
//!
//! Operations are deterministic: sums always run left to right over the
//! inner index, so identical inputs produce identical output bytes.

use crate::error::{Error, Result};
use crate::scalar::{Complex64, Field};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: Field) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Matrix {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// The n x n all-ones matrix J.
    pub fn all_ones(n: usize, field: Field) -> Matrix {
        Matrix {
            rows: n,
            cols: n,
            field,
            data: vec![Complex64::new(1.0, 0.0); n * n],
        }
    }

    /// Build from a generator over (row, col). The field tag is taken at
    /// face value; entries must be finite and must not carry an imaginary
    /// part when the tag is real.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: Field,
        mut f: impl FnMut(usize, usize) -> Complex64,
    ) -> Result<Matrix> {
        let mut m = Matrix::zeros(rows, cols, field);
        for i in 0..rows {
            for j in 0..cols {
                let z = f(i, j);
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite {
                        op: "from_fn",
                        row: i,
                        col: j,
                    });
                }
                m.set(i, j, z);
            }
        }
        if field == Field::Real {
            debug_assert!(m.data.iter().all(|z| z.im == 0.0));
        }
        Ok(m)
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse("ragged rows".into()));
        }
        Matrix::from_fn(r, c, Field::Real, |i, j| Complex64::new(rows[i][j], 0.0))
    }

    pub fn from_complex_rows(rows: &[Vec<Complex64>]) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse("ragged rows".into()));
        }
        let field = if rows.iter().flatten().all(|z| z.im == 0.0) {
            Field::Real
        } else {
            Field::Complex
        };
        Matrix::from_fn(r, c, field, |i, j| rows[i][j])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.cols + j] = v;
    }

    /// Retag a real matrix as complex (entries are unchanged).
    pub fn into_complex(mut self) -> Matrix {
        self.field = Field::Complex;
        self
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn column_norm(&self, j: usize) -> f64 {
        let mut s = 0.0;
        for i in 0..self.rows {
            s += self.get(i, j).norm_sqr();
        }
        s.sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Standard product with a fixed left-to-right summation order over
    /// the inner index.
    pub fn matmul(&self, b: &Matrix) -> Result<Matrix> {
        if self.cols != b.rows {
            return Err(Error::ShapeMismatch {
                op: "matmul",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: b.rows,
                rhs_cols: b.cols,
            });
        }
        let field = self.field.join(b.field);
        let mut out = Matrix::zeros(self.rows, b.cols, field);
        for i in 0..self.rows {
            for j in 0..b.cols {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..self.cols {
                    acc += self.get(i, k) * b.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Conjugate transpose; entry (i, j) is the conjugate of (j, i).
    pub fn conj_transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn add(&self, b: &Matrix) -> Result<Matrix> {
        self.zip_entries(b, "add", |x, y| x + y)
    }

    pub fn sub(&self, b: &Matrix) -> Result<Matrix> {
        self.zip_entries(b, "sub", |x, y| x - y)
    }

    fn zip_entries(
        &self,
        b: &Matrix,
        op: &'static str,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<Matrix> {
        if self.rows != b.rows || self.cols != b.cols {
            return Err(Error::ShapeMismatch {
                op,
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: b.rows,
                rhs_cols: b.cols,
            });
        }
        let mut out = Matrix::zeros(self.rows, self.cols, self.field.join(b.field));
        for (idx, (x, y)) in self.data.iter().zip(b.data.iter()).enumerate() {
            out.data[idx] = f(*x, *y);
        }
        Ok(out)
    }

    pub fn scale(&self, s: f64) -> Matrix {
        let mut out = self.clone();
        for z in out.data.iter_mut() {
            *z *= s;
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        let n = self.rows.min(self.cols);
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            acc += self.get(i, i);
        }
        acc
    }

    pub fn frobenius_norm(&self) -> f64 {
        let mut s = 0.0;
        for z in &self.data {
            s += z.norm_sqr();
        }
        s.sqrt()
    }

    /// Square root of the summed squared entry-modulus differences.
    pub fn frobenius_distance(&self, b: &Matrix) -> Result<f64> {
        if self.rows != b.rows || self.cols != b.cols {
            return Err(Error::ShapeMismatch {
                op: "frobenius_distance",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: b.rows,
                rhs_cols: b.cols,
            });
        }
        let mut s = 0.0;
        for (x, y) in self.data.iter().zip(b.data.iter()) {
            s += (x - y).norm_sqr();
        }
        Ok(s.sqrt())
    }

    /// Largest deviation from Hermitian symmetry, max |a_ij - conj(a_ji)|.
    pub fn hermitian_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols.min(self.rows) {
                let dev = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(dev);
            }
        }
        worst
    }

    pub fn max_offdiag_modulus(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    worst = worst.max(self.get(i, j).norm());
                }
            }
        }
        worst
    }
}

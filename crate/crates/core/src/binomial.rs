//! The subset-sum construction of k-angle tight frames.
//!
//! Starting from the simplex ETF of d+1 vectors with pairwise inner
//! products -1/d, summing each size-k subset of the vectors and
//! normalizing yields `d' = C(d+1, k)` unit vectors forming a tight frame
//! whose Gram entries depend only on the intersection size
//! `l = |Lambda_i n Lambda_j|`:
//!
//! ```text
//! <g_i, g_j> = (l(d+1) - k^2) / (k(d+1-k)),   0 <= l <= k-1,
//! ```
//!
//! so at most k distinct angles occur. The realized count can collapse
//! below k (at d = 3, k = 2 the six vectors pair up antipodally), which
//! the analysis module measures rather than assumes.

use crate::error::{Error, Result};
use crate::etf::simplex_etf;
use crate::frame::Frame;
use crate::matrix::Matrix;
use crate::scalar::{Complex64, Field};
use crate::tol::DEFAULT_SUBSET_CAP;

/// Exact binomial coefficient with the convention `C(n, -1) = 0`,
/// saturating at `u128::MAX` (far beyond any cap used here).
pub fn binomial_coefficient(n: usize, k: isize) -> u128 {
    if k < 0 || k as usize > n {
        return 0;
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = match acc.checked_mul((n - k + i) as u128) {
            Some(v) => v / i as u128,
            None => return u128::MAX,
        };
    }
    acc
}

/// All size-k subsets of {0, .., d} in lexicographic order.
#[derive(Debug, Clone)]
pub struct SubsetSystem {
    d: usize,
    k: usize,
    subsets: Vec<Vec<usize>>,
}

impl SubsetSystem {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of subsets, `C(d+1, k)`.
    pub fn d_prime(&self) -> usize {
        self.subsets.len()
    }

    /// Subsets as sorted 0-based index lists.
    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    /// `|Lambda_i n Lambda_j|` by merging the two sorted lists.
    pub fn intersection_size(&self, i: usize, j: usize) -> usize {
        let (a, b) = (&self.subsets[i], &self.subsets[j]);
        let (mut ai, mut bi, mut count) = (0, 0, 0);
        while ai < a.len() && bi < b.len() {
            match a[ai].cmp(&b[bi]) {
                std::cmp::Ordering::Less => ai += 1,
                std::cmp::Ordering::Greater => bi += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    ai += 1;
                    bi += 1;
                }
            }
        }
        count
    }
}

/// Enumerate the size-k subsets of a (d+1)-element ground set under the
/// default cap of [`DEFAULT_SUBSET_CAP`].
pub fn enumerate_subsets(d: usize, k: usize) -> Result<SubsetSystem> {
    enumerate_subsets_capped(d, k, DEFAULT_SUBSET_CAP)
}

pub fn enumerate_subsets_capped(d: usize, k: usize, cap: u64) -> Result<SubsetSystem> {
    if k == 0 || k > d {
        return Err(Error::SubsetSizeOutOfRange { k, d });
    }
    let n = d + 1;
    let d_prime = binomial_coefficient(n, k as isize);
    if d_prime > cap as u128 {
        return Err(Error::SubsetCapExceeded { n, k, d_prime, cap });
    }
    let mut subsets = Vec::with_capacity(d_prime as usize);
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        subsets.push(current.clone());
        // Rightmost position that can still advance.
        let mut pos = k;
        while pos > 0 && current[pos - 1] == n - k + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
        current[pos - 1] += 1;
        for j in pos..k {
            current[j] = current[j - 1] + 1;
        }
    }
    debug_assert_eq!(subsets.len() as u128, d_prime);
    Ok(SubsetSystem { d, k, subsets })
}

/// Binary (d+1) x d' matrix whose column i is the indicator of subset i.
#[derive(Debug, Clone)]
pub struct IncidenceMatrix {
    matrix: Matrix,
    rows: usize,
}

impl IncidenceMatrix {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `K K^T` in exact integer arithmetic: entry (i, j) counts the
    /// subsets containing both i and j.
    pub fn pair_counts(&self) -> Vec<Vec<u64>> {
        let mut counts = vec![vec![0u64; self.rows]; self.rows];
        for col in 0..self.matrix.cols() {
            let support: Vec<usize> = (0..self.rows)
                .filter(|&i| self.matrix.get(i, col).re == 1.0)
                .collect();
            for &a in &support {
                for &b in &support {
                    counts[a][b] += 1;
                }
            }
        }
        counts
    }
}

pub fn incidence_matrix(s: &SubsetSystem) -> IncidenceMatrix {
    let rows = s.d() + 1;
    let mut matrix = Matrix::zeros(rows, s.d_prime(), Field::Real);
    for (col, subset) in s.subsets().iter().enumerate() {
        for &row in subset {
            matrix.set(row, col, Complex64::new(1.0, 0.0));
        }
    }
    IncidenceMatrix { matrix, rows }
}

/// The raw subset sums `F K` before normalization. Every column has norm
/// `sqrt(k(d+1-k)/d)`.
pub fn subset_sum_matrix(d: usize, k: usize) -> Result<Matrix> {
    let system = enumerate_subsets(d, k)?;
    let incidence = incidence_matrix(&system);
    let base = simplex_etf(d)?;
    base.matrix().matmul(incidence.matrix())
}

/// The k-angle tight frame of `C(d+1, k)` normalized subset sums over the
/// simplex ETF. Column order follows the lexicographic subset order.
pub fn binomial_frame(d: usize, k: usize) -> Result<Frame> {
    let sums = subset_sum_matrix(d, k)?;
    let mut normalized = sums.clone();
    for j in 0..sums.cols() {
        let norm = sums.column_norm(j);
        for i in 0..sums.rows() {
            normalized.set(i, j, sums.get(i, j) / norm);
        }
    }
    Frame::new(normalized)
}

/// Closed-form inner product `(l(d+1) - k^2) / (k(d+1-k))` between two
/// subset-sum vectors with intersection size l; the oracle the constructed
/// Gram entries are checked against.
pub fn predicted_inner_product(d: usize, k: usize, l: usize) -> Result<f64> {
    if k == 0 || k > d {
        return Err(Error::SubsetSizeOutOfRange { k, d });
    }
    if l >= k {
        return Err(Error::IntersectionOutOfRange { l, max: k - 1 });
    }
    let numerator = (l * (d + 1)) as f64 - (k * k) as f64;
    Ok(numerator / (k * (d + 1 - k)) as f64)
}

/// The frame potential computed two ways; the double sum over pairwise
/// inner products and the trace of the squared Gram matrix must agree.
#[derive(Debug, Clone, Copy)]
pub struct FramePotential {
    pub double_sum: f64,
    pub gram_trace: f64,
}

impl FramePotential {
    pub fn value(&self) -> f64 {
        self.double_sum
    }

    pub fn agreement(&self) -> f64 {
        (self.double_sum - self.gram_trace).abs()
    }

    /// The tight-frame minimum N^2/d for N unit vectors in dimension d.
    pub fn minimum(n: usize, d: usize) -> f64 {
        (n * n) as f64 / d as f64
    }
}

pub fn frame_potential(frame: &Frame) -> FramePotential {
    let m = frame.matrix();
    let (d, n) = (frame.d(), frame.n());
    let mut double_sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            let mut inner = Complex64::new(0.0, 0.0);
            for row in 0..d {
                inner += m.get(row, i).conj() * m.get(row, j);
            }
            double_sum += inner.norm_sqr();
        }
    }
    let gram = frame.gram();
    let gram_trace = gram
        .matmul(&gram)
        .expect("gram is square")
        .trace()
        .re;
    FramePotential {
        double_sum,
        gram_trace,
    }
}

//! Frame certification: tightness, coherence against the Welch bound,
//! angle spectrum, Gram decomposition into binary indicator matrices, and
//! the graph-theoretic predicates attached to those decompositions.
//!
//! Two grouping conventions coexist and both are reported. The signed
//! decomposition groups off-diagonal Gram values as they are, giving
//! `G = I + sum c_i Q_i` with distinct nonzero real coefficients; the
//! modulus decomposition groups by absolute value, matching the counting
//! of "k-angle" (zero counts as an angle), and decomposes the entrywise
//! modulus matrix `|G| = I + sum c_i Q_i` instead.

use serde::Serialize;

use crate::binomial::{frame_potential, FramePotential};
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::matrix::Matrix;
use crate::scalar::{Complex64, Field};
use crate::tol::DEFAULT_CERTIFY_TOL;

/// Welch bound `sqrt((N-d) / (d(N-1)))` on the coherence of N unit
/// vectors in dimension d; zero when N = d.
pub fn welch_bound(n: usize, d: usize) -> Result<f64> {
    if d < 1 || n < d {
        return Err(Error::WelchUndefined { n, d });
    }
    if n == d {
        return Ok(0.0);
    }
    Ok((((n - d) as f64) / ((d * (n - 1)) as f64)).sqrt())
}

/// Largest off-diagonal Gram modulus.
pub fn coherence(frame: &Frame) -> Result<f64> {
    if frame.n() < 2 {
        return Err(Error::TooFewVectors {
            n: frame.n(),
            need: 2,
        });
    }
    Ok(frame.gram().max_offdiag_modulus())
}

/// Maximum number of equiangular lines in dimension d: d(d+1)/2 over the
/// reals, d^2 over the complex numbers.
pub fn max_equiangular_lines(d: usize, field: Field) -> usize {
    match field {
        Field::Real => d * (d + 1) / 2,
        Field::Complex => d * d,
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TightnessCheck {
    pub is_tight: bool,
    /// Estimated as trace(F F*) / d; equals N/d for unit-normed tight frames.
    pub frame_bound: f64,
    pub residual: f64,
    pub tol: f64,
}

/// Test `F F* = bound * I` with relative residual `tol * bound`.
pub fn check_tight(frame: &Frame, tol: f64) -> TightnessCheck {
    let op = frame.frame_operator();
    let d = frame.d();
    let frame_bound = op.trace().re / d as f64;
    let target = Matrix::identity(d, frame.field()).scale(frame_bound);
    let residual = op
        .frobenius_distance(&target)
        .expect("frame operator is d x d");
    TightnessCheck {
        is_tight: residual <= tol * frame_bound.abs(),
        frame_bound,
        residual,
        tol,
    }
}

/// Distinct off-diagonal Gram moduli under single-linkage clustering:
/// sorted values belong to one cluster while consecutive gaps stay within
/// `tol`. Zero is a value like any other, so an orthonormal-plus-Hadamard
/// union has spectrum {0, 1/sqrt(d)} and counts as 2-angle.
#[derive(Debug, Clone, Serialize)]
pub struct AngleSpectrum {
    /// Cluster means, ascending.
    pub values: Vec<f64>,
    /// Pair count per value; sums to N(N-1)/2.
    pub multiplicities: Vec<usize>,
    pub tol: f64,
}

impl AngleSpectrum {
    /// The realized angle count k.
    pub fn k_hat(&self) -> usize {
        self.values.len()
    }
}

impl std::fmt::Display for AngleSpectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "k = {}:", self.k_hat())?;
        for (v, m) in self.values.iter().zip(&self.multiplicities) {
            write!(f, " {v:.12} x{m}")?;
        }
        Ok(())
    }
}

pub fn angle_spectrum(frame: &Frame, tol: f64) -> Result<AngleSpectrum> {
    if frame.n() < 2 {
        return Err(Error::TooFewVectors {
            n: frame.n(),
            need: 2,
        });
    }
    Ok(spectrum_of_gram(&frame.gram(), tol))
}

fn spectrum_of_gram(gram: &Matrix, tol: f64) -> AngleSpectrum {
    let n = gram.rows();
    let mut moduli = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            moduli.push(gram.get(i, j).norm());
        }
    }
    let clusters = cluster_sorted(&mut moduli, tol);
    AngleSpectrum {
        values: clusters.iter().map(|c| c.mean).collect(),
        multiplicities: clusters.iter().map(|c| c.count).collect(),
        tol,
    }
}

struct Cluster {
    lo: f64,
    hi: f64,
    mean: f64,
    count: usize,
}

impl Cluster {
    fn contains(&self, v: f64) -> bool {
        v >= self.lo && v <= self.hi
    }
}

/// Single-linkage clustering of a value list with absolute gap `tol`.
fn cluster_sorted(values: &mut [f64], tol: f64) -> Vec<Cluster> {
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite moduli"));
    let mut clusters: Vec<Cluster> = Vec::new();
    for &v in values.iter() {
        match clusters.last_mut() {
            Some(open) if v - open.hi <= tol => {
                open.hi = v;
                open.mean += v;
                open.count += 1;
            }
            _ => clusters.push(Cluster {
                lo: v,
                hi: v,
                mean: v,
                count: 1,
            }),
        }
    }
    for c in clusters.iter_mut() {
        c.mean /= c.count as f64;
    }
    clusters
}

/// Everything the certifier measures about a frame. Each boolean verdict
/// is backed by a stored residual and the tolerance it was compared to.
#[derive(Debug, Clone, Serialize)]
pub struct CertificationReport {
    pub d: usize,
    pub n: usize,
    pub field: Field,
    pub tol: f64,
    pub is_unit_normed: bool,
    pub unit_norm_residual: f64,
    pub is_tight: bool,
    pub frame_bound: f64,
    pub tightness_residual: f64,
    pub coherence: f64,
    /// Absent when N < d, where the bound is undefined.
    pub welch_bound: Option<f64>,
    pub welch_gap: Option<f64>,
    pub attains_welch: bool,
    pub spectrum: AngleSpectrum,
    pub frame_potential: f64,
    pub frame_potential_trace_form: f64,
    pub frame_potential_minimum: f64,
    pub max_equiangular_lines: usize,
    /// Pairs with inner product -1 (the vectors are negatives of each other).
    pub antipodal_pairs: usize,
    /// Pairs with inner product +1 (coinciding vectors kept as distinct
    /// frame elements).
    pub duplicate_pairs: usize,
    pub notes: Vec<String>,
}

/// Certify a frame; verdict booleans use the single tolerance `tol`
/// (Welch attainment gap, unit-norm deviation, relative tightness
/// residual, spectrum clustering gap).
pub fn certify(frame: &Frame, tol: f64) -> CertificationReport {
    let (d, n) = (frame.d(), frame.n());
    let gram = frame.gram();
    let mut notes = Vec::new();

    let unit_norm_residual = frame.unit_norm_residual();
    let tight = check_tight(frame, tol);

    let coherence = if n >= 2 {
        gram.max_offdiag_modulus()
    } else {
        notes.push("single vector: coherence and spectrum are trivial".to_string());
        0.0
    };
    let welch = welch_bound(n, d).ok();
    if welch.is_none() {
        notes.push(format!(
            "N = {n} < d = {d}: Welch bound undefined, spanning impossible"
        ));
    }
    let welch_gap = welch.map(|w| (coherence - w).abs());
    let attains_welch = welch_gap.is_some_and(|gap| gap <= tol);

    let spectrum = if n >= 2 {
        spectrum_of_gram(&gram, tol)
    } else {
        AngleSpectrum {
            values: Vec::new(),
            multiplicities: Vec::new(),
            tol,
        }
    };

    let mut antipodal_pairs = 0;
    let mut duplicate_pairs = 0;
    for i in 0..n {
        for j in i + 1..n {
            let z = gram.get(i, j);
            if z.im.abs() <= tol {
                if (z.re + 1.0).abs() <= tol {
                    antipodal_pairs += 1;
                } else if (z.re - 1.0).abs() <= tol {
                    duplicate_pairs += 1;
                }
            }
        }
    }
    if antipodal_pairs > 0 {
        notes.push(format!(
            "{antipodal_pairs} antipodal vector pair(s) with inner product -1"
        ));
    }
    if duplicate_pairs > 0 {
        notes.push(format!(
            "{duplicate_pairs} coinciding vector pair(s) with inner product +1"
        ));
    }

    let fp = frame_potential(frame);

    CertificationReport {
        d,
        n,
        field: frame.field(),
        tol,
        is_unit_normed: unit_norm_residual <= tol,
        unit_norm_residual,
        is_tight: tight.is_tight,
        frame_bound: tight.frame_bound,
        tightness_residual: tight.residual,
        coherence,
        welch_bound: welch,
        welch_gap,
        attains_welch,
        spectrum,
        frame_potential: fp.double_sum,
        frame_potential_trace_form: fp.gram_trace,
        frame_potential_minimum: FramePotential::minimum(n, d),
        max_equiangular_lines: max_equiangular_lines(d, frame.field()),
        antipodal_pairs,
        duplicate_pairs,
        notes,
    }
}

impl std::fmt::Display for CertificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn yes_no(b: bool) -> &'static str {
            if b {
                "yes"
            } else {
                "no"
            }
        }
        writeln!(f, "({}, {}) {} frame (tol {:e})", self.n, self.d, self.field, self.tol)?;
        writeln!(
            f,
            "  unit-normed      {:<4} max deviation {:.3e}",
            yes_no(self.is_unit_normed),
            self.unit_norm_residual
        )?;
        writeln!(
            f,
            "  tight            {:<4} frame bound {:.12}, residual {:.3e}",
            yes_no(self.is_tight),
            self.frame_bound,
            self.tightness_residual
        )?;
        writeln!(f, "  coherence        {:.12}", self.coherence)?;
        match self.welch_bound {
            Some(w) => writeln!(f, "  welch bound      {w:.12}")?,
            None => writeln!(f, "  welch bound      undefined (N < d)")?,
        }
        writeln!(
            f,
            "  attains welch    {:<4} gap {}",
            yes_no(self.attains_welch),
            match self.welch_gap {
                Some(g) => format!("{g:.3e}"),
                None => "-".to_string(),
            }
        )?;
        writeln!(f, "  angle spectrum   {}", self.spectrum)?;
        writeln!(
            f,
            "  frame potential  {:.12} (trace form {:.12}, minimum N^2/d = {:.12})",
            self.frame_potential, self.frame_potential_trace_form, self.frame_potential_minimum
        )?;
        writeln!(
            f,
            "  equiangular line bound for {} d={}: {}",
            self.field, self.d, self.max_equiangular_lines
        )?;
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}

/// How the off-diagonal entries were grouped into components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Grouping {
    /// Distinct signed values; recomposes the Gram matrix itself.
    Signed,
    /// Distinct moduli; recomposes the entrywise modulus matrix.
    Modulus,
}

/// `G = I + sum c_i Q_i` with distinct nonzero coefficients and disjoint
/// zero-diagonal symmetric binary components.
#[derive(Debug, Clone)]
pub struct GramDecomposition {
    pub grouping: Grouping,
    /// Distinct coefficients, ascending; never within `tol` of zero.
    pub coefficients: Vec<f64>,
    /// Component `i` marks the off-diagonal support of `coefficients[i]`.
    pub components: Vec<Matrix>,
    pub size: usize,
    pub tol: f64,
}

impl GramDecomposition {
    pub fn k(&self) -> usize {
        self.coefficients.len()
    }

    /// `I + sum c_i Q_i`; reproduces G (signed) or |G| (modulus).
    pub fn recompose(&self) -> Matrix {
        let mut out = Matrix::identity(self.size, Field::Real);
        for (c, q) in self.coefficients.iter().zip(&self.components) {
            out = out.add(&q.scale(*c)).expect("components share the size");
        }
        out
    }

    /// Indicator of off-diagonal positions covered by no component — the
    /// zero-modulus class Q_0 completing `I + sum_(i>=0) Q_i = J`.
    pub fn zero_indicator(&self) -> Matrix {
        let mut out = Matrix::zeros(self.size, self.size, Field::Real);
        for i in 0..self.size {
            for j in 0..self.size {
                if i == j {
                    continue;
                }
                let covered = self
                    .components
                    .iter()
                    .any(|q| q.get(i, j).re != 0.0);
                if !covered {
                    out.set(i, j, Complex64::new(1.0, 0.0));
                }
            }
        }
        out
    }
}

/// Decompose a real symmetric unit-diagonal Gram matrix by distinct
/// signed off-diagonal values. Values within `tol` of zero form no
/// component.
pub fn decompose_gram(g: &Matrix, tol: f64) -> Result<GramDecomposition> {
    decompose(g, tol, Grouping::Signed)
}

/// Same decomposition applied to the entrywise modulus matrix `|G|`,
/// the grouping under which "k-angle" counts its angles.
pub fn decompose_gram_moduli(g: &Matrix, tol: f64) -> Result<GramDecomposition> {
    decompose(g, tol, Grouping::Modulus)
}

fn decompose(g: &Matrix, tol: f64, grouping: Grouping) -> Result<GramDecomposition> {
    require_real(g, "decompose_gram")?;
    if !g.is_square() {
        return Err(Error::NotSquare {
            op: "decompose_gram",
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    let residual = g.hermitian_residual();
    if residual > tol {
        return Err(Error::NotSymmetric { residual });
    }
    let n = g.rows();
    for i in 0..n {
        let v = g.get(i, i).re;
        if (v - 1.0).abs() > tol {
            return Err(Error::NotUnitDiagonal { index: i, value: v });
        }
    }

    let mut values = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let v = g.get(i, j).re;
            values.push(match grouping {
                Grouping::Signed => v,
                Grouping::Modulus => v.abs(),
            });
        }
    }
    let clusters: Vec<Cluster> = cluster_sorted(&mut values, tol)
        .into_iter()
        .filter(|c| c.mean.abs() > tol)
        .collect();

    let mut components = Vec::with_capacity(clusters.len());
    for cluster in &clusters {
        let mut q = Matrix::zeros(n, n, Field::Real);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let v = match grouping {
                    Grouping::Signed => g.get(i, j).re,
                    Grouping::Modulus => g.get(i, j).re.abs(),
                };
                if cluster.contains(v) {
                    q.set(i, j, Complex64::new(1.0, 0.0));
                }
            }
        }
        components.push(q);
    }
    Ok(GramDecomposition {
        grouping,
        coefficients: clusters.iter().map(|c| c.mean).collect(),
        components,
        size: n,
        tol,
    })
}

fn require_real(m: &Matrix, op: &'static str) -> Result<()> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m.get(i, j).im != 0.0 {
                return Err(Error::ComplexUnsupported { op });
            }
        }
    }
    Ok(())
}

/// Seidel adjacency matrix `(1/alpha)(G - I)` of a real equiangular Gram
/// matrix: entries +-1 off the diagonal, zero on it. Entries are snapped
/// to exact signs after validating that every off-diagonal modulus equals
/// `alpha`.
pub fn seidel_from_gram(g: &Matrix, alpha: f64) -> Result<Matrix> {
    require_real(g, "seidel_from_gram")?;
    if !g.is_square() {
        return Err(Error::NotSquare {
            op: "seidel_from_gram",
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    if alpha <= DEFAULT_CERTIFY_TOL {
        return Err(Error::ParameterOutOfRange {
            op: "seidel_from_gram",
            value: 0,
            min: 1,
        });
    }
    let n = g.rows();
    let mut q = Matrix::zeros(n, n, Field::Real);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let v = g.get(i, j).re;
            if (v.abs() - alpha).abs() > DEFAULT_CERTIFY_TOL {
                return Err(Error::NotEquiangular {
                    row: i,
                    col: j,
                    modulus: v.abs(),
                    alpha,
                });
            }
            q.set(i, j, Complex64::new(v.signum(), 0.0));
        }
    }
    Ok(q)
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct RegularityCheck {
    pub is_regular: bool,
    /// Common row sum when regular.
    pub degree: Option<u64>,
}

/// Whether a zero-diagonal symmetric binary matrix is the adjacency
/// matrix of a regular graph.
pub fn is_regular(q: &Matrix) -> Result<RegularityCheck> {
    require_real(q, "is_regular")?;
    if !q.is_square() {
        return Err(Error::NotSquare {
            op: "is_regular",
            rows: q.rows(),
            cols: q.cols(),
        });
    }
    let n = q.rows();
    for i in 0..n {
        for j in 0..n {
            let v = q.get(i, j).re;
            let binary = v == 0.0 || v == 1.0;
            let zero_diag = i != j || v == 0.0;
            let symmetric = q.get(j, i).re == v;
            if !binary || !zero_diag || !symmetric {
                return Err(Error::NotBinaryMatrix {
                    row: i,
                    col: j,
                    value: v,
                });
            }
        }
    }
    let mut degrees = (0..n).map(|i| {
        (0..n)
            .map(|j| q.get(i, j).re as u64)
            .sum::<u64>()
    });
    let first = degrees.next();
    let regular = match first {
        None => true,
        Some(a) => degrees.all(|b| b == a),
    };
    Ok(RegularityCheck {
        is_regular: regular,
        degree: if regular { first } else { None },
    })
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct AllOnesEigenvectorCheck {
    pub is_eigenvector: bool,
    /// Rayleigh estimate `(u^T G u) / N`.
    pub lambda: f64,
    pub residual: f64,
}

/// Whether the all-ones vector is an eigenvector of a real square matrix.
pub fn all_ones_eigenvector(g: &Matrix, tol: f64) -> Result<AllOnesEigenvectorCheck> {
    require_real(g, "all_ones_eigenvector")?;
    if !g.is_square() {
        return Err(Error::NotSquare {
            op: "all_ones_eigenvector",
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    let n = g.rows();
    let row_sums: Vec<f64> = (0..n)
        .map(|i| (0..n).map(|j| g.get(i, j).re).sum())
        .collect();
    let lambda = row_sums.iter().sum::<f64>() / n as f64;
    let residual = row_sums
        .iter()
        .map(|s| (s - lambda).abs())
        .fold(0.0, f64::max);
    Ok(AllOnesEigenvectorCheck {
        is_eigenvector: residual <= tol,
        lambda,
        residual,
    })
}

/// Association-scheme verdict for an augmented decomposition
/// `{I, Q_0, Q_1, .., Q_k}` where Q_0 is the zero class completing the
/// partition of J.
#[derive(Debug, Clone, Serialize)]
pub struct AssociationSchemeReport {
    /// `(a, b, |Q_a Q_b - Q_b Q_a|)` for every pair of classes, index 0
    /// being the zero class.
    pub commutation_residuals: Vec<(usize, usize, f64)>,
    /// The commutation criterion: every pair of classes commutes.
    pub commutes: bool,
    /// Stricter (informational): every product Q_a Q_b lies in the span
    /// of {I, Q_0, .., Q_k}. Commutation alone does not imply this.
    pub span_closed: bool,
    pub span_residual: f64,
    pub tol: f64,
}

pub fn check_association_scheme(dec: &GramDecomposition, tol: f64) -> AssociationSchemeReport {
    let mut classes = vec![dec.zero_indicator()];
    classes.extend(dec.components.iter().cloned());
    let n = dec.size;

    let mut commutation_residuals = Vec::new();
    let mut commutes = true;
    let mut span_residual = 0.0f64;
    for a in 0..classes.len() {
        for b in a..classes.len() {
            let ab = classes[a].matmul(&classes[b]).expect("square classes");
            let ba = classes[b].matmul(&classes[a]).expect("square classes");
            let residual = ab.frobenius_distance(&ba).expect("same shape");
            commutes = commutes && residual <= tol;
            commutation_residuals.push((a, b, residual));

            // Span membership: the classes plus the diagonal partition all
            // positions, so the product lies in their span exactly when it
            // is constant on each class.
            span_residual = span_residual.max(class_deviation(&ab, &classes, n));
        }
    }
    AssociationSchemeReport {
        commutation_residuals,
        commutes,
        span_closed: span_residual <= tol,
        span_residual,
        tol,
    }
}

/// Largest in-class spread of `p` over the diagonal class and each
/// indicator class.
fn class_deviation(p: &Matrix, classes: &[Matrix], n: usize) -> f64 {
    let mut worst = 0.0f64;
    let spread = |positions: &mut dyn Iterator<Item = (usize, usize)>| {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (i, j) in positions {
            let v = p.get(i, j).re;
            lo = lo.min(v);
            hi = hi.max(v);
        }
        if lo <= hi {
            hi - lo
        } else {
            0.0
        }
    };
    worst = worst.max(spread(&mut (0..n).map(|i| (i, i))));
    for class in classes {
        let mut members = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| class.get(i, j).re != 0.0);
        worst = worst.max(spread(&mut members));
    }
    worst
}

//! Construction and certification of equiangular and k-angle tight frames.
//!
//! A unit-normed frame of `N` vectors in dimension `d` is *tight* when
//! `F F*` is a multiple of the identity, and *k-angle* when the off-diagonal
//! entries of its Gram matrix `F* F` take `k` distinct moduli. The crate
//! builds several such families explicitly:
//!
//! - `(d+1, d)` equiangular tight frames, real and complex, from a seed
//!   vector with unimodular entries ([`etf`]),
//! - unions of orthonormal bases, Hadamard matrices, and mutually unbiased
//!   Hadamard families giving 2- and 3-angle frames ([`hadamard`]),
//! - the subset-sum construction mapping the `(d+1)`-vector simplex to
//!   `C(d+1, k)` vectors with at most `k` angles ([`binomial`]),
//!
//! and certifies arbitrary frames against the Welch bound, tightness,
//! the frame potential minimum, and the graph-theoretic structure of their
//! Gram matrices ([`analysis`]).
//!
//! All arithmetic is dense double precision over a tagged real or complex
//! field; the eigensolver in [`eig`] is a deterministic cyclic Jacobi
//! iteration, so identical inputs give identical outputs byte for byte.

pub mod analysis;
pub mod binomial;
pub mod document;
pub mod eig;
pub mod error;
pub mod etf;
pub mod frame;
pub mod hadamard;
pub mod matrix;
pub mod scalar;
pub mod tol;

pub use analysis::{
    all_ones_eigenvector, angle_spectrum, certify, check_association_scheme, check_tight,
    coherence, decompose_gram, decompose_gram_moduli, is_regular, max_equiangular_lines,
    seidel_from_gram, welch_bound, AngleSpectrum, AssociationSchemeReport, CertificationReport,
    GramDecomposition, Grouping, TightnessCheck,
};
pub use binomial::{
    binomial_coefficient, binomial_frame, enumerate_subsets, frame_potential, incidence_matrix,
    predicted_inner_product, subset_sum_matrix, FramePotential, IncidenceMatrix, SubsetSystem,
};
pub use document::FrameDocument;
pub use eig::{hermitian_eig, EigenDecomposition};
pub use error::{Error, Result};
pub use etf::{
    etf_fast_path, etf_via_eig, gram_from_signature, signature_from_seed, simplex_etf,
    verify_signature_identity, SeedVector, SignatureIdentityReport, SignatureMatrix,
};
pub use frame::Frame;
pub use hadamard::{
    dft_hadamard, mub_family_odd_prime, muh_frame, reflection_basis, sylvester_hadamard,
    union_frame, HadamardMatrix, MubFamily,
};
pub use matrix::Matrix;
pub use scalar::{Complex64, Field};

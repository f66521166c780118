//! Acceptance suite. Each test implements one criterion at its stated
//! tolerance and prints one pass line; run with `--nocapture` to see them:
//!
//! ```text
//! cargo test -p kframe-cli --test acceptance -- --nocapture
//! ```

use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kframe_core::{
    all_ones_eigenvector, angle_spectrum, binomial_coefficient, binomial_frame, certify,
    check_association_scheme, check_tight, coherence, decompose_gram_moduli, enumerate_subsets,
    etf_fast_path, etf_via_eig, frame_potential, incidence_matrix, mub_family_odd_prime,
    muh_frame, predicted_inner_product, reflection_basis, signature_from_seed, simplex_etf,
    subset_sum_matrix, sylvester_hadamard, union_frame, verify_signature_identity, welch_bound,
    Complex64, Field, Frame, FramePotential, FrameDocument, Matrix, SeedVector,
};

fn kframe(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_kframe"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn construct_doc(args: &[&str]) -> FrameDocument {
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    let out = kframe(&full);
    assert!(
        out.status.success(),
        "construct failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    FrameDocument::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

fn real_seed(rng: &mut ChaCha8Rng, len: usize) -> SeedVector {
    let signs: Vec<f64> = (0..len)
        .map(|_| if rng.gen::<bool>() { 1.0 } else { -1.0 })
        .collect();
    SeedVector::from_signs(&signs).unwrap()
}

fn unimodular_seed(rng: &mut ChaCha8Rng, len: usize) -> SeedVector {
    let entries: Vec<Complex64> = (0..len)
        .map(|_| Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU)))
        .collect();
    SeedVector::new(entries).unwrap()
}

fn assert_spectrum(frame: &Frame, expected: &[f64], tol: f64) {
    let spectrum = angle_spectrum(frame, 1e-9).unwrap();
    assert_eq!(
        spectrum.k_hat(),
        expected.len(),
        "expected moduli {expected:?}, got {:?}",
        spectrum.values
    );
    for (got, want) in spectrum.values.iter().zip(expected) {
        assert!(
            (got - want).abs() <= tol,
            "modulus {got} differs from {want}"
        );
    }
}

/// Gram matrix printed for the real (6,5) ETF with seed [1,1,-1,1,-1,1].
fn printed_gram_65() -> Matrix {
    let a = 0.2;
    Matrix::from_real_rows(&[
        vec![1.0, -a, a, -a, a, -a],
        vec![-a, 1.0, a, -a, a, -a],
        vec![a, a, 1.0, a, -a, a],
        vec![-a, -a, a, 1.0, a, -a],
        vec![a, a, -a, a, 1.0, a],
        vec![-a, -a, a, -a, a, 1.0],
    ])
    .unwrap()
}

/// Gram matrix printed for the complex (4,3) ETF with seed [1, i, -1, -i].
fn printed_gram_43() -> Matrix {
    let t = 1.0 / 3.0;
    let c = Complex64::new;
    Matrix::from_complex_rows(&[
        vec![c(1.0, 0.0), c(0.0, t), c(t, 0.0), c(0.0, -t)],
        vec![c(0.0, -t), c(1.0, 0.0), c(0.0, t), c(t, 0.0)],
        vec![c(t, 0.0), c(0.0, -t), c(1.0, 0.0), c(0.0, t)],
        vec![c(0.0, t), c(t, 0.0), c(0.0, -t), c(1.0, 0.0)],
    ])
    .unwrap()
}

#[test]
fn criterion_01_golden_real_65_etf() {
    let doc = construct_doc(&["etf-seed", "--x", "1,1,-1,1,-1,1"]);
    assert_eq!((doc.d, doc.n, doc.field), (5, 6, Field::Real));
    let frame = doc.to_frame().unwrap();
    let gram = frame.gram();
    let printed = printed_gram_65();
    for i in 0..6 {
        for j in 0..6 {
            assert!(
                (gram.get(i, j) - printed.get(i, j)).norm() <= 1e-12,
                "entry ({i}, {j})"
            );
        }
    }
    let report = certify(&frame, 1e-9);
    assert!((report.coherence - 0.2).abs() <= 1e-12);
    assert!((report.welch_bound.unwrap() - 0.2).abs() <= 1e-12);
    assert!((report.coherence - report.welch_bound.unwrap()).abs() <= 1e-12);
    assert_eq!(report.spectrum.k_hat(), 1);
    println!("ACCEPTANCE 1: PASS - (6,5) ETF reproduces the printed Gram matrix");
}

#[test]
fn criterion_02_golden_complex_43_etf() {
    let doc = construct_doc(&["etf-seed", "--x", "1,i,-1,-i"]);
    assert_eq!((doc.d, doc.n, doc.field), (3, 4, Field::Complex));
    let frame = doc.to_frame().unwrap();
    let gram = frame.gram();
    let printed = printed_gram_43();
    for i in 0..4 {
        for j in 0..4 {
            assert!(
                (gram.get(i, j) - printed.get(i, j)).norm() <= 1e-12,
                "entry ({i}, {j})"
            );
        }
    }
    let report = certify(&frame, 1e-9);
    assert!((report.coherence - 1.0 / 3.0).abs() <= 1e-12);
    println!("ACCEPTANCE 2: PASS - (4,3) complex ETF reproduces the printed Gram matrix");
}

#[test]
fn criterion_03_fast_path_equivalence_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0usize;
    let mut check = |seed: &SeedVector| {
        let d = seed.d();
        let fast = etf_fast_path(seed).unwrap().gram();
        let slow = etf_via_eig(seed).unwrap().gram();
        assert!(
            fast.frobenius_distance(&slow).unwrap() <= 1e-9,
            "gram mismatch at d = {d}"
        );
        let q = signature_from_seed(seed);
        let identity = verify_signature_identity(&q, d).unwrap();
        assert!(
            identity.residual <= 1e-9,
            "signature identity residual {} at d = {d}",
            identity.residual
        );
        checked += 1;
    };
    for d in 2..=64 {
        for _ in 0..50 {
            check(&real_seed(&mut rng, d + 1));
        }
    }
    for d in 2..=32 {
        for _ in 0..50 {
            check(&unimodular_seed(&mut rng, d + 1));
        }
    }
    println!("ACCEPTANCE 3: PASS - fast path = eig path on {checked} random seeds");
}

#[test]
fn criterion_04_binomial_construction_sweep() {
    for d in 2..=9usize {
        for k in 1..=d {
            let frame = binomial_frame(d, k).unwrap();
            let d_prime = binomial_coefficient(d + 1, k as isize) as usize;
            assert_eq!((frame.d(), frame.n()), (d, d_prime));

            let tight = check_tight(&frame, 1e-8);
            assert!(tight.is_tight, "not tight at d={d} k={k}");
            assert!(
                (tight.frame_bound - d_prime as f64 / d as f64).abs() <= 1e-8,
                "frame bound at d={d} k={k}"
            );

            let fp = frame_potential(&frame);
            let expected = (d_prime * d_prime) as f64 / d as f64;
            assert!(
                (fp.double_sum - expected).abs() <= 1e-7,
                "potential at d={d} k={k}: {} vs {expected}",
                fp.double_sum
            );

            let system = enumerate_subsets(d, k).unwrap();
            let gram = frame.gram();
            for i in 0..d_prime {
                for j in 0..d_prime {
                    if i == j {
                        continue;
                    }
                    let l = system.intersection_size(i, j);
                    let predicted = predicted_inner_product(d, k, l).unwrap();
                    assert!(
                        (gram.get(i, j).re - predicted).abs() <= 1e-10,
                        "gram entry ({i},{j}) at d={d} k={k}"
                    );
                }
            }

            let spectrum = angle_spectrum(&frame, 1e-9).unwrap();
            assert!(
                spectrum.k_hat() <= k,
                "k_hat {} > k {k} at d={d}",
                spectrum.k_hat()
            );
        }
    }
    println!("ACCEPTANCE 4: PASS - binomial sweep 2<=d<=9, 1<=k<=d");
}

#[test]
fn criterion_05_incidence_identity_sweep() {
    for d in 2..=9usize {
        for k in 1..=d {
            let counts = incidence_matrix(&enumerate_subsets(d, k).unwrap()).pair_counts();
            let c1 = binomial_coefficient(d - 1, k as isize - 1) as u64;
            let c2 = binomial_coefficient(d - 1, k as isize - 2) as u64;
            for i in 0..=d {
                for j in 0..=d {
                    let expected = if i == j { c1 + c2 } else { c2 };
                    assert_eq!(counts[i][j], expected, "d={d} k={k} entry ({i},{j})");
                }
            }
        }
    }
    println!("ACCEPTANCE 5: PASS - K K^T = C(d-1,k-1) I + C(d-1,k-2) J exactly");
}

#[test]
fn criterion_06_subset_sum_norms() {
    for d in 2..=9usize {
        for k in 1..=d {
            let sums = subset_sum_matrix(d, k).unwrap();
            let expected = ((k * (d + 1 - k)) as f64 / d as f64).sqrt();
            for col in 0..sums.cols() {
                assert!(
                    (sums.column_norm(col) - expected).abs() <= 1e-10,
                    "norm at d={d} k={k} column {col}"
                );
            }
        }
    }
    println!("ACCEPTANCE 6: PASS - subset sums all have norm sqrt(k(d+1-k)/d)");
}

#[test]
fn criterion_07_hadamard_and_mub_frames() {
    // (a) reflection unions.
    let reflection_union = |d: usize| {
        union_frame(&[
            Matrix::identity(d, Field::Real),
            reflection_basis(d).unwrap(),
        ])
        .unwrap()
    };
    assert_spectrum(&reflection_union(4), &[0.0, 0.5], 1e-10);
    for d in [3usize, 5, 6, 8] {
        let two_over = 2.0 / d as f64;
        // Spectrum values come out ascending; at d = 3 the modulus 2/d
        // exceeds 1 - 2/d.
        let mut expected = [0.0, two_over, 1.0 - two_over];
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_spectrum(&reflection_union(d), &expected, 1e-10);
    }

    // (b) Sylvester unions.
    for d in [2usize, 4, 8, 16] {
        let h = sylvester_hadamard(d.trailing_zeros()).unwrap();
        let frame = union_frame(&[Matrix::identity(d, Field::Real), h.normalized()]).unwrap();
        assert_spectrum(&frame, &[0.0, 1.0 / (d as f64).sqrt()], 1e-10);
    }

    // (c) maximal odd-prime families; verify unbiasedness directly on
    // every pair, then the frame shape and spectrum.
    for p in [3usize, 5, 7] {
        let family = mub_family_odd_prime(p, p).unwrap();
        let root_p = (p as f64).sqrt();
        for i in 0..p {
            for j in i + 1..p {
                let cross = family.members()[i]
                    .matrix()
                    .conj_transpose()
                    .matmul(family.members()[j].matrix())
                    .unwrap();
                for a in 0..p {
                    for b in 0..p {
                        assert!(
                            (cross.get(a, b).norm() - root_p).abs() <= 1e-9,
                            "pair ({i},{j}) at p={p}"
                        );
                    }
                }
            }
        }
        let frame = muh_frame(&family).unwrap();
        assert_eq!((frame.d(), frame.n()), (p, (p + 1) * p));
        let tight = check_tight(&frame, 1e-8);
        assert!(tight.is_tight);
        assert!((tight.frame_bound - (p + 1) as f64).abs() <= 1e-8);
        assert_spectrum(&frame, &[0.0, 1.0 / root_p], 1e-10);
    }
    println!("ACCEPTANCE 7: PASS - reflection, Sylvester, and MUB frames have the stated spectra");
}

fn constructed_tight_frames() -> Vec<Frame> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut frames = Vec::new();
    for d in 2..=9usize {
        for k in 1..=d {
            frames.push(binomial_frame(d, k).unwrap());
        }
    }
    for d in 2..=10 {
        frames.push(simplex_etf(d).unwrap());
    }
    for d in [2usize, 5, 8, 13] {
        frames.push(etf_via_eig(&real_seed(&mut rng, d + 1)).unwrap());
        frames.push(etf_fast_path(&unimodular_seed(&mut rng, d + 1)).unwrap());
    }
    for d in [3usize, 4, 5, 6, 8] {
        frames.push(
            union_frame(&[
                Matrix::identity(d, Field::Real),
                reflection_basis(d).unwrap(),
            ])
            .unwrap(),
        );
    }
    for d in [2usize, 4, 8, 16] {
        let h = sylvester_hadamard(d.trailing_zeros()).unwrap();
        frames.push(union_frame(&[Matrix::identity(d, Field::Real), h.normalized()]).unwrap());
    }
    for p in [3usize, 5, 7] {
        frames.push(muh_frame(&mub_family_odd_prime(p, p).unwrap()).unwrap());
    }
    frames
}

#[test]
fn criterion_08_frame_potential_minimality() {
    let mut rng = ChaCha8Rng::seed_from_u64(88);
    for trial in 0..200 {
        let d = rng.gen_range(2..10usize);
        let n = rng.gen_range(d + 1..3 * d + 2);
        let mut m = Matrix::zeros(d, n, Field::Real);
        for j in 0..n {
            let col: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let norm = col.iter().map(|v| v * v).sum::<f64>().sqrt();
            for i in 0..d {
                m.set(i, j, Complex64::new(col[i] / norm, 0.0));
            }
        }
        let frame = Frame::new(m).unwrap();
        assert!(
            !check_tight(&frame, 1e-8).is_tight,
            "random frame unexpectedly tight (trial {trial})"
        );
        let fp = frame_potential(&frame);
        assert!(
            fp.double_sum > FramePotential::minimum(n, d),
            "random frame at or below the minimum (trial {trial})"
        );
    }

    for frame in constructed_tight_frames() {
        let fp = frame_potential(&frame);
        let minimum = FramePotential::minimum(frame.n(), frame.d());
        assert!(
            (fp.double_sum - minimum).abs() <= 1e-7,
            "constructed ({}, {}) frame potential {} vs minimum {minimum}",
            frame.n(),
            frame.d(),
            fp.double_sum
        );
    }
    println!("ACCEPTANCE 8: PASS - potential minimal exactly on the tight constructions");
}

#[test]
fn criterion_09_welch_inequality_on_random_frames() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for trial in 0..500 {
        let d = rng.gen_range(1..12usize);
        let n = rng.gen_range(d + 1..d + 30);
        let complex = rng.gen::<bool>();
        let field = if complex { Field::Complex } else { Field::Real };
        let mut m = Matrix::zeros(d, n, field);
        for j in 0..n {
            let col: Vec<Complex64> = (0..d)
                .map(|_| {
                    Complex64::new(
                        rng.gen_range(-1.0..1.0),
                        if complex { rng.gen_range(-1.0..1.0) } else { 0.0 },
                    )
                })
                .collect();
            let norm = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            for i in 0..d {
                m.set(i, j, col[i] / norm);
            }
        }
        let frame = Frame::new(m).unwrap();
        let coh = coherence(&frame).unwrap();
        let bound = welch_bound(n, d).unwrap();
        assert!(
            coh >= bound - 1e-12,
            "Welch violated at trial {trial}: {coh} < {bound}"
        );
    }
    println!("ACCEPTANCE 9: PASS - coherence >= Welch bound on 500 random frames");
}

#[test]
fn criterion_10_graph_checks() {
    for d in [4usize, 8] {
        let h = sylvester_hadamard(d.trailing_zeros()).unwrap();
        let frame = union_frame(&[Matrix::identity(d, Field::Real), h.normalized()]).unwrap();
        let dec = decompose_gram_moduli(&frame.gram(), 1e-9).unwrap();
        let scheme = check_association_scheme(&dec, 1e-9);
        assert!(scheme.commutes, "commutation fails at d = {d}");
    }

    for d in 2..=10usize {
        let gram = simplex_etf(d).unwrap().gram();
        let ones = all_ones_eigenvector(&gram, 1e-10).unwrap();
        assert!(ones.is_eigenvector, "u not an eigenvector at d = {d}");
        assert!(ones.lambda.abs() <= 1e-10, "lambda != 0 at d = {d}");
        // G u = 0 directly.
        let u = Matrix::from_fn(d + 1, 1, Field::Real, |_, _| Complex64::new(1.0, 0.0)).unwrap();
        assert!(gram.matmul(&u).unwrap().frobenius_norm() <= 1e-10);
    }
    println!("ACCEPTANCE 10: PASS - union frames commute; simplex Gram kills the all-ones vector");
}

#[test]
fn criterion_11_degenerate_binomial_case() {
    let frame = binomial_frame(3, 2).unwrap();
    let report = certify(&frame, 1e-9);

    assert_eq!(report.spectrum.k_hat(), 2);
    assert!(report.spectrum.values[0].abs() <= 1e-12);
    assert!((report.spectrum.values[1] - 1.0).abs() <= 1e-12);

    assert_eq!(report.antipodal_pairs, 3);
    assert!(
        report.notes.iter().any(|n| n.contains("antipodal")),
        "degeneracy must be reported, not normalized away"
    );
    println!("ACCEPTANCE 11: PASS - d=3, k=2 degeneracy detected and reported");
}

//! `kframe` — construct equiangular and k-angle tight frames, then
//! certify and analyze them.
//!
//! Exit-code policy: parse and validation failures are errors (nonzero),
//! mathematical verdicts are report content. `certify --expect ...` turns
//! selected verdicts into exit-code assertions for CI use.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use kframe_core::document::parse_scalar_token;
use kframe_core::{
    all_ones_eigenvector, binomial_frame, certify, check_association_scheme, decompose_gram,
    decompose_gram_moduli, dft_hadamard, etf_fast_path, etf_via_eig, is_regular,
    mub_family_odd_prime, muh_frame, reflection_basis, simplex_etf, sylvester_hadamard,
    union_frame, Field, Frame, FrameDocument, GramDecomposition, HadamardMatrix, Matrix,
    MubFamily, SeedVector,
};

#[derive(Parser)]
#[command(
    name = "kframe",
    version,
    about = "Construct and certify equiangular and k-angle tight frames"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a construction and write the frame document
    Construct(ConstructArgs),
    /// Certify a frame document: tightness, coherence, Welch bound, spectrum
    Certify(CertifyArgs),
    /// Gram decomposition and graph structure of a real frame
    AnalyzeGraph(AnalyzeGraphArgs),
    /// Re-encode a frame document (canonical JSON or CSV)
    Export(ExportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Construction {
    /// (d+1, d) ETF from a seed via the eigendecomposition route
    EtfSeed,
    /// (d+1, d) ETF from a seed via the closed-form O(d) route
    EtfFast,
    /// The (d+1, d) simplex ETF with all inner products -1/d
    Simplex,
    /// Standard basis united with (2/d)J - I
    UnionReflection,
    /// Standard basis united with a normalized Hadamard matrix
    UnionHadamard,
    /// Mutually unbiased Hadamard frame [I, H_1/sqrt(d), .., H_n/sqrt(d)]
    Muh,
    /// Normalized subset sums over the simplex ETF
    Binomial,
}

impl Construction {
    fn name(self) -> &'static str {
        match self {
            Construction::EtfSeed => "etf-seed",
            Construction::EtfFast => "etf-fast",
            Construction::Simplex => "simplex",
            Construction::UnionReflection => "union-reflection",
            Construction::UnionHadamard => "union-hadamard",
            Construction::Muh => "muh",
            Construction::Binomial => "binomial",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Real,
    Complex,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    construction: Construction,

    /// Ambient dimension d
    #[arg(long)]
    d: Option<usize>,

    /// Subset size k (binomial)
    #[arg(long)]
    k: Option<usize>,

    /// Odd prime p (muh)
    #[arg(long)]
    p: Option<usize>,

    /// Number of mutually unbiased Hadamards n (muh)
    #[arg(long)]
    n: Option<usize>,

    /// Seed entries, comma separated: tokens 1,-1,i,-i or re+imi literals
    #[arg(long)]
    x: Option<String>,

    /// Field selection; constrains seeds and picks the Hadamard kind
    #[arg(long, value_enum)]
    field: Option<FieldArg>,

    /// Import Hadamard matrices from frame documents (muh, union-hadamard);
    /// imports are re-verified against the Hadamard/unbiasedness invariants
    #[arg(long)]
    import: Vec<PathBuf>,

    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CertifyArgs {
    /// Frame document (.csv inputs are parsed as d x n CSV)
    input: PathBuf,

    /// Certification tolerance
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,

    /// Comma-separated exit-code assertions: tight, welch, unit, k=N, k<=N
    #[arg(long)]
    expect: Option<String>,

    /// Also write the machine-readable JSON report here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeGraphArgs {
    /// Frame document (real field only)
    input: PathBuf,

    /// Decomposition and commutation tolerance
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Canonical,
    Csv,
}

#[derive(Args)]
struct ExportArgs {
    input: PathBuf,

    #[arg(long, value_enum, default_value_t = FormatArg::Canonical)]
    format: FormatArg,

    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Construct(args) => construct(args),
        Command::Certify(args) => certify_cmd(args),
        Command::AnalyzeGraph(args) => analyze_graph(args),
        Command::Export(args) => export(args),
    }
}

fn need<T: Copy>(value: Option<T>, flag: &str, construction: &str) -> Result<T> {
    value.with_context(|| format!("`{construction}` requires {flag}"))
}

fn parse_seed(text: &str) -> Result<SeedVector> {
    let entries = text
        .split(',')
        .map(|tok| parse_scalar_token(tok).map_err(anyhow::Error::from))
        .collect::<Result<Vec<_>>>()
        .context("invalid --x seed")?;
    Ok(SeedVector::new(entries)?)
}

fn load_document(path: &Path) -> Result<FrameDocument> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let doc = if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        FrameDocument::from_csv(&text)
    } else {
        FrameDocument::from_json(&text)
    };
    doc.with_context(|| format!("cannot parse {}", path.display()))
}

fn load_hadamard(path: &Path) -> Result<HadamardMatrix> {
    let doc = load_document(path)?;
    let matrix = doc.to_matrix()?;
    HadamardMatrix::new(matrix)
        .with_context(|| format!("{} is not a Hadamard matrix", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn construct(args: ConstructArgs) -> Result<ExitCode> {
    let name = args.construction.name();
    let mut metadata = BTreeMap::new();
    metadata.insert("construction".to_string(), name.to_string());
    metadata.insert(
        "tool_version".to_string(),
        env!("CARGO_PKG_VERSION").to_string(),
    );
    for (key, value) in [
        ("d", args.d.map(|v| v.to_string())),
        ("k", args.k.map(|v| v.to_string())),
        ("p", args.p.map(|v| v.to_string())),
        ("n", args.n.map(|v| v.to_string())),
        ("x", args.x.clone()),
    ] {
        if let Some(value) = value {
            metadata.insert(key.to_string(), value);
        }
    }

    let frame = build_frame(&args, name)?;
    let doc = FrameDocument::from_frame(&frame, metadata);
    emit(&doc.to_json(), args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn build_frame(args: &ConstructArgs, name: &str) -> Result<Frame> {
    match args.construction {
        Construction::EtfSeed | Construction::EtfFast => {
            let seed = parse_seed(need(args.x.as_deref(), "--x", name)?)?;
            if args.field == Some(FieldArg::Real) && seed.field() == Field::Complex {
                bail!("--field real given but the seed has complex entries");
            }
            let frame = match args.construction {
                Construction::EtfSeed => etf_via_eig(&seed)?,
                _ => etf_fast_path(&seed)?,
            };
            Ok(frame)
        }
        Construction::Simplex => {
            let d = need(args.d, "--d", name)?;
            Ok(simplex_etf(d)?)
        }
        Construction::UnionReflection => {
            let d = need(args.d, "--d", name)?;
            Ok(union_frame(&[
                Matrix::identity(d, Field::Real),
                reflection_basis(d)?,
            ])?)
        }
        Construction::UnionHadamard => {
            let hadamard = match args.import.as_slice() {
                [] => {
                    let d = need(args.d, "--d", name)?;
                    match args.field.unwrap_or(FieldArg::Real) {
                        FieldArg::Real => {
                            if !d.is_power_of_two() {
                                bail!(
                                    "no Sylvester Hadamard of order {d}: \
                                     --field real needs d a power of two \
                                     (use --field complex or --import)"
                                );
                            }
                            sylvester_hadamard(d.trailing_zeros())?
                        }
                        FieldArg::Complex => dft_hadamard(d)?,
                    }
                }
                [path] => load_hadamard(path)?,
                _ => bail!("union-hadamard takes at most one --import"),
            };
            let d = hadamard.size();
            if let Some(requested) = args.d {
                if requested != d {
                    bail!("imported Hadamard is {d}x{d} but --d {requested} was given");
                }
            }
            let identity = match hadamard.kind() {
                Field::Real => Matrix::identity(d, Field::Real),
                Field::Complex => Matrix::identity(d, Field::Complex),
            };
            Ok(union_frame(&[identity, hadamard.normalized()])?)
        }
        Construction::Muh => {
            let family = if args.import.is_empty() {
                let p = need(args.p, "--p", name)?;
                let n = need(args.n, "--n", name)?;
                mub_family_odd_prime(p, n)?
            } else {
                let members = args
                    .import
                    .iter()
                    .map(|path| load_hadamard(path))
                    .collect::<Result<Vec<_>>>()?;
                let d = members[0].size();
                MubFamily::new(members, d)?
            };
            Ok(muh_frame(&family)?)
        }
        Construction::Binomial => {
            let d = need(args.d, "--d", name)?;
            let k = need(args.k, "--k", name)?;
            Ok(binomial_frame(d, k)?)
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Expectation {
    Tight,
    Welch,
    Unit,
    KEq(usize),
    KLe(usize),
}

fn parse_expectations(text: &str) -> Result<Vec<Expectation>> {
    text.split(',')
        .map(|item| {
            let item = item.trim();
            if item.eq_ignore_ascii_case("tight") {
                Ok(Expectation::Tight)
            } else if item.eq_ignore_ascii_case("welch") {
                Ok(Expectation::Welch)
            } else if item.eq_ignore_ascii_case("unit") {
                Ok(Expectation::Unit)
            } else if let Some(rest) = item.strip_prefix("k<=") {
                Ok(Expectation::KLe(rest.parse()?))
            } else if let Some(rest) = item.strip_prefix("k=") {
                Ok(Expectation::KEq(rest.parse()?))
            } else {
                bail!("unknown expectation {item:?} (tight, welch, unit, k=N, k<=N)")
            }
        })
        .collect()
}

fn certify_cmd(args: CertifyArgs) -> Result<ExitCode> {
    let doc = load_document(&args.input)?;
    let frame = doc.to_frame()?;
    let report = certify(&frame, args.tol);
    print!("{report}");

    if let Some(path) = &args.out {
        let mut json = serde_json::to_string_pretty(&report)?;
        json.push('\n');
        fs::write(path, json)
            .with_context(|| format!("cannot write {}", path.display()))?;
    }

    let mut failed = false;
    if let Some(expect) = &args.expect {
        for expectation in parse_expectations(expect)? {
            let (ok, what) = match expectation {
                Expectation::Tight => (report.is_tight, "tight".to_string()),
                Expectation::Welch => (report.attains_welch, "welch".to_string()),
                Expectation::Unit => (report.is_unit_normed, "unit".to_string()),
                Expectation::KEq(k) => (
                    report.spectrum.k_hat() == k,
                    format!("k={k} (got {})", report.spectrum.k_hat()),
                ),
                Expectation::KLe(k) => (
                    report.spectrum.k_hat() <= k,
                    format!("k<={k} (got {})", report.spectrum.k_hat()),
                ),
            };
            if !ok {
                eprintln!("expectation failed: {what}");
                failed = true;
            }
        }
    }
    Ok(if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn print_decomposition(label: &str, formula: &str, dec: &GramDecomposition) -> Result<()> {
    println!("{label} ({formula}): k = {}", dec.k());
    for (idx, (c, q)) in dec.coefficients.iter().zip(&dec.components).enumerate() {
        let reg = is_regular(q)?;
        let pairs = (q.frobenius_norm().powi(2) / 2.0).round() as u64;
        println!(
            "  c_{} = {:+.12}  pairs {:<4} regular {}",
            idx + 1,
            c,
            pairs,
            match reg.degree {
                Some(deg) => format!("yes (degree {deg})"),
                None => "no".to_string(),
            }
        );
    }
    let zero = dec.zero_indicator();
    let zero_pairs = (zero.frobenius_norm().powi(2) / 2.0).round() as u64;
    let reg = is_regular(&zero)?;
    println!(
        "  zero class Q_0  pairs {:<4} regular {}",
        zero_pairs,
        match reg.degree {
            Some(deg) => format!("yes (degree {deg})"),
            None => "no".to_string(),
        }
    );
    Ok(())
}

fn analyze_graph(args: AnalyzeGraphArgs) -> Result<ExitCode> {
    let doc = load_document(&args.input)?;
    if doc.field == Field::Complex {
        bail!("analyze-graph handles real frames only: Gram decomposition into binary matrices and the graph predicates are defined over the reals");
    }
    let frame = doc.to_frame()?;
    let gram = frame.gram();
    println!(
        "graph analysis of ({}, {}) real frame (tol {:e})",
        frame.n(),
        frame.d(),
        args.tol
    );

    let signed = decompose_gram(&gram, args.tol)?;
    print_decomposition("signed decomposition", "G = I + sum c_i Q_i", &signed)?;

    let ones = all_ones_eigenvector(&gram, args.tol)?;
    println!(
        "all-ones eigenvector: {} (lambda = {:.12}, residual {:.3e})",
        if ones.is_eigenvector { "yes" } else { "no" },
        ones.lambda,
        ones.residual
    );

    let scheme = check_association_scheme(&signed, args.tol);
    println!(
        "association scheme, signed classes + zero class: commutation {} | span closure (stricter) {}",
        pass_fail(scheme.commutes),
        pass_fail(scheme.span_closed)
    );

    let moduli = decompose_gram_moduli(&gram, args.tol)?;
    print_decomposition("modulus decomposition", "|G| = I + sum c_i Q_i", &moduli)?;
    let scheme = check_association_scheme(&moduli, args.tol);
    println!(
        "association scheme, modulus classes + zero class: commutation {} | span closure (stricter) {}",
        pass_fail(scheme.commutes),
        pass_fail(scheme.span_closed)
    );
    Ok(ExitCode::SUCCESS)
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn export(args: ExportArgs) -> Result<ExitCode> {
    let doc = load_document(&args.input)?;
    let text = match args.format {
        FormatArg::Canonical => doc.to_json(),
        FormatArg::Csv => doc.to_csv(),
    };
    emit(&text, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

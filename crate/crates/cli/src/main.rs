//! `bch`: command-line surface over the bicomplex library.
//!
//! JSON in, JSON (or text) out. Every response carries a `status` field;
//! errors are machine-readable with a `code`. Exit codes: 0 on success,
//! 1 on domain errors (null-cone, zero channel, not self-adjoint,
//! convergence failure, failed verification), 2 on input errors.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use bicomplex::{
    Bicomplex, ComplexC1, ComplexC2, Conjugation, EigenReport, Error, HVector, Hyperbolic,
    Pairing, SplitMetric, TMatrix, TVector,
};

mod verify;

#[derive(Parser)]
#[command(name = "bch", version, about = "Bicomplex scalars, modules and operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a bicomplex scalar: conjugates, moduli, idempotent pair, inverse
    Info(CommonArgs),
    /// Scalar product of two kets, canonical or with a split metric
    Dot(CommonArgs),
    /// Norm of a ket
    Norm(CommonArgs),
    /// Hyperbolic angle between two hyperbolic vectors
    Angle(CommonArgs),
    /// Adjoint of an operator
    Adjoint(CommonArgs),
    /// Self-adjointness check for an operator
    Selfadjoint(CommonArgs),
    /// Bicomplex eigendecomposition via the two channel problems
    Eig(EigArgs),
    /// Differential verification of the fast paths against the oracle
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Input file path, or "-" for standard input
    #[arg(default_value = "-")]
    input: String,
    /// Tolerance for predicates and flags
    #[arg(long, env = "BCH_TOL", default_value_t = 1e-10)]
    tol: f64,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct EigArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// How channel eigenvalues combine: diagonal (n pairs) or full (n^2)
    #[arg(long, default_value = "diagonal")]
    pairing: Pairing,
}

#[derive(Args)]
struct VerifyArgs {
    /// Random samples per differential suite
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

struct Failure {
    code: &'static str,
    message: String,
    exit: u8,
}

impl Failure {
    fn input(code: &'static str, message: String) -> Self {
        Failure {
            code,
            message,
            exit: 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, exit) = match &e {
            Error::NullCone => ("null_cone", 1),
            Error::ZeroChannel { .. } => ("zero_channel", 1),
            Error::NotSelfAdjoint(_) => ("not_self_adjoint", 1),
            Error::ConvergenceFailure(_) => ("convergence_failure", 1),
            Error::NonFinite(_) => ("non_finite", 2),
            Error::DimensionMismatch { .. } => ("dimension_mismatch", 2),
            Error::EmptyVector => ("empty_vector", 2),
            Error::NotSquare { .. } => ("not_square", 2),
            Error::NotHermitian { .. } => ("not_hermitian", 2),
            Error::NotPositiveDefinite { .. } => ("not_positive_definite", 2),
            Error::PairingOverflow { .. } => ("pairing_overflow", 2),
            Error::TooLarge { .. } => ("too_large", 2),
        };
        Failure {
            code,
            message: e.to_string(),
            exit,
        }
    }
}

#[derive(Serialize)]
struct ErrorResponse<'a> {
    status: &'static str,
    code: &'a str,
    message: &'a str,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Info(args) => cmd_info(&args),
        Command::Dot(args) => cmd_dot(&args),
        Command::Norm(args) => cmd_norm(&args),
        Command::Angle(args) => cmd_angle(&args),
        Command::Adjoint(args) => cmd_adjoint(&args),
        Command::Selfadjoint(args) => cmd_selfadjoint(&args),
        Command::Eig(args) => cmd_eig(&args),
        Command::Verify(args) => verify::run(&args),
    };
    match result {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let body = serde_json::to_string(&ErrorResponse {
                status: "error",
                code: failure.code,
                message: &failure.message,
            })
            .expect("error response serializes");
            println!("{body}");
            ExitCode::from(failure.exit)
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::input("io", format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::input("io", format!("reading {path}: {e}")))
    }
}

fn parse<T: for<'de> Deserialize<'de>>(args: &CommonArgs) -> Result<T, Failure> {
    let raw = read_input(&args.input)?;
    serde_json::from_str(&raw).map_err(|e| Failure::input("parse", e.to_string()))
}

fn render<T: Serialize>(format: Format, value: &T, text: String) -> String {
    match format {
        Format::Json => serde_json::to_string(value).expect("response serializes"),
        Format::Text => text,
    }
}

#[derive(Serialize)]
struct InfoResponse {
    status: &'static str,
    value: Bicomplex,
    conjugates: [Bicomplex; 4],
    square_modulus_c1: ComplexC1,
    square_modulus_c2: ComplexC2,
    square_modulus_hyperbolic: Hyperbolic,
    modulus_1: f64,
    modulus_3: f64,
    idempotent: [ComplexC1; 2],
    null_cone: bool,
    hyperbolic: bool,
    hyperbolic_positive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    inverse: Option<Bicomplex>,
}

fn cmd_info(args: &CommonArgs) -> Result<String, Failure> {
    let w: Bicomplex = parse(args)?;
    let (p1, p2) = w.idempotent();
    let response = InfoResponse {
        status: "ok",
        value: w,
        conjugates: Conjugation::ALL.map(|k| w.conj(k)),
        square_modulus_c1: w.square_modulus_c1(),
        square_modulus_c2: w.square_modulus_c2(),
        square_modulus_hyperbolic: w.square_modulus_hyperbolic(),
        modulus_1: w.modulus_1(),
        modulus_3: w.modulus_3(),
        idempotent: [p1, p2],
        null_cone: w.is_null_cone(args.tol),
        hyperbolic: w.is_hyperbolic(args.tol),
        hyperbolic_positive: w.is_hyperbolic_positive(args.tol),
        inverse: w.inverse_with_tol(args.tol).ok(),
    };
    let mut text = format!("value: {w}\n");
    for (k, c) in response.conjugates.iter().enumerate() {
        text += &format!("conj {k}: {c}\n");
    }
    text += &format!("square modulus C(i1): {}\n", response.square_modulus_c1);
    text += &format!("square modulus C(i2): {}\n", response.square_modulus_c2);
    text += &format!("square modulus D: {}\n", response.square_modulus_hyperbolic);
    text += &format!("modulus 1: {}\n", response.modulus_1);
    text += &format!("modulus 3: {}\n", response.modulus_3);
    text += &format!("idempotent: ({p1}) e1 + ({p2}) e2\n");
    text += &format!("null-cone: {}\n", response.null_cone);
    text += &format!("hyperbolic: {}\n", response.hyperbolic);
    text += &format!("hyperbolic positive: {}\n", response.hyperbolic_positive);
    text += &match response.inverse {
        Some(inv) => format!("inverse: {inv}"),
        None => "inverse: (none: null-cone)".to_string(),
    };
    Ok(render(args.format, &response, text))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DotRequest {
    x: TVector,
    y: TVector,
    #[serde(default)]
    metric: Option<SplitMetric>,
}

#[derive(Serialize)]
struct DotResponse {
    status: &'static str,
    value: Bicomplex,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed: Option<bool>,
}

fn cmd_dot(args: &CommonArgs) -> Result<String, Failure> {
    let request: DotRequest = parse(args)?;
    let (value, closed) = match &request.metric {
        Some(metric) => (
            metric.dot(&request.x, &request.y)?,
            Some(metric.is_closed(args.tol)),
        ),
        None => (request.x.dot(&request.y)?, None),
    };
    let mut text = format!("dot: {value}");
    if let Some(closed) = closed {
        text += &format!("\nclosed: {closed}");
    }
    let response = DotResponse {
        status: "ok",
        value,
        closed,
    };
    Ok(render(args.format, &response, text))
}

#[derive(Serialize)]
struct NormResponse {
    status: &'static str,
    value: f64,
}

fn cmd_norm(args: &CommonArgs) -> Result<String, Failure> {
    let x: TVector = parse(args)?;
    let value = x.norm();
    let response = NormResponse {
        status: "ok",
        value,
    };
    Ok(render(args.format, &response, format!("norm: {value}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AngleRequest {
    x: HVector,
    y: HVector,
}

#[derive(Serialize)]
struct AngleResponse {
    status: &'static str,
    value: Hyperbolic,
}

fn cmd_angle(args: &CommonArgs) -> Result<String, Failure> {
    let request: AngleRequest = parse(args)?;
    let value = request.x.angle(&request.y, args.tol)?;
    let response = AngleResponse {
        status: "ok",
        value,
    };
    Ok(render(args.format, &response, format!("angle: {value}")))
}

#[derive(Serialize)]
struct AdjointResponse {
    status: &'static str,
    value: TMatrix,
}

fn cmd_adjoint(args: &CommonArgs) -> Result<String, Failure> {
    let a: TMatrix = parse(args)?;
    let value = a.adjoint();
    let text = format!("adjoint:\n{value}");
    let response = AdjointResponse {
        status: "ok",
        value,
    };
    Ok(render(args.format, &response, text))
}

#[derive(Serialize)]
struct SelfAdjointResponse {
    status: &'static str,
    self_adjoint: bool,
    max_deviation: f64,
}

fn cmd_selfadjoint(args: &CommonArgs) -> Result<String, Failure> {
    let a: TMatrix = parse(args)?;
    let response = SelfAdjointResponse {
        status: "ok",
        self_adjoint: a.is_self_adjoint(args.tol),
        max_deviation: a.self_adjoint_deviation(),
    };
    let text = format!(
        "self-adjoint: {} (max entry deviation {})",
        response.self_adjoint, response.max_deviation
    );
    Ok(render(args.format, &response, text))
}

#[derive(Serialize)]
struct EigResponse {
    status: &'static str,
    #[serde(flatten)]
    report: EigenReport,
}

fn cmd_eig(args: &EigArgs) -> Result<String, Failure> {
    let a: TMatrix = parse(&args.common)?;
    let report = a.eigen(args.pairing, args.common.tol)?;
    let mut text = format!("pairing: {}\n", report.pairing_mode);
    for (k, spectrum) in [(1, &report.spectrum1), (2, &report.spectrum2)] {
        text += &format!("spectrum {k}:");
        for v in spectrum {
            text += &format!(" {v};");
        }
        text += "\n";
    }
    for (i, pair) in report.pairs.iter().enumerate() {
        text += &format!(
            "pair {i}: lambda = {} | residual {} | hyperbolic {}\n  vector {}\n",
            pair.lambda, pair.residual, pair.lambda_hyperbolic, pair.vector
        );
    }
    let response = EigResponse {
        status: "ok",
        report,
    };
    Ok(render(args.common.format, &response, text.trim_end().to_string()))
}

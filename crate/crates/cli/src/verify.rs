//! The `verify` subcommand: differential agreement between the channel-based
//! fast paths and the basis-table oracle, on freshly sampled inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use bicomplex::{oracle, Bicomplex, Channel, ComplexC1, ComplexMatrix, TMatrix, TVector};

use crate::{Failure, Format, VerifyArgs};

const MUL_TOL: f64 = 1e-12;
const DOT_TOL: f64 = 1e-12;
const MATVEC_TOL: f64 = 1e-12;
const DET_TOL: f64 = 1e-10;

#[derive(Serialize)]
struct SuiteResult {
    name: &'static str,
    samples: usize,
    tolerance: f64,
    max_rel_error: f64,
    pass: bool,
}

#[derive(Serialize)]
struct VerifyResponse {
    status: &'static str,
    all_pass: bool,
    suites: Vec<SuiteResult>,
}

#[derive(Serialize)]
struct VerifyFailure {
    status: &'static str,
    code: &'static str,
    message: String,
    suites: Vec<SuiteResult>,
}

pub fn run(args: &VerifyArgs) -> Result<String, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD1FF_7E57);
    let suites = vec![
        mul_suite(&mut rng, args.samples),
        dot_suite(&mut rng, args.samples),
        matvec_suite(&mut rng, args.samples),
        det_suite(&mut rng, (args.samples / 10).max(1)),
    ];
    let all_pass = suites.iter().all(|s| s.pass);
    let text = {
        let mut out = String::new();
        for s in &suites {
            out += &format!(
                "{}: {}: {} samples, max rel error {:.3e} (tolerance {:.0e})\n",
                s.name,
                if s.pass { "pass" } else { "FAIL" },
                s.samples,
                s.max_rel_error,
                s.tolerance
            );
        }
        out.trim_end().to_string()
    };
    if all_pass {
        let response = VerifyResponse {
            status: "ok",
            all_pass,
            suites,
        };
        Ok(match args.format {
            Format::Json => serde_json::to_string(&response).expect("response serializes"),
            Format::Text => text,
        })
    } else {
        let failed: Vec<&str> = suites
            .iter()
            .filter(|s| !s.pass)
            .map(|s| s.name)
            .collect();
        let body = VerifyFailure {
            status: "error",
            code: "verification_failed",
            message: format!("oracle disagreement in: {}", failed.join(", ")),
            suites,
        };
        println!(
            "{}",
            serde_json::to_string(&body).expect("response serializes")
        );
        std::process::exit(1);
    }
}

fn rand_bc(rng: &mut ChaCha8Rng) -> Bicomplex {
    Bicomplex::of(
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
    )
}

fn rand_tvec(rng: &mut ChaCha8Rng, n: usize) -> TVector {
    TVector::new((0..n).map(|_| rand_bc(rng)).collect()).expect("finite nonempty")
}

fn rand_tmat(rng: &mut ChaCha8Rng, n: usize) -> TMatrix {
    TMatrix::new(n, (0..n * n).map(|_| rand_bc(rng)).collect()).expect("finite square")
}

fn rel(a: Bicomplex, b: Bicomplex) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

fn mul_suite(rng: &mut ChaCha8Rng, samples: usize) -> SuiteResult {
    let mut max_rel: f64 = 0.0;
    for _ in 0..samples {
        let s = rand_bc(rng);
        let t = rand_bc(rng);
        max_rel = max_rel.max(rel(s * t, oracle::mul(s, t)));
    }
    suite("mul", samples, MUL_TOL, max_rel)
}

fn dot_suite(rng: &mut ChaCha8Rng, samples: usize) -> SuiteResult {
    let mut max_rel: f64 = 0.0;
    for _ in 0..samples {
        let n = rng.gen_range(1..=6);
        let x = rand_tvec(rng, n);
        let y = rand_tvec(rng, n);
        let fast = x.dot(&y).expect("equal lengths");
        let slow = oracle::dot(&x, &y).expect("equal lengths");
        max_rel = max_rel.max(rel(fast, slow));
    }
    suite("dot", samples, DOT_TOL, max_rel)
}

fn matvec_suite(rng: &mut ChaCha8Rng, samples: usize) -> SuiteResult {
    let mut max_rel: f64 = 0.0;
    for _ in 0..samples {
        let n = rng.gen_range(1..=6);
        let a = rand_tmat(rng, n);
        let x = rand_tvec(rng, n);
        let fast = a.apply(&x).expect("matching dimension");
        let slow = oracle::matvec(&a, &x).expect("matching dimension");
        let diff = fast.sub(&slow).expect("equal lengths").norm();
        max_rel = max_rel.max(diff / fast.norm().max(slow.norm()).max(1.0));
    }
    suite("matvec", samples, MATVEC_TOL, max_rel)
}

fn det_suite(rng: &mut ChaCha8Rng, samples: usize) -> SuiteResult {
    let mut max_rel: f64 = 0.0;
    for _ in 0..samples {
        let n = rng.gen_range(1..=4);
        let a = rand_tmat(rng, n);
        let det = oracle::det(&a).expect("n <= 4");
        for k in Channel::BOTH {
            let channel_det = complex_det(&a.project(k));
            let got = det.channel(k);
            max_rel = max_rel.max(
                (got - channel_det).abs() / got.abs().max(channel_det.abs()).max(1.0),
            );
        }
    }
    suite("det_channels", samples, DET_TOL, max_rel)
}

fn suite(name: &'static str, samples: usize, tolerance: f64, max_rel_error: f64) -> SuiteResult {
    SuiteResult {
        name,
        samples,
        tolerance,
        max_rel_error,
        pass: max_rel_error <= tolerance,
    }
}

fn complex_det(m: &ComplexMatrix) -> ComplexC1 {
    fn minor(m: &ComplexMatrix, row: usize, cols: &[usize]) -> ComplexC1 {
        if cols.len() == 1 {
            return m.get(row, cols[0]);
        }
        let mut acc = ComplexC1::ZERO;
        for (pos, &col) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != col).collect();
            let term = m.get(row, col) * minor(m, row + 1, &rest);
            acc = if pos % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }
    let cols: Vec<usize> = (0..m.n()).collect();
    minor(m, 0, &cols)
}

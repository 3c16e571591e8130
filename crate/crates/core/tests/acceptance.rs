//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Criteria 1-7 live here; criterion 8 (CLI golden tests) lives in the CLI
//! crate. Sampling is deterministic (fixed-seed ChaCha) with components
//! drawn uniformly from [-10, 10]. "rel" below means the difference scaled
//! by max(1, |lhs|, |rhs|).

use bicomplex::{
    oracle, Bicomplex, Channel, ComplexC1, ComplexMatrix, ComplexVector, Conjugation, HVector,
    Hyperbolic, Pairing, SplitMetric, TMatrix, TVector,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::FRAC_PI_2;

const ALGEBRA_SAMPLES: usize = 10_000;
const ALGEBRA_TOL: f64 = 1e-12;
const MODULI_SAMPLES: usize = 10_000;
const MODULI_TOL: f64 = 1e-10;
const MODULE_SAMPLES: usize = 10_000;
const MODULE_TOL: f64 = 1e-10;
const SPLIT_SAMPLES: usize = 1_000;
const SPLIT_TOL: f64 = 1e-12;
const EIGEN_MATRICES: usize = 200;
const EIGEN_RESIDUAL_TOL: f64 = 1e-8;
const EIGEN_DET_TOL: f64 = 1e-6;
const HYPERBOLIC_SPECTRUM_TOL: f64 = 1e-8;
const ANGLE_SAMPLES: usize = 1_000;
const ANGLE_TOL: f64 = 1e-10;

fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xB1C0_3913 ^ salt)
}

fn rand_bc(rng: &mut ChaCha8Rng) -> Bicomplex {
    Bicomplex::of(
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
    )
}

fn rand_c1(rng: &mut ChaCha8Rng) -> ComplexC1 {
    ComplexC1::of(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0))
}

fn rand_tvec(rng: &mut ChaCha8Rng, n: usize) -> TVector {
    TVector::new((0..n).map(|_| rand_bc(rng)).collect()).unwrap()
}

fn rand_cvec(rng: &mut ChaCha8Rng, n: usize) -> ComplexVector {
    ComplexVector::new((0..n).map(|_| rand_c1(rng)).collect()).unwrap()
}

fn rand_tmat(rng: &mut ChaCha8Rng, n: usize) -> TMatrix {
    TMatrix::new(n, (0..n * n).map(|_| rand_bc(rng)).collect()).unwrap()
}

fn rel(a: Bicomplex, b: Bicomplex) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

fn rel_f(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

#[test]
fn criterion_1_algebra_suite() {
    // Klein composition table, exact
    let expected = [[0u8, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
    for (i, k1) in Conjugation::ALL.into_iter().enumerate() {
        for (j, k2) in Conjugation::ALL.into_iter().enumerate() {
            assert_eq!(k1.compose(k2).index(), expected[i][j]);
        }
    }

    let mut rng = rng(1);
    let mut max_rel: f64 = 0.0;
    for _ in 0..ALGEBRA_SAMPLES {
        let s = rand_bc(&mut rng);
        let t = rand_bc(&mut rng);
        let u = rand_bc(&mut rng);

        // conjugation morphism laws: additivity and involution exact,
        // multiplicativity within tolerance
        for k in Conjugation::ALL {
            assert_eq!((s + t).conj(k), s.conj(k) + t.conj(k));
            assert_eq!(s.conj(k).conj(k), s);
            max_rel = max_rel.max(rel((s * t).conj(k), s.conj(k) * t.conj(k)));
        }

        // ring axioms
        max_rel = max_rel.max(rel(s * t, t * s));
        max_rel = max_rel.max(rel((s * t) * u, s * (t * u)));
        max_rel = max_rel.max(rel(s * (t + u), s * t + s * u));

        // channel product against the basis-table oracle
        max_rel = max_rel.max(rel(s * t, oracle::mul(s, t)));
    }
    assert!(max_rel <= ALGEBRA_TOL, "max rel {max_rel:.3e}");
    println!(
        "criterion 1 (algebra suite): pass: {ALGEBRA_SAMPLES} samples, max rel {max_rel:.3e} <= {ALGEBRA_TOL:.0e}"
    );
}

#[test]
fn criterion_2_moduli_suite() {
    let mut rng = rng(2);
    let mut max_rel: f64 = 0.0;
    for _ in 0..MODULI_SAMPLES {
        let s = rand_bc(&mut rng);
        let t = rand_bc(&mut rng);

        // first-modulus multiplicativity and the fourth-power identity
        max_rel = max_rel.max(rel_f((s * t).modulus_1(), s.modulus_1() * t.modulus_1()));
        let prod = s
            * s.conj(Conjugation::First)
            * s.conj(Conjugation::Second)
            * s.conj(Conjugation::Third);
        let m1 = s.modulus_1();
        max_rel = max_rel.max(rel_f(m1 * m1 * m1 * m1, prod.norm()));

        // hyperbolic square-modulus multiplicativity
        let lhs = (s * t).square_modulus_hyperbolic();
        let rhs = s.square_modulus_hyperbolic() * t.square_modulus_hyperbolic();
        max_rel = max_rel.max((lhs - rhs).euclid() / lhs.euclid().max(rhs.euclid()).max(1.0));

        // Euclidean-modulus triangle and sqrt(2)-submultiplicativity
        assert!((s + t).modulus_3() <= s.modulus_3() + t.modulus_3() + 1e-12);
        assert!(
            (s * t).modulus_3()
                <= 2.0f64.sqrt() * s.modulus_3() * t.modulus_3() * (1.0 + 1e-12) + 1e-12
        );

        // homogeneity for scalars from either complex plane
        let z = rand_c1(&mut rng);
        let c1 = Bicomplex::from_c1(z);
        let c2 = Bicomplex::of(z.re, 0.0, z.im, 0.0);
        max_rel = max_rel.max(rel_f((c1 * t).modulus_3(), z.abs() * t.modulus_3()));
        max_rel = max_rel.max(rel_f((c2 * t).modulus_3(), z.abs() * t.modulus_3()));
    }
    assert!(max_rel <= MODULI_TOL, "max rel {max_rel:.3e}");

    // the first modulus vanishes exactly on constructed z(i1 +- i2)
    for _ in 0..1_000 {
        let z = rand_c1(&mut rng);
        let plus = Bicomplex::from_c1(z) * (Bicomplex::I1 + Bicomplex::I2);
        let minus = Bicomplex::from_c1(z) * (Bicomplex::I1 - Bicomplex::I2);
        for w in [plus, minus] {
            assert_eq!(w.modulus_1(), 0.0);
            assert!(w.is_null_cone(1e-12));
        }
        let off = Bicomplex::from_c1(z) + Bicomplex::ONE.scale(20.0);
        assert!(off.modulus_1() > 0.0);
        assert!(!off.is_null_cone(1e-12));
    }
    println!(
        "criterion 2 (moduli suite): pass: {MODULI_SAMPLES} samples, max rel {max_rel:.3e} <= {MODULI_TOL:.0e}; null-cone iff first modulus vanishes"
    );
}

#[test]
fn criterion_3_module_suite() {
    let mut rng = rng(3);
    let mut max_rel: f64 = 0.0;
    for _ in 0..MODULE_SAMPLES {
        let n = rng.gen_range(1..=8);
        let x = rand_tvec(&mut rng, n);
        let y = rand_tvec(&mut rng, n);
        let z = rand_tvec(&mut rng, n);
        let alpha = rand_bc(&mut rng);

        // scalar-product axioms
        let lin = x.dot(&y.add(&z).unwrap()).unwrap();
        max_rel = max_rel.max(rel(lin, x.dot(&y).unwrap() + x.dot(&z).unwrap()));
        let hom = x.dot(&y.scale(alpha)).unwrap();
        max_rel = max_rel.max(rel(hom, alpha * x.dot(&y).unwrap()));
        let sym = y.dot(&x).unwrap().conj(Conjugation::Third);
        max_rel = max_rel.max(rel(x.dot(&y).unwrap(), sym));
        assert_eq!(TVector::zero(n).dot(&TVector::zero(n)).unwrap(), Bicomplex::ZERO);
        assert!(x.dot(&x).unwrap().norm() > 0.0);

        // channel decomposition of the product
        let d = x.dot(&y).unwrap();
        for k in Channel::BOTH {
            let chan = x.project(k).hermitian_dot(&y.project(k)).unwrap();
            max_rel = max_rel.max((d.channel(k) - chan).abs() / d.norm().max(1.0));
        }

        // hyperbolic positivity
        assert!(x.dot(&x).unwrap().is_hyperbolic_positive(1e-12));

        // closure on V
        let xv = rand_cvec(&mut rng, n).embed();
        let yv = rand_cvec(&mut rng, n).embed();
        let dv = xv.dot(&yv).unwrap();
        assert_eq!(dv.w2, 0.0);
        assert_eq!(dv.w3, 0.0);

        // norm and metric axioms
        assert!(x.norm() >= 0.0);
        assert_eq!(TVector::zero(n).norm(), 0.0);
        let z1 = alpha.cartesian().0;
        max_rel = max_rel.max(rel_f(
            x.scale(Bicomplex::from_c1(z1)).norm(),
            z1.abs() * x.norm(),
        ));
        let c2 = Bicomplex::of(z1.re, 0.0, z1.im, 0.0);
        max_rel = max_rel.max(rel_f(x.scale(c2).norm(), z1.abs() * x.norm()));
        assert!(
            x.scale(alpha).norm()
                <= 2.0f64.sqrt() * alpha.modulus_3() * x.norm() * (1.0 + 1e-12) + 1e-12
        );
        assert!(x.add(&y).unwrap().norm() <= x.norm() + y.norm() + MODULE_TOL);
        let dxy = x.distance(&y).unwrap();
        max_rel = max_rel.max(rel_f(dxy, y.distance(&x).unwrap()));
        assert_eq!(x.distance(&x).unwrap(), 0.0);
        assert!(
            x.distance(&z).unwrap() <= dxy + y.distance(&z).unwrap() + MODULE_TOL
        );

        // channel-projection norm bound
        for k in Channel::BOTH {
            assert!(x.project(k).norm() <= 2.0f64.sqrt() * x.norm() * (1.0 + 1e-12));
        }

        // Schwarz chain
        let w = x.schwarz_witness(&y).unwrap();
        assert!(w.lhs <= w.mid * (1.0 + 1e-12) + 1e-12);
        assert!(w.mid <= w.rhs * (1.0 + 1e-12) + 1e-12);
    }
    assert!(max_rel <= MODULE_TOL, "max rel {max_rel:.3e}");
    println!(
        "criterion 3 (module suite): pass: {MODULE_SAMPLES} vector pairs (n in 1..=8), max rel {max_rel:.3e} <= {MODULE_TOL:.0e}"
    );
}

#[test]
fn criterion_4_split_product() {
    let mut rng = rng(4);
    let mut max_rel: f64 = 0.0;
    for _ in 0..SPLIT_SAMPLES {
        // identity metrics recover the canonical product
        let n = rng.gen_range(1..=4);
        let metric = SplitMetric::identity(n);
        let x = rand_tvec(&mut rng, n);
        let y = rand_tvec(&mut rng, n);
        max_rel = max_rel.max(rel(metric.dot(&x, &y).unwrap(), x.dot(&y).unwrap()));

        // on the canonical one-dimensional module the norm is Euclidean
        let w = rand_bc(&mut rng);
        let single = TVector::new(vec![w]).unwrap();
        max_rel = max_rel.max(rel_f(single.norm(), w.norm()));
    }
    assert!(max_rel <= SPLIT_TOL, "max rel {max_rel:.3e}");

    // distinct Gram matrices break closure on V
    let g1 = ComplexMatrix::from_rows(vec![vec![ComplexC1::real(2.0)]]).unwrap();
    let g2 = ComplexMatrix::from_rows(vec![vec![ComplexC1::real(3.0)]]).unwrap();
    let metric = SplitMetric::new(g1, g2).unwrap();
    assert!(!metric.is_closed(1e-12));
    let one = TVector::new(vec![Bicomplex::ONE]).unwrap();
    let d = metric.dot(&one, &one).unwrap();
    assert!(
        d.w2.abs() > 1e-10 || d.w3.abs() > 1e-10,
        "expected a closure violation, got {d}"
    );
    assert!(d.is_hyperbolic_positive(1e-12));

    println!(
        "criterion 4 (split product): pass: identity metrics match the canonical product and norm([w]) = |w| on {SPLIT_SAMPLES} samples (max rel {max_rel:.3e} <= {SPLIT_TOL:.0e}); unequal metrics exhibit a closure violation"
    );
}

/// Hadamard bound on a determinant: the product of column norms.
fn hadamard_bound(m: &ComplexMatrix) -> f64 {
    let n = m.n();
    (0..n)
        .map(|j| {
            (0..n)
                .map(|i| m.get(i, j).norm_sqr())
                .sum::<f64>()
                .sqrt()
        })
        .product::<f64>()
        .max(1.0)
}

#[test]
fn criterion_5_eigen_suite() {
    // the worked 1x1 example first: [[j]] has eigenvalue j
    let j = TMatrix::from_rows(vec![vec![Bicomplex::J]]).unwrap();
    let report = j.eigen(Pairing::Diagonal, 1e-10).unwrap();
    assert!((report.pairs[0].lambda - Bicomplex::J).norm() <= 1e-12);

    let mut rng = rng(5);
    let mut max_residual: f64 = 0.0;
    let mut max_det_rel: f64 = 0.0;
    for round in 0..EIGEN_MATRICES {
        let n = rng.gen_range(1..=6);
        let a = rand_tmat(&mut rng, n);
        let pairing = if round % 4 == 0 && n <= 4 {
            Pairing::Full
        } else {
            Pairing::Diagonal
        };
        let report = a.eigen(pairing, 1e-10).unwrap();
        for pair in &report.pairs {
            let residual = a.eigen_residual(pair.lambda, &pair.vector).unwrap();
            max_residual = max_residual.max(residual);
            assert!(residual <= EIGEN_RESIDUAL_TOL, "residual {residual:.3e}");
            assert!(!pair.vector_null_cone);

            // each channel solves its own complex eigenproblem
            for k in Channel::BOTH {
                let ak = a.project(k);
                let vk = pair.vector.project(k);
                let av = ak.apply(vk.coeffs()).unwrap();
                let lk = pair.lambda.channel(k);
                let r: f64 = av
                    .iter()
                    .zip(vk.coeffs())
                    .map(|(ai, vi)| (*ai - lk * *vi).norm_sqr())
                    .sum::<f64>()
                    .sqrt();
                assert!(r <= EIGEN_RESIDUAL_TOL * (1.0 + ak.frobenius()) * vk.norm());
            }

            // the determinant condition, via the independent cofactor oracle
            let shifted = a
                .add(&TMatrix::identity(n).scale(-pair.lambda))
                .unwrap();
            let det = oracle::det(&shifted).unwrap();
            for k in Channel::BOTH {
                let scale = hadamard_bound(&shifted.project(k));
                let det_rel = det.channel(k).abs() / scale;
                max_det_rel = max_det_rel.max(det_rel);
                assert!(det_rel <= EIGEN_DET_TOL, "det residual {det_rel:.3e}");
            }
        }
        if pairing == Pairing::Full {
            // pairing completeness: emitted lambdas are exactly all channel
            // combinations
            let mut expected: Vec<Bicomplex> = Vec::new();
            for l1 in &report.spectrum1 {
                for l2 in &report.spectrum2 {
                    expected.push(Bicomplex::from_idempotent(*l1, *l2));
                }
            }
            assert_eq!(report.pairs.len(), expected.len());
            for (pair, want) in report.pairs.iter().zip(&expected) {
                assert_eq!(pair.lambda, *want);
            }
        }
    }
    println!(
        "criterion 5 (eigen suite): pass: {EIGEN_MATRICES} random matrices (n <= 6), max residual {max_residual:.3e} <= {EIGEN_RESIDUAL_TOL:.0e}, max det channel {max_det_rel:.3e} <= {EIGEN_DET_TOL:.0e}; [[j]] gives j to 1e-12"
    );
}

#[test]
fn criterion_6_hyperbolic_spectrum() {
    let mut rng = rng(6);
    let mut max_imag: f64 = 0.0;
    for _ in 0..EIGEN_MATRICES {
        let n = rng.gen_range(1..=6);
        let b = rand_tmat(&mut rng, n);
        let a = b.add(&b.adjoint()).unwrap();
        let check = a.self_adjoint_spectrum(HYPERBOLIC_SPECTRUM_TOL).unwrap();
        assert!(
            check.all_hyperbolic,
            "non-hyperbolic eigenvalue, max imag {:.3e}",
            check.max_imag
        );
        max_imag = max_imag.max(check.max_imag);
    }

    // diag(1, j) shows the spectrum lives in the hyperbolic plane, not the
    // real line
    let a = TMatrix::diagonal(&[Bicomplex::ONE, Bicomplex::J]);
    let report = a.eigen(Pairing::Diagonal, 1e-10).unwrap();
    let nonreal = report
        .pairs
        .iter()
        .find(|p| p.lambda.w3.abs() > 0.5)
        .expect("diag(1, j) must produce a non-real eigenvalue");
    assert!(nonreal.lambda_hyperbolic);

    println!(
        "criterion 6 (hyperbolic spectrum): pass: {EIGEN_MATRICES} self-adjoint matrices in both pairings, max imaginary magnitude {max_imag:.3e} <= {HYPERBOLIC_SPECTRUM_TOL:.0e}; diag(1, j) yields a non-real hyperbolic eigenvalue"
    );
}

#[test]
fn criterion_7_hyperbolic_angle() {
    let mut rng = rng(7);
    let mut max_dev: f64 = 0.0;
    let mut produced = 0;
    while produced < ANGLE_SAMPLES {
        let n = rng.gen_range(1..=6);
        let x = HVector::new(
            (0..n)
                .map(|_| Hyperbolic::of(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)))
                .collect(),
        )
        .unwrap();
        let y = HVector::new(
            (0..n)
                .map(|_| Hyperbolic::of(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)))
                .collect(),
        )
        .unwrap();
        let norms_ok = Channel::BOTH.iter().all(|&k| {
            x.channel_norm(k) > 1e-3 && y.channel_norm(k) > 1e-3
        });
        if !norms_ok {
            continue;
        }
        produced += 1;
        let angle = x.angle(&y, 1e-12).unwrap();
        let cos = angle.cos();
        let d = x.dot(&y).unwrap();
        for k in Channel::BOTH {
            let (c, dk, nx, ny) = match k {
                Channel::E1 => (cos.channel1(), d.channel1(), x.channel_norm(k), y.channel_norm(k)),
                Channel::E2 => (cos.channel2(), d.channel2(), x.channel_norm(k), y.channel_norm(k)),
            };
            max_dev = max_dev.max((c - dk / (nx * ny)).abs());
        }
        // self-angle collapses to zero
        let self_angle = x.angle(&x, 1e-12).unwrap();
        max_dev = max_dev.max((self_angle.cos().channel1() - 1.0).abs());
        max_dev = max_dev.max((self_angle.cos().channel2() - 1.0).abs());
    }
    assert!(max_dev <= ANGLE_TOL, "max deviation {max_dev:.3e}");

    // orthogonal real vectors meet at pi/2 + 0j
    let ex = HVector::new(vec![Hyperbolic::real(1.0), Hyperbolic::ZERO]).unwrap();
    let ey = HVector::new(vec![Hyperbolic::ZERO, Hyperbolic::real(1.0)]).unwrap();
    let angle = ex.angle(&ey, 1e-12).unwrap();
    assert!((angle.x - FRAC_PI_2).abs() <= 1e-15);
    assert_eq!(angle.y, 0.0);

    println!(
        "criterion 7 (hyperbolic angle): pass: {ANGLE_SAMPLES} non-null-cone pairs, max cosine deviation {max_dev:.3e} <= {ANGLE_TOL:.0e}; orthogonal real vectors give pi/2 + 0j"
    );
}

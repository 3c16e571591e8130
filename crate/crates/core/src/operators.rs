//! Bicomplex matrices as linear operators: application, adjoint,
//! self-adjointness, channel projection, and the eigensolver.
//!
//! Every operator splits into two complex matrices, one per idempotent
//! channel, and the eigenproblem decouples with it: solve each channel,
//! then recombine `lambda = e1 l1 + e2 l2` and `v = e1 v1 + e2 v2`. Any
//! cross-channel combination of eigenvalues is a genuine eigenvalue with a
//! non-null-cone eigenvector, so the pairing is a reporting choice:
//! `diagonal` matches sorted spectra one-to-one, `full` emits all n^2
//! combinations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::ComplexC1;
use crate::eigen::{ComplexMatrix, EIGEN_DIM_LIMIT};
use crate::error::{Error, Result};
use crate::scalar::{Bicomplex, Channel, Conjugation};
use crate::tmodule::TVector;

/// Largest dimension accepted for exhaustive pairing.
pub const FULL_PAIRING_LIMIT: usize = 8;

/// A square bicomplex matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct TMatrix {
    n: usize,
    entries: Vec<Bicomplex>,
}

/// JSON form of a matrix: {"n": .., "entries": row-major quadruples}.
#[derive(Serialize, Deserialize)]
struct RawMatrix {
    n: usize,
    entries: Vec<Bicomplex>,
}

impl TryFrom<RawMatrix> for TMatrix {
    type Error = Error;
    fn try_from(raw: RawMatrix) -> Result<Self> {
        TMatrix::new(raw.n, raw.entries)
    }
}

impl From<TMatrix> for RawMatrix {
    fn from(m: TMatrix) -> Self {
        RawMatrix {
            n: m.n,
            entries: m.entries,
        }
    }
}

impl TMatrix {
    pub fn new(n: usize, entries: Vec<Bicomplex>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::NotSquare {
                n,
                expected: n * n,
                got: entries.len(),
            });
        }
        for e in &entries {
            if !e.is_finite() {
                return Err(Error::NonFinite(
                    e.components()
                        .into_iter()
                        .find(|x| !x.is_finite())
                        .unwrap_or(f64::NAN),
                ));
            }
        }
        Ok(Self { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Bicomplex>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::NotSquare {
                    n,
                    expected: n * n,
                    got: row.len() * n,
                });
            }
            entries.extend_from_slice(row);
        }
        Self::new(n, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Bicomplex::ZERO; n * n];
        for i in 0..n {
            entries[i * n + i] = Bicomplex::ONE;
        }
        Self { n, entries }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![Bicomplex::ZERO; n * n],
        }
    }

    pub fn diagonal(values: &[Bicomplex]) -> Self {
        let n = values.len();
        let mut m = Self::zero(n);
        for (i, v) in values.iter().enumerate() {
            m.entries[i * n + i] = *v;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Bicomplex {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Bicomplex) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[Bicomplex] {
        &self.entries
    }

    pub fn apply(&self, x: &TVector) -> Result<TVector> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: x.len(),
            });
        }
        let coeffs = (0..self.n)
            .map(|i| {
                (0..self.n).fold(Bicomplex::ZERO, |acc, j| {
                    acc + self.get(i, j) * x.get(j)
                })
            })
            .collect();
        TVector::new(coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                for j in 0..n {
                    out.entries[i * n + j] = out.entries[i * n + j] + aik * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        Ok(Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| *a + *b)
                .collect(),
        })
    }

    pub fn scale(&self, s: Bicomplex) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|e| s * *e).collect(),
        }
    }

    /// The adjoint: entrywise conj_3, then transpose. Under the canonical
    /// product, `(A* X, Y) = (X, A Y)`.
    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.get(i, j).conj(Conjugation::Third);
            }
        }
        out
    }

    /// Entrywise idempotent channel `k`.
    pub fn project(&self, k: Channel) -> ComplexMatrix {
        ComplexMatrix::new(
            self.n,
            self.entries.iter().map(|e| e.channel(k)).collect(),
        )
        .expect("projection preserves shape")
    }

    /// Recombines channel matrices as `e1 A1 + e2 A2`.
    pub fn from_channels(a1: &ComplexMatrix, a2: &ComplexMatrix) -> Result<Self> {
        if a1.n() != a2.n() {
            return Err(Error::DimensionMismatch {
                left: a1.n(),
                right: a2.n(),
            });
        }
        Self::new(
            a1.n(),
            a1.entries()
                .iter()
                .zip(a2.entries())
                .map(|(p, q)| Bicomplex::from_idempotent(*p, *q))
                .collect(),
        )
    }

    pub fn frobenius(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| {
                let n = e.norm();
                n * n
            })
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entrywise Euclidean distance between the matrix and its
    /// adjoint.
    pub fn self_adjoint_deviation(&self) -> f64 {
        let adj = self.adjoint();
        self.entries
            .iter()
            .zip(&adj.entries)
            .map(|(a, b)| (*a - *b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_self_adjoint(&self, tol: f64) -> bool {
        self.self_adjoint_deviation() <= tol * (1.0 + self.frobenius())
    }

    /// Relative residual of a candidate eigenpair:
    /// `|A v - lambda v| / (|v| (1 + |A|_F))`. A zero vector reports
    /// infinity.
    pub fn eigen_residual(&self, lambda: Bicomplex, v: &TVector) -> Result<f64> {
        let vnorm = v.norm();
        if vnorm == 0.0 {
            return Ok(f64::INFINITY);
        }
        let r = self.apply(v)?.sub(&v.scale(lambda))?.norm();
        Ok(r / (vnorm * (1.0 + self.frobenius())))
    }

    /// Solves the bicomplex eigenproblem by solving the two channel
    /// problems and recombining. Channel spectra are sorted
    /// lexicographically by (re, im) before pairing.
    pub fn eigen(&self, pairing: Pairing, tol: f64) -> Result<EigenReport> {
        if self.n > EIGEN_DIM_LIMIT {
            return Err(Error::TooLarge {
                n: self.n,
                limit: EIGEN_DIM_LIMIT,
                what: "eigensolver",
            });
        }
        if pairing == Pairing::Full && self.n > FULL_PAIRING_LIMIT {
            return Err(Error::PairingOverflow {
                n: self.n,
                limit: FULL_PAIRING_LIMIT,
            });
        }
        let mut channel_pairs: Vec<_> = Channel::BOTH
            .iter()
            .map(|&k| self.project(k).eigenpairs())
            .collect::<Result<_>>()?;
        for pairs in &mut channel_pairs {
            pairs.sort_by(|a, b| {
                a.value
                    .re
                    .total_cmp(&b.value.re)
                    .then(a.value.im.total_cmp(&b.value.im))
            });
        }
        let (pairs1, pairs2) = (&channel_pairs[0], &channel_pairs[1]);
        let indices: Vec<(usize, usize)> = match pairing {
            Pairing::Diagonal => (0..self.n).map(|i| (i, i)).collect(),
            Pairing::Full => (0..self.n)
                .flat_map(|i| (0..self.n).map(move |j| (i, j)))
                .collect(),
        };
        let mut pairs = Vec::with_capacity(indices.len());
        for (i, j) in indices {
            let lambda = Bicomplex::from_idempotent(pairs1[i].value, pairs2[j].value);
            let vector = TVector::from_channels(&pairs1[i].vector, &pairs2[j].vector)?;
            let residual = self.eigen_residual(lambda, &vector)?;
            let vector_null_cone = Channel::BOTH
                .iter()
                .any(|&k| vector.project(k).norm() <= tol);
            pairs.push(EigenPair {
                lambda,
                vector,
                residual,
                lambda_hyperbolic: lambda.is_hyperbolic(tol),
                vector_null_cone,
            });
        }
        Ok(EigenReport {
            spectrum1: pairs1.iter().map(|p| p.value).collect(),
            spectrum2: pairs2.iter().map(|p| p.value).collect(),
            pairs,
            pairing_mode: pairing,
        })
    }

    /// Checks that a self-adjoint operator has a hyperbolic spectrum, in
    /// diagonal and (for small n) full pairing. Fails with
    /// [`Error::NotSelfAdjoint`] when the precondition does not hold.
    pub fn self_adjoint_spectrum(&self, tol: f64) -> Result<SpectrumCheck> {
        if !self.is_self_adjoint(tol) {
            return Err(Error::NotSelfAdjoint(self.self_adjoint_deviation()));
        }
        let mut reports = vec![self.eigen(Pairing::Diagonal, tol)?];
        if self.n <= FULL_PAIRING_LIMIT {
            reports.push(self.eigen(Pairing::Full, tol)?);
        }
        let mut max_imag: f64 = 0.0;
        let mut all_hyperbolic = true;
        let mut pairs_checked = 0;
        for report in &reports {
            for pair in &report.pairs {
                max_imag = max_imag.max(pair.lambda.w1.abs().max(pair.lambda.w2.abs()));
                all_hyperbolic &= pair.lambda_hyperbolic;
                pairs_checked += 1;
            }
        }
        Ok(SpectrumCheck {
            max_imag,
            all_hyperbolic,
            pairs_checked,
        })
    }
}

impl fmt::Display for TMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// How channel eigenvalues combine into bicomplex pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pairing {
    /// Match the i-th sorted eigenvalue of each channel; n pairs.
    Diagonal,
    /// All n^2 channel combinations; n <= 8.
    Full,
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pairing::Diagonal => "diagonal",
            Pairing::Full => "full",
        })
    }
}

impl FromStr for Pairing {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "diagonal" => Ok(Pairing::Diagonal),
            "full" => Ok(Pairing::Full),
            other => Err(format!("unknown pairing '{other}' (expected diagonal or full)")),
        }
    }
}

/// One recombined eigenpair.
#[derive(Debug, Clone, Serialize)]
pub struct EigenPair {
    pub lambda: Bicomplex,
    pub vector: TVector,
    /// Relative residual of `A v = lambda v`.
    pub residual: f64,
    pub lambda_hyperbolic: bool,
    pub vector_null_cone: bool,
}

/// Outcome of the bicomplex eigensolver.
#[derive(Debug, Clone, Serialize)]
pub struct EigenReport {
    pub spectrum1: Vec<ComplexC1>,
    pub spectrum2: Vec<ComplexC1>,
    pub pairs: Vec<EigenPair>,
    pub pairing_mode: Pairing,
}

/// Summary from checking a self-adjoint operator's spectrum.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SpectrumCheck {
    /// Largest i1/i2 component magnitude seen across all eigenvalues.
    pub max_imag: f64,
    pub all_hyperbolic: bool,
    pub pairs_checked: usize,
}

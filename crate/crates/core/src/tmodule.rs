//! Finite free modules over the bicomplex ring: kets, scalar products,
//! norms, channel projections, the dual (bra) layer, and the hyperbolic
//! angle.
//!
//! Coefficients are always relative to the fixed canonical basis, the
//! columns of the identity. The canonical scalar product is
//! `(X, Y) = sum_i conj_3(x_i) y_i`; a [`SplitMetric`] generalizes it to an
//! independent Hermitian positive-definite Gram matrix per idempotent
//! channel.

use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::complex::ComplexC1;
use crate::eigen::ComplexMatrix;
use crate::error::{Error, Result};
use crate::hyperbolic::Hyperbolic;
use crate::scalar::{Bicomplex, Channel, Conjugation};

/// Entrywise tolerance for the Hermitian check on Gram matrices.
pub const HERMITIAN_TOL: f64 = 1e-12;

fn check_len(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

/// A ket: a coefficient vector over the bicomplex ring, length >= 1.
#[derive(Debug, Clone, PartialEq)]
pub struct TVector {
    coeffs: Vec<Bicomplex>,
}

impl TVector {
    pub fn new(coeffs: Vec<Bicomplex>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyVector);
        }
        for c in &coeffs {
            if !c.is_finite() {
                return Err(Error::NonFinite(
                    c.components()
                        .into_iter()
                        .find(|x| !x.is_finite())
                        .unwrap_or(f64::NAN),
                ));
            }
        }
        Ok(Self { coeffs })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            coeffs: vec![Bicomplex::ZERO; n.max(1)],
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Bicomplex] {
        &self.coeffs
    }

    pub fn get(&self, i: usize) -> Bicomplex {
        self.coeffs[i]
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        check_len(self.len(), rhs.len())?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| *a + *b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        check_len(self.len(), rhs.len())?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| *a - *b)
                .collect(),
        })
    }

    pub fn scale(&self, s: Bicomplex) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| s * *c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -*c).collect(),
        }
    }

    /// Componentwise idempotent channel `k`.
    pub fn project(&self, k: Channel) -> ComplexVector {
        ComplexVector {
            coeffs: self.coeffs.iter().map(|c| c.channel(k)).collect(),
        }
    }

    /// Recombines channel vectors as `e1 X1 + e2 X2`; the left inverse of
    /// projecting onto both channels.
    pub fn from_channels(x1: &ComplexVector, x2: &ComplexVector) -> Result<Self> {
        check_len(x1.len(), x2.len())?;
        Ok(Self {
            coeffs: x1
                .coeffs
                .iter()
                .zip(&x2.coeffs)
                .map(|(a, b)| Bicomplex::from_idempotent(*a, *b))
                .collect(),
        })
    }

    /// Canonical scalar product `sum_i conj_3(x_i) y_i`, antilinear in
    /// `self` and linear in `rhs`.
    pub fn dot(&self, rhs: &Self) -> Result<Bicomplex> {
        check_len(self.len(), rhs.len())?;
        Ok(self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .fold(Bicomplex::ZERO, |acc, (x, y)| {
                acc + x.conj(Conjugation::Third) * *y
            }))
    }

    /// The extended norm: with `(X, X) = a e1 + b e2`, this is
    /// `sqrt((a + b) / 2)`, the Euclidean magnitude of
    /// `sqrt(a) e1 + sqrt(b) e2`.
    pub fn norm(&self) -> f64 {
        let d = self.dot(self).expect("equal lengths");
        let (p1, p2) = d.idempotent();
        (((p1.re + p2.re) / 2.0).max(0.0)).sqrt()
    }

    pub fn distance(&self, rhs: &Self) -> Result<f64> {
        Ok(self.sub(rhs)?.norm())
    }

    /// The three quantities chained by the bicomplex Schwarz inequality:
    /// `|(X,Y)| <= |e1 |X1||Y1| + e2 |X2||Y2|| <= sqrt(2) |X| |Y|`.
    pub fn schwarz_witness(&self, rhs: &Self) -> Result<SchwarzWitness> {
        let lhs = self.dot(rhs)?.norm();
        let a = self.project(Channel::E1).norm() * rhs.project(Channel::E1).norm();
        let b = self.project(Channel::E2).norm() * rhs.project(Channel::E2).norm();
        let mid = ((a * a + b * b) / 2.0).sqrt();
        let rhs_bound = 2.0_f64.sqrt() * self.norm() * rhs.norm();
        Ok(SchwarzWitness {
            lhs,
            mid,
            rhs: rhs_bound,
        })
    }

    /// The linear functional induced by this ket.
    pub fn bra(&self) -> Bra {
        Bra { ket: self.clone() }
    }
}

impl fmt::Display for TVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// The middle and outer bounds of the Schwarz chain together with the
/// scalar-product magnitude they bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchwarzWitness {
    pub lhs: f64,
    pub mid: f64,
    pub rhs: f64,
}

/// An element of the complex submodule V: coefficients in the first
/// complex plane.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    coeffs: Vec<ComplexC1>,
}

impl ComplexVector {
    pub fn new(coeffs: Vec<ComplexC1>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyVector);
        }
        for c in &coeffs {
            if !c.is_finite() {
                return Err(Error::NonFinite(if c.re.is_finite() { c.im } else { c.re }));
            }
        }
        Ok(Self { coeffs })
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[ComplexC1] {
        &self.coeffs
    }

    pub fn get(&self, i: usize) -> ComplexC1 {
        self.coeffs[i]
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        check_len(self.len(), rhs.len())?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| *a + *b)
                .collect(),
        })
    }

    pub fn scale(&self, s: ComplexC1) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| s * *c).collect(),
        }
    }

    /// Standard Hermitian product `sum_i conj(x_i) y_i`.
    pub fn hermitian_dot(&self, rhs: &Self) -> Result<ComplexC1> {
        check_len(self.len(), rhs.len())?;
        Ok(self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .fold(ComplexC1::ZERO, |acc, (x, y)| acc + x.conj() * *y))
    }

    pub fn norm(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Embeds into the module with all-first-plane coefficients.
    pub fn embed(&self) -> TVector {
        TVector {
            coeffs: self.coeffs.iter().map(|c| Bicomplex::from_c1(*c)).collect(),
        }
    }
}

/// An element of a free module over the hyperbolic subring.
#[derive(Debug, Clone, PartialEq)]
pub struct HVector {
    coeffs: Vec<Hyperbolic>,
}

impl HVector {
    pub fn new(coeffs: Vec<Hyperbolic>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyVector);
        }
        for c in &coeffs {
            if !c.x.is_finite() || !c.y.is_finite() {
                return Err(Error::NonFinite(if c.x.is_finite() { c.y } else { c.x }));
            }
        }
        Ok(Self { coeffs })
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Hyperbolic] {
        &self.coeffs
    }

    /// Hyperbolic scalar product `sum_i x_i y_i`; conj_3 is the identity on
    /// the hyperbolic subring, so the product is symmetric.
    pub fn dot(&self, rhs: &Self) -> Result<Hyperbolic> {
        check_len(self.len(), rhs.len())?;
        Ok(self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .fold(Hyperbolic::ZERO, |acc, (x, y)| acc + *x * *y))
    }

    /// The real vector in idempotent channel `k`.
    pub fn channel(&self, k: Channel) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| match k {
                Channel::E1 => c.channel1(),
                Channel::E2 => c.channel2(),
            })
            .collect()
    }

    pub fn channel_norm(&self, k: Channel) -> f64 {
        self.channel(k).iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// The hyperbolic angle `t1 e1 + t2 e2` between two module elements,
    /// combining the two real channel angles. Undefined (and an error) when
    /// a channel norm falls at or below `tol`.
    pub fn angle(&self, rhs: &Self, tol: f64) -> Result<Hyperbolic> {
        check_len(self.len(), rhs.len())?;
        let d = self.dot(rhs)?;
        let mut theta = [0.0; 2];
        for (slot, k) in theta.iter_mut().zip(Channel::BOTH) {
            let nx = self.channel_norm(k);
            let ny = rhs.channel_norm(k);
            if nx <= tol || ny <= tol {
                return Err(Error::ZeroChannel { channel: k.index() });
            }
            let c = match k {
                Channel::E1 => d.channel1(),
                Channel::E2 => d.channel2(),
            } / (nx * ny);
            *slot = c.clamp(-1.0, 1.0).acos();
        }
        Ok(Hyperbolic::from_angles(theta[0], theta[1]))
    }
}

/// The functional a ket induces through the scalar product.
#[derive(Debug, Clone, PartialEq)]
pub struct Bra {
    ket: TVector,
}

impl Bra {
    pub fn ket(&self) -> &TVector {
        &self.ket
    }

    pub fn apply(&self, psi: &TVector) -> Result<Bicomplex> {
        self.ket.dot(psi)
    }

    /// The channel-`k` functional on V: `psi -> P_k((X, psi))`, realized by
    /// the projected ket.
    pub fn project(&self, k: Channel) -> ChannelBra {
        ChannelBra {
            coeffs: self.ket.project(k),
        }
    }
}

/// A functional on the complex submodule V obtained by projecting a bra.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelBra {
    coeffs: ComplexVector,
}

impl ChannelBra {
    pub fn coeffs(&self) -> &ComplexVector {
        &self.coeffs
    }

    pub fn apply(&self, psi: &ComplexVector) -> Result<ComplexC1> {
        self.coeffs.hermitian_dot(psi)
    }
}

/// A split scalar product: an independent Hermitian positive-definite Gram
/// matrix per idempotent channel. Closed on V exactly when the two matrices
/// agree.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitMetric {
    g1: ComplexMatrix,
    g2: ComplexMatrix,
}

impl SplitMetric {
    pub fn new(g1: ComplexMatrix, g2: ComplexMatrix) -> Result<Self> {
        check_len(g1.n(), g2.n())?;
        for (which, g) in [(1usize, &g1), (2usize, &g2)] {
            let dev = g.hermitian_deviation();
            if dev > HERMITIAN_TOL * (1.0 + g.max_abs()) {
                return Err(Error::NotHermitian {
                    which,
                    deviation: dev,
                });
            }
            let min_eigenvalue = g
                .eigenvalues()?
                .iter()
                .map(|v| v.re)
                .fold(f64::INFINITY, f64::min);
            if !(min_eigenvalue > 0.0) {
                return Err(Error::NotPositiveDefinite {
                    which,
                    min_eigenvalue,
                });
            }
        }
        Ok(Self { g1, g2 })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            g1: ComplexMatrix::identity(n),
            g2: ComplexMatrix::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.g1.n()
    }

    pub fn gram(&self, k: Channel) -> &ComplexMatrix {
        match k {
            Channel::E1 => &self.g1,
            Channel::E2 => &self.g2,
        }
    }

    /// The split scalar product `e1 (X1* g1 Y1) + e2 (X2* g2 Y2)`.
    pub fn dot(&self, x: &TVector, y: &TVector) -> Result<Bicomplex> {
        check_len(x.len(), self.n())?;
        check_len(x.len(), y.len())?;
        let c1 = self
            .g1
            .form(x.project(Channel::E1).coeffs(), y.project(Channel::E1).coeffs())?;
        let c2 = self
            .g2
            .form(x.project(Channel::E2).coeffs(), y.project(Channel::E2).coeffs())?;
        Ok(Bicomplex::from_idempotent(c1, c2))
    }

    /// Whether the product is closed on V, i.e. the two Gram matrices agree
    /// within `tol`.
    pub fn is_closed(&self, tol: f64) -> bool {
        let scale = 1.0 + self.g1.max_abs().max(self.g2.max_abs());
        self.g1
            .entries()
            .iter()
            .zip(self.g2.entries())
            .all(|(a, b)| (*a - *b).abs() <= tol * scale)
    }
}

// TVector JSON: list of [w0, w1, w2, w3]
impl Serialize for TVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<Bicomplex>::deserialize(deserializer)?;
        TVector::new(coeffs).map_err(de::Error::custom)
    }
}

// HVector JSON: list of [x, y]
impl Serialize for HVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for HVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<Hyperbolic>::deserialize(deserializer)?;
        HVector::new(coeffs).map_err(de::Error::custom)
    }
}

// SplitMetric JSON: {"g1": row-major [re, im] list, "g2": likewise}
impl Serialize for SplitMetric {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SplitMetric", 2)?;
        s.serialize_field("g1", self.g1.entries())?;
        s.serialize_field("g2", self.g2.entries())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for SplitMetric {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            g1: Vec<ComplexC1>,
            g2: Vec<ComplexC1>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let g1 = ComplexMatrix::from_row_major(raw.g1).map_err(de::Error::custom)?;
        let g2 = ComplexMatrix::from_row_major(raw.g2).map_err(de::Error::custom)?;
        SplitMetric::new(g1, g2).map_err(de::Error::custom)
    }
}

//! Dense complex matrices and a small eigensolver for them.
//!
//! The bicomplex eigenproblem reduces to two independent problems over the
//! first complex plane; this module solves those. The pipeline is
//! characteristic polynomial (Faddeev-LeVerrier), simultaneous root
//! iteration (Durand-Kerner), then inverse iteration with a Rayleigh
//! quotient polish for the eigenvectors. Adequate for desk-scale matrices
//! (n <= 32); a Hessenberg-QR swap would be internal only.

use crate::complex::ComplexC1;
use crate::error::{Error, Result};
use crate::tmodule::ComplexVector;

/// Largest dimension the eigensolver accepts.
pub const EIGEN_DIM_LIMIT: usize = 32;

const ROOT_MAX_ITER: usize = 500;
const ROOT_MOVE_TOL: f64 = 1e-13;
const VECTOR_MAX_ITER: usize = 50;
const SHIFT_PERTURBATION: f64 = 1e-10;
/// Residual bound each returned eigenpair must satisfy, relative to
/// `1 + frobenius`.
pub const EIGEN_RESIDUAL_BOUND: f64 = 1e-8;
const RESIDUAL_TARGET: f64 = 1e-11;

/// A dense square matrix over the first complex plane, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<ComplexC1>,
}

/// One solved eigenpair of a complex matrix.
#[derive(Debug, Clone)]
pub struct ComplexEigenPair {
    pub value: ComplexC1,
    pub vector: ComplexVector,
    /// Absolute residual `|A v - value v|` for the unit vector `v`.
    pub residual: f64,
}

impl ComplexMatrix {
    pub fn new(n: usize, entries: Vec<ComplexC1>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::NotSquare {
                n,
                expected: n * n,
                got: entries.len(),
            });
        }
        for e in &entries {
            if !e.is_finite() {
                return Err(Error::NonFinite(if e.re.is_finite() { e.im } else { e.re }));
            }
        }
        Ok(Self { n, entries })
    }

    /// Builds a square matrix from a flat row-major list, inferring `n`.
    pub fn from_row_major(entries: Vec<ComplexC1>) -> Result<Self> {
        let n = (entries.len() as f64).sqrt().round() as usize;
        Self::new(n, entries)
    }

    pub fn from_rows(rows: Vec<Vec<ComplexC1>>) -> Result<Self> {
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
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = ComplexC1::ONE;
        }
        m
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![ComplexC1::ZERO; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> ComplexC1 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ComplexC1) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[ComplexC1] {
        &self.entries
    }

    pub fn conj_transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
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

    pub fn apply(&self, x: &[ComplexC1]) -> Result<Vec<ComplexC1>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: x.len(),
            });
        }
        Ok((0..self.n)
            .map(|i| {
                let mut acc = ComplexC1::ZERO;
                for j in 0..self.n {
                    acc = acc + self.get(i, j) * x[j];
                }
                acc
            })
            .collect())
    }

    /// Sesquilinear form `x* A y`, antilinear in `x`.
    pub fn form(&self, x: &[ComplexC1], y: &[ComplexC1]) -> Result<ComplexC1> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: x.len(),
            });
        }
        let ay = self.apply(y)?;
        Ok(x.iter()
            .zip(&ay)
            .fold(ComplexC1::ZERO, |acc, (xi, yi)| acc + xi.conj() * *yi))
    }

    pub fn trace(&self) -> ComplexC1 {
        (0..self.n).fold(ComplexC1::ZERO, |acc, i| acc + self.get(i, i))
    }

    pub fn frobenius(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|e| e.abs()).fold(0.0, f64::max)
    }

    /// Largest entrywise deviation from Hermitian symmetry.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).abs());
            }
        }
        dev
    }

    fn scaled(&self, s: f64) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
        }
    }

    /// Monic characteristic polynomial coefficients `[c0, .., c_{n-1}]`
    /// with `p(z) = z^n + c_{n-1} z^{n-1} + .. + c0`, by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> Vec<ComplexC1> {
        let n = self.n;
        let mut coeffs = vec![ComplexC1::ZERO; n + 1];
        coeffs[n] = ComplexC1::ONE;
        let mut m = Self::zero(n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut mk = self.matmul(&m).expect("same dimension");
            let ck = coeffs[n - k + 1];
            for i in 0..n {
                mk.entries[i * n + i] = mk.entries[i * n + i] + ck;
            }
            // c_{n-k} = -tr(A M_k) / k
            let mut tr = ComplexC1::ZERO;
            for i in 0..n {
                for l in 0..n {
                    tr = tr + self.get(i, l) * mk.get(l, i);
                }
            }
            coeffs[n - k] = -tr.scale(1.0 / k as f64);
            m = mk;
        }
        coeffs.truncate(n);
        coeffs
    }

    /// All eigenvalues with multiplicity, in root-iteration order.
    pub fn eigenvalues(&self) -> Result<Vec<ComplexC1>> {
        if self.n > EIGEN_DIM_LIMIT {
            return Err(Error::TooLarge {
                n: self.n,
                limit: EIGEN_DIM_LIMIT,
                what: "eigensolver",
            });
        }
        // Frobenius scaling puts every eigenvalue in the unit disk, keeping
        // the characteristic coefficients tame and the root iteration's
        // initial circle on top of the spectrum
        let s = self.frobenius();
        if s == 0.0 {
            return Ok(vec![ComplexC1::ZERO; self.n]);
        }
        let roots = polynomial_roots(&self.scaled(1.0 / s).char_poly())?;
        Ok(roots.into_iter().map(|r| r.scale(s)).collect())
    }

    /// All eigenpairs with multiplicity. Each vector is unit with its
    /// largest-magnitude coefficient made real positive; each pair meets
    /// the residual bound `|A v - value v| <= 1e-8 (1 + |A|_F)`.
    pub fn eigenpairs(&self) -> Result<Vec<ComplexEigenPair>> {
        let n = self.n;
        if self.max_abs() == 0.0 {
            // the zero matrix: basis vectors, exact zeros
            return Ok((0..n)
                .map(|i| {
                    let mut v = vec![ComplexC1::ZERO; n];
                    v[i] = ComplexC1::ONE;
                    ComplexEigenPair {
                        value: ComplexC1::ZERO,
                        vector: ComplexVector::new(v).expect("unit basis vector"),
                        residual: 0.0,
                    }
                })
                .collect());
        }
        let values = self.eigenvalues()?;
        values
            .into_iter()
            .enumerate()
            .map(|(idx, value)| self.eigenpair_near(value, idx))
            .collect()
    }

    /// Inverse iteration around `estimate`, polishing the eigenvalue with
    /// the Rayleigh quotient of the converged vector.
    fn eigenpair_near(&self, estimate: ComplexC1, index: usize) -> Result<ComplexEigenPair> {
        let n = self.n;
        let scale = 1.0 + self.frobenius();
        let target = RESIDUAL_TARGET * scale;
        let bound = EIGEN_RESIDUAL_BOUND * scale;
        let mut shift = SHIFT_PERTURBATION * scale;
        let mut v = start_vector(n, index);
        normalize(&mut v);
        let mut best: Option<(ComplexC1, Vec<ComplexC1>, f64)> = None;

        'attempts: for _ in 0..3 {
            let mu = estimate + ComplexC1::real(shift);
            let mut shifted = self.clone();
            for i in 0..n {
                shifted.entries[i * n + i] = shifted.entries[i * n + i] - mu;
            }
            let lu = match LuFactors::factor(shifted) {
                Some(lu) => lu,
                None => {
                    shift *= 10.0;
                    continue;
                }
            };
            for _ in 0..VECTOR_MAX_ITER {
                let mut w = lu.solve(&v);
                if w.iter().any(|c| !c.is_finite()) {
                    shift *= 10.0;
                    continue 'attempts;
                }
                normalize(&mut w);
                v = w;
                let av = self.apply(&v).expect("dimension fixed");
                let vv: f64 = v.iter().map(|c| c.norm_sqr()).sum();
                let vav = v
                    .iter()
                    .zip(&av)
                    .fold(ComplexC1::ZERO, |acc, (vi, ai)| acc + vi.conj() * *ai);
                let lambda = vav.scale(1.0 / vv);
                let residual = av
                    .iter()
                    .zip(&v)
                    .map(|(ai, vi)| (*ai - lambda * *vi).norm_sqr())
                    .sum::<f64>()
                    .sqrt();
                if best.as_ref().map_or(true, |(_, _, r)| residual < *r) {
                    best = Some((lambda, v.clone(), residual));
                }
                if residual <= target {
                    break 'attempts;
                }
            }
            if best.as_ref().is_some_and(|(_, _, r)| *r <= bound) {
                break;
            }
            shift *= 10.0;
        }

        let (value, mut vector, _) = best.ok_or_else(|| {
            Error::ConvergenceFailure(format!(
                "inverse iteration made no progress near eigenvalue estimate {estimate}"
            ))
        })?;
        canonicalize(&mut vector);
        // the unit rescaling leaves the residual unchanged; recompute so the
        // reported figure matches the returned pair exactly
        let av = self.apply(&vector).expect("dimension fixed");
        let residual = av
            .iter()
            .zip(&vector)
            .map(|(ai, vi)| (*ai - value * *vi).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if !(residual <= bound) {
            return Err(Error::ConvergenceFailure(format!(
                "eigenpair residual {residual:.3e} above bound {bound:.3e}"
            )));
        }
        Ok(ComplexEigenPair {
            value,
            vector: ComplexVector::new(vector).expect("finite unit vector"),
            residual,
        })
    }
}

/// Roots of the monic polynomial `z^n + c_{n-1} z^{n-1} + .. + c0` by
/// Durand-Kerner iteration, initial guesses at powers of `0.4 + 0.9 i1`.
pub fn polynomial_roots(coeffs: &[ComplexC1]) -> Result<Vec<ComplexC1>> {
    let n = coeffs.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let seed = ComplexC1::of(0.4, 0.9);
    let mut z = Vec::with_capacity(n);
    let mut acc = ComplexC1::ONE;
    for _ in 0..n {
        z.push(acc);
        acc = acc * seed;
    }
    for _ in 0..ROOT_MAX_ITER {
        let mut max_move: f64 = 0.0;
        for i in 0..n {
            let p = eval_monic(coeffs, z[i]);
            // a multiple root stalls the sweep once the expanded polynomial
            // evaluates below its rounding-noise floor; such a point is as
            // converged as the coefficients allow
            if p.abs() <= eval_noise_floor(coeffs, z[i].abs()) {
                continue;
            }
            let mut den = ComplexC1::ONE;
            for j in 0..n {
                if j != i {
                    den = den * (z[i] - z[j]);
                }
            }
            if den.norm_sqr() == 0.0 {
                // coincident estimates; separate them and retry
                let nudge = 1e-12 * (1.0 + z[i].abs());
                z[i] = z[i] + ComplexC1::real(nudge);
                max_move = max_move.max(nudge);
                continue;
            }
            let mut delta = p / den;
            // clustered estimates make the denominator tiny early on; a
            // bounded step keeps the sweep from being thrown out of the
            // root region
            let cap = 1.0 + z[i].abs();
            if delta.abs() > cap {
                delta = delta.scale(cap / delta.abs());
            }
            z[i] = z[i] - delta;
            max_move = max_move.max(delta.abs() / z[i].abs().max(1.0));
        }
        if max_move <= ROOT_MOVE_TOL {
            return Ok(z);
        }
    }
    Err(Error::ConvergenceFailure(format!(
        "root iteration did not settle within {ROOT_MAX_ITER} sweeps"
    )))
}

fn eval_monic(coeffs: &[ComplexC1], z: ComplexC1) -> ComplexC1 {
    let mut acc = ComplexC1::ONE;
    for c in coeffs.iter().rev() {
        acc = acc * z + *c;
    }
    acc
}

/// Rounding-error bound for a Horner evaluation of the monic polynomial at
/// radius `r`.
fn eval_noise_floor(coeffs: &[ComplexC1], r: f64) -> f64 {
    let n = coeffs.len();
    let mut magnitude = 1.0;
    for c in coeffs.iter().rev() {
        magnitude = magnitude * r + c.abs();
    }
    4.0 * (2 * n + 1) as f64 * f64::EPSILON * magnitude
}

fn normalize(v: &mut [ComplexC1]) {
    let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    if norm > 0.0 {
        for c in v.iter_mut() {
            *c = c.scale(1.0 / norm);
        }
    }
}

/// Phase-fix then renormalize: the largest-magnitude coefficient comes out
/// real positive and the vector unit.
fn canonicalize(v: &mut [ComplexC1]) {
    let mut arg = 0;
    let mut max = -1.0;
    for (i, c) in v.iter().enumerate() {
        let a = c.abs();
        if a > max {
            max = a;
            arg = i;
        }
    }
    if max <= 0.0 {
        return;
    }
    let phase = v[arg].conj().scale(1.0 / max);
    for c in v.iter_mut() {
        *c = *c * phase;
    }
    normalize(v);
}

/// Deterministic start vector for inverse iteration; varies with the pair
/// index so repeated eigenvalues explore different directions.
fn start_vector(n: usize, index: usize) -> Vec<ComplexC1> {
    let mut state = 0x9E3779B97F4A7C15u64.wrapping_mul(index as u64 + 1);
    let mut next = move || {
        // splitmix64
        state = state.wrapping_add(0x9E3779B97F4A7C15);
        let mut x = state;
        x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
        x ^= x >> 31;
        (x >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    };
    (0..n).map(|_| ComplexC1::of(next(), next())).collect()
}

/// Packed LU factorization with partial pivoting.
struct LuFactors {
    n: usize,
    data: Vec<ComplexC1>,
    pivots: Vec<usize>,
}

impl LuFactors {
    /// Returns `None` when a pivot vanishes outright.
    fn factor(m: ComplexMatrix) -> Option<Self> {
        let n = m.n;
        let mut data = m.entries;
        let mut pivots = Vec::with_capacity(n);
        for k in 0..n {
            let mut p = k;
            let mut pmax = data[k * n + k].norm_sqr();
            for i in (k + 1)..n {
                let cand = data[i * n + k].norm_sqr();
                if cand > pmax {
                    pmax = cand;
                    p = i;
                }
            }
            if pmax < 1e-300 {
                return None;
            }
            if p != k {
                for j in 0..n {
                    data.swap(k * n + j, p * n + j);
                }
            }
            pivots.push(p);
            let piv = data[k * n + k];
            for i in (k + 1)..n {
                let factor = data[i * n + k] / piv;
                data[i * n + k] = factor;
                for j in (k + 1)..n {
                    let sub = factor * data[k * n + j];
                    data[i * n + j] = data[i * n + j] - sub;
                }
            }
        }
        Some(Self { n, data, pivots })
    }

    fn solve(&self, b: &[ComplexC1]) -> Vec<ComplexC1> {
        let n = self.n;
        let mut x = b.to_vec();
        for k in 0..n {
            x.swap(k, self.pivots[k]);
            for i in (k + 1)..n {
                let sub = self.data[i * n + k] * x[k];
                x[i] = x[i] - sub;
            }
        }
        for k in (0..n).rev() {
            for j in (k + 1)..n {
                let sub = self.data[k * n + j] * x[j];
                x[k] = x[k] - sub;
            }
            x[k] = x[k] / self.data[k * n + k];
        }
        x
    }
}

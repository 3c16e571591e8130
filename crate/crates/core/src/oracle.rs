//! Independent brute-force arithmetic used to cross-check the fast paths.
//!
//! Everything here works directly on the four real components through the
//! basis multiplication table; none of it touches the idempotent
//! decomposition, which is the point: differential agreement between this
//! module and the channel-based implementations is evidence for both.

use crate::error::{Error, Result};
use crate::operators::TMatrix;
use crate::scalar::Bicomplex;
use crate::tmodule::TVector;

/// Largest dimension the cofactor determinant accepts.
pub const DET_DIM_LIMIT: usize = 6;

/// Product table for the basis (1, i1, i2, j): entry `[a][b]` holds the
/// sign and basis index of the product of basis elements `a` and `b`.
pub const BASIS_TABLE: [[(f64, usize); 4]; 4] = [
    [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
    [(1.0, 1), (-1.0, 0), (1.0, 3), (-1.0, 2)],
    [(1.0, 2), (1.0, 3), (-1.0, 0), (-1.0, 1)],
    [(1.0, 3), (-1.0, 2), (-1.0, 1), (1.0, 0)],
];

/// 16-term product expansion over the basis table.
pub fn mul(s: Bicomplex, t: Bicomplex) -> Bicomplex {
    let sc = s.components();
    let tc = t.components();
    let mut out = [0.0; 4];
    for (a, &sa) in sc.iter().enumerate() {
        for (b, &tb) in tc.iter().enumerate() {
            let (sign, idx) = BASIS_TABLE[a][b];
            out[idx] += sign * sa * tb;
        }
    }
    Bicomplex::of(out[0], out[1], out[2], out[3])
}

/// Signature-based third conjugation (+, -, -, +).
pub fn conj3(w: Bicomplex) -> Bicomplex {
    Bicomplex::of(w.w0, -w.w1, -w.w2, w.w3)
}

/// Canonical scalar product by direct summation.
pub fn dot(x: &TVector, y: &TVector) -> Result<Bicomplex> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.coeffs()
        .iter()
        .zip(y.coeffs())
        .fold(Bicomplex::ZERO, |acc, (a, b)| acc + mul(conj3(*a), *b)))
}

/// Matrix-vector product by direct summation.
pub fn matvec(a: &TMatrix, x: &TVector) -> Result<TVector> {
    if x.len() != a.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: x.len(),
        });
    }
    let coeffs = (0..a.n())
        .map(|i| {
            (0..a.n()).fold(Bicomplex::ZERO, |acc, j| acc + mul(a.get(i, j), x.get(j)))
        })
        .collect();
    TVector::new(coeffs)
}

/// Determinant by Laplace cofactor expansion; factorial cost, so n <= 6.
pub fn det(a: &TMatrix) -> Result<Bicomplex> {
    if a.n() > DET_DIM_LIMIT {
        return Err(Error::TooLarge {
            n: a.n(),
            limit: DET_DIM_LIMIT,
            what: "cofactor determinant",
        });
    }
    let cols: Vec<usize> = (0..a.n()).collect();
    Ok(det_minor(a, 0, &cols))
}

fn det_minor(a: &TMatrix, row: usize, cols: &[usize]) -> Bicomplex {
    if cols.len() == 1 {
        return a.get(row, cols[0]);
    }
    let mut acc = Bicomplex::ZERO;
    for (pos, &col) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&c| c != col)
            .collect();
        let minor = det_minor(a, row + 1, &rest);
        let term = mul(a.get(row, col), minor);
        acc = if pos % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

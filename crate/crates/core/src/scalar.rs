//! Bicomplex numbers `w0 + w1*i1 + w2*i2 + w3*j` and their three conjugations.
//!
//! The four real components are the canonical storage; the cartesian pair
//! `(z1, z2)` with `w = z1 + z2*i2` and the idempotent pair `(p1, p2)` with
//! `w = p1*e1 + p2*e2` are computed views. Multiplication and inversion run
//! through the idempotent channels, where the ring splits into two
//! independent copies of the complex plane.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::complex::{ComplexC1, ComplexC2};
use crate::error::{Error, Result};
use crate::hyperbolic::Hyperbolic;

/// Default relative tolerance for null-cone detection.
pub const NULL_CONE_TOL: f64 = 1e-12;

/// The four conjugations of the bicomplex ring. Composition follows the
/// Klein four-group; every element is its own inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conjugation {
    /// The identity map.
    Identity,
    /// Component signature (+, -, +, -): conjugates both cartesian parts.
    First,
    /// Component signature (+, +, -, -): negates the i2 part.
    Second,
    /// Component signature (+, -, -, +): the composition of the other two.
    Third,
}

impl Conjugation {
    pub const ALL: [Conjugation; 4] = [
        Conjugation::Identity,
        Conjugation::First,
        Conjugation::Second,
        Conjugation::Third,
    ];

    pub fn index(self) -> u8 {
        match self {
            Conjugation::Identity => 0,
            Conjugation::First => 1,
            Conjugation::Second => 2,
            Conjugation::Third => 3,
        }
    }

    pub fn from_index(k: u8) -> Result<Self> {
        match k {
            0 => Ok(Conjugation::Identity),
            1 => Ok(Conjugation::First),
            2 => Ok(Conjugation::Second),
            3 => Ok(Conjugation::Third),
            _ => Err(Error::TooLarge {
                n: k as usize,
                limit: 3,
                what: "conjugation index",
            }),
        }
    }

    /// Group composition. Signatures multiply componentwise, which on the
    /// index set {0, 1, 2, 3} is exactly XOR.
    pub fn compose(self, other: Conjugation) -> Conjugation {
        Self::from_index(self.index() ^ other.index()).expect("xor stays in 0..=3")
    }

    /// Component sign pattern applied to (w0, w1, w2, w3).
    pub fn signs(self) -> [f64; 4] {
        match self {
            Conjugation::Identity => [1.0, 1.0, 1.0, 1.0],
            Conjugation::First => [1.0, -1.0, 1.0, -1.0],
            Conjugation::Second => [1.0, 1.0, -1.0, -1.0],
            Conjugation::Third => [1.0, -1.0, -1.0, 1.0],
        }
    }
}

/// Selects one of the two idempotent channels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Channel {
    /// The `e1 = (1 + j)/2` channel.
    E1,
    /// The `e2 = (1 - j)/2` channel.
    E2,
}

impl Channel {
    pub const BOTH: [Channel; 2] = [Channel::E1, Channel::E2];

    pub fn index(self) -> usize {
        match self {
            Channel::E1 => 1,
            Channel::E2 => 2,
        }
    }

    pub fn from_index(k: usize) -> Result<Self> {
        match k {
            1 => Ok(Channel::E1),
            2 => Ok(Channel::E2),
            _ => Err(Error::TooLarge {
                n: k,
                limit: 2,
                what: "channel index",
            }),
        }
    }
}

/// A bicomplex number held as four real components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Bicomplex {
    pub w0: f64,
    pub w1: f64,
    pub w2: f64,
    pub w3: f64,
}

impl Bicomplex {
    pub const ZERO: Self = Self::of(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::of(1.0, 0.0, 0.0, 0.0);
    pub const I1: Self = Self::of(0.0, 1.0, 0.0, 0.0);
    pub const I2: Self = Self::of(0.0, 0.0, 1.0, 0.0);
    pub const J: Self = Self::of(0.0, 0.0, 0.0, 1.0);
    /// First idempotent unit `(1 + j) / 2`.
    pub const E1: Self = Self::of(0.5, 0.0, 0.0, 0.5);
    /// Second idempotent unit `(1 - j) / 2`.
    pub const E2: Self = Self::of(0.5, 0.0, 0.0, -0.5);

    /// Checked constructor; rejects NaN and infinities.
    pub fn new(w0: f64, w1: f64, w2: f64, w3: f64) -> Result<Self> {
        for c in [w0, w1, w2, w3] {
            if !c.is_finite() {
                return Err(Error::NonFinite(c));
            }
        }
        Ok(Self::of(w0, w1, w2, w3))
    }

    pub const fn of(w0: f64, w1: f64, w2: f64, w3: f64) -> Self {
        Self { w0, w1, w2, w3 }
    }

    pub const fn real(r: f64) -> Self {
        Self::of(r, 0.0, 0.0, 0.0)
    }

    pub fn components(self) -> [f64; 4] {
        [self.w0, self.w1, self.w2, self.w3]
    }

    pub fn is_finite(self) -> bool {
        self.components().iter().all(|c| c.is_finite())
    }

    /// Embeds `z1 + z2*i2` with both parts in the first complex plane.
    pub fn from_cartesian(z1: ComplexC1, z2: ComplexC1) -> Self {
        Self::of(z1.re, z1.im, z2.re, z2.im)
    }

    /// The cartesian view `(z1, z2)` with `w = z1 + z2*i2`.
    pub fn cartesian(self) -> (ComplexC1, ComplexC1) {
        (
            ComplexC1::of(self.w0, self.w1),
            ComplexC1::of(self.w2, self.w3),
        )
    }

    /// Embeds an element of the first complex plane.
    pub fn from_c1(z: ComplexC1) -> Self {
        Self::of(z.re, z.im, 0.0, 0.0)
    }

    /// Embeds an element of the second complex plane.
    pub fn from_c2(z: ComplexC2) -> Self {
        Self::of(z.re, 0.0, z.i2, 0.0)
    }

    /// Embeds a hyperbolic number `x + y*j`.
    pub fn from_hyperbolic(d: Hyperbolic) -> Self {
        Self::of(d.x, 0.0, 0.0, d.y)
    }

    /// The hyperbolic part `(w0, w3)`, meaningful when `is_hyperbolic` holds.
    pub fn hyperbolic_part(self) -> Hyperbolic {
        Hyperbolic::of(self.w0, self.w3)
    }

    /// The idempotent view: `w = p1*e1 + p2*e2` with
    /// `p1 = z1 - z2*i1` and `p2 = z1 + z2*i1`.
    pub fn idempotent(self) -> (ComplexC1, ComplexC1) {
        (
            ComplexC1::of(self.w0 + self.w3, self.w1 - self.w2),
            ComplexC1::of(self.w0 - self.w3, self.w1 + self.w2),
        )
    }

    /// One idempotent channel of the number.
    pub fn channel(self, k: Channel) -> ComplexC1 {
        let (p1, p2) = self.idempotent();
        match k {
            Channel::E1 => p1,
            Channel::E2 => p2,
        }
    }

    /// Rebuilds a bicomplex number from its idempotent channels; exact
    /// inverse of [`Bicomplex::idempotent`] via `z1 = (p1 + p2)/2`,
    /// `z2 = i1*(p1 - p2)/2`.
    pub fn from_idempotent(p1: ComplexC1, p2: ComplexC1) -> Self {
        Self::of(
            (p1.re + p2.re) / 2.0,
            (p1.im + p2.im) / 2.0,
            (p2.im - p1.im) / 2.0,
            (p1.re - p2.re) / 2.0,
        )
    }

    /// Applies the conjugation with index `k`; pure sign flips on the
    /// components, hence exact.
    pub fn conj(self, k: Conjugation) -> Self {
        let [s0, s1, s2, s3] = k.signs();
        Self::of(s0 * self.w0, s1 * self.w1, s2 * self.w2, s3 * self.w3)
    }

    pub fn scale(self, s: f64) -> Self {
        Self::of(s * self.w0, s * self.w1, s * self.w2, s * self.w3)
    }

    /// First square modulus `w * conj_2(w) = z1^2 + z2^2` in the first
    /// complex plane.
    pub fn square_modulus_c1(self) -> ComplexC1 {
        let (z1, z2) = self.cartesian();
        z1 * z1 + z2 * z2
    }

    /// Second square modulus `w * conj_1(w)` in the second complex plane.
    pub fn square_modulus_c2(self) -> ComplexC2 {
        let (z1, z2) = self.cartesian();
        let cross = z1 * z2.conj();
        ComplexC2::of(z1.norm_sqr() - z2.norm_sqr(), 2.0 * cross.re)
    }

    /// Third square modulus `w * conj_3(w)` as a hyperbolic number; its
    /// idempotent channels are `|p1|^2` and `|p2|^2`.
    pub fn square_modulus_hyperbolic(self) -> Hyperbolic {
        let (z1, z2) = self.cartesian();
        let cross = z1 * z2.conj();
        Hyperbolic::of(z1.norm_sqr() + z2.norm_sqr(), -2.0 * cross.im)
    }

    /// The multiplicative real modulus `|z1^2 + z2^2|^(1/2)`; vanishes
    /// exactly on the null-cone.
    pub fn modulus_1(self) -> f64 {
        self.square_modulus_c1().abs().sqrt()
    }

    /// The Euclidean real modulus `sqrt(w0^2 + w1^2 + w2^2 + w3^2)`.
    pub fn modulus_3(self) -> f64 {
        (self.w0 * self.w0 + self.w1 * self.w1 + self.w2 * self.w2 + self.w3 * self.w3).sqrt()
    }

    /// Euclidean norm; alias of [`Bicomplex::modulus_3`].
    pub fn norm(self) -> f64 {
        self.modulus_3()
    }

    /// Null-cone (zero divisor) test: an idempotent channel vanishes
    /// relative to the size of the number.
    pub fn is_null_cone(self, tol: f64) -> bool {
        let (p1, p2) = self.idempotent();
        p1.abs().min(p2.abs()) <= tol * self.norm().max(1.0)
    }

    /// Membership in the hyperbolic subring within `tol`.
    pub fn is_hyperbolic(self, tol: f64) -> bool {
        self.w1.abs() <= tol && self.w2.abs() <= tol
    }

    /// Membership in the positive cone D+ within `tol`.
    pub fn is_hyperbolic_positive(self, tol: f64) -> bool {
        let (p1, p2) = self.idempotent();
        self.is_hyperbolic(tol) && p1.re >= -tol && p2.re >= -tol
    }

    /// Multiplicative inverse, computed per idempotent channel.
    /// Fails with [`Error::NullCone`] on zero divisors.
    pub fn inverse(self) -> Result<Self> {
        self.inverse_with_tol(NULL_CONE_TOL)
    }

    pub fn inverse_with_tol(self, tol: f64) -> Result<Self> {
        if self.is_null_cone(tol) {
            return Err(Error::NullCone);
        }
        let (p1, p2) = self.idempotent();
        Ok(Self::from_idempotent(p1.recip(), p2.recip()))
    }
}

impl Add for Bicomplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::of(
            self.w0 + rhs.w0,
            self.w1 + rhs.w1,
            self.w2 + rhs.w2,
            self.w3 + rhs.w3,
        )
    }
}

impl Sub for Bicomplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::of(
            self.w0 - rhs.w0,
            self.w1 - rhs.w1,
            self.w2 - rhs.w2,
            self.w3 - rhs.w3,
        )
    }
}

impl Neg for Bicomplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::of(-self.w0, -self.w1, -self.w2, -self.w3)
    }
}

impl Mul for Bicomplex {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (p1, p2) = self.idempotent();
        let (q1, q2) = rhs.idempotent();
        Self::from_idempotent(p1 * q1, p2 * q2)
    }
}

impl fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, unit) in self.components().into_iter().zip(["", "i1", "i2", "j"]) {
            if c == 0.0 {
                continue;
            }
            if first {
                write!(f, "{c}{unit}")?;
                first = false;
            } else if c < 0.0 {
                write!(f, " - {}{unit}", -c)?;
            } else {
                write!(f, " + {c}{unit}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// JSON form: [w0, w1, w2, w3]
impl Serialize for Bicomplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(4)?;
        for c in self.components() {
            t.serialize_element(&c)?;
        }
        t.end()
    }
}

impl<'de> Deserialize<'de> for Bicomplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct QuadVisitor;

        impl<'de> Visitor<'de> for QuadVisitor {
            type Value = Bicomplex;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a [w0, w1, w2, w3] quadruple")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut w = [0.0; 4];
                for (i, slot) in w.iter_mut().enumerate() {
                    *slot = seq
                        .next_element::<f64>()?
                        .ok_or_else(|| de::Error::invalid_length(i, &self))?;
                }
                if seq.next_element::<f64>()?.is_some() {
                    return Err(de::Error::invalid_length(5, &self));
                }
                Bicomplex::new(w[0], w[1], w[2], w[3]).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_seq(QuadVisitor)
    }
}

//! Complex numbers over the first and second imaginary units.
//!
//! `ComplexC1` is the workhorse: idempotent channels, channel matrices and
//! channel spectra all live here. `ComplexC2` only ever appears as the
//! codomain of the second square modulus, so it carries no arithmetic.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element `re + im*i1` of the first complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexC1 {
    pub re: f64,
    pub im: f64,
}

impl ComplexC1 {
    pub const ZERO: Self = Self { re: 0.0, im: 0.0 };
    pub const ONE: Self = Self { re: 1.0, im: 0.0 };
    pub const I: Self = Self { re: 0.0, im: 1.0 };

    /// Checked constructor; rejects NaN and infinities.
    pub fn new(re: f64, im: f64) -> Result<Self> {
        for c in [re, im] {
            if !c.is_finite() {
                return Err(Error::NonFinite(c));
            }
        }
        Ok(Self { re, im })
    }

    pub const fn of(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub const fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    pub fn conj(self) -> Self {
        Self {
            re: self.re,
            im: -self.im,
        }
    }

    /// Squared Euclidean modulus `re^2 + im^2`.
    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(self, s: f64) -> Self {
        Self {
            re: self.re * s,
            im: self.im * s,
        }
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Reciprocal; caller guarantees a nonzero argument.
    pub fn recip(self) -> Self {
        let d = self.norm_sqr();
        Self {
            re: self.re / d,
            im: -self.im / d,
        }
    }
}

impl Add for ComplexC1 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for ComplexC1 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for ComplexC1 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Div for ComplexC1 {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let d = rhs.norm_sqr();
        Self {
            re: (self.re * rhs.re + self.im * rhs.im) / d,
            im: (self.im * rhs.re - self.re * rhs.im) / d,
        }
    }
}

impl Neg for ComplexC1 {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl fmt::Display for ComplexC1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0.0 {
            write!(f, "{} - {}i1", self.re, -self.im)
        } else {
            write!(f, "{} + {}i1", self.re, self.im)
        }
    }
}

/// An element `re + i2*i2` of the second complex plane. Codomain of the
/// second square modulus only.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexC2 {
    pub re: f64,
    pub i2: f64,
}

impl ComplexC2 {
    pub fn new(re: f64, i2: f64) -> Result<Self> {
        for c in [re, i2] {
            if !c.is_finite() {
                return Err(Error::NonFinite(c));
            }
        }
        Ok(Self { re, i2 })
    }

    pub const fn of(re: f64, i2: f64) -> Self {
        Self { re, i2 }
    }

    pub fn abs(self) -> f64 {
        (self.re * self.re + self.i2 * self.i2).sqrt()
    }
}

impl fmt::Display for ComplexC2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i2 < 0.0 {
            write!(f, "{} - {}i2", self.re, -self.i2)
        } else {
            write!(f, "{} + {}i2", self.re, self.i2)
        }
    }
}

// JSON form: [re, im]
impl Serialize for ComplexC1 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.re)?;
        t.serialize_element(&self.im)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for ComplexC1 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [re, im] = deserialize_pair(deserializer, "a [re, im] pair")?;
        ComplexC1::new(re, im).map_err(de::Error::custom)
    }
}

impl Serialize for ComplexC2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.re)?;
        t.serialize_element(&self.i2)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for ComplexC2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [re, i2] = deserialize_pair(deserializer, "a [re, i2] pair")?;
        ComplexC2::new(re, i2).map_err(de::Error::custom)
    }
}

pub(crate) fn deserialize_pair<'de, D: Deserializer<'de>>(
    deserializer: D,
    expected: &'static str,
) -> std::result::Result<[f64; 2], D::Error> {
    struct PairVisitor(&'static str);

    impl<'de> Visitor<'de> for PairVisitor {
        type Value = [f64; 2];

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str(self.0)
        }

        fn visit_seq<A: SeqAccess<'de>>(
            self,
            mut seq: A,
        ) -> std::result::Result<Self::Value, A::Error> {
            let a = seq
                .next_element::<f64>()?
                .ok_or_else(|| de::Error::invalid_length(0, &self))?;
            let b = seq
                .next_element::<f64>()?
                .ok_or_else(|| de::Error::invalid_length(1, &self))?;
            if seq.next_element::<f64>()?.is_some() {
                return Err(de::Error::invalid_length(3, &self));
            }
            Ok([a, b])
        }
    }

    deserializer.deserialize_seq(PairVisitor(expected))
}

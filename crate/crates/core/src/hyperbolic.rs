//! Hyperbolic (split-complex) numbers `x + y*j` with `j^2 = 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::{self, Deserializer};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::complex::deserialize_pair;
use crate::error::{Error, Result};

/// An element of the subring D = {x + y*j}.
///
/// In the idempotent basis the same number reads `a*e1 + b*e2` with
/// `a = x + y` and `b = x - y`; the two channels multiply independently.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Hyperbolic {
    pub x: f64,
    pub y: f64,
}

impl Hyperbolic {
    pub const ZERO: Self = Self { x: 0.0, y: 0.0 };
    pub const ONE: Self = Self { x: 1.0, y: 0.0 };
    pub const J: Self = Self { x: 0.0, y: 1.0 };

    pub fn new(x: f64, y: f64) -> Result<Self> {
        for c in [x, y] {
            if !c.is_finite() {
                return Err(Error::NonFinite(c));
            }
        }
        Ok(Self { x, y })
    }

    pub const fn of(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub const fn real(x: f64) -> Self {
        Self { x, y: 0.0 }
    }

    /// Builds `a*e1 + b*e2` from its idempotent channels.
    pub fn from_channels(a: f64, b: f64) -> Self {
        Self {
            x: (a + b) / 2.0,
            y: (a - b) / 2.0,
        }
    }

    /// First idempotent channel `a = x + y`.
    pub fn channel1(self) -> f64 {
        self.x + self.y
    }

    /// Second idempotent channel `b = x - y`.
    pub fn channel2(self) -> f64 {
        self.x - self.y
    }

    pub fn channels(self) -> (f64, f64) {
        (self.channel1(), self.channel2())
    }

    /// D+ membership: both idempotent channels nonnegative within `tol`.
    pub fn is_positive(self, tol: f64) -> bool {
        self.channel1() >= -tol && self.channel2() >= -tol
    }

    /// Channelwise cosine: `cos(a e1 + b e2) = cos(a) e1 + cos(b) e2`.
    pub fn cos(self) -> Self {
        Self::from_channels(self.channel1().cos(), self.channel2().cos())
    }

    /// The hyperbolic angle `t1*e1 + t2*e2` in `x + y*j` form.
    pub fn from_angles(theta1: f64, theta2: f64) -> Self {
        Self::from_channels(theta1, theta2)
    }

    /// Euclidean magnitude in the (x, y) plane.
    pub fn euclid(self) -> f64 {
        (self.x * self.x + self.y * self.y).sqrt()
    }
}

impl Add for Hyperbolic {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
        }
    }
}

impl Sub for Hyperbolic {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            x: self.x - rhs.x,
            y: self.y - rhs.y,
        }
    }
}

impl Mul for Hyperbolic {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            x: self.x * rhs.x + self.y * rhs.y,
            y: self.x * rhs.y + self.y * rhs.x,
        }
    }
}

impl Neg for Hyperbolic {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            x: -self.x,
            y: -self.y,
        }
    }
}

impl fmt::Display for Hyperbolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y < 0.0 {
            write!(f, "{} - {}j", self.x, -self.y)
        } else {
            write!(f, "{} + {}j", self.x, self.y)
        }
    }
}

// JSON form: [x, y]
impl Serialize for Hyperbolic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.x)?;
        t.serialize_element(&self.y)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for Hyperbolic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = deserialize_pair(deserializer, "an [x, y] pair")?;
        Hyperbolic::new(x, y).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn channel_round_trip() {
        let d = Hyperbolic::of(2.5, -0.75);
        let (a, b) = d.channels();
        let back = Hyperbolic::from_channels(a, b);
        assert_eq!(back, d);
    }

    #[test]
    fn j_squares_to_one() {
        assert_eq!(Hyperbolic::J * Hyperbolic::J, Hyperbolic::ONE);
    }

    #[test]
    fn positivity() {
        // 2e1 + 4e2 = 3 - j
        let d = Hyperbolic::from_channels(2.0, 4.0);
        assert!(d.is_positive(0.0));
        assert!(!Hyperbolic::real(-1.0).is_positive(1e-12));
        // j = e1 - e2 has a negative channel
        assert!(!Hyperbolic::J.is_positive(1e-12));
    }

    #[test]
    fn cosine_is_channelwise() {
        assert_eq!(Hyperbolic::ZERO.cos(), Hyperbolic::ONE);
        let half = Hyperbolic::from_angles(PI / 2.0, PI / 2.0);
        assert!((half.x - PI / 2.0).abs() < 1e-15 && half.y == 0.0);
        // cos(0)e1 + cos(pi)e2 = e1 - e2 = j
        let c = Hyperbolic::from_angles(0.0, PI).cos();
        assert!((c - Hyperbolic::J).euclid() < 1e-15);
    }
}

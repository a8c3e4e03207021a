//! Extended nonnegative reals.
//!
//! Fiber sums and bounds of structured sequences are genuinely infinite in
//! several gallery fixtures, so infinity is a first-class value here rather
//! than a float overflow artifact.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// A nonnegative real number or positive infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtReal {
    Finite(f64),
    Infinite,
}

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal::Finite(0.0);

    /// Wraps a finite nonnegative value. Panics on NaN or negative input;
    /// `f64::INFINITY` maps to `Infinite`.
    pub fn finite(value: f64) -> ExtReal {
        assert!(!value.is_nan(), "ExtReal cannot hold NaN");
        assert!(value >= 0.0, "ExtReal holds nonnegative values, got {value}");
        if value.is_infinite() {
            ExtReal::Infinite
        } else {
            ExtReal::Finite(value)
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtReal::Infinite)
    }

    /// The finite value, if any.
    pub fn value(&self) -> Option<f64> {
        match self {
            ExtReal::Finite(x) => Some(*x),
            ExtReal::Infinite => None,
        }
    }

    /// Collapses to `f64`, mapping `Infinite` to `f64::INFINITY`.
    pub fn as_f64(&self) -> f64 {
        match self {
            ExtReal::Finite(x) => *x,
            ExtReal::Infinite => f64::INFINITY,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            ExtReal::Finite(x) => *x > 0.0,
            ExtReal::Infinite => true,
        }
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &ExtReal) -> Option<Ordering> {
        match (self, other) {
            (ExtReal::Infinite, ExtReal::Infinite) => Some(Ordering::Equal),
            (ExtReal::Infinite, ExtReal::Finite(_)) => Some(Ordering::Greater),
            (ExtReal::Finite(_), ExtReal::Infinite) => Some(Ordering::Less),
            (ExtReal::Finite(a), ExtReal::Finite(b)) => a.partial_cmp(b),
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(x) => write!(f, "{x}"),
            ExtReal::Infinite => write!(f, "inf"),
        }
    }
}

// JSON: a finite value serializes as a number, infinity as the string "inf".
impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtReal::Finite(x) => serializer.serialize_f64(*x),
            ExtReal::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ExtRealVisitor;

        impl<'de> Visitor<'de> for ExtRealVisitor {
            type Value = ExtReal;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative number or the string \"inf\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<ExtReal, E> {
                if v.is_nan() || v < 0.0 {
                    return Err(E::custom("expected a nonnegative number"));
                }
                Ok(ExtReal::finite(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExtReal, E> {
                Ok(ExtReal::Finite(v as f64))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExtReal, E> {
                self.visit_f64(v as f64)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExtReal, E> {
                if v == "inf" {
                    Ok(ExtReal::Infinite)
                } else {
                    Err(E::custom(format!("unexpected string {v:?}, expected \"inf\"")))
                }
            }
        }

        deserializer.deserialize_any(ExtRealVisitor)
    }
}

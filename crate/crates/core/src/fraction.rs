use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Exact nonnegative rational kept in lowest terms.
///
/// Comparison cross-multiplies in 128-bit arithmetic, so ordering never
/// goes through floating point. Arithmetic panics on overflow; every
/// quantity in this crate stays far below `u64::MAX`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn narrow(x: u128) -> u64 {
    u64::try_from(x).expect("fraction overflow")
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    /// Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Fraction {
        Self::checked_new(num, den).expect("fraction denominator must be positive")
    }

    pub fn checked_new(num: u64, den: u64) -> Option<Fraction> {
        if den == 0 {
            return None;
        }
        let g = gcd(num, den);
        Some(Fraction { num: num / g, den: den / g })
    }

    fn from_wide(num: u128, den: u128) -> Fraction {
        let mut a = num;
        let mut b = den;
        while b != 0 {
            (a, b) = (b, a % b);
        }
        let g = a.max(1);
        Fraction { num: narrow(num / g), den: narrow(den / g) }
    }

    pub fn from_int(n: u64) -> Fraction {
        Fraction { num: n, den: 1 }
    }

    pub fn numer(self) -> u64 {
        self.num
    }

    pub fn denom(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `self - other`, or `None` when the result would be negative.
    pub fn checked_sub(self, other: Fraction) -> Option<Fraction> {
        let l = self.num as u128 * other.den as u128;
        let r = other.num as u128 * self.den as u128;
        (l >= r).then(|| Fraction::from_wide(l - r, self.den as u128 * other.den as u128))
    }

    pub fn pow2(self) -> Fraction {
        self * self
    }
}

impl Add for Fraction {
    type Output = Fraction;
    fn add(self, rhs: Fraction) -> Fraction {
        let num = self.num as u128 * rhs.den as u128 + rhs.num as u128 * self.den as u128;
        Fraction::from_wide(num, self.den as u128 * rhs.den as u128)
    }
}

impl Mul for Fraction {
    type Output = Fraction;
    fn mul(self, rhs: Fraction) -> Fraction {
        Fraction::from_wide(
            self.num as u128 * rhs.num as u128,
            self.den as u128 * rhs.den as u128,
        )
    }
}

impl Mul<u64> for Fraction {
    type Output = Fraction;
    fn mul(self, rhs: u64) -> Fraction {
        Fraction::from_wide(self.num as u128 * rhs as u128, self.den as u128)
    }
}

impl Div<u64> for Fraction {
    type Output = Fraction;
    fn div(self, rhs: u64) -> Fraction {
        assert!(rhs != 0, "division by zero");
        Fraction::from_wide(self.num as u128, self.den as u128 * rhs as u128)
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Fraction) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Fraction) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Fraction {
    fn from(n: u64) -> Fraction {
        Fraction::from_int(n)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Rounds to 12 significant digits, the precision of every decimal
/// convenience field this crate emits.
pub fn round_sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Fraction", 3)?;
        s.serialize_field("num", &self.num)?;
        s.serialize_field("den", &self.den)?;
        s.serialize_field("real", &round_sig12(self.to_f64()))?;
        s.end()
    }
}

//! Exact arithmetic in the coefficient group Q/Z.
//!
//! Every value is stored as the canonical representative num/den with
//! 0 <= num < den and gcd(num, den) = 1; the zero class is 0/1. All cochain
//! tables, quadratic forms and matrix exponents in this crate are valued in
//! this type, so every identity we check is decided exactly.

use crate::arith::{gcd, lcm};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub};

/// An element of Q/Z as a reduced fraction in [0, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QZ {
    num: u64,
    den: u64,
}

pub const ZERO: QZ = QZ { num: 0, den: 1 };
pub const HALF: QZ = QZ { num: 1, den: 2 };

impl QZ {
    /// The zero class.
    pub const fn zero() -> QZ {
        ZERO
    }

    /// One half, the only element of order 2.
    pub const fn half() -> QZ {
        HALF
    }

    /// Class of `num/den`; any integer numerator, `den` nonzero.
    pub fn new(num: i64, den: i64) -> QZ {
        assert!(den != 0, "zero denominator");
        Self::reduce(num as i128, den as i128)
    }

    fn reduce(num: i128, den: i128) -> QZ {
        debug_assert!(den != 0);
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let num = num.rem_euclid(den);
        let g = gcd(num as u64, den as u64);
        QZ {
            num: (num as u64) / g,
            den: (den as u64) / g,
        }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Order in Q/Z: the least t >= 1 with t*self = 0. Equals the denominator.
    pub fn order(&self) -> u64 {
        self.den
    }

    /// Integer multiple `m * self`.
    pub fn scale(&self, m: i64) -> QZ {
        Self::reduce(self.num as i128 * m as i128, self.den as i128)
    }

    /// Value as f64 in [0, 1), for phase rendering only.
    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Add for QZ {
    type Output = QZ;
    fn add(self, rhs: QZ) -> QZ {
        let den = lcm(self.den, rhs.den) as i128;
        let num = self.num as i128 * (den / self.den as i128)
            + rhs.num as i128 * (den / rhs.den as i128);
        QZ::reduce(num, den)
    }
}

impl AddAssign for QZ {
    fn add_assign(&mut self, rhs: QZ) {
        *self = *self + rhs;
    }
}

impl Neg for QZ {
    type Output = QZ;
    fn neg(self) -> QZ {
        if self.num == 0 {
            self
        } else {
            QZ {
                num: self.den - self.num,
                den: self.den,
            }
        }
    }
}

impl Sub for QZ {
    type Output = QZ;
    fn sub(self, rhs: QZ) -> QZ {
        self + (-rhs)
    }
}

impl Sum for QZ {
    fn sum<I: Iterator<Item = QZ>>(iter: I) -> QZ {
        iter.fold(ZERO, |a, b| a + b)
    }
}

impl fmt::Display for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

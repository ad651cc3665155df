//! Exact half-integer arithmetic and intervals.
//!
//! The augmented invariants add `eps * (c/2 + delta * 3w/2)` to an integer,
//! so every value in this crate is an integer multiple of 1/2. `HalfInt`
//! stores twice the value, keeping ceilings exact.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An exact multiple of 1/2, stored as its numerator over 2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub fn from_int(v: i64) -> Self {
        HalfInt { twice: v * 2 }
    }

    pub fn from_halves(twice: i64) -> Self {
        HalfInt { twice }
    }

    /// Numerator when the value is written over denominator 2.
    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// Integer value; panics when the value is a strict half.
    pub fn as_int(self) -> i64 {
        assert!(self.is_integer(), "half-integer {} is not integral", self);
        self.twice / 2
    }

    pub fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    /// `ceil(|self| / 2)` as an integer — the move-count bound shape.
    pub fn ceil_half_abs(self) -> i64 {
        // |twice/2| / 2 = |twice| / 4, rounded up.
        (self.twice.abs() + 3) / 4
    }

    pub fn scale(self, k: i64) -> Self {
        HalfInt { twice: self.twice * k }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: Self) -> Self {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: Self) -> Self {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> Self {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Closed interval of half-integers; `lo == hi` means exact.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HalfInterval {
    pub lo: HalfInt,
    pub hi: HalfInt,
}

impl HalfInterval {
    pub fn exact_value(v: HalfInt) -> Self {
        HalfInterval { lo: v, hi: v }
    }

    pub fn new(lo: HalfInt, hi: HalfInt) -> Self {
        assert!(lo <= hi, "interval bounds out of order");
        HalfInterval { lo, hi }
    }

    pub fn is_exact(self) -> bool {
        self.lo == self.hi
    }

    /// Interval for `k * x` over all `x` in `self`.
    pub fn scale(self, k: i64) -> Self {
        let a = self.lo.scale(k);
        let b = self.hi.scale(k);
        if a <= b {
            HalfInterval { lo: a, hi: b }
        } else {
            HalfInterval { lo: b, hi: a }
        }
    }

    pub fn shift(self, v: HalfInt) -> Self {
        HalfInterval { lo: self.lo + v, hi: self.hi + v }
    }
}

impl Add for HalfInterval {
    type Output = HalfInterval;
    fn add(self, rhs: Self) -> Self {
        HalfInterval { lo: self.lo + rhs.lo, hi: self.hi + rhs.hi }
    }
}

impl fmt::Display for HalfInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

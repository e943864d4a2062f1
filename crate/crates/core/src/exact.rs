//! Overflow-checked signed integer arithmetic.
//!
//! [`Int`] carries an `i128` that becomes poisoned on the first overflowing
//! operation, so closed forms can be written as ordinary expressions and the
//! overflow is reported once at the end through [`Int::value`].

use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Int(Option<i128>);

impl Int {
    pub const ZERO: Int = Int(Some(0));

    pub fn new(v: impl Into<i128>) -> Self {
        Int(Some(v.into()))
    }

    pub fn from_usize(v: usize) -> Self {
        Int(i128::try_from(v).ok())
    }

    pub fn value(self) -> Result<i128> {
        self.0.ok_or(Error::Overflow)
    }

    pub fn pow(self, exp: u32) -> Self {
        Int(self.0.and_then(|v| v.checked_pow(exp)))
    }
}

impl From<i128> for Int {
    fn from(v: i128) -> Self {
        Int(Some(v))
    }
}

macro_rules! checked_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for Int {
            type Output = Int;
            fn $method(self, rhs: Int) -> Int {
                match (self.0, rhs.0) {
                    (Some(a), Some(b)) => Int(a.$checked(b)),
                    _ => Int(None),
                }
            }
        }

        // Integer literals in formulas default to i32.
        impl $trait<i32> for Int {
            type Output = Int;
            fn $method(self, rhs: i32) -> Int {
                self.$method(Int::new(rhs))
            }
        }

        impl $trait<Int> for i32 {
            type Output = Int;
            fn $method(self, rhs: Int) -> Int {
                Int::new(self).$method(rhs)
            }
        }
    };
}

checked_binop!(Add, add, checked_add);
checked_binop!(Sub, sub, checked_sub);
checked_binop!(Mul, mul, checked_mul);

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        Int(self.0.and_then(i128::checked_neg))
    }
}

impl Sum for Int {
    fn sum<I: Iterator<Item = Int>>(iter: I) -> Int {
        iter.fold(Int::ZERO, |acc, x| acc + x)
    }
}

//! The coefficient abstraction shared by the matrix and semilinear code.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::FieldScalar;

/// A commutative ring of characteristic `p` with a Frobenius endomorphism.
///
/// Elements know their own ring (the characteristic is a runtime value), so
/// neutral elements are produced from an existing element rather than from
/// a context-free constructor.
pub trait FrobeniusScalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn characteristic(&self) -> u64;

    /// `self^q` where `q` is a power of the characteristic (`q = 1` included).
    fn frobenius_power(&self, q: u64) -> Self;

    /// `Some(self / other)` when the quotient exists in the ring.
    fn exact_div(&self, other: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// `log_p(q)` when `q` is a positive power of `p`.
pub fn power_of(p: u64, q: u64) -> Option<u32> {
    if p < 2 || q < p {
        return None;
    }
    let mut e = 0;
    let mut acc = 1u64;
    while acc < q {
        acc = acc.checked_mul(p)?;
        e += 1;
    }
    (acc == q).then_some(e)
}

impl FrobeniusScalar for FieldScalar {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }

    fn one_like(&self) -> Self {
        self.field().one()
    }

    fn is_zero(&self) -> bool {
        FieldScalar::is_zero(self)
    }

    fn characteristic(&self) -> u64 {
        self.field().characteristic().get()
    }

    fn frobenius_power(&self, q: u64) -> Self {
        if q == 1 {
            return self.clone();
        }
        let e = power_of(self.characteristic(), q).expect("Frobenius twist must be a power of the characteristic");
        self.frobenius(e)
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.checked_div(other).ok()
    }

    fn is_one(&self) -> bool {
        FieldScalar::is_one(self)
    }

    fn pow(&self, exp: u64) -> Self {
        FieldScalar::pow(self, exp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers() {
        assert_eq!(power_of(3, 9), Some(2));
        assert_eq!(power_of(3, 3), Some(1));
        assert_eq!(power_of(3, 1), None);
        assert_eq!(power_of(2, 6), None);
    }
}

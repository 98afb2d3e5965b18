//! The scalar abstraction every algebraic layer is generic over.
//!
//! All decisions in this crate (ranks, kernels, irreducibility) are exact, so
//! only exact fields implement [`Field`]: the rationals and the Gaussian
//! rationals. Floating point types deliberately do not.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact field of characteristic zero.
pub trait Field:
    Clone
    + Debug
    + Display
    + FromStr
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_i64(n: i64) -> Self;

    /// `None` exactly when `self` is zero.
    fn checked_inv(&self) -> Option<Self>;

    /// True iff `self` has finite multiplicative order.
    fn is_root_of_unity(&self) -> bool;

    /// An exact square root inside the field, if one exists.
    fn sqrt_exact(&self) -> Option<Self>;

    /// The value as a rational number when it has no non-rational part.
    fn to_rational(&self) -> Option<BigRational>;

    fn from_rational(r: &BigRational) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(&BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn checked_div(&self, other: &Self) -> Option<Self> {
        other.checked_inv().map(|inv| self.clone() * &inv)
    }

    /// Integer power; negative exponents go through the inverse.
    fn checked_pow(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 {
            self.checked_inv()?
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.clone() * &sq;
            }
        }
        Some(acc)
    }

    fn square(&self) -> Self {
        self.clone() * self
    }
}

/// Exact square root of a non-negative rational.
pub(crate) fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    (&sn * &sn == *n && &sd * &sd == *d).then(|| BigRational::new(sn, sd))
}

impl Field for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn checked_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn is_root_of_unity(&self) -> bool {
        self.abs().is_one()
    }

    fn sqrt_exact(&self) -> Option<Self> {
        rational_sqrt(self)
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

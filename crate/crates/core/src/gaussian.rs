//! Exact arithmetic in the Gaussian rationals ℚ(i).

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{rational_sqrt, Field};

/// `re + im·i` with both parts reduced fractions (positive denominators).
///
/// `BigRational` keeps each part in lowest terms, so two values are equal
/// exactly when their four underlying integers are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }

    /// `(rn/rd) + (in_/id)·i`. Panics on a zero denominator.
    pub fn from_parts(rn: i64, rd: i64, in_: i64, id: i64) -> Self {
        GaussianRational {
            re: BigRational::new(rn.into(), rd.into()),
            im: BigRational::new(in_.into(), id.into()),
        }
    }

    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    /// The four canonical integers `(re_num, re_den, im_num, im_den)`.
    pub fn parts(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (
            self.re.numer(),
            self.re.denom(),
            self.im.numer(),
            self.im.denom(),
        )
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        self.checked_pow(exp).ok_or(Error::DivisionByZero)
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(BigRational::one())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(r: BigRational) -> Self {
        Self::real(r)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::real(&self.re + &rhs.re);
        }
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::real(&self.re - &rhs.re);
        }
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        // Real operands are the common case; skip the cross terms.
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::real(&self.re * &rhs.re);
        }
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero, like the integer types.
    fn div(self, rhs: GaussianRational) -> GaussianRational {
        self * rhs.inv().expect("division by zero")
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -self.clone()
    }
}

impl Field for GaussianRational {
    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }

    fn checked_inv(&self) -> Option<Self> {
        self.inv().ok()
    }

    /// The roots of unity of ℚ(i) are exactly ±1, ±i.
    fn is_root_of_unity(&self) -> bool {
        (self.im.is_zero() && self.re.abs().is_one())
            || (self.re.is_zero() && self.im.abs().is_one())
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // (x + yi)^2 = a + bi  with  x^2 = (a + r)/2, y^2 = (r - a)/2, r = |a + bi|.
        let r = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        let x = rational_sqrt(&((&r + &self.re) / &two))?;
        let mut y = rational_sqrt(&((&r - &self.re) / &two))?;
        if self.im.is_negative() {
            y = -y;
        }
        let root = GaussianRational { re: x, im: y };
        (root.square() == *self).then_some(root)
    }

    fn to_rational(&self) -> Option<BigRational> {
        self.im.is_zero().then(|| self.re.clone())
    }

    fn from_rational(r: &BigRational) -> Self {
        Self::real(r.clone())
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// `a/b` for real values, `a/b+c/d*i` otherwise; unit denominators are
    /// omitted and signs sit on the numerators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.re, f)?;
        if !self.im.is_zero() {
            write!(f, "+")?;
            fmt_rational(&self.im, f)?;
            write!(f, "*i")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty number".into()));
        }
        let Some(imag_body) = s.strip_suffix("*i").or_else(|| s.strip_suffix('i')) else {
            return Ok(Self::real(parse_rational(&s)?));
        };
        // Split off the real part at the last sign that is not an exponent sign.
        let bytes = imag_body.as_bytes();
        let split = (1..bytes.len()).rev().find(|&k| {
            matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'+' | b'-' | b'/')
        });
        let (re_str, im_str) = match split {
            Some(k) => (&imag_body[..k], imag_body[k..].trim_start_matches('+')),
            None => ("0", imag_body),
        };
        let im = match im_str {
            "" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other)?,
        };
        Ok(GaussianRational {
            re: parse_rational(re_str)?,
            im,
        })
    }
}

//! Scalar rings used throughout the crate.
//!
//! Everything linear-algebraic is written against [`Ring`] (and [`Field`]
//! where division is needed), so the same code runs over exact rationals,
//! Gaussian rationals, multivariate polynomials and plain `f64`.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Exact Gaussian rational `a + b i`.
pub type Gaussian = Complex<Rational>;

/// Commutative ring with unit.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
{
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {}

impl<T> Field for T where T: Ring + Div<Output = T> {}

/// Rings that contain the rationals, so that structure constants and
/// matrices can be lifted into them.
pub trait FromRational: Ring {
    fn from_rational(q: &Rational) -> Self;
}

impl FromRational for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl FromRational for Gaussian {
    fn from_rational(q: &Rational) -> Self {
        Complex::new(q.clone(), Rational::zero())
    }
}

impl FromRational for f64 {
    fn from_rational(q: &Rational) -> Self {
        to_f64(q)
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"` (decimal integers, optional leading minus).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d.is_zero() || den.starts_with('-') || den.starts_with('+') {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Canonical `"p/q"` / `"p"` rendering.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}

pub fn gaussian(re: Rational, im: Rational) -> Gaussian {
    Complex::new(re, im)
}

pub fn imag_unit() -> Gaussian {
    Complex::new(Rational::zero(), Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_literals_round_trip() {
        for s in ["0", "3", "-7", "1/2", "-3/4", "10/4"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }
        assert_eq!(format_rational(&parse_rational("10/4").unwrap()), "5/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn small_gaussian() -> impl Strategy<Value = Gaussian> {
        (-9i64..10, 1i64..5, -9i64..10, 1i64..5)
            .prop_map(|(a, b, c, d)| gaussian(frac(a, b), frac(c, d)))
    }

    proptest! {
        #[test]
        fn conjugation_is_a_ring_automorphism(x in small_gaussian(), y in small_gaussian()) {
            prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
            prop_assert_eq!((x.clone() + y.clone()).conj(), x.conj() + y.conj());
            prop_assert_eq!(x.conj().conj(), x);
        }
    }
}

//! Arbitrary-precision rational scalars.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::AlgebraError;

/// An exact rational number kept in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RationalScalar(BigRational);

impl RationalScalar {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Self {
        let denominator = denominator.into();
        assert!(!denominator.is_zero(), "zero denominator");
        RationalScalar(BigRational::new(numerator.into(), denominator))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        RationalScalar(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        RationalScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        RationalScalar(BigRational::one())
    }

    pub fn from_big(value: BigRational) -> Self {
        RationalScalar(value)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn into_big(self) -> BigRational {
        self.0
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(RationalScalar(self.0.recip()))
    }

    pub fn pow(&self, exponent: u32) -> Self {
        RationalScalar(num_traits::pow(self.0.clone(), exponent as usize))
    }

    /// Exact square root, or `None` when the value is not the square of a rational.
    pub fn sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }
}

/// Nonnegative square root of `x` when `x` is the square of a rational number.
pub fn rational_sqrt(x: &RationalScalar) -> Option<RationalScalar> {
    if x.is_negative() {
        return None;
    }
    let num = exact_isqrt(x.numerator())?;
    let den = exact_isqrt(x.denominator())?;
    Some(RationalScalar::new(num, den))
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

impl fmt::Display for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RationalScalar {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::Parse(format!("not a rational number: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            None => Ok(RationalScalar::from_integer(
                s.parse::<BigInt>().map_err(|_| bad())?,
            )),
            Some((n, d)) => {
                let n = n.trim().parse::<BigInt>().map_err(|_| bad())?;
                let d = d.trim().parse::<BigInt>().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(AlgebraError::DivisionByZero);
                }
                Ok(RationalScalar::new(n, d))
            }
        }
    }
}

impl Serialize for RationalScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RationalScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for RationalScalar {
    fn from(value: i64) -> Self {
        RationalScalar::from_integer(value)
    }
}

impl From<BigInt> for RationalScalar {
    fn from(value: BigInt) -> Self {
        RationalScalar::from_integer(value)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&RationalScalar> for &RationalScalar {
            type Output = RationalScalar;
            fn $method(self, rhs: &RationalScalar) -> RationalScalar {
                RationalScalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for RationalScalar {
            type Output = RationalScalar;
            fn $method(self, rhs: RationalScalar) -> RationalScalar {
                RationalScalar(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for RationalScalar {
    type Output = RationalScalar;
    fn neg(self) -> RationalScalar {
        RationalScalar(-self.0)
    }
}

impl Neg for &RationalScalar {
    type Output = RationalScalar;
    fn neg(self) -> RationalScalar {
        RationalScalar(-&self.0)
    }
}

/// Least common multiple of the denominators of `values` (1 for an empty list).
pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_perfect_squares() {
        assert_eq!(rational_sqrt(&25.into()), Some(5.into()));
        assert_eq!(
            rational_sqrt(&RationalScalar::new(4, 9)),
            Some(RationalScalar::new(2, 3))
        );
        assert_eq!(rational_sqrt(&0.into()), Some(0.into()));
    }

    #[test]
    fn sqrt_rejects_non_squares() {
        assert_eq!(rational_sqrt(&2.into()), None);
        assert_eq!(rational_sqrt(&(-4).into()), None);
        assert_eq!(rational_sqrt(&RationalScalar::new(1, 2)), None);
    }

    #[test]
    fn canonical_form_and_text() {
        let x = RationalScalar::new(6, -4);
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(x.denominator(), &BigInt::from(2));
        assert_eq!("-3/2".parse::<RationalScalar>().unwrap(), x);
        assert_eq!("-8".parse::<RationalScalar>().unwrap().to_i64(), Some(-8));
        assert!("1/0".parse::<RationalScalar>().is_err());
        assert!("abc".parse::<RationalScalar>().is_err());
    }
}

//! Reduced rational functions in `z`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::AlgebraError;
use crate::poly::{exact_divide, poly_gcd, Polynomial};
use crate::scalar::RationalScalar;

/// `numerator / denominator` with coprime parts and a monic denominator.
///
/// The canonical form is unique, so the derived equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self, AlgebraError> {
        if denominator.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if numerator.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let g = poly_gcd(&numerator, &denominator)?;
        let (num, den) = if g.is_one() {
            (numerator, denominator)
        } else {
            (
                exact_divide(&numerator, &g)?,
                exact_divide(&denominator, &g)?,
            )
        };
        Ok(RationalFunction::normalize_lc(num, den))
    }

    /// Assumes `gcd(num, den) = 1` and `den != 0`.
    fn normalize_lc(num: Polynomial, den: Polynomial) -> Self {
        let lc = den.leading_coefficient();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip().expect("nonzero denominator");
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction::from_polynomial(Polynomial::one())
    }

    /// The identity function `z`.
    pub fn z() -> Self {
        RationalFunction::from_polynomial(Polynomial::z())
    }

    pub fn constant(c: RationalScalar) -> Self {
        RationalFunction::from_polynomial(Polynomial::constant(c))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The constant value, if this function is constant.
    pub fn as_constant(&self) -> Option<RationalScalar> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coefficient(0))
    }

    pub fn scale(&self, c: &RationalScalar) -> Self {
        if c.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Quotient rule, reduced.
    pub fn derivative(&self) -> Self {
        if self.den.is_one() {
            return RationalFunction::from_polynomial(self.num.derivative());
        }
        // (n/d)' = (n' d - n d') / d^2; with g = gcd(d, d') the common factor
        // of the result is confined to d / g.
        let dd = self.den.derivative();
        let g = poly_gcd(&self.den, &dd).expect("denominator is nonzero");
        let d_over_g = exact_divide(&self.den, &g).expect("g divides d");
        let dd_over_g = exact_divide(&dd, &g).expect("g divides d'");
        let num = &(&self.num.derivative() * &d_over_g) - &(&self.num * &dd_over_g);
        let den = &d_over_g * &self.den;
        RationalFunction::new(num, den).expect("nonzero denominator")
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(RationalFunction::normalize_lc(
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<Self, AlgebraError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, exponent: u32) -> Self {
        // Powers of coprime parts stay coprime.
        RationalFunction {
            num: self.num.pow(exponent),
            den: self.den.pow(exponent),
        }
    }

    pub fn eval(&self, at: &RationalScalar) -> Result<RationalScalar, AlgebraError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(&self.num.eval(at) / &d)
    }

    fn add_impl(&self, rhs: &RationalFunction, negate: bool) -> RationalFunction {
        let rhs_num = if negate { -&rhs.num } else { rhs.num.clone() };
        if self.is_zero() {
            return RationalFunction {
                num: rhs_num,
                den: rhs.den.clone(),
            };
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs_num;
            return RationalFunction::new(num, self.den.clone()).expect("nonzero denominator");
        }
        let g = poly_gcd(&self.den, &rhs.den).expect("nonzero denominators");
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs_num * &self.den);
            let den = &self.den * &rhs.den;
            // Coprime denominators: the sum is already reduced.
            return RationalFunction::normalize_lc(num, den);
        }
        let a_den = exact_divide(&self.den, &g).expect("g divides");
        let b_den = exact_divide(&rhs.den, &g).expect("g divides");
        let num = &(&self.num * &b_den) + &(&rhs_num * &a_den);
        let den = &(&a_den * &b_den) * &g;
        RationalFunction::new(num, den).expect("nonzero denominator")
    }

    fn mul_impl(&self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let g1 = poly_gcd(&self.num, &rhs.den).expect("nonzero");
        let g2 = poly_gcd(&rhs.num, &self.den).expect("nonzero");
        let div = |p: &Polynomial, g: &Polynomial| {
            if g.is_one() {
                p.clone()
            } else {
                exact_divide(p, g).expect("g divides")
            }
        };
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        RationalFunction::normalize_lc(num, den)
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_impl(rhs, false)
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_impl(rhs, true)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.mul_impl(rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction::from_polynomial(p)
    }
}

impl From<RationalScalar> for RationalFunction {
    fn from(c: RationalScalar) -> Self {
        RationalFunction::constant(c)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        RationalFunction::constant(c.into())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::format_rational(self))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        crate::expr::parse_rational_expression(&text).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        let f = crate::expr::parse_rational_expression(&text).map_err(serde::de::Error::custom)?;
        if !f.is_polynomial() {
            return Err(serde::de::Error::custom(format!(
                "not a polynomial: {text}"
            )));
        }
        Ok(f.into_parts().0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn canonical_form() {
        // (2z - 2) / (2z^2 - 2) = 1 / (z + 1)
        let f = rf(&[-2, 2], &[-2, 0, 2]);
        assert_eq!(f.numerator(), &p(&[1]));
        assert_eq!(f.denominator(), &p(&[1, 1]));
        assert!(RationalFunction::new(p(&[1]), Polynomial::zero()).is_err());
        assert_eq!(rf(&[0], &[3, 1]), RationalFunction::zero());
    }

    #[test]
    fn derivative_of_minus_one_over_z() {
        let w1 = rf(&[-1], &[0, 1]);
        assert_eq!(w1.derivative(), rf(&[1], &[0, 0, 1]));
        assert!(RationalFunction::from(5).derivative().is_zero());
    }

    #[test]
    fn arithmetic_reduces() {
        let a = rf(&[1], &[-1, 1]);
        let b = rf(&[1], &[1, 1]);
        // 1/(z-1) - 1/(z+1) = 2/(z^2-1)
        assert_eq!(&a - &b, rf(&[2], &[-1, 0, 1]));
        // (z^2-1)/(z) * z/(z-1) = z+1
        let c = rf(&[-1, 0, 1], &[0, 1]);
        let d = rf(&[0, 1], &[-1, 1]);
        assert_eq!(&c * &d, RationalFunction::from(p(&[1, 1])));
        assert_eq!(&a + &(-&a), RationalFunction::zero());
        assert_eq!(a.checked_div(&a).unwrap(), RationalFunction::one());
    }
}

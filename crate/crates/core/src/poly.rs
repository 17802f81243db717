//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::gcd;
use crate::scalar::{common_denominator, RationalScalar};

/// A polynomial in `z` with rational coefficients, stored densely by degree.
///
/// The coefficient vector never carries trailing zeros, so the zero polynomial
/// is the empty vector and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(RationalScalar::one())
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Polynomial::monomial(RationalScalar::one(), 1)
    }

    pub fn constant(c: RationalScalar) -> Self {
        Polynomial::from_big(vec![c.into_big()])
    }

    pub fn monomial(c: RationalScalar, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c.into_big();
        Polynomial::from_big(coeffs)
    }

    pub fn new(coeffs: Vec<RationalScalar>) -> Self {
        Polynomial::from_big(coeffs.into_iter().map(RationalScalar::into_big).collect())
    }

    /// Builds from integer coefficients listed from the constant term upward.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::from_big(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub(crate) fn from_big(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub(crate) fn from_integers(coeffs: Vec<BigInt>) -> Self {
        Polynomial::from_big(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    /// Coefficients from the constant term upward.
    pub fn coefficients(&self) -> Vec<RationalScalar> {
        self.coeffs
            .iter()
            .cloned()
            .map(RationalScalar::from_big)
            .collect()
    }

    pub fn coefficient(&self, degree: usize) -> RationalScalar {
        self.coeffs
            .get(degree)
            .cloned()
            .map(RationalScalar::from_big)
            .unwrap_or_else(RationalScalar::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; only for size bookkeeping.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn leading_coefficient(&self) -> RationalScalar {
        self.coeffs
            .last()
            .cloned()
            .map(RationalScalar::from_big)
            .unwrap_or_else(RationalScalar::zero)
    }

    /// Whether every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn eval(&self, at: &RationalScalar) -> RationalScalar {
        let x = at.as_big();
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        RationalScalar::from_big(acc)
    }

    pub fn scale(&self, factor: &RationalScalar) -> Self {
        if factor.is_zero() {
            return Polynomial::zero();
        }
        let f = factor.as_big();
        Polynomial::from_big(self.coeffs.iter().map(|c| c * f).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Polynomial::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                Polynomial::from_big(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Polynomial::from_big(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplies by `z^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Euclidean division: returns `(q, r)` with `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), AlgebraError> {
        let dd = divisor.degree().ok_or(AlgebraError::DivisionByZero)?;
        let Some(sd) = self.degree() else {
            return Ok((Polynomial::zero(), Polynomial::zero()));
        };
        if sd < dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let lead = &divisor.coeffs[dd];
        let inv = (!lead.is_one()).then(|| lead.recip());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let q = match &inv {
                Some(inv) => top * inv,
                None => top.clone(),
            };
            for (j, d) in divisor.coeffs.iter().enumerate().take(dd) {
                if !d.is_zero() {
                    rem[k + j] -= &q * d;
                }
            }
            rem[k + dd] = BigRational::zero();
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Polynomial::from_big(quot), Polynomial::from_big(rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial, AlgebraError> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Whether `divisor` divides `self` exactly; false for a zero divisor.
    pub fn is_divisible_by(&self, divisor: &Polynomial) -> bool {
        matches!(self.div_rem(divisor), Ok((_, r)) if r.is_zero())
    }

    /// Splits the coefficients into integers over a common positive denominator.
    pub(crate) fn integer_parts(&self) -> (Vec<BigInt>, BigInt) {
        let den = common_denominator(self.coeffs.iter());
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    }
}

/// Returns `q` with `a = q * b`, or an [`AlgebraError::InexactDivision`] carrying the remainder.
pub fn exact_divide(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, AlgebraError> {
    let (q, r) = a.div_rem(b)?;
    if r.is_zero() {
        Ok(q)
    } else {
        Err(AlgebraError::InexactDivision { remainder: r })
    }
}

/// Monic greatest common divisor.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, AlgebraError> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => Err(AlgebraError::GcdOfZeros),
        (false, true) => Ok(a.monic()),
        (true, false) => Ok(b.monic()),
        (false, false) => Ok(gcd::gcd_nonzero(a, b)),
    }
}

/// Squarefree decomposition `a = lc * prod factor^multiplicity` (Yun's algorithm).
///
/// Factors are monic, squarefree and pairwise coprime; multiplicities strictly increase.
/// A nonzero constant decomposes into the empty list.
pub fn squarefree_decomposition(a: &Polynomial) -> Result<Vec<(Polynomial, u32)>, AlgebraError> {
    if a.is_zero() {
        return Err(AlgebraError::ZeroPolynomial("squarefree decomposition"));
    }
    let f = a.monic();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative();
    let c = poly_gcd(&f, &df)?;
    let mut w = exact_divide(&f, &c)?;
    let mut y = exact_divide(&df, &c)?;
    let mut multiplicity = 1;
    loop {
        let z = &y - &w.derivative();
        let g = poly_gcd(&w, &z)?;
        if !g.is_constant() {
            out.push((g.clone(), multiplicity));
        }
        w = exact_divide(&w, &g)?;
        if w.is_constant() {
            break;
        }
        y = exact_divide(&z, &g)?;
        multiplicity += 1;
    }
    Ok(out)
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::from_big(coeffs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigRational::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Polynomial::from_big(coeffs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        // Convolve over the integers and normalize each coefficient once.
        let (a, da) = self.integer_parts();
        let (b, db) = rhs.integer_parts();
        let mut prod = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let den = da * db;
        Polynomial::from_big(
            prod.into_iter()
                .map(|c| BigRational::new(c, den.clone()))
                .collect(),
        )
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::format_polynomial(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(
            poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(),
            p(&[-1, 1])
        );
        assert_eq!(
            poly_gcd(&p(&[0, 1]), &p(&[4, 0, 0, 1])).unwrap(),
            Polynomial::one()
        );
        assert_eq!(
            poly_gcd(&p(&[2, 4]), &Polynomial::zero()).unwrap(),
            p(&[1, 2]).monic()
        );
        assert_eq!(
            poly_gcd(&Polynomial::zero(), &Polynomial::zero()),
            Err(AlgebraError::GcdOfZeros)
        );
    }

    #[test]
    fn exact_divide_examples() {
        assert_eq!(
            exact_divide(&p(&[4, 0, 0, 1]), &Polynomial::one()).unwrap(),
            p(&[4, 0, 0, 1])
        );
        assert_eq!(
            exact_divide(&p(&[0, -80, 0, 0, 20, 0, 0, 1]), &Polynomial::z()).unwrap(),
            p(&[-80, 0, 0, 20, 0, 0, 1])
        );
        assert_eq!(
            exact_divide(&p(&[1, 0, 1]), &Polynomial::z()),
            Err(AlgebraError::InexactDivision {
                remainder: Polynomial::one()
            })
        );
        assert_eq!(
            exact_divide(&p(&[1]), &Polynomial::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[4, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
        assert!(p(&[7]).derivative().is_zero());
        assert!(Polynomial::zero().derivative().is_zero());
    }

    #[test]
    fn squarefree_examples() {
        // z^2 (z^3 + 4)^2 = (z^4 + 4z)^2
        let t = p(&[0, 4, 0, 0, 1]);
        let s = &t * &t;
        assert_eq!(squarefree_decomposition(&s).unwrap(), vec![(t, 2)]);
        assert_eq!(
            squarefree_decomposition(&Polynomial::z()).unwrap(),
            vec![(Polynomial::z(), 1)]
        );
        let cube = p(&[-1, 1]).pow(3);
        assert_eq!(
            squarefree_decomposition(&cube).unwrap(),
            vec![(p(&[-1, 1]), 3)]
        );
        assert!(squarefree_decomposition(&Polynomial::zero()).is_err());
        assert!(squarefree_decomposition(&p(&[5])).unwrap().is_empty());
    }

    #[test]
    fn squarefree_mixed_multiplicities() {
        // 3 (z - 1) (z + 2)^2 z^3
        let f = &(&(&p(&[-1, 1]) * &p(&[2, 1]).pow(2)) * &Polynomial::z().pow(3)) * &p(&[3]);
        let dec = squarefree_decomposition(&f).unwrap();
        assert_eq!(
            dec,
            vec![(p(&[-1, 1]), 1), (p(&[2, 1]), 2), (Polynomial::z(), 3)]
        );
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[0, 0, 0]).degree(), None);
        assert_eq!(p(&[1, 0, 3, 0]).degree(), Some(2));
    }
}

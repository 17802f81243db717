//! Arithmetic in `Q[z] / (m)` for a squarefree modulus `m`.
//!
//! An element stands for the tuple of its values at all roots of `m` at once,
//! which lets per-root facts be checked without factoring `m`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::poly::{poly_gcd, Polynomial};
use crate::scalar::RationalScalar;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuotientRingElement {
    representative: Polynomial,
    modulus: Polynomial,
}

impl QuotientRingElement {
    pub fn representative(&self) -> &Polynomial {
        &self.representative
    }

    pub fn modulus(&self) -> &Polynomial {
        &self.modulus
    }

    /// The common value at every root when the representative is constant.
    pub fn as_constant(&self) -> Option<RationalScalar> {
        self.representative
            .is_constant()
            .then(|| self.representative.coefficient(0))
    }

    pub fn is_zero(&self) -> bool {
        self.representative.is_zero()
    }

    fn with(&self, representative: Polynomial) -> Self {
        QuotientRingElement {
            representative,
            modulus: self.modulus.clone(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(AlgebraError::ModulusMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        Ok(self.with(&self.representative + &other.representative))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        Ok(self.with(&self.representative - &other.representative))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let product = &self.representative * &other.representative;
        Ok(self.with(product.rem(&self.modulus)?))
    }
}

impl fmt::Display for QuotientRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.representative, self.modulus)
    }
}

impl fmt::Debug for QuotientRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_modulus(modulus: &Polynomial) -> Result<(), AlgebraError> {
    let ok = modulus.degree().is_some_and(|d| d >= 1)
        && poly_gcd(modulus, &modulus.derivative())?.is_one();
    if ok {
        Ok(())
    } else {
        Err(AlgebraError::BadModulus(modulus.clone()))
    }
}

/// Reduces `p` modulo a squarefree `modulus`.
pub fn quotient_reduce(
    p: &Polynomial,
    modulus: &Polynomial,
) -> Result<QuotientRingElement, AlgebraError> {
    check_modulus(modulus)?;
    Ok(QuotientRingElement {
        representative: p.rem(modulus)?,
        modulus: modulus.clone(),
    })
}

/// Multiplicative inverse; fails with the nontrivial gcd when `x` is a zero divisor.
pub fn quotient_invert(x: &QuotientRingElement) -> Result<QuotientRingElement, AlgebraError> {
    let inv = inverse_mod(&x.representative, &x.modulus)?;
    Ok(x.with(inv))
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm with monic remainders.
pub(crate) fn inverse_mod(a: &Polynomial, m: &Polynomial) -> Result<Polynomial, AlgebraError> {
    if m.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    let a = a.rem(m)?;
    if a.is_zero() {
        return Err(AlgebraError::NotInvertible { gcd: m.monic() });
    }
    // Invariant: t_i * a == r_i (mod m), every r_i monic.
    let lc_m = m.leading_coefficient().recip()?;
    let (mut r0, mut t0) = (m.scale(&lc_m), Polynomial::zero());
    let lc_a = a.leading_coefficient().recip()?;
    let (mut r1, mut t1) = (a.scale(&lc_a), Polynomial::constant(lc_a));
    while !r1.is_constant() {
        let (q, r) = r0.div_rem(&r1)?;
        let t = &t0 - &(&q * &t1);
        if r.is_zero() {
            return Err(AlgebraError::NotInvertible { gcd: r1 });
        }
        let inv = r.leading_coefficient().recip()?;
        r0 = std::mem::replace(&mut r1, r.scale(&inv));
        t0 = std::mem::replace(&mut t1, t.scale(&inv));
    }
    // r1 == 1
    t1.rem(m)
}

/// The value of `num / den` at the roots of `modulus`, as a constant when it
/// takes the same rational value at every root.
pub(crate) fn ratio_mod(
    num: &Polynomial,
    den: &Polynomial,
    modulus: &Polynomial,
) -> Result<ClassValue, AlgebraError> {
    let n = num.rem(modulus)?;
    let d = den.rem(modulus)?;
    if d.is_zero() {
        return Err(AlgebraError::NotInvertible {
            gcd: modulus.monic(),
        });
    }
    // Remainders of degree < deg(modulus) are unique, so n == k d exactly when the value is k.
    if n.is_zero() {
        return Ok(ClassValue::Rational(RationalScalar::zero()));
    }
    if n.degree() == d.degree() {
        let k = &n.leading_coefficient() / &d.leading_coefficient();
        if d.scale(&k) == n {
            return Ok(ClassValue::Rational(k));
        }
    }
    let inv = inverse_mod(&d, modulus)?;
    let rep = (&n * &inv).rem(modulus)?;
    if rep.is_constant() {
        return Ok(ClassValue::Rational(rep.coefficient(0)));
    }
    Ok(ClassValue::Residue(QuotientRingElement {
        representative: rep,
        modulus: modulus.clone(),
    }))
}

/// A per-root quantity over all roots of a squarefree factor.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassValue {
    /// The same rational value at every root.
    Rational(RationalScalar),
    /// Root-dependent (or irrational) values, kept as a residue class.
    Residue(QuotientRingElement),
}

impl ClassValue {
    pub fn as_rational(&self) -> Option<&RationalScalar> {
        match self {
            ClassValue::Rational(v) => Some(v),
            ClassValue::Residue(_) => None,
        }
    }
}

impl fmt::Display for ClassValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassValue::Rational(v) => write!(f, "{v}"),
            ClassValue::Residue(r) => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn reduce_examples() {
        assert!(quotient_reduce(&p(&[0, 0, 1]), &Polynomial::z())
            .unwrap()
            .is_zero());
        // n = 1: T = z, 6 (T')^2 = 6
        let six = quotient_reduce(&p(&[6]), &Polynomial::z()).unwrap();
        assert_eq!(six.as_constant(), Some(6.into()));
        let x = quotient_reduce(&p(&[1, 1]), &p(&[1, 0, 1])).unwrap();
        assert_eq!(x.representative(), &p(&[1, 1]));
    }

    #[test]
    fn reduce_rejects_bad_modulus() {
        assert!(matches!(
            quotient_reduce(&p(&[1]), &p(&[0, 0, 1])),
            Err(AlgebraError::BadModulus(_))
        ));
        assert!(quotient_reduce(&p(&[1]), &p(&[3])).is_err());
    }

    #[test]
    fn invert_examples() {
        let one = quotient_reduce(&p(&[1]), &p(&[2, 0, 1])).unwrap();
        assert_eq!(quotient_invert(&one).unwrap().representative(), &p(&[1]));
        let z = quotient_reduce(&Polynomial::z(), &p(&[1, 0, 1])).unwrap();
        assert_eq!(quotient_invert(&z).unwrap().representative(), &p(&[0, -1]));
    }

    #[test]
    fn invert_reports_gcd() {
        // z mod z(z - 1): squarefree modulus, z is a zero divisor.
        let x = quotient_reduce(&Polynomial::z(), &p(&[0, -1, 1])).unwrap();
        assert_eq!(
            quotient_invert(&x),
            Err(AlgebraError::NotInvertible {
                gcd: Polynomial::z()
            })
        );
        // The non-squarefree z mod z^2 case is reported via the raw inverse.
        assert_eq!(
            inverse_mod(&Polynomial::z(), &p(&[0, 0, 1])),
            Err(AlgebraError::NotInvertible {
                gcd: Polynomial::z()
            })
        );
    }

    #[test]
    fn ratio_detects_constants() {
        // (6 + 6z) / (1 + z) = 6 everywhere modulo z^2 + 3
        let v = ratio_mod(&p(&[6, 6]), &p(&[1, 1]), &p(&[3, 0, 1])).unwrap();
        assert_eq!(v, ClassValue::Rational(6.into()));
        let v = ratio_mod(&Polynomial::z(), &p(&[1]), &p(&[-2, 0, 1])).unwrap();
        assert!(matches!(v, ClassValue::Residue(_)));
    }
}

//! Splitting a squarefree factor by the values a residue class takes at its roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;
use crate::linalg::solve;
use crate::poly::{exact_divide, poly_gcd, Polynomial};
use crate::quotient::{ratio_mod, ClassValue};
use crate::scalar::RationalScalar;

/// Largest integer whose divisors are enumerated when searching rational roots.
const DIVISOR_SEARCH_BOUND: u64 = 1_000_000_000_000;

/// A piece of a factor together with the value of the class quantity on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Piece {
    pub factor: Polynomial,
    pub value: ClassValue,
    /// False when the remaining roots might still carry rational values that were not isolated.
    pub resolved: bool,
}

/// Splits `modulus` into pieces on which `num / den` is a rational constant,
/// plus at most one remainder piece where every value is irrational.
pub(crate) fn split_by_value(
    num: &Polynomial,
    den: &Polynomial,
    modulus: &Polynomial,
) -> Result<Vec<Piece>, AlgebraError> {
    let value = ratio_mod(num, den, modulus)?;
    let ClassValue::Residue(residue) = &value else {
        return Ok(vec![Piece {
            factor: modulus.clone(),
            value,
            resolved: true,
        }]);
    };
    let rep = residue.representative().clone();
    let minimal = minimal_polynomial(&rep, modulus)?;
    let Some(roots) = rational_roots(&minimal) else {
        return Ok(vec![Piece {
            factor: modulus.clone(),
            value,
            resolved: false,
        }]);
    };
    let mut pieces = Vec::new();
    let mut rest = modulus.clone();
    for k in roots {
        let shifted = &rep - &Polynomial::constant(k.clone());
        let part = poly_gcd(&rest, &shifted)?;
        if part.is_constant() {
            continue;
        }
        rest = exact_divide(&rest, &part)?;
        pieces.push(Piece {
            factor: part,
            value: ClassValue::Rational(k),
            resolved: true,
        });
    }
    if !rest.is_constant() {
        let value = ratio_mod(num, den, &rest)?;
        pieces.push(Piece {
            factor: rest,
            value,
            resolved: true,
        });
    }
    Ok(pieces)
}

/// Minimal polynomial of `a` in `Q[z] / (modulus)`.
fn minimal_polynomial(a: &Polynomial, modulus: &Polynomial) -> Result<Polynomial, AlgebraError> {
    let n = modulus.degree().unwrap_or(0);
    let mut powers = vec![Polynomial::one()];
    loop {
        let next = (&powers[powers.len() - 1] * a).rem(modulus)?;
        let k = powers.len();
        let matrix: Vec<Vec<BigRational>> = (0..n)
            .map(|row| {
                powers
                    .iter()
                    .map(|p| p.coefficient(row).into_big())
                    .collect()
            })
            .collect();
        let rhs: Vec<BigRational> = (0..n).map(|row| next.coefficient(row).into_big()).collect();
        if let Some(c) = solve(matrix, rhs, k) {
            // a^k = sum c_j a^j
            let mut coeffs: Vec<RationalScalar> = c
                .into_iter()
                .map(|x| -RationalScalar::from_big(x))
                .collect();
            coeffs.push(RationalScalar::one());
            return Ok(Polynomial::new(coeffs));
        }
        powers.push(next);
    }
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > DIVISOR_SEARCH_BOUND {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// All rational roots, or `None` if the coefficients are too large to search.
pub(crate) fn rational_roots(p: &Polynomial) -> Option<Vec<RationalScalar>> {
    let (ints, _) = p.integer_parts();
    let mut ints: Vec<BigInt> = ints;
    let mut roots = Vec::new();
    if ints.is_empty() {
        return Some(roots);
    }
    if ints[0].is_zero() {
        roots.push(RationalScalar::zero());
        let first = ints
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial");
        ints.drain(..first);
    }
    if ints.len() == 1 {
        return Some(roots);
    }
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let ints: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
    let numerators = divisors(&ints[0])?;
    let denominators = divisors(ints.last().expect("nonempty"))?;
    let reduced = Polynomial::from_integers(ints);
    let mut seen = std::collections::BTreeSet::new();
    for &q in &denominators {
        for &num in &numerators {
            if num.gcd(&q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let candidate = RationalScalar::new(BigInt::from(num) * sign, BigInt::from(q));
                if reduced.eval(&candidate).is_zero() && seen.insert(candidate.clone()) {
                    roots.push(candidate);
                }
            }
        }
    }
    roots.sort();
    debug_assert!(roots.iter().all(|r| p.eval(r).is_zero()));
    Some(roots)
}

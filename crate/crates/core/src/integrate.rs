//! Rational antiderivatives by Hermite reduction.

use crate::error::AlgebraError;
use crate::poly::{exact_divide, squarefree_decomposition, Polynomial};
use crate::quotient::inverse_mod;
use crate::ratfunc::RationalFunction;
use crate::scalar::RationalScalar;

/// Antiderivative of `f` with integration constant 0.
///
/// Fails with [`AlgebraError::NonRationalAntiderivative`] when `f` has a
/// nonzero residue, naming the squarefree factor carrying the logarithmic part.
pub fn integrate_rational(f: &RationalFunction) -> Result<RationalFunction, AlgebraError> {
    let (poly_part, proper) = f.numerator().div_rem(f.denominator())?;
    let mut result = RationalFunction::from_polynomial(integrate_polynomial(&poly_part));
    if proper.is_zero() {
        return Ok(result);
    }
    let (rational, remainder) = hermite_reduce(proper, f.denominator().clone())?;
    if !remainder.is_zero() {
        return Err(AlgebraError::NonRationalAntiderivative {
            factor: remainder.denominator().clone(),
        });
    }
    result = &result + &rational;
    Ok(result)
}

fn integrate_polynomial(p: &Polynomial) -> Polynomial {
    Polynomial::new(
        std::iter::once(RationalScalar::zero())
            .chain(
                p.coefficients()
                    .into_iter()
                    .enumerate()
                    .map(|(k, c)| &c / &RationalScalar::from_integer(k as i64 + 1)),
            )
            .collect(),
    )
}

/// Splits `a / d` (proper) into `g' + h` with `h` having a squarefree denominator.
fn hermite_reduce(
    mut a: Polynomial,
    mut d: Polynomial,
) -> Result<(RationalFunction, RationalFunction), AlgebraError> {
    let mut g = RationalFunction::zero();
    let factors = squarefree_decomposition(&d)?;
    // Make d monic so that d == prod factor^i exactly.
    let lc = d.leading_coefficient().recip()?;
    d = d.scale(&lc);
    a = a.scale(&lc);
    for (v, i) in factors {
        if i < 2 {
            continue;
        }
        let u = exact_divide(&d, &v.pow(i))?;
        let uv = &u * &v.derivative();
        let uv_inv = inverse_mod(&uv, &v)?;
        for j in (1..i).rev() {
            // Solve b * u * v' + c * v = -a / j with deg b < deg v.
            let rhs = a.scale(&RationalScalar::new(-1, j as i64));
            let b = (&rhs * &uv_inv).rem(&v)?;
            let c = exact_divide(&(&rhs - &(&b * &uv)), &v)?;
            g = &g + &RationalFunction::new(b.clone(), v.pow(j))?;
            a = &c.scale(&RationalScalar::from_integer(-(j as i64))) - &(&u * &b.derivative());
        }
        d = &u * &v;
    }
    Ok((g, RationalFunction::new(a, d)?))
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
    fn basic_antiderivatives() {
        assert_eq!(
            integrate_rational(&rf(&[1], &[0, 0, 1])).unwrap(),
            rf(&[-1], &[0, 1])
        );
        assert_eq!(
            integrate_rational(&RationalFunction::z()).unwrap(),
            RationalFunction::new(p(&[0, 0, 1]), p(&[2])).unwrap()
        );
        assert!(integrate_rational(&RationalFunction::zero())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn logarithmic_part_is_rejected() {
        assert_eq!(
            integrate_rational(&rf(&[1], &[0, 1])),
            Err(AlgebraError::NonRationalAntiderivative {
                factor: Polynomial::z()
            })
        );
        // 1/z^2 + 1/(z - 1): only the simple pole carries a residue.
        let f = &rf(&[1], &[0, 0, 1]) + &rf(&[1], &[-1, 1]);
        assert_eq!(
            integrate_rational(&f),
            Err(AlgebraError::NonRationalAntiderivative {
                factor: p(&[-1, 1])
            })
        );
    }

    #[test]
    fn higher_order_poles() {
        // d/dz [ (z + 2) / (z^2 + 1)^3 ]
        let g = rf(&[2, 1], &[1, 0, 3, 0, 3, 0, 1]);
        let f = g.derivative();
        assert_eq!(integrate_rational(&f).unwrap(), g);
    }
}

//! Small exact linear algebra over the rationals.

use num_rational::BigRational;
use num_traits::Zero;

use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;
use crate::scalar::RationalScalar;

/// Solves `matrix * x = rhs` by Gauss-Jordan elimination, free variables set to 0.
///
/// `matrix` is row-major with `columns` unknowns; `None` when inconsistent.
pub(crate) fn solve(
    mut matrix: Vec<Vec<BigRational>>,
    mut rhs: Vec<BigRational>,
    columns: usize,
) -> Option<Vec<BigRational>> {
    let rows = matrix.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..columns {
        let Some(pivot) = (row..rows).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(row, pivot);
        rhs.swap(row, pivot);
        let inv = matrix[row][col].recip();
        for c in col..columns {
            matrix[row][c] = &matrix[row][c] * &inv;
        }
        rhs[row] = &rhs[row] * &inv;
        for r in 0..rows {
            if r == row || matrix[r][col].is_zero() {
                continue;
            }
            let factor = matrix[r][col].clone();
            for c in col..columns {
                let delta = &factor * &matrix[row][c];
                matrix[r][c] -= delta;
            }
            let delta = &factor * &rhs[row];
            rhs[r] -= delta;
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if rhs[row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); columns];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rhs[r].clone();
    }
    Some(x)
}

/// Applies `sum_k coeffs[k] * P^(k)`.
pub(crate) fn apply_operator(coeffs: &[RationalFunction], p: &Polynomial) -> RationalFunction {
    let mut derivative = p.clone();
    let mut total = RationalFunction::zero();
    for (k, c) in coeffs.iter().enumerate() {
        if k > 0 {
            derivative = derivative.derivative();
        }
        if !c.is_zero() {
            total = &total + &(c * &RationalFunction::from_polynomial(derivative.clone()));
        }
    }
    total
}

/// Finds a monic polynomial `P` of degree `d` with `sum_k coeffs[k] * P^(k) = 0`.
pub(crate) fn monic_polynomial_solution(
    coeffs: &[RationalFunction],
    d: usize,
) -> Option<Polynomial> {
    // Clear denominators so that the operator maps polynomials to polynomials.
    let mut common = Polynomial::one();
    for c in coeffs {
        let g = crate::poly::poly_gcd(&common, c.denominator()).ok()?;
        common = crate::poly::exact_divide(&(&common * c.denominator()), &g).ok()?;
    }
    let scaled: Vec<Polynomial> = coeffs
        .iter()
        .map(|c| {
            let factor = crate::poly::exact_divide(&common, c.denominator()).expect("lcm");
            c.numerator() * &factor
        })
        .collect();
    let image = |i: usize| -> Polynomial {
        let mut basis = Polynomial::monomial(RationalScalar::one(), i);
        let mut acc = Polynomial::zero();
        for a in &scaled {
            acc = &acc + &(a * &basis);
            basis = basis.derivative();
        }
        acc
    };
    let images: Vec<Polynomial> = (0..=d).map(image).collect();
    let height = images
        .iter()
        .map(|p| p.coefficients().len())
        .max()
        .unwrap_or(0);
    let matrix: Vec<Vec<BigRational>> = (0..height)
        .map(|row| {
            images[..d]
                .iter()
                .map(|p| p.coefficient(row).into_big())
                .collect()
        })
        .collect();
    let rhs: Vec<BigRational> = (0..height)
        .map(|row| -images[d].coefficient(row).into_big())
        .collect();
    let solution = if height == 0 {
        vec![BigRational::zero(); d]
    } else {
        solve(matrix, rhs, d)?
    };
    let mut coefficients: Vec<RationalScalar> =
        solution.into_iter().map(RationalScalar::from_big).collect();
    coefficients.push(RationalScalar::one());
    let p = Polynomial::new(coefficients);
    apply_operator(coeffs, &p).is_zero().then_some(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_rational_expression;

    fn big(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn solves_consistent_and_rejects_inconsistent() {
        let m = vec![vec![big(1), big(1)], vec![big(1), big(-1)]];
        assert_eq!(
            solve(m, vec![big(3), big(1)], 2),
            Some(vec![big(2), big(1)])
        );
        let m = vec![vec![big(1), big(1)], vec![big(2), big(2)]];
        assert_eq!(solve(m, vec![big(1), big(3)], 2), None);
    }

    #[test]
    fn finds_polynomial_solutions() {
        // P'' - 2z P' + 4 P = 0 has the Hermite solution z^2 - 1/2.
        let e = |s: &str| parse_rational_expression(s).unwrap();
        let coeffs = [e("4"), e("-2*z"), e("1")];
        assert_eq!(
            monic_polynomial_solution(&coeffs, 2),
            Some(Polynomial::new(vec![
                RationalScalar::new(-1, 2),
                RationalScalar::zero(),
                RationalScalar::one()
            ]))
        );
        assert_eq!(monic_polynomial_solution(&coeffs, 1), None);
    }
}

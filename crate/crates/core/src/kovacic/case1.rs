//! Case 1 for poles of order at most 2 and order at infinity at least 2:
//! a rational solution `omega` of `omega' + omega^2 = r`.

use serde::{Deserialize, Serialize};

use super::profile::{infinity_coefficient, InfinityOrder, SingularityProfile};
use super::{
    distribution_count, distributions, for_each_combination, string_number, CaseOutcome,
    COMBINATION_LIMIT, COMPLETION_DEGREE_LIMIT,
};
use crate::error::InvariantViolation;
use crate::linalg::monic_polynomial_solution;
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;
use crate::scalar::{rational_sqrt, RationalScalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case1Payload {
    pub omega: RationalFunction,
    /// The local exponent chosen on each pole class.
    pub exponents: Vec<RationalScalar>,
    pub alpha_infinity: RationalScalar,
    #[serde(with = "string_number")]
    pub d: i64,
    pub polynomial: Polynomial,
}

/// `omega' + omega^2 = r`, exactly.
pub fn riccati_holds(r: &RationalFunction, omega: &RationalFunction) -> bool {
    &(&omega.derivative() + &omega.pow(2)) == r
}

/// `1/2 (1 + delta)` and `1/2 (1 - delta)` for `delta = sqrt(1 + 4 a)`, or `None` if irrational.
fn half_pair(a: &RationalScalar) -> Option<Vec<RationalScalar>> {
    let delta = rational_sqrt(&(&RationalScalar::one() + &(&RationalScalar::from_integer(4) * a)))?;
    let half = RationalScalar::new(1, 2);
    let plus = &half * &(&RationalScalar::one() + &delta);
    let minus = &half * &(&RationalScalar::one() - &delta);
    Some(if plus == minus {
        vec![plus]
    } else {
        vec![plus, minus]
    })
}

pub fn case1_search(
    r: &RationalFunction,
    profile: &SingularityProfile,
) -> Result<CaseOutcome<Case1Payload>, InvariantViolation> {
    let undecided = |reason: &str| {
        Ok(CaseOutcome::Undecided {
            reason: reason.to_string(),
        })
    };
    let mut sets: Vec<Vec<RationalScalar>> = Vec::new();
    for class in &profile.pole_classes {
        match class.order {
            1 => sets.push(vec![RationalScalar::one()]),
            2 if !class.resolved => {
                return undecided("double-pole class could not be split by its alpha values")
            }
            2 => match class.rational_alpha().and_then(half_pair) {
                Some(pair) => sets.push(pair),
                None => return undecided("irrational exponent difference at a double pole"),
            },
            _ => return undecided("poles of order above 2 are outside the case 1 search"),
        }
    }
    let at_infinity = match profile.order_at_infinity {
        InfinityOrder::Infinite => vec![RationalScalar::zero(), RationalScalar::one()],
        InfinityOrder::Finite(v) if v > 2 => vec![RationalScalar::zero(), RationalScalar::one()],
        InfinityOrder::Finite(2) => {
            let b = infinity_coefficient(r).expect("order 2 at infinity");
            match half_pair(&b) {
                Some(pair) => pair,
                None => return undecided("irrational exponent difference at infinity"),
            }
        }
        InfinityOrder::Finite(_) => {
            return undecided("order at infinity below 2 is outside the case 1 search")
        }
    };

    let classes = &profile.pole_classes;
    let total: Option<u64> = sets
        .iter()
        .zip(classes)
        .map(|(set, class)| distribution_count(set.len(), class.root_count))
        .try_fold(1u64, |acc, c| acc.checked_mul(c));
    if total.map_or(true, |t| t > COMBINATION_LIMIT) {
        return undecided("too many exponent combinations to search");
    }
    let per_class: Vec<Vec<Vec<usize>>> = sets
        .iter()
        .zip(classes)
        .map(|(set, class)| distributions(set.len(), class.root_count))
        .collect();

    let mut found: Option<Case1Payload> = None;
    let mut pending: Option<&'static str> = None;
    for_each_combination(&per_class, |counts| {
        let mut sum = RationalScalar::zero();
        let mut uniform = Vec::with_capacity(counts.len());
        for (c, set) in counts.iter().zip(&sets) {
            let mut used = Vec::new();
            for (&k, value) in c.iter().zip(set) {
                if k > 0 {
                    sum = &sum + &(&RationalScalar::from_integer(k as i64) * value);
                    used.push(value.clone());
                }
            }
            uniform.push((used.len() == 1).then(|| used[0].clone()));
        }
        for alpha_inf in &at_infinity {
            let d = alpha_inf - &sum;
            let Some(d) = d
                .is_integer()
                .then(|| d.to_i64())
                .flatten()
                .filter(|&d| d >= 0)
            else {
                continue;
            };
            let Some(exponents) = uniform.iter().cloned().collect::<Option<Vec<_>>>() else {
                pending.get_or_insert("a family needs different exponents on roots of one class");
                continue;
            };
            if d as usize > COMPLETION_DEGREE_LIMIT {
                pending.get_or_insert("completion degree exceeds the search limit");
                continue;
            }
            let mut omega0 = RationalFunction::zero();
            for (class, a) in classes.iter().zip(&exponents) {
                let log_derivative =
                    RationalFunction::new(class.factor.derivative(), class.factor.clone())
                        .expect("nonzero factor");
                omega0 = &omega0 + &log_derivative.scale(a);
            }
            let c0 = &(&omega0.derivative() + &omega0.pow(2)) - r;
            let c1 = omega0.scale(&RationalScalar::from_integer(2));
            if let Some(p) =
                monic_polynomial_solution(&[c0, c1, RationalFunction::one()], d as usize)
            {
                let ratio = RationalFunction::new(p.derivative(), p.clone()).expect("monic P");
                found = Some(Case1Payload {
                    omega: &omega0 + &ratio,
                    exponents,
                    alpha_infinity: alpha_inf.clone(),
                    d,
                    polynomial: p,
                });
                return false;
            }
        }
        true
    });

    match (found, pending) {
        (Some(payload), _) => {
            if !riccati_holds(r, &payload.omega) {
                return Err(InvariantViolation(
                    "case 1 payload fails the Riccati equation".to_string(),
                ));
            }
            Ok(CaseOutcome::Success(payload))
        }
        (None, Some(reason)) => undecided(reason),
        (None, None) => Ok(CaseOutcome::Excluded {
            reason: "no exponent family admits a polynomial completion".to_string(),
        }),
    }
}

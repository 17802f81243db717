//! Case 2: an exponent per pole, a degree `d`, and a monic `P` completing `theta`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::exponents::ExponentData;
use super::profile::SingularityProfile;
use super::{
    distribution_count, distributions, for_each_combination, string_number, CaseOutcome,
    ExponentCount, COMBINATION_LIMIT, COMPLETION_DEGREE_LIMIT,
};
use crate::error::InvariantViolation;
use crate::linalg::{apply_operator, monic_polynomial_solution};
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;
use crate::scalar::RationalScalar;

/// Root-level assignments up to this many are enumerated one by one as a cross-check.
const EXHAUSTIVE_LIMIT: u64 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DFormula {
    /// `d = 2 - (sum over finite poles and infinity) / 2`.
    Summed,
    /// `d = (e_inf - sum over finite poles) / 2`.
    Classic,
}

impl DFormula {
    /// `d` for a finite exponent sum, if it is an integer.
    pub fn degree(self, finite_sum: i64, e_infinity: i64) -> Option<i64> {
        let twice = match self {
            DFormula::Summed => 4 - finite_sum - e_infinity,
            DFormula::Classic => e_infinity - finite_sum,
        };
        (twice % 2 == 0).then_some(twice / 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case2Candidate {
    pub formula: DFormula,
    /// Per pole class, how many roots take each exponent.
    pub choices: Vec<Vec<ExponentCount>>,
    #[serde(with = "string_number")]
    pub e_infinity: i64,
    #[serde(with = "string_number")]
    pub d: i64,
    /// Every class uses a single exponent on all of its roots.
    pub uniform: bool,
    pub completed: bool,
}

/// Root-by-root enumeration totals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustiveRecord {
    #[serde(with = "string_number")]
    pub assignments: u64,
    /// Pairs (assignment, `e_inf`) giving an integer `d`, any sign.
    #[serde(with = "string_number")]
    pub integer_d_summed: u64,
    #[serde(with = "string_number")]
    pub integer_d_classic: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case2Payload {
    pub formula: DFormula,
    /// One exponent per pole class.
    #[serde(with = "string_number::vec")]
    pub exponents: Vec<i64>,
    #[serde(with = "string_number")]
    pub e_infinity: i64,
    #[serde(with = "string_number")]
    pub d: i64,
    pub theta: RationalFunction,
    pub polynomial: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case2Record {
    /// Number of ways to pick one exponent per finite root.
    #[serde(with = "string_number")]
    pub assignment_count: BigUint,
    /// Each exponent set has a single parity and the totals are odd under both formulas.
    pub parity_shortcut: bool,
    pub exhaustive: Option<ExhaustiveRecord>,
    /// Candidates with a nonnegative integer `d`.
    pub candidates: Vec<Case2Candidate>,
    pub outcome: CaseOutcome<Case2Payload>,
}

impl Case2Record {
    pub fn filtered(reason: String) -> Self {
        Case2Record {
            assignment_count: BigUint::from(0u32),
            parity_shortcut: false,
            exhaustive: None,
            candidates: Vec::new(),
            outcome: CaseOutcome::Filtered { reason },
        }
    }
}

/// Coefficients of `P''' + 3 theta P'' + (3 theta^2 + 3 theta' - 4 r) P' + (theta'' + 3 theta theta' + theta^3 - 4 r theta - 2 r') P`.
fn auxiliary_operator(r: &RationalFunction, theta: &RationalFunction) -> [RationalFunction; 4] {
    let s = |k: i64| RationalScalar::from_integer(k);
    let d1 = theta.derivative();
    let d2 = d1.derivative();
    let four_r = r.scale(&s(4));
    let c0 = &(&(&(&d2 + &(theta * &d1).scale(&s(3))) + &theta.pow(3)) - &(&four_r * theta))
        - &r.derivative().scale(&s(2));
    let c1 = &(&theta.pow(2).scale(&s(3)) + &d1.scale(&s(3))) - &four_r;
    let c2 = theta.scale(&s(3));
    [c0, c1, c2, RationalFunction::one()]
}

/// Exact check of the auxiliary identity for `theta` and `P`.
pub fn case2_identity_holds(
    r: &RationalFunction,
    theta: &RationalFunction,
    p: &Polynomial,
) -> bool {
    !p.is_zero() && apply_operator(&auxiliary_operator(r, theta), p).is_zero()
}

/// `theta = 1/2 sum e_c g_c'/g_c`.
fn theta_for(profile: &SingularityProfile, exponents: &[i64]) -> RationalFunction {
    let half = RationalScalar::new(1, 2);
    let mut theta = RationalFunction::zero();
    for (class, &e) in profile.pole_classes.iter().zip(exponents) {
        let log_derivative = RationalFunction::new(class.factor.derivative(), class.factor.clone())
            .expect("nonzero factor");
        theta = &theta + &log_derivative.scale(&(&half * &RationalScalar::from_integer(e)));
    }
    theta
}

/// Search order: the exponent 2 first, then by distance from it.
fn search_order(values: &[i64]) -> Vec<i64> {
    let mut v = values.to_vec();
    v.sort_by_key(|&e| ((e - 2).abs(), e));
    v
}

fn single_parity(values: &[i64]) -> Option<i64> {
    let p = values.first()?.rem_euclid(2);
    values.iter().all(|v| v.rem_euclid(2) == p).then_some(p)
}

fn multinomial(total: usize, parts: &[usize]) -> u128 {
    let mut acc: u128 = 1;
    let mut n = 0u128;
    for &k in parts {
        for i in 1..=k as u128 {
            n += 1;
            acc = acc * n / i;
        }
    }
    debug_assert_eq!(n as usize, total);
    acc
}

pub fn case2_search(
    r: &RationalFunction,
    profile: &SingularityProfile,
    exponents: &ExponentData,
) -> Result<Case2Record, InvariantViolation> {
    let classes = &profile.pole_classes;
    let sets: Vec<Vec<i64>> = exponents
        .per_class
        .iter()
        .map(|c| search_order(&c.values))
        .collect();
    let inf_summed = search_order(&exponents.at_infinity_summed);
    let inf_classic = search_order(&exponents.at_infinity_classic);

    let mut assignment_count = BigUint::one();
    for (set, class) in sets.iter().zip(classes) {
        assignment_count *= BigUint::from(set.len()).pow(class.root_count as u32);
    }
    let mut record = Case2Record {
        assignment_count,
        parity_shortcut: false,
        exhaustive: None,
        candidates: Vec::new(),
        outcome: CaseOutcome::Excluded {
            reason: String::new(),
        },
    };

    if let Some(note) = exponents.per_class.iter().find_map(|c| c.undecided.clone()) {
        record.outcome = CaseOutcome::Undecided { reason: note };
        return Ok(record);
    }

    // Parity: with single-parity sets the total's parity is fixed.
    let finite_parity = sets
        .iter()
        .zip(classes)
        .map(|(set, class)| single_parity(set).map(|p| p * class.root_count as i64))
        .sum::<Option<i64>>()
        .map(|p| p.rem_euclid(2));
    if let (Some(fp), Some(pp), Some(cp)) = (
        finite_parity,
        single_parity(&inf_summed),
        single_parity(&inf_classic),
    ) {
        record.parity_shortcut = (fp + pp) % 2 == 1 && (fp + cp) % 2 == 1;
    }

    // Multiset search over per-class exponent counts.
    let per_class: Vec<Vec<Vec<usize>>> = sets
        .iter()
        .zip(classes)
        .map(|(set, class)| distributions(set.len(), class.root_count))
        .collect();
    let combinations = sets
        .iter()
        .zip(classes)
        .map(|(set, class)| distribution_count(set.len(), class.root_count))
        .try_fold(1u64, |acc, c| acc.checked_mul(c))
        .filter(|&c| c <= COMBINATION_LIMIT);
    let Some(_) = combinations else {
        record.outcome = if record.parity_shortcut {
            CaseOutcome::Excluded {
                reason: parity_reason(),
            }
        } else {
            CaseOutcome::Undecided {
                reason: "too many exponent combinations to search".to_string(),
            }
        };
        return Ok(record);
    };

    let run_exhaustive = record.assignment_count <= BigUint::from(EXHAUSTIVE_LIMIT);
    let mut weighted = [0u128; 2];
    let mut undecided: Option<String> = None;
    let mut completions: HashMap<(Vec<i64>, i64), Option<(RationalFunction, Polynomial)>> =
        HashMap::new();
    let mut success: Option<Case2Payload> = None;
    for_each_combination(&per_class, |counts| {
        let finite_sum: i64 = counts
            .iter()
            .zip(&sets)
            .map(|(c, set)| c.iter().zip(set).map(|(&k, &e)| k as i64 * e).sum::<i64>())
            .sum();
        let weight = if run_exhaustive {
            counts
                .iter()
                .zip(classes)
                .map(|(c, class)| multinomial(class.root_count, c))
                .product()
        } else {
            0
        };
        for (slot, (formula, infinity)) in [
            (DFormula::Classic, &inf_classic),
            (DFormula::Summed, &inf_summed),
        ]
        .into_iter()
        .enumerate()
        {
            for &e_inf in infinity {
                let Some(d) = formula.degree(finite_sum, e_inf) else {
                    continue;
                };
                weighted[slot] += weight;
                if d < 0 {
                    continue;
                }
                let uniform_exponents: Option<Vec<i64>> = counts
                    .iter()
                    .zip(&sets)
                    .map(|(c, set)| {
                        let used: Vec<i64> = c
                            .iter()
                            .zip(set)
                            .filter(|(&k, _)| k > 0)
                            .map(|(_, &e)| e)
                            .collect();
                        (used.len() <= 1).then(|| used.first().copied().unwrap_or(2))
                    })
                    .collect();
                let mut candidate = Case2Candidate {
                    formula,
                    choices: counts
                        .iter()
                        .zip(&sets)
                        .map(|(c, set)| {
                            c.iter()
                                .zip(set)
                                .filter(|(&k, _)| k > 0)
                                .map(|(&k, &e)| ExponentCount {
                                    exponent: e.into(),
                                    count: k,
                                })
                                .collect()
                        })
                        .collect(),
                    e_infinity: e_inf,
                    d,
                    uniform: uniform_exponents.is_some(),
                    completed: false,
                };
                match uniform_exponents {
                    None => {
                        undecided.get_or_insert_with(|| {
                            "a candidate needs different exponents on roots of one class"
                                .to_string()
                        });
                    }
                    Some(_) if d as usize > COMPLETION_DEGREE_LIMIT => {
                        undecided.get_or_insert_with(|| {
                            format!("completion degree {d} exceeds the search limit")
                        });
                    }
                    Some(exps) => {
                        let found = completions
                            .entry((exps.clone(), d))
                            .or_insert_with(|| {
                                let theta = theta_for(profile, &exps);
                                monic_polynomial_solution(
                                    &auxiliary_operator(r, &theta),
                                    d as usize,
                                )
                                .map(|p| (theta, p))
                            })
                            .clone();
                        if let Some((theta, polynomial)) = found {
                            candidate.completed = true;
                            success = Some(Case2Payload {
                                formula,
                                exponents: exps,
                                e_infinity: e_inf,
                                d,
                                theta,
                                polynomial,
                            });
                        }
                    }
                }
                record.candidates.push(candidate);
                if success.is_some() {
                    return false;
                }
            }
        }
        true
    });

    if success.is_none() && record.parity_shortcut && !record.candidates.is_empty() {
        return Err(InvariantViolation(
            "parity shortcut contradicts the exponent search".to_string(),
        ));
    }

    if run_exhaustive && success.is_none() {
        let exhaustive = exhaustive_count(
            &sets,
            classes.iter().map(|c| c.root_count),
            &inf_summed,
            &inf_classic,
        );
        if u128::from(exhaustive.integer_d_classic) != weighted[0]
            || u128::from(exhaustive.integer_d_summed) != weighted[1]
        {
            return Err(InvariantViolation(format!(
                "root-level enumeration {exhaustive:?} disagrees with the class search {weighted:?}"
            )));
        }
        if record.parity_shortcut
            && (exhaustive.integer_d_summed != 0 || exhaustive.integer_d_classic != 0)
        {
            return Err(InvariantViolation(
                "parity shortcut contradicts the root-level enumeration".to_string(),
            ));
        }
        record.exhaustive = Some(exhaustive);
    }

    record.outcome = match (success, undecided) {
        (Some(payload), _) => {
            if !case2_identity_holds(r, &payload.theta, &payload.polynomial) {
                return Err(InvariantViolation(
                    "case 2 payload fails its identity".to_string(),
                ));
            }
            CaseOutcome::Success(payload)
        }
        (None, _) if record.parity_shortcut => CaseOutcome::Excluded {
            reason: parity_reason(),
        },
        (None, Some(reason)) => CaseOutcome::Undecided { reason },
        (None, None) => CaseOutcome::Excluded {
            reason: if record.candidates.is_empty() {
                "no exponent assignment gives a nonnegative integer d".to_string()
            } else {
                "no candidate admits a polynomial completion".to_string()
            },
        },
    };
    Ok(record)
}

fn parity_reason() -> String {
    "parity: every exponent sum is odd, so d is never an integer under either formula".to_string()
}

/// Walks every root-level assignment and counts integer degrees under both formulas.
fn exhaustive_count(
    sets: &[Vec<i64>],
    root_counts: impl Iterator<Item = usize>,
    inf_summed: &[i64],
    inf_classic: &[i64],
) -> ExhaustiveRecord {
    let slots: Vec<&Vec<i64>> = sets
        .iter()
        .zip(root_counts)
        .flat_map(|(set, k)| std::iter::repeat(set).take(k))
        .collect();
    let mut index = vec![0usize; slots.len()];
    let mut record = ExhaustiveRecord {
        assignments: 0,
        integer_d_summed: 0,
        integer_d_classic: 0,
    };
    if slots.iter().any(|s| s.is_empty()) {
        return record;
    }
    loop {
        let sum: i64 = slots.iter().zip(&index).map(|(set, &i)| set[i]).sum();
        record.assignments += 1;
        record.integer_d_classic += inf_classic
            .iter()
            .filter(|&&e| DFormula::Classic.degree(sum, e).is_some())
            .count() as u64;
        record.integer_d_summed += inf_summed
            .iter()
            .filter(|&&e| DFormula::Summed.degree(sum, e).is_some())
            .count() as u64;
        let mut k = slots.len();
        loop {
            if k == 0 {
                return record;
            }
            k -= 1;
            index[k] += 1;
            if index[k] < slots[k].len() {
                break;
            }
            index[k] = 0;
        }
    }
}

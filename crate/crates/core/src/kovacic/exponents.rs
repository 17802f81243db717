//! Case 2 exponent sets at the finite poles and at infinity.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::profile::{infinity_coefficient, InfinityOrder, PoleClass, SingularityProfile};
use super::string_number;
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;
use crate::scalar::{rational_sqrt, RationalScalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassExponents {
    pub factor: Polynomial,
    #[serde(with = "string_number::vec")]
    pub values: Vec<i64>,
    /// Set when the class cannot be trusted to carry one exponent set on all its roots.
    pub undecided: Option<String>,
}

/// `E_c` per pole class (same order as the profile) and both conventions at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentData {
    pub per_class: Vec<ClassExponents>,
    /// Exponents for the sum that includes infinity, driven by `o_infinity_paper`.
    #[serde(with = "string_number::vec")]
    pub at_infinity_summed: Vec<i64>,
    /// Exponents for `d = (e_inf - sum e_c) / 2`, driven by `deg S - deg R`.
    #[serde(with = "string_number::vec")]
    pub at_infinity_classic: Vec<i64>,
}

/// `{2 - 2 delta, 2, 2 + 2 delta}` restricted to the integers; `{2}` for irrational `delta`.
fn double_pole_set(delta: Option<&RationalScalar>) -> Vec<i64> {
    let mut set = BTreeSet::from([2]);
    if let Some(delta) = delta {
        let two = RationalScalar::from_integer(2);
        for sign in [-1i64, 1] {
            let e = &two + &(&RationalScalar::from_integer(2 * sign) * delta);
            if let Some(v) = e.is_integer().then(|| e.to_i64()).flatten() {
                set.insert(v);
            }
        }
    }
    set.into_iter().collect()
}

fn class_set(class: &PoleClass) -> ClassExponents {
    let (values, undecided) = match class.order {
        1 => (vec![4], None),
        2 => {
            let note = (!class.resolved)
                .then(|| "double-pole class could not be split by its alpha values".to_string());
            (double_pole_set(class.rational_delta()), note)
        }
        o => (vec![o as i64], None),
    };
    ClassExponents {
        factor: class.factor.clone(),
        values,
        undecided,
    }
}

fn infinity_double_set(r: &RationalFunction) -> Vec<i64> {
    let b = infinity_coefficient(r).expect("order 2 at infinity");
    let delta = rational_sqrt(&(&RationalScalar::one() + &(&RationalScalar::from_integer(4) * &b)));
    double_pole_set(delta.as_ref())
}

pub fn case2_exponents(r: &RationalFunction, profile: &SingularityProfile) -> ExponentData {
    let per_class = profile.pole_classes.iter().map(class_set).collect();
    let at_infinity_classic = match profile.order_at_infinity {
        InfinityOrder::Finite(v) if v < 2 => vec![v],
        InfinityOrder::Finite(2) => infinity_double_set(r),
        _ => vec![0, 2, 4],
    };
    let at_infinity_summed = if profile.o_infinity_paper > 2 {
        vec![profile.o_infinity_paper]
    } else if profile.order_at_infinity == InfinityOrder::Finite(2) {
        infinity_double_set(r)
    } else {
        vec![0, 2, 4]
    };
    ExponentData {
        per_class,
        at_infinity_summed,
        at_infinity_classic,
    }
}

//! Necessary conditions for the three Liouvillian cases.

use serde::{Deserialize, Serialize};

use super::profile::{InfinityOrder, SingularityProfile};
use super::string_number;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseFilter {
    #[serde(with = "string_number::vec")]
    pub allowed: Vec<u8>,
    /// One line per excluded case.
    pub reasons: Vec<String>,
    /// Diagnostics that play no part in the decision.
    pub notes: Vec<String>,
}

impl CaseFilter {
    pub fn allows(&self, case: u8) -> bool {
        self.allowed.contains(&case)
    }
}

pub fn case_filter(profile: &SingularityProfile) -> CaseFilter {
    let orders: Vec<u32> = profile.pole_classes.iter().map(|c| c.order).collect();
    let infinity = profile.order_at_infinity;
    let mut allowed = Vec::new();
    let mut reasons = Vec::new();

    let bad_finite = orders.iter().find(|&&o| o > 2 && o % 2 == 1);
    let infinity_ok = match infinity {
        InfinityOrder::Infinite => true,
        InfinityOrder::Finite(v) => v % 2 == 0 || v > 2,
    };
    match (bad_finite, infinity_ok) {
        (Some(o), _) => reasons.push(format!("case 1 excluded: pole of odd order {o} > 2")),
        (None, false) => reasons.push(format!(
            "case 1 excluded: order at infinity {infinity} is odd and less than 2"
        )),
        (None, true) => allowed.push(1),
    }

    if orders.iter().any(|&o| o == 2 || (o > 2 && o % 2 == 1)) {
        allowed.push(2);
    } else if orders.is_empty() {
        reasons.push("case 2 excluded: no finite poles".to_string());
    } else {
        reasons.push("case 2 excluded: no pole of order 2 or of odd order > 2".to_string());
    }

    let high = orders.iter().copied().filter(|&o| o > 2).max();
    match high {
        Some(o) => reasons.push(format!("case 3 excluded: pole of order {o} > 2")),
        None if !infinity.exceeds(1) => reasons.push(format!(
            "case 3 excluded: order at infinity {infinity} is less than 2"
        )),
        None => allowed.push(3),
    }

    let mut notes = Vec::new();
    if orders.is_empty()
        && profile.order_at_infinity == InfinityOrder::Finite(-1)
        && profile.o_infinity_paper == 5
    {
        // r is a polynomial of degree 1: an Airy equation after an affine change of variable.
        notes.push("Airy equation: r is linear in z".to_string());
    }
    if profile.m_plus > 2 && allowed == [2] {
        notes.push("m+ > 2 leaves only case 2: L' = {2}, h(2) = 2".to_string());
    }
    CaseFilter {
        allowed,
        reasons,
        notes,
    }
}

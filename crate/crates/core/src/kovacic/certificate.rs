//! The full analysis record and its verdict.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::case1::{case1_search, Case1Payload};
use super::case2::{case2_search, Case2Record};
use super::exponents::{case2_exponents, ExponentData};
use super::filter::{case_filter, CaseFilter};
use super::profile::{singularity_profile, SingularityProfile};
use super::{string_number, CaseOutcome};
use crate::error::InvariantViolation;
use crate::nve::NveProblem;
use crate::ratfunc::RationalFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "Liouvillian-case-1")]
    LiouvillianCase1,
    #[serde(rename = "Liouvillian-case-2")]
    LiouvillianCase2,
    #[serde(rename = "case-3-possible-unresolved")]
    Case3PossibleUnresolved,
    SL2,
    #[serde(rename = "undecided")]
    Undecided,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::LiouvillianCase1 => "Liouvillian-case-1",
            Verdict::LiouvillianCase2 => "Liouvillian-case-2",
            Verdict::Case3PossibleUnresolved => "case-3-possible-unresolved",
            Verdict::SL2 => "SL2",
            Verdict::Undecided => "undecided",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verdict {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            Verdict::LiouvillianCase1,
            Verdict::LiouvillianCase2,
            Verdict::Case3PossibleUnresolved,
            Verdict::SL2,
            Verdict::Undecided,
        ]
        .into_iter()
        .find(|v| v.as_str() == s)
        .ok_or_else(|| format!("unknown verdict {s:?}"))
    }
}

/// Everything the analysis found, in a form that re-checks itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisCertificate {
    #[serde(with = "string_number::option")]
    pub parameter_n: Option<i64>,
    pub r: RationalFunction,
    #[serde(flatten)]
    pub profile: SingularityProfile,
    pub exponent_sets: Option<ExponentData>,
    pub case_filter: CaseFilter,
    pub case1: CaseOutcome<Case1Payload>,
    pub case2: Case2Record,
    pub verdict: Verdict,
    /// Why the verdict was reached, or why it could not be.
    pub verdict_reason: String,
    pub conclusion: Option<String>,
}

impl GaloisCertificate {
    /// Re-runs the exact checks on every success payload.
    pub fn payloads_validate(&self) -> bool {
        let case1 = self
            .case1
            .payload()
            .map_or(true, |p| super::case1::riccati_holds(&self.r, &p.omega));
        let case2 = self.case2.outcome.payload().map_or(true, |p| {
            super::case2::case2_identity_holds(&self.r, &p.theta, &p.polynomial)
        });
        case1 && case2
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("certificate serializes")
    }
}

fn morales_ramis_conclusion(n: i64) -> String {
    format!(
        "The normal variational equation along the rational solution at alpha = {n} has Galois group SL(2, C), \
         whose identity component is not abelian. By the Morales-Ramis theorem the Painleve II Hamiltonian \
         system at alpha = {n} admits no additional first integral meromorphic along that solution."
    )
}

/// Profile, case filter and case searches for `y'' = r y`.
///
/// `context` names the Painleve II parameter when `r` is its normal variational potential.
pub fn analyze(
    r: &RationalFunction,
    context: Option<&NveProblem>,
) -> Result<GaloisCertificate, InvariantViolation> {
    let profile = singularity_profile(r)?;
    let filter = case_filter(&profile);

    let case1 = if filter.allows(1) {
        case1_search(r, &profile)?
    } else {
        CaseOutcome::Filtered {
            reason: "excluded by the necessary conditions".to_string(),
        }
    };
    let (exponent_sets, case2) = if filter.allows(2) {
        let exps = case2_exponents(r, &profile);
        let record = case2_search(r, &profile, &exps)?;
        (Some(exps), record)
    } else {
        (
            None,
            Case2Record::filtered("excluded by the necessary conditions".to_string()),
        )
    };

    let (verdict, verdict_reason) = if case1.is_success() {
        (
            Verdict::LiouvillianCase1,
            "case 1 produced a validated rational Riccati solution".to_string(),
        )
    } else if case2.outcome.is_success() {
        (
            Verdict::LiouvillianCase2,
            "case 2 produced a validated completion".to_string(),
        )
    } else if let CaseOutcome::Undecided { reason } = &case1 {
        (Verdict::Undecided, format!("case 1: {reason}"))
    } else if let CaseOutcome::Undecided { reason } = &case2.outcome {
        (Verdict::Undecided, format!("case 2: {reason}"))
    } else if filter.allows(3) {
        (
            Verdict::Case3PossibleUnresolved,
            "case 3 survives the necessary conditions and is not searched".to_string(),
        )
    } else if filter.allowed.is_empty() {
        (
            Verdict::SL2,
            "no case survives the necessary conditions".to_string(),
        )
    } else {
        (
            Verdict::SL2,
            "every surviving case was excluded by search".to_string(),
        )
    };

    let conclusion = match (context, verdict) {
        (Some(problem), Verdict::SL2) => Some(morales_ramis_conclusion(problem.parameter_n)),
        _ => None,
    };
    let certificate = GaloisCertificate {
        parameter_n: context.map(|p| p.parameter_n),
        r: r.clone(),
        profile,
        exponent_sets,
        case_filter: filter,
        case1,
        case2,
        verdict,
        verdict_reason,
        conclusion,
    };
    if !certificate.payloads_validate() {
        return Err(InvariantViolation(
            "certificate payload failed re-validation".to_string(),
        ));
    }
    Ok(certificate)
}

/// [`analyze`] on a normal variational equation.
pub fn analyze_nve(problem: &NveProblem) -> Result<GaloisCertificate, InvariantViolation> {
    analyze(&problem.r, Some(problem))
}

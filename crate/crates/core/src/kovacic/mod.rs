//! Kovacic case analysis for `y'' = r y` with `r` in `Q(z)`.
//!
//! Pole data come from a squarefree decomposition of the denominator, so
//! roots are never extracted: a class is a squarefree factor whose roots share
//! an order (and, for double poles, a Laurent coefficient `alpha`).
//! Every positive answer carries a payload that is re-checked exactly.

mod case1;
mod case2;
mod certificate;
mod exponents;
mod filter;
mod profile;
mod split;

use serde::{Deserialize, Serialize};

use crate::scalar::RationalScalar;

pub use case1::{case1_search, riccati_holds, Case1Payload};
pub use case2::{
    case2_identity_holds, case2_search, Case2Candidate, Case2Payload, Case2Record, DFormula,
    ExhaustiveRecord,
};
pub use certificate::{analyze, analyze_nve, GaloisCertificate, Verdict};
pub use exponents::{case2_exponents, ClassExponents, ExponentData};
pub use filter::{case_filter, CaseFilter};
pub use profile::{
    alpha_certificate_holds, infinity_coefficient, laurent_alpha, singularity_profile, Delta,
    InfinityOrder, PoleClass, SingularityProfile,
};

/// Result of one constructive case search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum CaseOutcome<T> {
    /// Ruled out by the necessary conditions; no search was run.
    Filtered {
        reason: String,
    },
    Success(T),
    /// Searched exhaustively, nothing found.
    Excluded {
        reason: String,
    },
    Undecided {
        reason: String,
    },
}

impl<T> CaseOutcome<T> {
    pub fn is_success(&self) -> bool {
        matches!(self, CaseOutcome::Success(_))
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, CaseOutcome::Undecided { .. })
    }

    pub fn payload(&self) -> Option<&T> {
        match self {
            CaseOutcome::Success(payload) => Some(payload),
            _ => None,
        }
    }
}

/// How many roots of one class take each exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentCount {
    pub exponent: RationalScalar,
    #[serde(with = "string_number")]
    pub count: usize,
}

/// Upper bound on the number of per-class multiset combinations a search visits.
pub(crate) const COMBINATION_LIMIT: u64 = 200_000;

/// Largest polynomial degree a completion step will try to solve for.
pub(crate) const COMPLETION_DEGREE_LIMIT: usize = 256;

/// Every way to distribute `roots` roots over `choices` values, first value favoured first.
pub(crate) fn distributions(choices: usize, roots: usize) -> Vec<Vec<usize>> {
    fn go(choices: usize, roots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() + 1 == choices {
            prefix.push(roots);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for take in (0..=roots).rev() {
            prefix.push(take);
            go(choices, roots - take, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if choices == 0 {
        if roots == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(choices, roots, &mut Vec::new(), &mut out);
    out
}

/// Number of multisets of size `roots` over `choices` values, saturating.
pub(crate) fn distribution_count(choices: usize, roots: usize) -> u64 {
    if choices == 0 {
        return u64::from(roots == 0);
    }
    // C(roots + choices - 1, choices - 1)
    let k = (choices - 1) as u128;
    let n = (roots + choices - 1) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Calls `visit` with one distribution per class, in odometer order (first class slowest).
pub(crate) fn for_each_combination(
    per_class: &[Vec<Vec<usize>>],
    mut visit: impl FnMut(&[&Vec<usize>]) -> bool,
) {
    if per_class.iter().any(Vec::is_empty) {
        return;
    }
    let mut index = vec![0usize; per_class.len()];
    loop {
        let current: Vec<&Vec<usize>> = index.iter().zip(per_class).map(|(&i, d)| &d[i]).collect();
        if !visit(&current) {
            return;
        }
        let mut k = per_class.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            index[k] += 1;
            if index[k] < per_class[k].len() {
                break;
            }
            index[k] = 0;
        }
    }
}

/// Serde adapter writing numbers as decimal strings.
pub(crate) mod string_number {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(
        value: &T,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }

    pub fn deserialize<'de, T, D>(deserializer: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<T: Display, S: Serializer>(
            value: &Option<T>,
            serializer: S,
        ) -> Result<S::Ok, S::Error> {
            match value {
                Some(v) => serializer.collect_str(v),
                None => serializer.serialize_none(),
            }
        }

        pub fn deserialize<'de, T, D>(deserializer: D) -> Result<Option<T>, D::Error>
        where
            T: FromStr,
            T::Err: Display,
            D: Deserializer<'de>,
        {
            let s = Option::<String>::deserialize(deserializer)?;
            s.map(|s| s.parse().map_err(de::Error::custom)).transpose()
        }
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<T: Display, S: Serializer>(
            values: &[T],
            serializer: S,
        ) -> Result<S::Ok, S::Error> {
            let mut seq = serializer.serialize_seq(Some(values.len()))?;
            for v in values {
                seq.serialize_element(&v.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, T, D>(deserializer: D) -> Result<Vec<T>, D::Error>
        where
            T: FromStr,
            T::Err: Display,
            D: Deserializer<'de>,
        {
            Vec::<String>::deserialize(deserializer)?
                .into_iter()
                .map(|s| s.parse().map_err(de::Error::custom))
                .collect()
        }
    }
}

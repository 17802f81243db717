//! Pole structure of `r = R / S` and the Laurent data the case analysis needs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::split::split_by_value;
use super::string_number;
use crate::error::AlgebraError;
use crate::poly::{exact_divide, squarefree_decomposition, Polynomial};
use crate::quotient::{ratio_mod, ClassValue};
use crate::ratfunc::RationalFunction;
use crate::scalar::{rational_sqrt, RationalScalar};

/// Order of `r` at infinity, `deg S - deg R`; infinite for `r = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InfinityOrder {
    Finite(i64),
    Infinite,
}

impl InfinityOrder {
    pub fn finite(self) -> Option<i64> {
        match self {
            InfinityOrder::Finite(v) => Some(v),
            InfinityOrder::Infinite => None,
        }
    }

    pub fn exceeds(self, bound: i64) -> bool {
        match self {
            InfinityOrder::Finite(v) => v > bound,
            InfinityOrder::Infinite => true,
        }
    }
}

impl fmt::Display for InfinityOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfinityOrder::Finite(v) => write!(f, "{v}"),
            InfinityOrder::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for InfinityOrder {
    type Err = std::num::ParseIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            Ok(InfinityOrder::Infinite)
        } else {
            s.parse().map(InfinityOrder::Finite)
        }
    }
}

/// `sqrt(1 + 4 alpha)` at a double pole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Delta {
    Rational(RationalScalar),
    Irrational,
}

impl Delta {
    pub fn from_alpha(alpha: &ClassValue) -> Delta {
        match alpha {
            ClassValue::Rational(a) => {
                match rational_sqrt(
                    &(&RationalScalar::one() + &(&RationalScalar::from_integer(4) * a)),
                ) {
                    Some(d) => Delta::Rational(d),
                    None => Delta::Irrational,
                }
            }
            ClassValue::Residue(_) => Delta::Irrational,
        }
    }

    pub fn as_rational(&self) -> Option<&RationalScalar> {
        match self {
            Delta::Rational(d) => Some(d),
            Delta::Irrational => None,
        }
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delta::Rational(d) => write!(f, "{d}"),
            Delta::Irrational => f.write_str("irrational"),
        }
    }
}

impl FromStr for Delta {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "irrational" {
            Ok(Delta::Irrational)
        } else {
            s.parse().map(Delta::Rational)
        }
    }
}

/// All roots of a squarefree factor of `S` sharing one pole order.
///
/// Double-pole classes are further split so that `alpha` is one rational
/// number on each class whenever the values are rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleClass {
    pub factor: Polynomial,
    #[serde(with = "string_number")]
    pub order: u32,
    #[serde(with = "string_number")]
    pub root_count: usize,
    /// Leading Laurent coefficient: of `(z - c)^-2` at double poles, the residue at simple poles.
    pub alpha: Option<ClassValue>,
    /// Coefficient of `(z - c)^-1` at double poles.
    pub beta: Option<ClassValue>,
    #[serde(with = "string_number::option")]
    pub delta: Option<Delta>,
    /// False when the split of a double-pole factor by `alpha` could not be completed.
    pub resolved: bool,
}

impl PoleClass {
    pub fn rational_alpha(&self) -> Option<&RationalScalar> {
        self.alpha.as_ref().and_then(ClassValue::as_rational)
    }

    pub fn rational_delta(&self) -> Option<&RationalScalar> {
        self.delta.as_ref().and_then(Delta::as_rational)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityProfile {
    pub pole_classes: Vec<PoleClass>,
    /// `max(0, 4 + deg R - deg S)`.
    #[serde(with = "string_number")]
    pub o_infinity_paper: i64,
    /// `deg S - deg R`; drives the case filter.
    #[serde(with = "string_number")]
    pub order_at_infinity: InfinityOrder,
    #[serde(with = "string_number")]
    pub m_plus: i64,
    #[serde(with = "string_number")]
    pub gamma: i64,
}

impl SingularityProfile {
    /// Number of points of each order, infinity counted with `o_infinity_paper`.
    pub fn gamma_counts(&self) -> BTreeMap<i64, u64> {
        let mut counts = BTreeMap::new();
        for class in &self.pole_classes {
            *counts.entry(class.order as i64).or_insert(0) += class.root_count as u64;
        }
        if self.o_infinity_paper > 0 {
            *counts.entry(self.o_infinity_paper).or_insert(0) += 1;
        }
        counts
    }

    /// Total number of finite poles.
    pub fn finite_pole_count(&self) -> usize {
        self.pole_classes.iter().map(|c| c.root_count).sum()
    }
}

fn gamma_of(counts: &BTreeMap<i64, u64>, m_plus: i64) -> i64 {
    let double = counts.get(&2).copied().unwrap_or(0);
    let odd: u64 = counts
        .iter()
        .filter(|(&k, _)| k >= 3 && k <= m_plus && k % 2 == 1)
        .map(|(_, &c)| c)
        .sum();
    (double + odd) as i64
}

/// Numerator and denominator polynomials whose ratio mod `g` is `alpha` and `beta`
/// at the double poles given by `g`, where `S = g^2 U`.
fn double_pole_parts(
    r_num: &Polynomial,
    g: &Polynomial,
    u: &Polynomial,
) -> ((Polynomial, Polynomial), (Polynomial, Polynomial)) {
    let dg = g.derivative();
    let ddg = dg.derivative();
    let alpha = (r_num.clone(), &dg.pow(2) * u);
    // beta = ((R'U - RU') g' - R U g'') / (U^2 g'^3)
    let beta_num = &(&(&(&r_num.derivative() * u) - &(r_num * &u.derivative())) * &dg)
        - &(&(r_num * u) * &ddg);
    let beta_den = &u.pow(2) * &dg.pow(3);
    (alpha, (beta_num, beta_den))
}

/// Pole classes, both infinity conventions and the gamma bookkeeping for nonzero or zero `r`.
pub fn singularity_profile(r: &RationalFunction) -> Result<SingularityProfile, AlgebraError> {
    let s = r.denominator();
    let big_r = r.numerator();
    let mut pole_classes = Vec::new();
    for (g, order) in squarefree_decomposition(s)? {
        let u = exact_divide(s, &g.pow(order))?;
        match order {
            2 => {
                let ((an, ad), (bn, bd)) = double_pole_parts(big_r, &g, &u);
                for piece in split_by_value(&an, &ad, &g)? {
                    let beta = ratio_mod(&bn, &bd, &piece.factor)?;
                    let delta = Delta::from_alpha(&piece.value);
                    pole_classes.push(PoleClass {
                        root_count: piece.factor.degree_or_zero(),
                        factor: piece.factor,
                        order,
                        alpha: Some(piece.value),
                        beta: Some(beta),
                        delta: Some(delta),
                        resolved: piece.resolved,
                    });
                }
            }
            1 => {
                let residue = ratio_mod(big_r, &(&g.derivative() * &u), &g)?;
                pole_classes.push(PoleClass {
                    root_count: g.degree_or_zero(),
                    factor: g,
                    order,
                    alpha: Some(residue),
                    beta: None,
                    delta: None,
                    resolved: true,
                });
            }
            _ => pole_classes.push(PoleClass {
                root_count: g.degree_or_zero(),
                factor: g,
                order,
                alpha: None,
                beta: None,
                delta: None,
                resolved: true,
            }),
        }
    }
    let (order_at_infinity, o_infinity_paper) = match big_r.degree() {
        None => (InfinityOrder::Infinite, 0),
        Some(deg_r) => {
            let v = s.degree_or_zero() as i64 - deg_r as i64;
            (InfinityOrder::Finite(v), (4 - v).max(0))
        }
    };
    let m_plus = pole_classes
        .iter()
        .map(|c| c.order as i64)
        .chain(std::iter::once(o_infinity_paper))
        .max()
        .unwrap_or(0);
    let mut profile = SingularityProfile {
        pole_classes,
        o_infinity_paper,
        order_at_infinity,
        m_plus,
        gamma: 0,
    };
    profile.gamma = gamma_of(&profile.gamma_counts(), m_plus);
    Ok(profile)
}

/// `alpha` of a double-pole class, recomputed from `r`.
pub fn laurent_alpha(r: &RationalFunction, class: &PoleClass) -> Result<ClassValue, AlgebraError> {
    if class.order != 2 {
        return Err(AlgebraError::Parse(format!(
            "Laurent alpha needs a double pole, class has order {}",
            class.order
        )));
    }
    let s = r.denominator();
    let g = &class.factor;
    let u = exact_divide(s, &g.pow(2))?;
    let ((an, ad), _) = double_pole_parts(r.numerator(), g, &u);
    ratio_mod(&an, &ad, g)
}

/// Divisibility certificate for a rational `alpha`: `factor | R - alpha (factor')^2 U`.
pub fn alpha_certificate_holds(r: &RationalFunction, class: &PoleClass) -> bool {
    let Some(alpha) = class.rational_alpha() else {
        return false;
    };
    let s = r.denominator();
    let g = &class.factor;
    let Ok(u) = exact_divide(s, &g.pow(2)) else {
        return false;
    };
    let target = r.numerator() - &(&g.derivative().pow(2) * &u).scale(alpha);
    target.is_divisible_by(g)
}

/// `lim z^2 r(z)` at infinity, defined when `deg S - deg R = 2`.
pub fn infinity_coefficient(r: &RationalFunction) -> Option<RationalScalar> {
    let v = r.denominator().degree()? as i64 - r.numerator().degree()? as i64;
    (v == 2).then(|| &r.numerator().leading_coefficient() / &r.denominator().leading_coefficient())
}

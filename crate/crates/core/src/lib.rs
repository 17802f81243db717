//! Exact symbolic toolkit for the rational Painleve II hierarchy.
//!
//! The crate builds the Vorobev-Yablonski polynomials and the rational
//! solutions `w(z, n)`, derives the normal variational equation
//! `xi'' = (6 w^2 + z) xi` along the corresponding particular solution of the
//! Painleve II Hamiltonian system, and runs a Kovacic case analysis on it. The
//! analyzer accepts any `y'' = r y` with `r` in `Q(z)` and produces a
//! self-validating [`GaloisCertificate`].

pub mod error;
pub mod expr;
mod gcd;
pub mod integrate;
pub mod kovacic;
mod linalg;
pub mod nve;
pub mod painleve;
pub mod poly;
pub mod quotient;
pub mod ratfunc;
pub mod scalar;

pub use error::{AlgebraError, InvariantViolation};
pub use expr::{format_polynomial, format_rational, parse_rational_expression, ExprError};
pub use integrate::integrate_rational;
pub use kovacic::{
    analyze, analyze_nve, case1_search, case2_exponents, case2_search, case_filter, laurent_alpha,
    singularity_profile, GaloisCertificate, PoleClass, SingularityProfile, Verdict,
};
pub use nve::{nve_potential, particular_solution, reduction_identity_check, NveProblem};
pub use painleve::{rational_solution, vy_polynomial, RationalPiiSolution, VorobevYablonskiTable};
pub use poly::{exact_divide, poly_gcd, squarefree_decomposition, Polynomial};
pub use quotient::{quotient_invert, quotient_reduce, ClassValue, QuotientRingElement};
pub use ratfunc::RationalFunction;
pub use scalar::{rational_sqrt, RationalScalar};

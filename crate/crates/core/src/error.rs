use thiserror::Error;

use crate::poly::Polynomial;

/// Failures of the exact-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("{0} of the zero polynomial is undefined")]
    ZeroPolynomial(&'static str),
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: Polynomial },
    #[error("modulus {0} must be squarefree of degree at least 1")]
    BadModulus(Polynomial),
    #[error("not invertible: shares factor {gcd} with the modulus")]
    NotInvertible { gcd: Polynomial },
    #[error("antiderivative is not rational: nonzero residues at the roots of {factor}")]
    NonRationalAntiderivative { factor: Polynomial },
    #[error("moduli differ")]
    ModulusMismatch,
    #[error("{0}")]
    Parse(String),
}

/// An identity that holds by theorem failed; always indicates a bug or corrupted input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("internal invariant violated: {0}")]
pub struct InvariantViolation(pub String);

impl From<AlgebraError> for InvariantViolation {
    fn from(err: AlgebraError) -> Self {
        InvariantViolation(err.to_string())
    }
}

//! The extended Painleve II Hamiltonian system and its normal variational equation.
//!
//! With `H = p^2/2 + F - (q^2 + z/2) p - (alpha + 1/2) q` on `(q, p, z, F)`,
//! Hamilton's equations read
//!
//! ```text
//! q' = p - q^2 - z/2     p' = 2 q p + alpha + 1/2     z' = 1     F' = p/2
//! ```
//!
//! Along `q = w(z, n)`, `p = w' + w^2 + z/2` (with `z = s`) the variational
//! system decouples and its upper-left block reduces to `xi'' = (6 w^2 + z) xi`.

use thiserror::Error;

use crate::error::{AlgebraError, InvariantViolation};
use crate::integrate::integrate_rational;
use crate::painleve::{HierarchyError, VorobevYablonskiTable};
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;
use crate::scalar::RationalScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NveError {
    #[error(transparent)]
    Hierarchy(#[from] HierarchyError),
    /// `p` has a residue, so `F = (1/2) \int p` would not be rational.
    #[error("p(z) has nonzero residues at the roots of {factor}; F is not rational")]
    ResidueObstruction { factor: Polynomial },
    #[error(transparent)]
    Invariant(#[from] InvariantViolation),
}

fn half() -> RationalScalar {
    RationalScalar::new(1, 2)
}

/// Evaluates the extended Hamiltonian symbolically.
pub fn hamiltonian_value(
    q: &RationalFunction,
    p: &RationalFunction,
    z: &RationalFunction,
    f: &RationalFunction,
    alpha: &RationalScalar,
) -> RationalFunction {
    let kinetic = p.pow(2).scale(&half());
    let coupling = &(&q.pow(2) + &z.scale(&half())) * p;
    let linear = q.scale(&(alpha + &half()));
    &(&(&kinetic + f) - &coupling) - &linear
}

/// The particular solution `(q, p, z, F)` at parameter `alpha = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParticularSolution {
    pub parameter_n: i64,
    pub q: RationalFunction,
    pub p: RationalFunction,
    pub z: RationalFunction,
    pub f: RationalFunction,
    /// The (constant) value of the Hamiltonian along the solution.
    pub hamiltonian: RationalScalar,
}

impl ParticularSolution {
    pub fn alpha(&self) -> RationalScalar {
        RationalScalar::from_integer(self.parameter_n)
    }

    /// Residuals of the four Hamilton equations, in the order `q', p', z', F'`.
    pub fn hamilton_residuals(&self) -> [RationalFunction; 4] {
        let one = RationalFunction::one();
        let dq = &self.q.derivative() - &(&(&self.p - &self.q.pow(2)) - &self.z.scale(&half()));
        let dp = &self.p.derivative()
            - &(&(&self.q * &self.p).scale(&2.into())
                + &RationalFunction::constant(&self.alpha() + &half()));
        let dz = &self.z.derivative() - &one;
        let df = &self.f.derivative() - &self.p.scale(&half());
        [dq, dp, dz, df]
    }
}

/// Builds and verifies the particular solution for parameter `n`.
pub fn particular_solution(
    n: i64,
    table: &mut VorobevYablonskiTable,
) -> Result<ParticularSolution, NveError> {
    let w = table.rational_solution(n)?.w;
    let z = RationalFunction::z();
    let p = &(&w.derivative() + &w.pow(2)) + &z.scale(&half());
    let f = match integrate_rational(&p) {
        Ok(antiderivative) => antiderivative.scale(&half()),
        Err(AlgebraError::NonRationalAntiderivative { factor }) => {
            return Err(NveError::ResidueObstruction { factor })
        }
        Err(err) => return Err(InvariantViolation::from(err).into()),
    };
    let alpha = RationalScalar::from_integer(n);
    let h = hamiltonian_value(&w, &p, &z, &f, &alpha);
    let hamiltonian = h.as_constant().ok_or_else(|| {
        InvariantViolation(format!(
            "Hamiltonian is not constant along the solution for n = {n}: {h}"
        ))
    })?;
    let solution = ParticularSolution {
        parameter_n: n,
        q: w,
        p,
        z,
        f,
        hamiltonian,
    };
    if let Some((k, r)) = solution
        .hamilton_residuals()
        .iter()
        .enumerate()
        .find(|(_, r)| !r.is_zero())
    {
        return Err(InvariantViolation(format!(
            "Hamilton equation {} fails for n = {n}: residual {r}",
            ["q'", "p'", "z'", "F'"][k]
        ))
        .into());
    }
    Ok(solution)
}

/// Coefficient matrix of the variational equations in `(xi1, eta1, xi2, eta2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariationalSystem {
    pub matrix: [[RationalFunction; 4]; 4],
    pub nve_block: [[RationalFunction; 2]; 2],
}

/// Jacobian of the Hamiltonian vector field along the particular solution.
///
/// Rows are `d/dx` of `(q', p', z', F')` with `x` running over `(q, p, z, F)`.
pub fn variational_system(solution: &ParticularSolution) -> VariationalSystem {
    let zero = RationalFunction::zero;
    let q = &solution.q;
    let p = &solution.p;
    let two = RationalScalar::from_integer(2);
    let matrix = [
        [
            q.scale(&-two.clone()),
            RationalFunction::one(),
            RationalFunction::constant(-half()),
            zero(),
        ],
        [p.scale(&two), q.scale(&two), zero(), zero()],
        [zero(), zero(), zero(), zero()],
        [zero(), RationalFunction::constant(half()), zero(), zero()],
    ];
    let nve_block = [
        [matrix[0][0].clone(), matrix[0][1].clone()],
        [matrix[1][0].clone(), matrix[1][1].clone()],
    ];
    VariationalSystem { matrix, nve_block }
}

/// Eliminates `eta` from `xi' = a xi + e eta`, `eta' = b xi + d eta`.
///
/// Returns `(c1, c0)` with `xi'' = c1 xi' + c0 xi`; fails when `e = 0`.
pub fn eliminate_block(
    block: &[[RationalFunction; 2]; 2],
) -> Result<(RationalFunction, RationalFunction), AlgebraError> {
    let [[a, e], [b, d]] = block;
    let log_e = e.derivative().checked_div(e)?;
    let c1 = &(a + d) + &log_e;
    let c0 = &(&a.derivative() + &(e * b)) - &(a * &(&log_e + d));
    Ok((c1, c0))
}

/// `y'' = r y` with `r = R / S` in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NveProblem {
    pub parameter_n: i64,
    pub r: RationalFunction,
}

impl NveProblem {
    pub fn numerator_r(&self) -> &Polynomial {
        self.r.numerator()
    }

    pub fn denominator_s(&self) -> &Polynomial {
        self.r.denominator()
    }
}

/// `r(z) = 6 w(z, n)^2 + z`, with the degree pattern `(2n^2 + 1, 2n^2)` checked for `n != 0`.
pub fn nve_potential(n: i64, table: &mut VorobevYablonskiTable) -> Result<NveProblem, NveError> {
    let w = table.rational_solution(n)?.w;
    let r = &w.pow(2).scale(&6.into()) + &RationalFunction::z();
    let problem = NveProblem { parameter_n: n, r };
    if n != 0 {
        let m = n.unsigned_abs() as usize;
        let expected = (2 * m * m + 1, 2 * m * m);
        let actual = (
            problem.numerator_r().degree_or_zero(),
            problem.denominator_s().degree_or_zero(),
        );
        if actual != expected {
            return Err(InvariantViolation(format!(
                "deg R, deg S = {actual:?} for n = {n}, expected {expected:?}"
            ))
            .into());
        }
    }
    Ok(problem)
}

/// Checks that eliminating `eta1` from the NVE block gives `xi'' = (6 w^2 + z) xi`.
///
/// Both the vanishing first-derivative coefficient and `-2w' + 2p + 4w^2 = 6w^2 + z` are required.
pub fn reduction_identity_check(
    n: i64,
    table: &mut VorobevYablonskiTable,
) -> Result<bool, NveError> {
    let solution = particular_solution(n, table)?;
    let system = variational_system(&solution);
    let (c1, c0) = eliminate_block(&system.nve_block).map_err(InvariantViolation::from)?;
    let w = &solution.q;
    let target = &w.pow(2).scale(&6.into()) + &RationalFunction::z();
    Ok(c1.is_zero() && c0 == target)
}

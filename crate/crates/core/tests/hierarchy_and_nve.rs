use painleve_core::nve::{hamiltonian_value, variational_system};
use painleve_core::painleve::{backlund_step, pii_residual};
use painleve_core::{
    nve_potential, parse_rational_expression, particular_solution, rational_solution,
    reduction_identity_check, vy_polynomial, Polynomial, RationalFunction, RationalScalar,
    VorobevYablonskiTable,
};

fn e(s: &str) -> RationalFunction {
    parse_rational_expression(s).unwrap()
}

#[test]
fn table_entries_keep_their_invariants() {
    let mut table = VorobevYablonskiTable::new(12);
    for n in 0..=12 {
        let report = table.entry_report(n).unwrap();
        assert!(report.holds(), "{report:?}");
    }
    assert_eq!(
        vy_polynomial(4, &mut table).unwrap().to_string(),
        "z^6 + 20*z^3 - 80"
    );
}

#[test]
fn rational_solutions_solve_pii_and_follow_backlund() {
    let mut table = VorobevYablonskiTable::default();
    let mut w = RationalFunction::zero();
    for n in 0..=10i64 {
        let solution = table.rational_solution(n).unwrap();
        assert_eq!(solution.w, w, "n = {n}");
        assert!(pii_residual(&solution.w, &RationalScalar::from_integer(n)).is_zero());
        let negative = table.rational_solution(-n).unwrap();
        assert!(pii_residual(&negative.w, &RationalScalar::from_integer(-n)).is_zero());
        w = backlund_step(&w, n as u64).unwrap();
    }
}

#[test]
fn fresh_table_agrees_with_shared_table() {
    let mut table = VorobevYablonskiTable::default();
    for n in [-4i64, 3, 7] {
        assert_eq!(
            rational_solution(n).unwrap(),
            table.rational_solution(n).unwrap()
        );
    }
}

#[test]
fn particular_solutions_are_exact() {
    let mut table = VorobevYablonskiTable::default();
    for n in -3..=8i64 {
        let sol = particular_solution(n, &mut table).unwrap();
        assert!(
            sol.hamilton_residuals()
                .iter()
                .all(RationalFunction::is_zero),
            "n = {n}"
        );
        let h = hamiltonian_value(
            &sol.q,
            &sol.p,
            &sol.z,
            &sol.f,
            &RationalScalar::from_integer(n),
        );
        assert_eq!(h.as_constant(), Some(sol.hamiltonian.clone()));
        assert!(reduction_identity_check(n, &mut table).unwrap());
    }
}

#[test]
fn variational_block_matches_the_linearization() {
    let mut table = VorobevYablonskiTable::default();
    let sol = particular_solution(1, &mut table).unwrap();
    let system = variational_system(&sol);
    assert_eq!(
        system.nve_block[0][0],
        (&sol.q * &RationalFunction::from(-2))
    );
    assert_eq!(system.nve_block[0][1], RationalFunction::one());
    assert_eq!(
        system.nve_block[1][0],
        sol.p.scale(&RationalScalar::from_integer(2))
    );
    assert_eq!(
        system.nve_block[1][1],
        sol.q.scale(&RationalScalar::from_integer(2))
    );
}

#[test]
fn potentials() {
    let mut table = VorobevYablonskiTable::default();
    assert_eq!(
        nve_potential(0, &mut table).unwrap().r,
        RationalFunction::z()
    );
    assert_eq!(nve_potential(1, &mut table).unwrap().r, e("6/z^2 + z"));
    assert_eq!(nve_potential(-1, &mut table).unwrap().r, e("6/z^2 + z"));
    // Frozen from an independent sympy computation.
    assert_eq!(
        nve_potential(3, &mut table).unwrap().r,
        e(
            "(z^19 + 102*z^16 + 1440*z^13 + 20096*z^10 + 122880*z^7 + 1382400*z^4 + 102400*z)\
           /(z^18 + 48*z^15 + 576*z^12 - 640*z^9 - 15360*z^6 + 102400)"
        )
    );
    for n in 1..=8i64 {
        let problem = nve_potential(n, &mut table).unwrap();
        let m = (n * n) as usize;
        assert_eq!(problem.numerator_r().degree(), Some(2 * m + 1));
        assert_eq!(problem.denominator_s().degree(), Some(2 * m));
        let qs = vy_polynomial(n as usize, &mut table).unwrap()
            * vy_polynomial(n as usize + 1, &mut table).unwrap();
        assert_eq!(problem.denominator_s(), &qs.pow(2));
    }
}

#[test]
fn limit_exceeded_is_reported() {
    let mut table = VorobevYablonskiTable::new(3);
    assert!(nve_potential(4, &mut table).is_err());
    assert_eq!(vy_polynomial(2, &mut table).unwrap(), Polynomial::z());
}

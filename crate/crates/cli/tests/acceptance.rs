//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use painleve_cli::run_with;
use painleve_core::kovacic::{
    alpha_certificate_holds, case2_identity_holds, riccati_holds, CaseOutcome, DFormula, Delta,
    InfinityOrder,
};
use painleve_core::painleve::{backlund_step, pii_residual};
use painleve_core::{
    analyze, analyze_nve, case_filter, format_rational, laurent_alpha, nve_potential,
    parse_rational_expression, particular_solution, reduction_identity_check, singularity_profile,
    vy_polynomial, ClassValue, Polynomial, RationalFunction, RationalScalar, Verdict,
    VorobevYablonskiTable,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

fn e(s: &str) -> RationalFunction {
    parse_rational_expression(s).unwrap()
}

fn hierarchy_reproduction() {
    let mut t = VorobevYablonskiTable::default();
    let expected = [
        Polynomial::one(),
        Polynomial::one(),
        Polynomial::z(),
        Polynomial::from_i64s(&[4, 0, 0, 1]),
        Polynomial::from_i64s(&[-80, 0, 0, 20, 0, 0, 1]),
    ];
    for (n, q) in expected.iter().enumerate() {
        assert_eq!(&vy_polynomial(n, &mut t).unwrap(), q, "Q_{n}");
    }
    for n in 0..=10 {
        let report = t.entry_report(n).unwrap();
        assert!(report.holds(), "{report:?}");
    }
}

fn rational_solutions() {
    let mut t = VorobevYablonskiTable::default();
    assert_eq!(t.rational_solution(1).unwrap().w, e("-1/z"));
    assert_eq!(
        t.rational_solution(2).unwrap().w,
        e("1/z - 3*z^2/(z^3 + 4)")
    );
    assert_eq!(
        t.rational_solution(3).unwrap().w,
        e("3*z^2/(z^3 + 4) - (6*z^5 + 60*z^2)/(z^6 + 20*z^3 - 80)")
    );
    let mut iterated = RationalFunction::zero();
    for n in 0..=10i64 {
        let w = t.rational_solution(n).unwrap().w;
        assert!(
            pii_residual(&w, &RationalScalar::from_integer(n)).is_zero(),
            "residual at n = {n}"
        );
        assert_eq!(w, iterated, "Backlund chain at n = {n}");
        iterated = backlund_step(&iterated, n as u64).unwrap();
    }
}

fn nve_correctness() {
    let mut t = VorobevYablonskiTable::default();
    assert_eq!(nve_potential(0, &mut t).unwrap().r, RationalFunction::z());
    for n in 0..=8i64 {
        assert!(
            reduction_identity_check(n, &mut t).unwrap(),
            "reduction at n = {n}"
        );
        let sol = particular_solution(n, &mut t).unwrap();
        assert!(
            sol.hamilton_residuals()
                .iter()
                .all(RationalFunction::is_zero),
            "Hamilton equations at n = {n}"
        );
        if n > 0 {
            let problem = nve_potential(n, &mut t).unwrap();
            let m = (n * n) as usize;
            assert_eq!(
                (
                    problem.numerator_r().degree(),
                    problem.denominator_s().degree()
                ),
                (Some(2 * m + 1), Some(2 * m))
            );
        }
    }
}

fn pole_and_exponent_data() {
    let mut t = VorobevYablonskiTable::default();
    for n in 1..=8i64 {
        let problem = nve_potential(n, &mut t).unwrap();
        let profile = singularity_profile(&problem.r).unwrap();
        for class in &profile.pole_classes {
            assert_eq!(class.order, 2);
            assert_eq!(
                laurent_alpha(&problem.r, class).unwrap(),
                ClassValue::Rational(6.into())
            );
            assert!(alpha_certificate_holds(&problem.r, class));
            assert_eq!(class.delta, Some(Delta::Rational(5.into())));
        }
        assert_eq!(profile.o_infinity_paper, 5);
        assert_eq!(profile.order_at_infinity, InfinityOrder::Finite(-1));
        assert_eq!(profile.gamma, n * n + 1);
        let cert = analyze_nve(&problem).unwrap();
        let exps = cert.exponent_sets.unwrap();
        assert!(exps.per_class.iter().all(|c| c.values == [-8, 2, 12]));
        assert_eq!(exps.at_infinity_summed, vec![5]);
    }
}

/// Independent root-by-root count of assignments with an integer degree.
fn integer_degree_count(roots: usize, set: &[i64], e_inf: i64, formula: DFormula) -> u64 {
    let mut index = vec![0usize; roots];
    let mut count = 0;
    loop {
        let sum: i64 = index.iter().map(|&i| set[i]).sum();
        let twice = match formula {
            DFormula::Summed => 4 - sum - e_inf,
            DFormula::Classic => e_inf - sum,
        };
        count += u64::from(twice % 2 == 0);
        let mut k = roots;
        loop {
            if k == 0 {
                return count;
            }
            k -= 1;
            index[k] += 1;
            if index[k] < set.len() {
                break;
            }
            index[k] = 0;
        }
    }
}

fn obstruction_theorem() {
    let mut t = VorobevYablonskiTable::default();
    for n in 0..=8i64 {
        let problem = nve_potential(n, &mut t).unwrap();
        let cert = analyze_nve(&problem).unwrap();
        assert_eq!(cert.verdict, Verdict::SL2, "n = {n}");
        assert!(cert.conclusion.is_some());
        if n == 0 {
            assert!(case_filter(&cert.profile).allowed.is_empty());
            continue;
        }
        assert!(cert.case2.parity_shortcut, "parity shortcut at n = {n}");
        assert!(cert.case2.candidates.is_empty());
        assert!(matches!(cert.case2.outcome, CaseOutcome::Excluded { .. }));
        if n <= 3 {
            let roots = cert.profile.finite_pole_count();
            assert_eq!(roots, (n * n) as usize);
            let summed = integer_degree_count(roots, &[-8, 2, 12], 5, DFormula::Summed);
            let classic = integer_degree_count(roots, &[-8, 2, 12], -1, DFormula::Classic);
            assert_eq!((summed, classic), (0, 0));
            let ex = cert.case2.exhaustive.expect("enumerated");
            assert_eq!(ex.assignments, 3u64.pow(roots as u32));
            assert_eq!(
                (ex.integer_d_summed, ex.integer_d_classic),
                (summed, classic)
            );
        }
    }
}

fn positive_paths() {
    let r = e("2/z^2");
    let cert = analyze(&r, None).unwrap();
    assert_eq!(cert.verdict, Verdict::LiouvillianCase1);
    let omega = &cert.case1.payload().unwrap().omega;
    assert_eq!(omega, &e("2/z"));
    assert!(riccati_holds(&r, omega));
    let mut case2_payloads = 0;
    for s in ["2/z^2", "1/z - 3/(16*z^2)", "z^2 + 3/(4*z^2)"] {
        let r = e(s);
        let cert = analyze(&r, None).unwrap();
        if let Some(p) = cert.case2.outcome.payload() {
            assert!(case2_identity_holds(&r, &p.theta, &p.polynomial), "{s}");
            case2_payloads += 1;
        }
    }
    assert_eq!(case2_payloads, 3);
    assert_eq!(
        analyze(&e("1/z - 3/(16*z^2)"), None).unwrap().verdict,
        Verdict::LiouvillianCase2
    );
}

fn run_cli(args: &[&str]) -> String {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(
        std::iter::once("painleve").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    String::from_utf8(out).unwrap()
}

fn front_end() {
    let coefficient = (-50i64..=50, 1i64..=9).prop_map(|(n, d)| RationalScalar::new(n, d));
    let poly = prop::collection::vec(coefficient, 0..=6).prop_map(Polynomial::new);
    let ratfunc = (poly.clone(), poly.prop_filter("nonzero", |p| !p.is_zero()))
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap());
    let mut runner = TestRunner::new(Config {
        cases: 600,
        ..Config::default()
    });
    runner
        .run(&ratfunc, |f| {
            let text = format_rational(&f);
            prop_assert_eq!(parse_rational_expression(&text).unwrap(), f, "{}", text);
            Ok(())
        })
        .unwrap();
    let first = run_cli(&["certify", "--from", "0", "--to", "8"]);
    assert_eq!(first, run_cli(&["certify", "--from", "0", "--to", "8"]));
    assert_eq!(
        first,
        run_cli(&["certify", "--from", "0", "--to", "8", "--parallel"])
    );
}

fn main() {
    let criteria: [(&str, Duration, fn()); 7] = [
        (
            "1 hierarchy reproduction",
            Duration::from_secs(5),
            hierarchy_reproduction,
        ),
        (
            "2 rational solutions",
            Duration::from_secs(10),
            rational_solutions,
        ),
        (
            "3 NVE correctness",
            Duration::from_secs(10),
            nve_correctness,
        ),
        (
            "4 pole and exponent data",
            Duration::from_secs(30),
            pole_and_exponent_data,
        ),
        (
            "5 obstruction theorem",
            Duration::from_secs(60),
            obstruction_theorem,
        ),
        (
            "6 positive-path validation",
            Duration::from_secs(5),
            positive_paths,
        ),
        ("7 front end", Duration::from_secs(30), front_end),
    ];
    let mut failures = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let status = match outcome {
            Ok(()) if elapsed <= limit => "PASS".to_string(),
            Ok(()) => format!("FAIL (over the {limit:?} limit)"),
            Err(_) => "FAIL".to_string(),
        };
        if status != "PASS" {
            failures += 1;
        }
        println!("criterion {name}: {status} in {elapsed:.2?}");
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}

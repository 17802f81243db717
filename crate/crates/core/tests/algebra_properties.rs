use painleve_core::{
    exact_divide, format_rational, integrate_rational, parse_rational_expression, poly_gcd,
    quotient_invert, quotient_reduce, squarefree_decomposition, AlgebraError, Polynomial,
    RationalFunction, RationalScalar,
};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = RationalScalar> {
    (-40i64..=40, 1i64..=6).prop_map(|(n, d)| RationalScalar::new(n, d))
}

fn poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(scalar(), 0..=max_len).prop_map(Polynomial::new)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(5), nonzero_poly(4)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

/// Squarefree modulus built from distinct linear and irreducible quadratic factors.
fn modulus() -> impl Strategy<Value = Polynomial> {
    prop::collection::btree_set(-6i64..=6, 1..=4).prop_flat_map(|roots| {
        prop::bool::ANY.prop_map(move |with_quadratic| {
            let mut m = Polynomial::one();
            for &c in &roots {
                m = &m * &Polynomial::from_i64s(&[-c, 1]);
            }
            if with_quadratic {
                m = &m * &Polynomial::from_i64s(&[2, 0, 1]);
            }
            m
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exact_division_inverts_multiplication(a in poly(6), b in nonzero_poly(5)) {
        prop_assert_eq!(exact_divide(&(&a * &b), &b).unwrap(), a);
    }

    #[test]
    fn common_factor_divides_gcd(a in poly(5), b in poly(5), g in nonzero_poly(4)) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let gcd = poly_gcd(&(&a * &g), &(&b * &g)).unwrap();
        prop_assert!(gcd.is_monic());
        prop_assert!(gcd.is_divisible_by(&g));
        prop_assert!((&a * &g).is_divisible_by(&gcd));
        prop_assert!((&b * &g).is_divisible_by(&gcd));
    }

    #[test]
    fn gcd_of_zeros_is_an_error(_x in 0..1) {
        prop_assert_eq!(poly_gcd(&Polynomial::zero(), &Polynomial::zero()), Err(AlgebraError::GcdOfZeros));
    }

    #[test]
    fn squarefree_parts_reassemble(factors in prop::collection::vec(nonzero_poly(3), 1..=4), c in scalar()) {
        prop_assume!(!c.is_zero());
        let mut p = Polynomial::constant(c);
        for (i, f) in factors.iter().enumerate() {
            p = &p * &f.pow(i as u32 + 1);
        }
        let parts = squarefree_decomposition(&p).unwrap();
        let mut rebuilt = Polynomial::constant(p.leading_coefficient());
        for (f, k) in &parts {
            prop_assert!(f.is_monic() && !f.is_constant());
            prop_assert!(poly_gcd(f, &f.derivative()).unwrap().is_one());
            rebuilt = &rebuilt * &f.pow(*k);
        }
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn product_and_quotient_rules(f in ratfunc(), g in ratfunc()) {
        let lhs = (&f * &g).derivative();
        let rhs = &(&f.derivative() * &g) + &(&f * &g.derivative());
        prop_assert_eq!(lhs, rhs);
        prop_assume!(!g.is_zero());
        let quotient = f.checked_div(&g).unwrap().derivative();
        let expected = (&(&f.derivative() * &g) - &(&f * &g.derivative())).checked_div(&g.pow(2)).unwrap();
        prop_assert_eq!(quotient, expected);
    }

    #[test]
    fn quotient_inverse(m in modulus(), a in poly(6)) {
        let x = quotient_reduce(&a, &m).unwrap();
        match quotient_invert(&x) {
            Ok(inv) => {
                let one = x.mul(&inv).unwrap();
                prop_assert_eq!(one.as_constant(), Some(RationalScalar::one()));
            }
            Err(AlgebraError::NotInvertible { gcd }) => prop_assert!(!gcd.is_constant() || x.is_zero()),
            Err(other) => prop_assert!(false, "unexpected {other:?}"),
        }
    }

    #[test]
    fn integration_inverts_differentiation(f in ratfunc(), c in scalar()) {
        let derivative = f.derivative();
        let antiderivative = integrate_rational(&derivative).unwrap();
        prop_assert_eq!(antiderivative.derivative(), derivative);
        // The antiderivative differs from f by a constant.
        let shifted = &f + &RationalFunction::constant(c);
        prop_assert!((&shifted - &antiderivative).as_constant().is_some());
    }

    #[test]
    fn canonical_form_is_unique(n in poly(5), d in nonzero_poly(4), c in nonzero_poly(3)) {
        let direct = RationalFunction::new(n.clone(), d.clone()).unwrap();
        let scaled = RationalFunction::new(&n * &c, &d * &c).unwrap();
        prop_assert_eq!(&direct, &scaled);
        prop_assert!(direct.denominator().is_monic());
        if !direct.is_zero() {
            prop_assert!(poly_gcd(direct.numerator(), direct.denominator()).unwrap().is_one());
        }
    }

    #[test]
    fn format_then_parse(f in ratfunc()) {
        let text = format_rational(&f);
        prop_assert_eq!(parse_rational_expression(&text).unwrap(), f, "{}", text);
    }
}

use jetdiff::polycore::{chart_partial_transfer, infinity_chart, parse_poly, validate_curve, Degree, Poly2};
use jetdiff::rational::{frac, int};
use jetdiff::{Error, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn p(s: &str) -> Poly2 {
    parse_poly(s).unwrap()
}

#[test]
fn parsing_literals() {
    let q = p("x^4 + y^4 - 2");
    assert_eq!((q.len(), q.degree()), (3, Degree::Finite(4)));
    assert_eq!(p("0").degree(), Degree::NegInfinity);
    assert!(p("0").is_zero());
    let q = p("x^2*y - 1/2*y^3");
    assert_eq!((q.len(), q.degree()), (2, Degree::Finite(3)));
    assert_eq!(q.coeff(0, 3), frac(-1, 2));
}

#[test]
fn parse_errors_carry_offsets() {
    assert!(matches!(parse_poly("x^2 + + y"), Err(Error::Syntax { offset: 6, .. })));
    assert!(matches!(parse_poly("x + 3/0"), Err(Error::ZeroDenominator { offset: 6 })));
    assert!(matches!(parse_poly("x + z"), Err(Error::Syntax { offset: 4, .. })));
}

#[test]
fn partial_derivatives() {
    assert_eq!(p("x^4 + y^4 - 2").partial(1, 0), p("4*x^3"));
    assert!(p("x^4 + y^4 - 2").partial(1, 1).is_zero());
    assert_eq!(p("x^2*y").partial(1, 1), p("2*x"));
}

#[test]
fn curve_validation_flags() {
    let c = validate_curve(p("x^4 + y^4 - 2")).unwrap();
    assert!(c.adapted.all());
    assert_eq!(c.d, 4);
    let c = validate_curve(p("x^2*y - 1")).unwrap();
    assert!(!c.adapted.monomial_yd_present);
    assert_eq!(c.d, 3);
    let c = validate_curve(p("x^5 + y^5")).unwrap();
    assert!(c.adapted.infinity_transversal);
    // x^4 + 2x^2y^2 + y^4 = (x^2 + y^2)^2 meets infinity with multiplicity two.
    let c = validate_curve(p("x^4 + 2*x^2*y^2 + y^4 - 1")).unwrap();
    assert!(!c.adapted.infinity_transversal);
    assert_eq!(validate_curve(Poly2::zero()).unwrap_err(), Error::ZeroCurve);
}

#[test]
fn charts_at_infinity() {
    let chart = |s: &str| infinity_chart(&validate_curve(p(s)).unwrap()).unwrap();
    // x₂ and y₂ are written as x and y.
    assert_eq!(chart("x^4 + y^4 - 2"), p("x^4 + 1 - 2*y^4"));
    for d in 1..=7 {
        assert_eq!(chart(&format!("x^{d} + y^{d}")), p(&format!("x^{d} + 1")));
    }
    assert_eq!(chart("x^3 + y^3 + x"), p("x^3 + 1 + x*y^2"));
}

#[test]
fn partial_transfer_identity() {
    for s in ["x^4 + y^4 - 2", "x^3 + y^3 + x", "x + y - 1", "x^6 + y^6 + x^2*y^3 - x + 1"] {
        let r = chart_partial_transfer(&validate_curve(p(s)).unwrap()).unwrap();
        assert!(r.pass && r.residual.is_zero(), "{s}");
    }
}

fn small_poly() -> impl Strategy<Value = Poly2> {
    prop::collection::vec((0u32..4, 0u32..4, -5i64..=5, 1i64..=3), 0..6)
        .prop_map(|ts| Poly2::from_terms(ts.into_iter().map(|(a, b, n, d)| (a, b, frac(n, d)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn product_rule(a in small_poly(), b in small_poly()) {
        let lhs = (&a * &b).partial(1, 0);
        let rhs = &(&a.partial(1, 0) * &b) + &(&a * &b.partial(1, 0));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_partials_commute(a in small_poly()) {
        prop_assert_eq!(a.partial(1, 0).partial(0, 1), a.partial(0, 1).partial(1, 0));
    }

    #[test]
    fn print_parse_roundtrip(a in small_poly()) {
        prop_assert_eq!(parse_poly(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn chart_semantics(x2 in (-7i64..=7, 1i64..=4), y2 in (1i64..=7, 1i64..=4), neg in any::<bool>()) {
        let c = validate_curve(p("x^5 + y^5 - 3*x^2*y + 2*y - 1/2")).unwrap();
        let r2 = infinity_chart(&c).unwrap();
        let x2 = frac(x2.0, x2.1);
        let y2: Rational = if neg { -frac(y2.0, y2.1) } else { frac(y2.0, y2.1) };
        prop_assume!(!y2.is_zero());
        let affine = c.r.eval(&(&x2 / &y2), &(int(1) / &y2));
        prop_assert_eq!(r2.eval(&x2, &y2), affine * num_traits::pow(y2, 5));
    }
}

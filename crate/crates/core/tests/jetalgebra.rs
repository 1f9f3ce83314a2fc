use jetdiff::jetalgebra::{jet_weight, Coefficient, DMonomial, DPoly, DSym, JetExpression, JetMonomial, Side, TermKey};
use jetdiff::rational::int;
use jetdiff::Error;
use proptest::prelude::*;

fn sym(i: u32, j: u32) -> DPoly {
    DPoly::sym(DSym::new(i, j).unwrap())
}

fn key(own: JetMonomial, foreign: JetMonomial) -> TermKey {
    TermKey { own, foreign }
}

/// `y'/R[1,0]` on the x-side.
fn y1_over_rx() -> JetExpression {
    JetExpression::monomial(Side::X, JetMonomial::var(1), DPoly::one(), 1)
}

#[test]
fn derivative_of_first_generator() {
    let got = y1_over_rx().total_derivative();
    let want = JetExpression::from_terms(
        Side::X,
        [
            (TermKey::own(JetMonomial::var(2)), Coefficient::new(DPoly::one(), 1)),
            (key(JetMonomial::var(1), JetMonomial::var(1)), Coefficient::new(-&sym(2, 0), 2)),
            (TermKey::own(JetMonomial::var_pow(1, 2)), Coefficient::new(-&sym(1, 1), 2)),
        ],
    );
    assert_eq!(got, want);
    assert!(JetExpression::one(Side::X).total_derivative().is_zero());
    let y1 = JetExpression::monomial(Side::X, JetMonomial::var(1), DPoly::one(), 0);
    assert_eq!(y1.total_derivative(), JetExpression::monomial(Side::X, JetMonomial::var(2), DPoly::one(), 0));
}

#[test]
fn first_order_substitution() {
    // x' on the x-side.
    let xp = JetExpression::from_terms(Side::X, [(key(JetMonomial::one(), JetMonomial::var(1)), Coefficient::new(DPoly::one(), 0))]);
    let want = JetExpression::monomial(Side::X, JetMonomial::var(1), -&sym(0, 1), 1);
    assert_eq!(xp.substitute_foreign_first_order().unwrap(), want);
    // y'(x' R20 + y' R11)/R10^2 -> (y')^2 (−R01 R20/R10^3 + R11/R10^2)
    let e = JetExpression::from_terms(
        Side::X,
        [
            (key(JetMonomial::var(1), JetMonomial::var(1)), Coefficient::new(sym(2, 0), 2)),
            (TermKey::own(JetMonomial::var_pow(1, 2)), Coefficient::new(sym(1, 1), 2)),
        ],
    );
    let num = &(-&(&sym(0, 1) * &sym(2, 0))) + &(&sym(1, 1) * &sym(1, 0));
    let want = JetExpression::monomial(Side::X, JetMonomial::var_pow(1, 2), num, 3);
    assert_eq!(e.substitute_foreign_first_order().unwrap(), want);
    let plain = y1_over_rx();
    assert_eq!(plain.substitute_foreign_first_order().unwrap(), plain);
    let high = JetExpression::from_terms(Side::X, [(key(JetMonomial::one(), JetMonomial::var(2)), Coefficient::new(DPoly::one(), 0))]);
    assert_eq!(high.substitute_foreign_first_order(), Err(Error::ForeignOrder { order: 2 }));
}

#[test]
fn mirror_examples() {
    let m = y1_over_rx().mirror();
    assert_eq!(m, JetExpression::monomial(Side::Y, JetMonomial::var(1), DPoly::one(), 1));
    assert_eq!(m.to_string(), "+ x' * [1] / R[0,1]");
    assert!(JetExpression::zero(Side::X).mirror().is_zero());
    assert_eq!(y1_over_rx().try_add(&m), Err(Error::SideMismatch));
}

#[test]
fn weights() {
    assert_eq!(jet_weight(&JetMonomial::var(3)), 3);
    assert_eq!(jet_weight(&JetMonomial::new(vec![1, 1])), 3);
    assert_eq!(jet_weight(&JetMonomial::var_pow(1, 3)), 3);
}

#[test]
fn normalization_cancels_common_denominator_powers() {
    let e = JetExpression::monomial(Side::X, JetMonomial::var(1), &sym(1, 0) * &sym(2, 0), 3);
    let c = e.coefficient(&JetMonomial::var(1)).unwrap();
    assert_eq!(c.denom_power, 2);
    assert_eq!(c.numerator, sym(2, 0));
}

#[test]
fn invalid_symbol() {
    assert_eq!(DSym::new(0, 0), Err(Error::InvalidSymbol { i: 0, j: 0 }));
}

fn dpoly() -> impl Strategy<Value = DPoly> {
    let syms = prop::sample::select(vec![(1u32, 0u32), (0, 1), (2, 0), (1, 1), (0, 2), (2, 1)]);
    prop::collection::vec((prop::collection::vec(syms, 0..3), -3i64..=3), 1..3).prop_map(|ts| {
        DPoly::from_terms(ts.into_iter().map(|(ss, c)| {
            (int(c), DMonomial::from_factors(ss.into_iter().map(|(i, j)| (DSym::new(i, j).unwrap(), 1))))
        }))
    })
}

fn expr(side: Side, foreign: bool) -> impl Strategy<Value = JetExpression> {
    let jets = prop::collection::vec(0u32..3, 0..3);
    let fjets = if foreign { prop::collection::vec(0u32..2, 0..2).boxed() } else { Just(Vec::new()).boxed() };
    prop::collection::vec((jets, fjets, dpoly(), 0u32..3), 1..3).prop_map(move |ts| {
        JetExpression::from_terms(
            side,
            ts.into_iter().map(|(o, f, n, p)| (key(JetMonomial::new(o), JetMonomial::new(f)), Coefficient::new(n, p))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn leibniz(a in expr(Side::X, true), b in expr(Side::X, true)) {
        let lhs = (&a * &b).total_derivative();
        let rhs = &(&a.total_derivative() * &b) + &(&a * &b.total_derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mirror_is_a_ring_involution(a in expr(Side::Y, false), b in expr(Side::Y, false)) {
        prop_assert_eq!((&a * &b).mirror(), &a.mirror() * &b.mirror());
        prop_assert_eq!(a.mirror().mirror(), a.clone());
        prop_assert_eq!((&a + &b).mirror(), &a.mirror() + &b.mirror());
    }

    #[test]
    fn substitution_removes_foreign_variables(a in expr(Side::X, true)) {
        let s = a.substitute_foreign_first_order().unwrap();
        prop_assert!(!s.has_foreign());
        prop_assert_eq!(s.side(), Side::X);
        prop_assert_eq!(s.substitute_foreign_first_order().unwrap(), s.clone());
    }

    #[test]
    fn normalization_is_idempotent(a in expr(Side::Y, true)) {
        let n = a.normalize();
        prop_assert_eq!(n.normalize(), n);
    }

    #[test]
    fn derivative_commutes_with_mirror(a in expr(Side::X, true)) {
        prop_assert_eq!(a.total_derivative().mirror(), a.mirror().total_derivative());
    }
}

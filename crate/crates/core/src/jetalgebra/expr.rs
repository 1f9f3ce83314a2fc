use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::jetalgebra::{DPoly, DSym, JetMonomial, Side};
use crate::rational::Rational;

/// Jet part of a term: a monomial in the side's own letter and, transiently,
/// one in the foreign letter.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TermKey {
    pub own: JetMonomial,
    pub foreign: JetMonomial,
}

impl TermKey {
    pub fn own(own: JetMonomial) -> Self {
        TermKey { own, foreign: JetMonomial::one() }
    }

    pub fn mul(&self, other: &TermKey) -> TermKey {
        TermKey { own: self.own.mul(&other.own), foreign: self.foreign.mul(&other.foreign) }
    }
}

/// `numerator / S^denom_power` where `S` is the side's denominator symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Coefficient {
    pub numerator: DPoly,
    pub denom_power: u32,
}

impl Coefficient {
    pub fn new(numerator: DPoly, denom_power: u32) -> Self {
        Coefficient { numerator, denom_power }
    }
}

/// Polynomial in jet variables whose coefficients are `DPoly / S^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetExpression {
    side: Side,
    terms: BTreeMap<TermKey, Coefficient>,
}

/// Adds `num / S^p` into the slot for `key`, lifting to a common power.
fn accumulate(terms: &mut BTreeMap<TermKey, Coefficient>, s: DSym, key: TermKey, num: DPoly, p: u32) {
    if num.is_zero() {
        return;
    }
    match terms.get_mut(&key) {
        None => {
            terms.insert(key, Coefficient::new(num, p));
        }
        Some(c) => {
            if c.denom_power >= p {
                c.numerator.add_assign(&num.mul_sym_pow(s, c.denom_power - p));
            } else {
                c.numerator = &c.numerator.mul_sym_pow(s, p - c.denom_power) + &num;
                c.denom_power = p;
            }
        }
    }
}

impl JetExpression {
    pub fn zero(side: Side) -> Self {
        JetExpression { side, terms: BTreeMap::new() }
    }

    pub fn one(side: Side) -> Self {
        Self::monomial(side, JetMonomial::one(), DPoly::one(), 0)
    }

    /// A single term `own · numerator / S^p`.
    pub fn monomial(side: Side, own: JetMonomial, numerator: DPoly, denom_power: u32) -> Self {
        Self::from_terms(side, [(TermKey::own(own), Coefficient::new(numerator, denom_power))])
    }

    /// Builds a normalized expression; repeated keys are summed.
    pub fn from_terms<I: IntoIterator<Item = (TermKey, Coefficient)>>(side: Side, it: I) -> Self {
        Self::raw(side, it).normalize()
    }

    /// Sums repeated keys but performs no cancellation; see [`JetExpression::normalize`].
    pub fn raw<I: IntoIterator<Item = (TermKey, Coefficient)>>(side: Side, it: I) -> Self {
        let s = side.denominator();
        let mut terms = BTreeMap::new();
        for (k, c) in it {
            accumulate(&mut terms, s, k, c.numerator, c.denom_power);
        }
        JetExpression { side, terms }
    }

    /// Cancels the common power of the denominator symbol and prunes zero terms.
    pub fn normalize(&self) -> JetExpression {
        let s = self.side.denominator();
        let terms = self
            .terms
            .iter()
            .filter(|(_, c)| !c.numerator.is_zero())
            .map(|(k, c)| {
                let cancel = c.numerator.min_power(s).unwrap_or(0).min(c.denom_power);
                (k.clone(), Coefficient::new(c.numerator.div_sym_pow(s, cancel), c.denom_power - cancel))
            })
            .collect();
        JetExpression { side: self.side, terms }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Coefficient)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a pure own-letter jet monomial.
    pub fn coefficient(&self, own: &JetMonomial) -> Option<&Coefficient> {
        self.terms.get(&TermKey::own(own.clone()))
    }

    pub fn has_foreign(&self) -> bool {
        self.terms.keys().any(|k| !k.foreign.is_one())
    }

    pub fn try_add(&self, other: &JetExpression) -> Result<JetExpression> {
        if self.side != other.side {
            return Err(Error::SideMismatch);
        }
        let s = self.side.denominator();
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            accumulate(&mut terms, s, k.clone(), c.numerator.clone(), c.denom_power);
        }
        Ok(JetExpression { side: self.side, terms }.normalize())
    }

    pub fn try_mul(&self, other: &JetExpression) -> Result<JetExpression> {
        if self.side != other.side {
            return Err(Error::SideMismatch);
        }
        let s = self.side.denominator();
        let mut terms = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                accumulate(&mut terms, s, k1.mul(k2), &c1.numerator * &c2.numerator, c1.denom_power + c2.denom_power);
            }
        }
        Ok(JetExpression { side: self.side, terms }.normalize())
    }

    pub fn scale(&self, c: &Rational) -> JetExpression {
        JetExpression {
            side: self.side,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), Coefficient::new(v.numerator.scale(c), v.denom_power)))
                .collect(),
        }
        .normalize()
    }

    /// Formal `d/dζ`: jet shift with Leibniz on both letters, chain rule on the
    /// symbols, quotient rule on the denominator power. The result generally
    /// contains the foreign first-order variable.
    pub fn total_derivative(&self) -> JetExpression {
        let side = self.side;
        let s = side.denominator();
        let (own1, foreign1) = (TermKey::own(JetMonomial::var(1)), TermKey { own: JetMonomial::one(), foreign: JetMonomial::var(1) });
        let (xp, yp) = match side {
            Side::X => (foreign1, own1),
            Side::Y => (own1, foreign1),
        };
        let mut terms = BTreeMap::new();
        for (key, c) in &self.terms {
            let (n, p) = (&c.numerator, c.denom_power);
            for (m, own) in key.own.derivative() {
                let k = TermKey { own, foreign: key.foreign.clone() };
                accumulate(&mut terms, s, k, n.scale(&Rational::from_integer(m.into())), p);
            }
            for (m, foreign) in key.foreign.derivative() {
                let k = TermKey { own: key.own.clone(), foreign };
                accumulate(&mut terms, s, k, n.scale(&Rational::from_integer(m.into())), p);
            }
            accumulate(&mut terms, s, key.mul(&xp), n.d_dx(), p);
            accumulate(&mut terms, s, key.mul(&yp), n.d_dy(), p);
            if p > 0 {
                let minus_p = Rational::from_integer((-(p as i64)).into());
                let nx = n.mul_monomial(&minus_p, &crate::jetalgebra::DMonomial::sym(s.shift_x()));
                let ny = n.mul_monomial(&minus_p, &crate::jetalgebra::DMonomial::sym(s.shift_y()));
                accumulate(&mut terms, s, key.mul(&xp), nx, p + 1);
                accumulate(&mut terms, s, key.mul(&yp), ny, p + 1);
            }
        }
        JetExpression { side, terms }.normalize()
    }

    /// Eliminates the foreign first-order variable with `R_x x' + R_y y' = 0`.
    ///
    /// On the `x` side `x' = −y'·R[0,1]/R[1,0]`; on the `y` side `y' = −x'·R[1,0]/R[0,1]`.
    pub fn substitute_foreign_first_order(&self) -> Result<JetExpression> {
        let side = self.side;
        let s = side.denominator();
        let t = side.other().denominator();
        let mut terms = BTreeMap::new();
        for (key, c) in &self.terms {
            let f = key.foreign.exponent(1);
            if key.foreign.max_order() > 1 {
                return Err(Error::ForeignOrder { order: key.foreign.max_order() });
            }
            let sign = if f % 2 == 1 { -Rational::one() } else { Rational::one() };
            let own = key.own.mul(&JetMonomial::var_pow(1, f));
            let num = c.numerator.mul_sym_pow(t, f).scale(&sign);
            accumulate(&mut terms, s, TermKey::own(own), num, c.denom_power + f);
        }
        Ok(JetExpression { side, terms }.normalize())
    }

    /// Exchanges the roles of `x` and `y`: flips the side and maps `R[i,j] -> R[j,i]`.
    pub fn mirror(&self) -> JetExpression {
        JetExpression {
            side: self.side.other(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), Coefficient::new(c.numerator.mirror(), c.denom_power)))
                .collect(),
        }
    }
}

impl Add for &JetExpression {
    type Output = JetExpression;
    /// Panics on a side mismatch; use [`JetExpression::try_add`] to handle it.
    fn add(self, rhs: &JetExpression) -> JetExpression {
        self.try_add(rhs).expect("adding expressions from different sides")
    }
}

impl Neg for &JetExpression {
    type Output = JetExpression;
    fn neg(self) -> JetExpression {
        JetExpression {
            side: self.side,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), Coefficient::new(-&c.numerator, c.denom_power))).collect(),
        }
    }
}

impl Sub for &JetExpression {
    type Output = JetExpression;
    fn sub(self, rhs: &JetExpression) -> JetExpression {
        self + &(-rhs)
    }
}

impl Mul for &JetExpression {
    type Output = JetExpression;
    fn mul(self, rhs: &JetExpression) -> JetExpression {
        self.try_mul(rhs).expect("multiplying expressions from different sides")
    }
}

impl fmt::Display for JetExpression {
    /// One line per jet monomial: `+ y'^2 * [R[0,1]*R[2,0] - R[1,0]*R[1,1]] / R[1,0]^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let s = self.side.denominator();
        for (n, (k, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str("\n")?;
            }
            f.write_str("+ ")?;
            let mut jet = k.own.render(self.side.own_letter());
            let foreign = k.foreign.render(self.side.foreign_letter());
            if !foreign.is_empty() {
                if !jet.is_empty() {
                    jet.push('*');
                }
                jet.push_str(&foreign);
            }
            if !jet.is_empty() {
                write!(f, "{jet} * ")?;
            }
            write!(f, "[{}]", c.numerator)?;
            match c.denom_power {
                0 => {}
                1 => write!(f, " / {s}")?,
                p => write!(f, " / {s}^{p}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermRow<'a> {
    own: &'a JetMonomial,
    #[serde(skip_serializing_if = "JetMonomial::is_one")]
    foreign: &'a JetMonomial,
    numerator: &'a DPoly,
    denom_power: u32,
}

impl Serialize for JetExpression {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<TermRow> = self
            .terms
            .iter()
            .map(|(k, c)| TermRow { own: &k.own, foreign: &k.foreign, numerator: &c.numerator, denom_power: c.denom_power })
            .collect();
        let mut st = ser.serialize_struct("JetExpression", 3)?;
        st.serialize_field("side", &self.side)?;
        st.serialize_field("letter", &self.side.own_letter())?;
        st.serialize_field("terms", &rows)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jetalgebra::DMonomial;
    use crate::rational::int;
    use proptest::prelude::*;

    fn d(i: u32, j: u32) -> DPoly {
        DPoly::sym(DSym::new(i, j).unwrap())
    }

    fn jm(mu: &[u32]) -> JetMonomial {
        JetMonomial::new(mu.to_vec())
    }

    #[test]
    fn derivative_of_first_generator() {
        let e = JetExpression::monomial(Side::X, jm(&[1]), DPoly::one(), 1);
        let de = e.total_derivative();
        let expect = JetExpression::from_terms(
            Side::X,
            [
                (TermKey::own(jm(&[0, 1])), Coefficient::new(DPoly::one(), 1)),
                (TermKey { own: jm(&[1]), foreign: jm(&[1]) }, Coefficient::new(-&d(2, 0), 2)),
                (TermKey::own(jm(&[2])), Coefficient::new(-&d(1, 1), 2)),
            ],
        );
        assert_eq!(de, expect);
        assert!(de.has_foreign());
    }

    #[test]
    fn derivative_of_constants_and_jets() {
        assert!(JetExpression::one(Side::X).total_derivative().is_zero());
        let yp = JetExpression::monomial(Side::X, jm(&[1]), DPoly::one(), 0);
        assert_eq!(yp.total_derivative(), JetExpression::monomial(Side::X, jm(&[0, 1]), DPoly::one(), 0));
    }

    #[test]
    fn first_order_substitution() {
        let xp = JetExpression::from_terms(Side::X, [(TermKey { own: JetMonomial::one(), foreign: jm(&[1]) }, Coefficient::new(DPoly::one(), 0))]);
        let got = xp.substitute_foreign_first_order().unwrap();
        assert_eq!(got, JetExpression::monomial(Side::X, jm(&[1]), -&d(0, 1), 1));

        let plain = JetExpression::monomial(Side::X, jm(&[0, 1]), d(2, 0), 3);
        assert_eq!(plain.substitute_foreign_first_order().unwrap(), plain);

        // y'·(x'·R20 + y'·R11)/R10^2 -> y'^2·(R11/R10^2 − R01·R20/R10^3)
        let e = JetExpression::from_terms(
            Side::X,
            [
                (TermKey { own: jm(&[1]), foreign: jm(&[1]) }, Coefficient::new(d(2, 0), 2)),
                (TermKey::own(jm(&[2])), Coefficient::new(d(1, 1), 2)),
            ],
        );
        let want = JetExpression::monomial(Side::X, jm(&[2]), &(&d(1, 0) * &d(1, 1)) - &(&d(0, 1) * &d(2, 0)), 3);
        assert_eq!(e.substitute_foreign_first_order().unwrap(), want);

        let bad = JetExpression::from_terms(Side::X, [(TermKey { own: JetMonomial::one(), foreign: jm(&[0, 1]) }, Coefficient::new(DPoly::one(), 0))]);
        assert_eq!(bad.substitute_foreign_first_order(), Err(Error::ForeignOrder { order: 2 }));
    }

    #[test]
    fn mirror_examples() {
        let e = JetExpression::monomial(Side::X, jm(&[1]), DPoly::one(), 1);
        let m = e.mirror();
        assert_eq!(m.side(), Side::Y);
        assert_eq!(m.to_string(), "+ x' * [1] / R[0,1]");
        assert_eq!(JetExpression::zero(Side::X).mirror(), JetExpression::zero(Side::Y));
    }

    #[test]
    fn side_mismatch_is_an_error() {
        let a = JetExpression::one(Side::X);
        let b = JetExpression::one(Side::Y);
        assert_eq!(a.try_add(&b), Err(Error::SideMismatch));
    }

    #[test]
    fn rendering() {
        let e = JetExpression::monomial(Side::X, jm(&[2]), &(&d(0, 1) * &d(2, 0)) - &(&d(1, 0) * &d(1, 1)), 3);
        assert_eq!(e.to_string(), "+ y'^2 * [R[0,1]*R[2,0] - R[1,0]*R[1,1]] / R[1,0]^3");
    }

    fn arb_dpoly() -> impl Strategy<Value = DPoly> {
        let sym = (0u32..3, 0u32..3).prop_filter("order >= 1", |(i, j)| i + j >= 1);
        prop::collection::vec((-3i64..4, prop::collection::vec((sym, 1u32..3), 0..3)), 1..4).prop_map(|ts| {
            DPoly::from_terms(ts.into_iter().map(|(c, fs)| {
                (int(c), DMonomial::from_factors(fs.into_iter().map(|((i, j), e)| (DSym { i, j }, e))))
            }))
        })
    }

    fn arb_expr(side: Side) -> impl Strategy<Value = JetExpression> {
        prop::collection::vec((prop::collection::vec(0u32..3, 0..3), arb_dpoly(), 0u32..3), 0..4).prop_map(move |ts| {
            JetExpression::from_terms(side, ts.into_iter().map(|(mu, n, p)| (TermKey::own(JetMonomial::new(mu)), Coefficient::new(n, p))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn leibniz(a in arb_expr(Side::X), b in arb_expr(Side::X)) {
            let lhs = (&a * &b).total_derivative();
            let rhs = &(&a.total_derivative() * &b) + &(&a * &b.total_derivative());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mirror_is_a_ring_involution(a in arb_expr(Side::Y), b in arb_expr(Side::Y)) {
            prop_assert_eq!((&a * &b).mirror(), &a.mirror() * &b.mirror());
            prop_assert_eq!(a.mirror().mirror(), a.clone());
            prop_assert_eq!(a.mirror().total_derivative(), a.total_derivative().mirror());
        }

        #[test]
        fn substitution_removes_foreign_variables(a in arb_expr(Side::X)) {
            let s = a.total_derivative().substitute_foreign_first_order().unwrap();
            prop_assert!(!s.has_foreign());
            for (_, c) in s.terms() {
                for (m, _) in c.numerator.terms() {
                    // only the numerator may carry R[0,1]; the denominator stays a power of R[1,0]
                    prop_assert!(m.factors().iter().all(|(sym, _)| sym.order() >= 1));
                }
            }
        }

        #[test]
        fn normalization_is_idempotent(raw in prop::collection::vec((prop::collection::vec(0u32..3, 0..3), arb_dpoly(), 0u32..4), 0..5)) {
            let e = JetExpression::raw(Side::X, raw.into_iter().map(|(mu, n, p)| (TermKey::own(JetMonomial::new(mu)), Coefficient::new(n.mul_sym_pow(DSym::X, 1), p))));
            let once = e.normalize();
            prop_assert_eq!(once.normalize(), once.clone());
            for (_, c) in once.terms() {
                prop_assert!(c.denom_power == 0 || c.numerator.min_power(DSym::X) == Some(0));
                prop_assert!(!c.numerator.is_zero());
            }
        }
    }
}

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::polycore::UPoly;
use crate::rational::{serde_pq, Rational};

/// Total degree; the zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Exponents `(a, b)` of `x^a y^b` ordered graded-lexicographically, highest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Exp(u32, u32);

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> Ordering {
        (other.0 + other.1, other.0).cmp(&(self.0 + self.1, self.0))
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `x, y` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<Exp, Rational>,
    degree: Option<u32>,
}

/// JSON row `{"a": .., "b": .., "c": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub a: u32,
    pub b: u32,
    #[serde(with = "serde_pq")]
    pub c: Rational,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, a: u32, b: u32) -> Self {
        Self::from_terms([(a, b, c)])
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Sums repeated exponents and drops zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, Rational)>>(terms: I) -> Self {
        let mut map: BTreeMap<Exp, Rational> = BTreeMap::new();
        for (a, b, c) in terms {
            *map.entry(Exp(a, b)).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self::from_map(map)
    }

    fn from_map(terms: BTreeMap<Exp, Rational>) -> Self {
        let degree = terms.keys().next().map(|e| e.0 + e.1);
        Poly2 { terms, degree }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.degree {
            Some(d) => Degree::Finite(d),
            None => Degree::NegInfinity,
        }
    }

    /// Terms `(a, b, c)` in canonical order: higher total degree first, then higher `x` power.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (e.0, e.1, c))
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.terms.get(&Exp(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Self::from_map(self.terms.iter().map(|(e, v)| (*e, v * c)).collect())
    }

    /// Exact mixed partial derivative `d^(i+j) / dx^i dy^j`.
    pub fn partial(&self, i: u32, j: u32) -> Poly2 {
        let falling = |n: u32, k: u32| -> BigInt { (0..k).map(|t| BigInt::from(n - t)).product() };
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e.0 >= i && e.1 >= j)
                .map(|(e, c)| (e.0 - i, e.1 - j, c * Rational::from_integer(falling(e.0, i) * falling(e.1, j)))),
        )
    }

    /// Homogeneous component of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> Poly2 {
        Self::from_terms(self.terms().filter(|(a, b, _)| a + b == k).map(|(a, b, c)| (a, b, c.clone())))
    }

    /// `y^deg * p(x / y, 1 / y)` written in the same two letters; needs `deg >= degree(p)`.
    pub fn to_infinity_chart(&self, deg: u32) -> Poly2 {
        assert!(self.degree <= Some(deg), "chart exponent below polynomial degree");
        Self::from_terms(self.terms().map(|(a, b, c)| (a, deg - a - b, c.clone())))
    }

    /// Restriction to `y = 0` as a univariate polynomial in `x`.
    pub fn restrict_y_zero(&self) -> UPoly {
        let mut coeffs = vec![Rational::zero(); self.degree.unwrap_or(0) as usize + 1];
        for (a, b, c) in self.terms() {
            if b == 0 {
                coeffs[a as usize] = c.clone();
            }
        }
        UPoly::new(coeffs)
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms().fold(Rational::zero(), |acc, (a, b, c)| {
            acc + c * num_traits::pow(x.clone(), a as usize) * num_traits::pow(y.clone(), b as usize)
        })
    }

    pub fn to_json_terms(&self) -> Vec<PolyTerm> {
        self.terms().map(|(a, b, c)| PolyTerm { a, b, c: c.clone() }).collect()
    }

    pub fn from_json_terms(rows: &[PolyTerm]) -> Poly2 {
        Self::from_terms(rows.iter().map(|t| (t.a, t.b, t.c.clone())))
    }

    pub fn pow(&self, n: u32) -> Poly2 {
        let mut acc = Poly2::constant(Rational::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut map = self.terms.clone();
        for (e, c) in &rhs.terms {
            *map.entry(*e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Poly2::from_map(map)
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        self + &(-rhs)
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2::from_map(self.terms.iter().map(|(e, c)| (*e, -c)).collect())
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut map: BTreeMap<Exp, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *map.entry(Exp(e1.0 + e2.0, e1.1 + e2.1)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Poly2::from_map(map)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, a: u32, b: u32) -> fmt::Result {
    let mut first = true;
    for (letter, e) in [('x', a), ('y', b)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{letter}")?;
        } else {
            write!(f, "{letter}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (a, b, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let is_const = a == 0 && b == 0;
            if is_const {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write_monomial(f, a, b)?;
            } else {
                write!(f, "{mag}*")?;
                write_monomial(f, a, b)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

impl Serialize for Poly2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<PolyTerm>::deserialize(d)?;
        Ok(Poly2::from_json_terms(&rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_poly;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn p(s: &str) -> Poly2 {
        parse_poly(s).unwrap()
    }

    #[test]
    fn partial_examples() {
        let r = p("x^4 + y^4 - 2");
        assert_eq!(r.partial(1, 0), p("4*x^3"));
        assert!(r.partial(1, 1).is_zero());
        assert_eq!(r.partial(1, 1).degree(), Degree::NegInfinity);
        assert_eq!(p("x^2*y").partial(1, 1), p("2*x"));
        assert_eq!(p("x^3*y^2").partial(2, 2), p("12*x"));
    }

    #[test]
    fn zero_has_sentinel_degree() {
        assert_eq!(Poly2::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(Poly2::zero().to_string(), "0");
    }

    #[test]
    fn canonical_print_order() {
        let q = Poly2::from_terms([(0, 0, int(-2)), (0, 4, int(1)), (4, 0, int(1)), (1, 2, frac(-1, 2))]);
        assert_eq!(q.to_string(), "x^4 + y^4 - 1/2*x*y^2 - 2");
    }

    #[test]
    fn json_rows() {
        let q = p("x^2*y - 1/2*y^3");
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"[{"a":2,"b":1,"c":"1/1"},{"a":0,"b":3,"c":"-1/2"}]"#);
        let back: Poly2 = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn chart_transform_of_monomials() {
        assert_eq!(p("x^4 + y^4 - 2").to_infinity_chart(4), p("x^4 + 1 - 2*y^4"));
    }

    pub(crate) fn arb_poly() -> impl Strategy<Value = Poly2> {
        prop::collection::vec((0u32..4, 0u32..4, -5i64..6, 1i64..4), 0..6)
            .prop_map(|ts| Poly2::from_terms(ts.into_iter().map(|(a, b, n, d)| (a, b, frac(n, d)))))
    }

    proptest! {
        #[test]
        fn product_rule(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).partial(1, 0);
            let rhs = &(&a.partial(1, 0) * &b) + &(&a * &b.partial(1, 0));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mixed_partials_commute(a in arb_poly()) {
            prop_assert_eq!(a.partial(1, 0).partial(0, 1), a.partial(0, 1).partial(1, 0));
        }

        #[test]
        fn parse_print_roundtrip(a in arb_poly()) {
            let printed = a.to_string();
            let back = parse_poly(&printed).unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(back.to_string(), printed);
        }
    }
}

//! Hand-transcribed elimination-built generators of orders 2 and 3.
//!
//! These are not produced by the recursion; order 3 differs from
//! [`crate::generator::generate`] by circulation terms and only agrees on curve points.

use crate::jetalgebra::{DPoly, DSym, JetExpression, JetMonomial, Side};
use crate::rational::{int, Rational};

use super::GeneratorPair;

/// One term in the ratio layout `c · jets/S · (T/S)^h · Π (R[i,j]/S)`, where `S`
/// is the side's denominator symbol and `T` the other first derivative.
#[derive(Clone, Debug, PartialEq)]
pub struct RatioTerm {
    pub coeff: Rational,
    pub jets: JetMonomial,
    pub h: u32,
    pub syms: Vec<DSym>,
}

impl RatioTerm {
    pub fn to_expression(&self, side: Side) -> JetExpression {
        let t = side.other().denominator();
        let mut num = DPoly::constant(self.coeff.clone()).mul_sym_pow(t, self.h);
        for s in &self.syms {
            num = num.mul_sym_pow(*s, 1);
        }
        let power = 1 + self.h + self.syms.len() as u32;
        JetExpression::monomial(side, self.jets.clone(), num, power)
    }
}

/// Shorthand: `ratio_term(side, c, μ, h, &[(i, j), …])`.
pub fn ratio_term(side: Side, c: i64, mu: &[u32], h: u32, syms: &[(u32, u32)]) -> JetExpression {
    RatioTerm {
        coeff: int(c),
        jets: JetMonomial::new(mu.to_vec()),
        h,
        syms: syms.iter().map(|&(i, j)| DSym { i, j }).collect(),
    }
    .to_expression(side)
}

/// `(coefficient, μ, h, symbols)` rows of the ratio layout.
type Row<'a> = (i64, &'a [u32], u32, &'a [(u32, u32)]);

fn sum(terms: &[Row]) -> JetExpression {
    terms
        .iter()
        .fold(JetExpression::zero(Side::X), |acc, (c, mu, h, syms)| &acc + &ratio_term(Side::X, *c, mu, *h, syms))
}

fn pair(order: usize, left: JetExpression) -> GeneratorPair {
    let right = -&left.mirror();
    GeneratorPair { order, left, right }
}

/// Orders 2 and 3 of the elimination construction, in that order.
pub fn golden_elimination_forms() -> Vec<GeneratorPair> {
    let j2 = sum(&[(1, &[0, 1], 0, &[]), (-1, &[2], 0, &[(1, 1)]), (1, &[2], 1, &[(2, 0)])]);
    let j3 = sum(&[
        (1, &[0, 0, 1], 0, &[]),
        (-3, &[1, 1], 0, &[(1, 1)]),
        (3, &[1, 1], 1, &[(2, 0)]),
        (-6, &[3], 1, &[(1, 1), (2, 0)]),
        (3, &[3], 2, &[(2, 0), (2, 0)]),
        (3, &[3], 1, &[(2, 1)]),
        (-1, &[3], 2, &[(3, 0)]),
    ]);
    vec![pair(2, j2), pair(3, j3)]
}

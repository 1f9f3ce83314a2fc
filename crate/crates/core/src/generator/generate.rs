use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jetalgebra::{Coefficient, DMonomial, DPoly, DSym, JetExpression, JetMonomial, Side, TermKey};

/// Both sides of `left = right`: `left` in `y`-jets over powers of `R[1,0]`,
/// `right` in `x`-jets over powers of `R[0,1]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorPair {
    pub order: usize,
    pub left: JetExpression,
    pub right: JetExpression,
}

impl GeneratorPair {
    /// `y'/R[1,0] = −x'/R[0,1]`.
    pub fn base() -> Self {
        GeneratorPair {
            order: 1,
            left: JetExpression::monomial(Side::X, JetMonomial::var(1), DPoly::one(), 1),
            right: JetExpression::monomial(Side::Y, JetMonomial::var(1), -&DPoly::one(), 1),
        }
    }

    /// `mirror(left) = −right`.
    pub fn is_antisymmetric(&self) -> bool {
        self.left.mirror() == -&self.right
    }
}

/// Differentiates both sides once and eliminates the foreign first derivative.
pub fn recursion_step(prev: &GeneratorPair) -> Result<GeneratorPair> {
    let left = prev.left.total_derivative().substitute_foreign_first_order()?;
    let right = prev.right.total_derivative().substitute_foreign_first_order()?;
    Ok(GeneratorPair { order: prev.order + 1, left, right })
}

/// Is `m / R[1,0]^p · (y')^n` carried to its own mirror image by `y'/R[1,0] = −x'/R[0,1]`?
///
/// That holds when `m · (R[0,1]/R[1,0])^(p−n)` equals `mirror(m)` as Laurent monomials.
fn is_circulation_fixed(m: &DMonomial, p: u32, n: u32) -> bool {
    let shift = p as i64 - n as i64;
    let mirrored = m.mirror();
    let mut syms: Vec<DSym> = m.factors().iter().chain(mirrored.factors()).map(|(s, _)| *s).collect();
    syms.extend([DSym::X, DSym::Y]);
    syms.sort();
    syms.dedup();
    syms.into_iter().all(|s| {
        let mut e = m.exponent(s) as i64;
        if s == DSym::Y {
            e += shift;
        }
        if s == DSym::X {
            e -= shift;
        }
        e == mirrored.exponent(s) as i64
    })
}

/// Removes terms that appear identically on both sides once rewritten with
/// `y'/R[1,0] = −x'/R[0,1]`.
///
/// A pure `(y')^n` term `c·m/R[1,0]^p` equals `(−1)^n c·mirror(m)/R[0,1]^p·(x')^n`
/// when `m` is circulation-fixed; for odd `n` the antisymmetric partner on the right
/// carries exactly that value, so both are dropped.
pub fn cancel_circulation_pairs(pair: &GeneratorPair) -> GeneratorPair {
    let mut left_terms: Vec<(TermKey, Coefficient)> = Vec::new();
    let mut right_terms: Vec<(TermKey, Coefficient)> = pair.right.terms().map(|(k, c)| (k.clone(), c.clone())).collect();
    for (key, coeff) in pair.left.terms() {
        let n = key.own.exponent(1);
        let pure_first = key.foreign.is_one() && key.own == JetMonomial::var_pow(1, n);
        if !pure_first || n % 2 == 0 {
            left_terms.push((key.clone(), coeff.clone()));
            continue;
        }
        let p = coeff.denom_power;
        let mut kept = DPoly::zero();
        for (m, c) in coeff.numerator.terms() {
            let partner = right_terms.iter_mut().find(|(k, rc)| k == key && rc.denom_power == p);
            let removable = is_circulation_fixed(m, p, n)
                && partner.as_ref().is_some_and(|(_, rc)| rc.numerator.coeff(&m.mirror()) == -c.clone());
            if removable {
                let (_, rc) = partner.unwrap();
                rc.numerator.add_term(m.mirror(), c.clone());
            } else {
                kept.add_term(m.clone(), c.clone());
            }
        }
        left_terms.push((key.clone(), Coefficient::new(kept, p)));
    }
    GeneratorPair {
        order: pair.order,
        left: JetExpression::from_terms(Side::X, left_terms),
        right: JetExpression::from_terms(Side::Y, right_terms),
    }
}

static MEMO: Mutex<Vec<Arc<GeneratorPair>>> = Mutex::new(Vec::new());

/// The order-`order` generator, built incrementally from lower orders and memoized.
pub fn generate(order: usize) -> Result<Arc<GeneratorPair>> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut memo = MEMO.lock().unwrap_or_else(|e| e.into_inner());
    if memo.is_empty() {
        memo.push(Arc::new(GeneratorPair::base()));
    }
    while memo.len() < order {
        let next = cancel_circulation_pairs(&recursion_step(memo.last().unwrap())?);
        memo.push(Arc::new(next));
    }
    Ok(Arc::clone(&memo[order - 1]))
}

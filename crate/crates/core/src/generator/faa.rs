use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jetalgebra::{Coefficient, DPoly, DSym, JetExpression, JetMonomial, Side, TermKey};
use crate::rational::Rational;

/// One way of attaching the letters `x`/`y` to the parts of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LetterAssignment {
    /// derivative order → how many `x` factors of that order
    pub x_parts: BTreeMap<u32, u32>,
    pub y_parts: BTreeMap<u32, u32>,
    /// Number of equivalent assignments, `Π C(μ_λ, μx_λ)`.
    #[serde(serialize_with = "crate::rational::ser_display")]
    pub multiplicity: BigUint,
    pub sym: DSym,
}

/// One block of the expansion: `coefficient · Σ_assignments multiplicity · jets · R[sym]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaaTerm {
    /// derivative order `λ_a` → multiplicity `μ_a ≥ 1`
    pub multiplicities: BTreeMap<u32, u32>,
    /// `κ! / Π (λ_a!)^μ_a μ_a!`
    #[serde(serialize_with = "crate::rational::ser_display")]
    pub coefficient: BigUint,
    /// Total order of the attached symbol, i.e. the number of parts.
    pub dsym_order: u32,
    pub assignments: Vec<LetterAssignment>,
}

impl FaaTerm {
    /// Parts in decreasing order, e.g. `[3, 1, 1]`.
    pub fn parts(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.multiplicities.iter().flat_map(|(&l, &m)| std::iter::repeat_n(l, m as usize)).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn binomial(n: u32, k: u32) -> BigUint {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Partitions of `n` with parts at most `max`, parts in decreasing order.
fn partitions(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for p in (1..=n.min(max)).rev() {
        prefix.push(p);
        partitions(n - p, p, prefix, out);
        prefix.pop();
    }
}

fn assignments(mult: &BTreeMap<u32, u32>, vars: u32) -> Vec<LetterAssignment> {
    let mut acc = vec![(BTreeMap::new(), BTreeMap::new(), BigUint::one())];
    for (&l, &m) in mult {
        let choices: Vec<u32> = if vars == 1 { vec![m] } else { (0..=m).rev().collect() };
        let mut next = Vec::new();
        for (xs, ys, w) in &acc {
            for &mx in &choices {
                let (mut xs, mut ys): (BTreeMap<u32, u32>, BTreeMap<u32, u32>) = (xs.clone(), ys.clone());
                if mx > 0 {
                    xs.insert(l, mx);
                }
                if m - mx > 0 {
                    ys.insert(l, m - mx);
                }
                next.push((xs, ys, w * binomial(m, mx)));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(x_parts, y_parts, multiplicity)| {
            let i = x_parts.values().sum();
            let j = y_parts.values().sum();
            LetterAssignment { x_parts, y_parts, multiplicity, sym: DSym { i, j } }
        })
        .collect()
}

/// Expansion of `d^κ/dζ^κ R(x(ζ))` (`vars = 1`) or `R(x(ζ), y(ζ))` (`vars = 2`).
///
/// Terms are ordered by symbol order, then by the largest part, descending.
pub fn faa_di_bruno(order: u32, vars: u32) -> Result<Vec<FaaTerm>> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    if !(1..=2).contains(&vars) {
        return Err(Error::Invalid(format!("vars must be 1 or 2, got {vars}")));
    }
    let mut parts = Vec::new();
    partitions(order, order, &mut Vec::new(), &mut parts);
    parts.sort_by(|a, b| match a.len().cmp(&b.len()) {
        Ordering::Equal => b.cmp(a),
        o => o,
    });
    let kfact = factorial(order);
    Ok(parts
        .into_iter()
        .map(|p| {
            let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
            for &l in &p {
                *mult.entry(l).or_default() += 1;
            }
            let denom = mult
                .iter()
                .fold(BigUint::one(), |acc, (&l, &m)| acc * factorial(l).pow(m) * factorial(m));
            FaaTerm {
                coefficient: &kfact / denom,
                dsym_order: p.len() as u32,
                assignments: assignments(&mult, vars),
                multiplicities: mult,
            }
        })
        .collect())
}

fn jet_of(parts: &BTreeMap<u32, u32>) -> JetMonomial {
    let len = parts.keys().max().copied().unwrap_or(0) as usize;
    let mut mu = vec![0; len];
    for (&l, &m) in parts {
        mu[l as usize - 1] = m;
    }
    JetMonomial::new(mu)
}

/// The expansion as an expression on the `x` side: `y`-jets are the own letter,
/// `x`-jets the foreign one, and no denominators occur.
pub fn faa_expression(order: u32, vars: u32) -> Result<JetExpression> {
    let terms = faa_di_bruno(order, vars)?;
    let mut out = Vec::new();
    for t in &terms {
        for a in &t.assignments {
            let c = Rational::from_integer((&t.coefficient * &a.multiplicity).into());
            let key = TermKey { own: jet_of(&a.y_parts), foreign: jet_of(&a.x_parts) };
            out.push((key, Coefficient::new(DPoly::sym(a.sym).scale(&c), 0)));
        }
    }
    Ok(JetExpression::from_terms(Side::X, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_order_one_variable() {
        let t = faa_di_bruno(2, 1).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].parts(), vec![2]);
        assert_eq!(t[0].coefficient, BigUint::from(1u32));
        assert_eq!(t[1].parts(), vec![1, 1]);
        assert_eq!(t[1].assignments[0].sym, DSym { i: 2, j: 0 });
    }

    #[test]
    fn fifth_order_coefficients() {
        let t = faa_di_bruno(5, 1).unwrap();
        let coeffs: Vec<u32> = t.iter().map(|f| f.coefficient.to_u32_digits().first().copied().unwrap_or(0)).collect();
        assert_eq!(coeffs, vec![1, 5, 10, 10, 15, 10, 1]);
        let parts: Vec<Vec<u32>> = t.iter().map(FaaTerm::parts).collect();
        assert_eq!(parts, vec![vec![5], vec![4, 1], vec![3, 2], vec![3, 1, 1], vec![2, 2, 1], vec![2, 1, 1, 1], vec![1, 1, 1, 1, 1]]);
    }

    #[test]
    fn first_order_two_variables() {
        let e = faa_expression(1, 2).unwrap();
        assert_eq!(e.to_string(), "+ x' * [R[1,0]]\n+ y' * [R[0,1]]");
    }

    #[test]
    fn bad_arguments() {
        assert_eq!(faa_di_bruno(0, 1), Err(Error::ZeroOrder));
        assert!(faa_di_bruno(3, 3).is_err());
    }
}

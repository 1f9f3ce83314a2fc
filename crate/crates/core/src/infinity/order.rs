use serde::Serialize;

use crate::error::{Error, Result};
use crate::generator::GeneratorPair;
use crate::jetalgebra::{DMonomial, JetMonomial};

/// Pole/zero order along the line at infinity of `jet · mono / R[1,0]^denom_power`.
///
/// Jet part: `y₀^(k)` has order `−(k+1)`. The leading `1/R_x` contributes `d − 1`
/// and each ratio `R[i,j]/R_x` contributes `i + j − 1`.
pub fn monomial_infinity_order(jet: &JetMonomial, mono: &DMonomial, denom_power: u32, d: u32) -> Result<i64> {
    if mono.degree() as i64 - denom_power as i64 != -1 {
        return Err(Error::MalformedMonomial(format!(
            "{mono} / R[1,0]^{denom_power} is not one 1/R_x times ratios R[i,j]/R_x"
        )));
    }
    if jet.is_one() {
        return Err(Error::MalformedMonomial("constant jet part".into()));
    }
    let jet_order: i64 = jet.exponents().iter().enumerate().map(|(k, &m)| -((k as i64) + 2) * m as i64).sum();
    Ok(jet_order + d as i64 - 1 + mono.bonus() as i64)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonomialOrder {
    pub jet: String,
    pub monomial: String,
    pub denom_power: u32,
    pub order: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InfinityReport {
    pub kappa: usize,
    pub d: u32,
    pub uniform: bool,
    pub value: i64,
    /// `value ≥ 1`: the generator vanishes at every point at infinity.
    pub vanishes: bool,
    pub monomials: Vec<MonomialOrder>,
}

/// Computes the order of every monomial of `g.left`; all must equal `d − κ − 2`.
pub fn verify_uniform_order(g: &GeneratorPair, d: u32) -> Result<InfinityReport> {
    let mut monomials = Vec::new();
    for (key, c) in g.left.terms() {
        for (m, _) in c.numerator.terms() {
            monomials.push(MonomialOrder {
                jet: key.own.render('y'),
                monomial: m.to_string(),
                denom_power: c.denom_power,
                order: monomial_infinity_order(&key.own, m, c.denom_power, d)?,
            });
        }
    }
    let value = d as i64 - g.order as i64 - 2;
    let uniform = monomials.iter().all(|m| m.order == value);
    if !uniform {
        let odd: Vec<String> = monomials
            .iter()
            .filter(|m| m.order != value)
            .map(|m| format!("{} * {} has order {}", m.jet, m.monomial, m.order))
            .collect();
        return Err(Error::NonUniform(format!("expected {value}; {}", odd.join(", "))));
    }
    Ok(InfinityReport { kappa: g.order, d, uniform, value, vanishes: value >= 1, monomials })
}

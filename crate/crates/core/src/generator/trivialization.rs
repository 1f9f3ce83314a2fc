use serde::Serialize;

use crate::error::{Error, Result};
use crate::jetalgebra::{Coefficient, DPoly, DSym, JetExpression, JetMonomial, Side};

/// `y^(λ)` written in `x`-jets over powers of `R[0,1]`, for `λ = 1..=order`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrivializationMap {
    pub order: usize,
    /// `components[λ-1]` is the expression of `y^(λ)`.
    pub components: Vec<JetExpression>,
}

impl TrivializationMap {
    pub fn component(&self, lambda: usize) -> Option<&JetExpression> {
        lambda.checked_sub(1).and_then(|k| self.components.get(k))
    }

    /// The polynomials `P^λ_μ` in `y^(λ) = −x^(λ) R_x/R_y − Σ_μ x^μ P^λ_μ`,
    /// i.e. minus the coefficients of all jet monomials other than `x^(λ)`.
    pub fn p_polynomials(&self, lambda: usize) -> Vec<(JetMonomial, Coefficient)> {
        let Some(c) = self.component(lambda) else { return Vec::new() };
        let lead = JetMonomial::var(lambda);
        c.terms()
            .filter(|(k, _)| k.own != lead)
            .map(|(k, v)| (k.own.clone(), Coefficient::new(-&v.numerator, v.denom_power)))
            .collect()
    }
}

/// Differentiates `y' = −x'·R[1,0]/R[0,1]` repeatedly, eliminating the foreign `y'` each time.
pub fn trivialization_change(order: usize) -> Result<TrivializationMap> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let first = JetExpression::monomial(Side::Y, JetMonomial::var(1), -&DPoly::sym(DSym::X), 1);
    let mut components = vec![first];
    while components.len() < order {
        let next = components.last().unwrap().total_derivative().substitute_foreign_first_order()?;
        components.push(next);
    }
    Ok(TrivializationMap { order, components })
}

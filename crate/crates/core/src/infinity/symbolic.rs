use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generator::generate;
use crate::infinity::monomial_infinity_order;
use crate::infinity::transfer::transfer_numerators;
use crate::jetalgebra::DSym;
use crate::mpoly::MPoly;
use crate::polycore::{infinity_chart, CurveSpec, Poly2};

/// Largest order for which the concrete expansion is attempted.
pub const SYMBOLIC_MAX_ORDER: usize = 3;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TermValuation {
    pub jet: String,
    pub monomial: String,
    /// Order predicted by [`monomial_infinity_order`].
    pub bookkeeping: i64,
    /// `y₂`-valuation of the substituted term; `None` if it vanishes on this curve.
    pub observed: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransferCheck {
    pub kappa: usize,
    pub d: u32,
    /// `d − κ − 2`
    pub expected: i64,
    /// `y₂`-valuation of the whole left side; `None` if it vanishes identically.
    pub observed: Option<i64>,
    /// Power of `∂R₂/∂x₂` in the common denominator.
    pub denominator_power: u32,
    /// `gcd(R₂(x₂,0), ∂R₂/∂x₂(x₂,0)) = 1`, so the denominator has no zero at infinity.
    pub denominator_coprime: bool,
    pub terms: Vec<TermValuation>,
    pub pass: bool,
}

fn embed(p: &Poly2, nvars: usize) -> MPoly {
    let mut out = MPoly::zero(nvars);
    for (a, b, c) in p.terms() {
        let mut e = vec![0; nvars];
        e[0] = a;
        e[1] = b;
        out = &out + &MPoly::monomial(nvars, e, c.clone());
    }
    out
}

/// Substitutes the chart `x₀ = x₂/y₂, y₀ = 1/y₂` into the left side of the order-`κ`
/// generator over a concrete curve and measures the resulting `y₂`-valuation.
///
/// Works in the polynomial ring `(x₂, y₂, y₂', …, y₂^(κ))` with a common
/// denominator `(∂R₂/∂x₂)^P`.
pub fn symbolic_transfer_check(c: &CurveSpec, kappa: usize) -> Result<TransferCheck> {
    if kappa == 0 {
        return Err(Error::ZeroOrder);
    }
    if kappa > SYMBOLIC_MAX_ORDER {
        return Err(Error::OrderTooLarge { order: kappa, max: SYMBOLIC_MAX_ORDER });
    }
    if !c.adapted.infinity_transversal {
        return Err(Error::NotTransversal);
    }
    let d = c.d;
    if (d as usize) < kappa + 2 {
        return Err(Error::Invalid(format!("degree {d} is below the holomorphy threshold {}", kappa + 2)));
    }
    let r2 = infinity_chart(c)?;
    let r2x = r2.partial(1, 0);
    let denominator_coprime = r2.restrict_y_zero().gcd(&r2x.restrict_y_zero()).degree() == Some(0);

    let nvars = kappa + 2;
    let jets = transfer_numerators(kappa, kappa + 1);
    let lift: Vec<MPoly> = (0..=kappa).map(|k| MPoly::var(nvars, k + 1)).collect();
    let jets: Vec<MPoly> = jets.iter().map(|t| t.compose(&lift)).collect();
    let r2x_m = embed(&r2x, nvars);

    let mut charts: HashMap<DSym, MPoly> = HashMap::new();
    let mut chart_of = |s: DSym| -> MPoly {
        charts
            .entry(s)
            .or_insert_with(|| {
                if s.order() > d {
                    MPoly::zero(nvars)
                } else {
                    embed(&c.r.partial(s.i, s.j).to_infinity_chart(d - s.order()), nvars)
                }
            })
            .clone()
    };

    let g = generate(kappa)?;
    let big_p = g.left.terms().map(|(_, co)| co.denom_power).max().unwrap_or(0);
    let mut parts: Vec<(MPoly, i64)> = Vec::new();
    let mut terms = Vec::new();
    for (key, co) in g.left.terms() {
        let p = co.denom_power;
        let mut jet_part = MPoly::one(nvars);
        let mut e: i64 = (d as i64 - 1) * p as i64;
        for (k, &m) in key.own.exponents().iter().enumerate() {
            if m > 0 {
                jet_part = &jet_part * &jets[k + 1].pow(m);
                e -= (k as i64 + 2) * m as i64;
            }
        }
        for (mono, coeff) in co.numerator.terms() {
            let mut num = jet_part.scale(coeff);
            let mut et = e;
            for &(s, k) in mono.factors() {
                num = &num * &chart_of(s).pow(k);
                et -= (d as i64 - s.order() as i64) * k as i64;
            }
            let bookkeeping = monomial_infinity_order(&key.own, mono, p, d)?;
            let observed = num.valuation(1).map(|v| et + v as i64);
            terms.push(TermValuation { jet: key.own.render('y'), monomial: mono.to_string(), bookkeeping, observed });
            if !num.is_zero() {
                parts.push((&num * &r2x_m.pow(big_p - p), et));
            }
        }
    }

    let observed = parts.iter().map(|(_, e)| *e).min().and_then(|e_min| {
        let total = parts.iter().fold(MPoly::zero(nvars), |acc, (num, e)| {
            let shift = MPoly::var(nvars, 1).pow((e - e_min) as u32);
            &acc + &(num * &shift)
        });
        total.valuation(1).map(|v| e_min + v as i64)
    });

    let expected = d as i64 - kappa as i64 - 2;
    if let Some(o) = observed.filter(|&o| o < 0) {
        return Err(Error::ResidualPole { order: -o });
    }
    let terms_ok = terms.iter().all(|t| t.observed.is_none_or(|o| o >= t.bookkeeping));
    let pass = denominator_coprime && terms_ok && observed.is_none_or(|o| o >= expected);
    Ok(TransferCheck { kappa, d, expected, observed, denominator_power: big_p, denominator_coprime, terms, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_poly, validate_curve};

    fn curve(s: &str) -> CurveSpec {
        validate_curve(parse_poly(s).unwrap()).unwrap()
    }

    #[test]
    fn first_order_examples() {
        let r = symbolic_transfer_check(&curve("x^4 + y^4 - 2"), 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.observed, Some(1));

        let r = symbolic_transfer_check(&curve("x^3 + y^3 + x"), 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.observed, Some(0));
        assert_eq!(r.expected, 0);
    }

    #[test]
    fn second_order_on_quintic() {
        let r = symbolic_transfer_check(&curve("x^5 + y^5 - 2"), 2).unwrap();
        assert!(r.pass);
        assert_eq!(r.observed, Some(1));
    }

    #[test]
    fn preconditions() {
        assert_eq!(symbolic_transfer_check(&curve("x^7 + y^7 - 2"), 4).unwrap_err(), Error::OrderTooLarge { order: 4, max: 3 });
        assert_eq!(symbolic_transfer_check(&curve("x^2 - 2*x*y + y^2 + x"), 1).unwrap_err(), Error::NotTransversal);
    }
}

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::generator::faa_expression;
use crate::jetalgebra::{DPoly, DSym, JetExpression, JetMonomial, Side};
use crate::numeric::{eval_poly, EvalConfig, Mode, Scalar, SeriesPoint};
use crate::polycore::Poly2;

/// Values of the derivative symbols `R[i,j]` at a fixed point, computed on demand.
#[derive(Clone, Debug)]
pub struct PointValues<S: Scalar> {
    r: Poly2,
    x: S,
    y: S,
    cache: HashMap<DSym, S>,
}

impl<S: Scalar> PointValues<S> {
    pub fn new(r: &Poly2, x: S, y: S) -> Self {
        PointValues { r: r.clone(), x, y, cache: HashMap::new() }
    }

    pub fn sym(&mut self, s: DSym) -> S {
        if let Some(v) = self.cache.get(&s) {
            return v.clone();
        }
        let v = eval_poly(&self.r.partial(s.i, s.j), &self.x, &self.y);
        self.cache.insert(s, v.clone());
        v
    }

    pub fn dpoly(&mut self, p: &DPoly) -> S {
        let mut acc = self.x.zero_like();
        for (m, c) in p.terms() {
            let mut t = self.x.lift(c);
            for &(s, e) in m.factors() {
                t = t.mul(&self.sym(s).pow(e));
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Inverse of the side's denominator symbol, guarding near-zero values in float mode.
    fn denominator_inverse(&mut self, side: Side, cfg: &EvalConfig) -> Result<S> {
        let which = match side {
            Side::X => "R_x",
            Side::Y => "R_y",
        };
        let v = self.sym(side.denominator());
        if S::MODE == Mode::Float && v.magnitude() <= cfg.abs_floor {
            return Err(Error::Singular(format!("{which} = {v} at the evaluation point")));
        }
        v.inv().ok_or(Error::VanishingPartial { which })
    }
}

fn jet_value<S: Scalar>(m: &JetMonomial, jets: &[S], one: &S) -> Result<S> {
    let needed = m.max_order();
    if needed > 0 && needed >= jets.len() {
        return Err(Error::MissingJet { needed, available: jets.len().saturating_sub(1) });
    }
    Ok(m.exponents().iter().enumerate().fold(one.clone(), |acc, (k, &e)| acc.mul(&jets[k + 1].pow(e))))
}

/// Evaluates `e` with concrete symbol values and jets; `own`/`foreign` are indexed
/// by derivative order (index 0 is the base coordinate and is not used).
pub(crate) fn eval_with<S: Scalar>(
    e: &JetExpression,
    vals: &mut PointValues<S>,
    own: &[S],
    foreign: &[S],
    cfg: &EvalConfig,
) -> Result<S> {
    let one = vals.x.one_like();
    let mut inv: Option<S> = None;
    let mut acc = vals.x.zero_like();
    for (key, coeff) in e.terms() {
        let jets = jet_value(&key.own, own, &one)?.mul(&jet_value(&key.foreign, foreign, &one)?);
        let mut v = vals.dpoly(&coeff.numerator).mul(&jets);
        if coeff.denom_power > 0 {
            if inv.is_none() {
                inv = Some(vals.denominator_inverse(e.side(), cfg)?);
            }
            v = v.mul(&inv.as_ref().unwrap().pow(coeff.denom_power));
        }
        acc = acc.add(&v);
    }
    Ok(acc)
}

/// Value of `e` on the disc `s`: own-letter jets are those of the side's letter.
pub fn eval_jet_expression<S: Scalar>(e: &JetExpression, s: &SeriesPoint<S>, cfg: &EvalConfig) -> Result<S> {
    let mut vals = PointValues::new(&s.curve.r, s.x.clone(), s.y.clone());
    eval_with(e, &mut vals, s.own_jets(e.side()), s.foreign_jets(e.side()), cfg)
}

/// `d^k/dζ^k R(x(ζ), y(ζ))` at `ζ = 0` for `k = 1..=order`; all zero on a curve disc.
pub fn faa_residuals<S: Scalar>(s: &SeriesPoint<S>, cfg: &EvalConfig) -> Result<Vec<S>> {
    let mut vals = PointValues::new(&s.curve.r, s.x.clone(), s.y.clone());
    (1..=s.order())
        .map(|k| {
            let e = faa_expression(k as u32, 2)?;
            eval_with(&e, &mut vals, s.own_jets(e.side()), s.foreign_jets(e.side()), cfg)
        })
        .collect()
}

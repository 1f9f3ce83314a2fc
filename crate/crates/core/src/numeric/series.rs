use serde::Serialize;

use crate::error::{Error, Result};
use crate::jetalgebra::Side;
use crate::numeric::{eval_poly, EvalConfig, Mode, Scalar};
use crate::polycore::{CurveSpec, Poly2};
use crate::rational::{int, Rational};

/// A point on the curve with the jets of a holomorphic disc through it.
#[derive(Clone, Debug, Serialize)]
pub struct SeriesPoint<S: Scalar> {
    #[serde(skip)]
    pub curve: CurveSpec,
    #[serde(serialize_with = "crate::rational::ser_display")]
    pub x: S,
    #[serde(serialize_with = "crate::rational::ser_display")]
    pub y: S,
    /// `x_jets[k] = x^(k)(0)`, index 0 is the base coordinate.
    #[serde(serialize_with = "ser_vec")]
    pub x_jets: Vec<S>,
    #[serde(serialize_with = "ser_vec")]
    pub y_jets: Vec<S>,
}

fn ser_vec<S: Scalar, Z: serde::Serializer>(v: &[S], s: Z) -> std::result::Result<Z::Ok, Z::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl<S: Scalar> SeriesPoint<S> {
    pub fn order(&self) -> usize {
        self.x_jets.len().min(self.y_jets.len()).saturating_sub(1)
    }

    /// Jets of the side's own letter: `y` on the x-side, `x` on the y-side.
    pub fn own_jets(&self, side: Side) -> &[S] {
        match side {
            Side::X => &self.y_jets,
            Side::Y => &self.x_jets,
        }
    }

    pub fn foreign_jets(&self, side: Side) -> &[S] {
        self.own_jets(side.other())
    }
}

/// Truncated power series helpers; all vectors have the same length.
pub(crate) fn series_mul<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let n = a.len();
    (0..n)
        .map(|k| (0..=k).fold(a[0].zero_like(), |acc, i| acc.add(&a[i].mul(&b[k - i]))))
        .collect()
}

/// `p(X(t), Y(t))` truncated to the length of `xs`.
pub(crate) fn eval_poly_series<S: Scalar>(p: &Poly2, xs: &[S], ys: &[S]) -> Vec<S> {
    let n = xs.len();
    let deg = p.degree().finite().unwrap_or(0) as usize;
    let zero = xs[0].zero_like();
    let mut one = vec![zero.clone(); n];
    one[0] = xs[0].one_like();
    let mut xp = vec![one.clone()];
    let mut yp = vec![one];
    for k in 0..deg {
        xp.push(series_mul(&xp[k], xs));
        yp.push(series_mul(&yp[k], ys));
    }
    let mut out = vec![zero; n];
    for (a, b, c) in p.terms() {
        let prod = series_mul(&xp[a as usize], &yp[b as usize]);
        let c = xs[0].lift(c);
        for (o, v) in out.iter_mut().zip(prod) {
            *o = o.add(&c.mul(&v));
        }
    }
    out
}

/// Residual check used for base points.
pub(crate) fn on_curve<S: Scalar>(r: &Poly2, x: &S, y: &S, cfg: &EvalConfig) -> Result<()> {
    let v = eval_poly(r, x, y);
    let ok = match S::MODE {
        Mode::Exact => v.is_zero(),
        Mode::Float => {
            let scale = r
                .terms()
                .map(|(a, b, c)| crate::rational::abs_f64(c) * x.magnitude().powi(a as i32) * y.magnitude().powi(b as i32))
                .fold(1.0, f64::max);
            v.magnitude() <= cfg.tolerance * scale
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::NotOnCurve { residual: v.to_string() })
    }
}

/// Taylor coefficients `a_0..a_κ` of the graph `dep = G(param_p + t)` of `r = 0`.
pub(crate) fn graph_coefficients<S: Scalar>(r: &Poly2, x: &S, y: &S, side: Side, kappa: usize) -> Result<Vec<S>> {
    // On the y-side the graph is y = Y(x); on the x-side it is x = X(y).
    let (param, dep, dsym, which) = match side {
        Side::Y => (x, y, (0, 1), "R_y"),
        Side::X => (y, x, (1, 0), "R_x"),
    };
    let slope = eval_poly(&r.partial(dsym.0, dsym.1), x, y);
    let slope_inv = slope.inv().ok_or(Error::VanishingPartial { which })?;
    let zero = x.zero_like();
    let n = kappa + 1;
    let mut p = vec![zero.clone(); n];
    p[0] = param.clone();
    if n > 1 {
        p[1] = x.one_like();
    }
    let mut a = vec![zero; n];
    a[0] = dep.clone();
    for k in 1..n {
        let f = match side {
            Side::Y => eval_poly_series(r, &p, &a),
            Side::X => eval_poly_series(r, &a, &p),
        };
        a[k] = f[k].mul(&slope_inv).neg();
    }
    Ok(a)
}

fn factorial<S: Scalar>(like: &S, k: usize) -> S {
    let f: Rational = (1..=k as i64).fold(int(1), |acc, i| acc * int(i));
    like.lift(&f)
}

/// Jets of the disc `ζ ↦ (param(ζ), G(param(ζ)))` through `(x, y)`.
///
/// `side` picks the graph direction: `Side::Y` is `y = Y(x)` (needs `R_y ≠ 0`),
/// `Side::X` is `x = X(y)`. The disc defaults to `param' = 1`, higher
/// parameter jets 0; `disc` overrides with `(param', param'', …)`.
pub fn local_graph_series<S: Scalar>(
    c: &CurveSpec,
    base: (S, S),
    side: Side,
    kappa: usize,
    disc: Option<&[S]>,
    cfg: &EvalConfig,
) -> Result<SeriesPoint<S>> {
    let (x, y) = base;
    on_curve(&c.r, &x, &y, cfg)?;
    let a = graph_coefficients(&c.r, &x, &y, side, kappa)?;
    let n = kappa + 1;
    let zero = x.zero_like();
    // t(ζ) = param(ζ) − param_p as a series in ζ.
    let mut t = vec![zero.clone(); n];
    match disc {
        None => {
            if n > 1 {
                t[1] = x.one_like();
            }
        }
        Some(j) => {
            if j.len() < kappa {
                return Err(Error::MissingJet { needed: kappa, available: j.len() });
            }
            for k in 1..n {
                t[k] = j[k - 1].mul(&factorial(&x, k).inv().expect("k! is nonzero"));
            }
        }
    }
    let mut dep = vec![zero.clone(); n];
    let mut tp = vec![zero.clone(); n];
    tp[0] = x.one_like();
    for ak in &a {
        for (d, v) in dep.iter_mut().zip(&tp) {
            *d = d.add(&ak.mul(v));
        }
        tp = series_mul(&tp, &t);
    }
    let mut param = t;
    let param_p = match side {
        Side::Y => x.clone(),
        Side::X => y.clone(),
    };
    param[0] = param_p;
    let to_jets = |s: Vec<S>| -> Vec<S> { s.into_iter().enumerate().map(|(k, v)| v.mul(&factorial(&x, k))).collect() };
    let (x_jets, y_jets) = match side {
        Side::Y => (to_jets(param), to_jets(dep)),
        Side::X => (to_jets(dep), to_jets(param)),
    };
    Ok(SeriesPoint { curve: c.clone(), x: x.clone(), y, x_jets, y_jets })
}

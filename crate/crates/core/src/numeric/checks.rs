use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generator::{generate, golden_elimination_forms, trivialization_change};
use crate::jetalgebra::Side;
use crate::numeric::eval::{eval_with, PointValues};
use crate::numeric::series::on_curve;
use crate::numeric::{eval_jet_expression, eval_poly, local_graph_series, EvalConfig, Mode, Scalar};
use crate::polycore::CurveSpec;
use crate::rational::frac;

fn point_string<S: Scalar>(x: &S, y: &S) -> String {
    format!("{x},{y}")
}

/// Comparison of the elimination-built form of order 2 or 3 with the recursion.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EliminationReport {
    pub order: usize,
    /// `E.left − J.left` on the y-jets.
    pub left_difference: String,
    /// `E.right − J.right` on the x-jets.
    pub right_difference: String,
    /// The two differences carry the same value, i.e. they differ by circulation terms only.
    pub circulation_equivalent: bool,
    /// `E.left = J.left` as plain values at this point.
    pub values_equal: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AgreementReport {
    pub check: &'static str,
    pub kappa: usize,
    pub curve: String,
    pub point: String,
    pub mode: Mode,
    pub left: String,
    pub right: String,
    pub max_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elimination: Option<EliminationReport>,
    pub pass: bool,
}

/// Evaluates both sides of `J^κ` on one graph disc through `base` and compares.
pub fn check_generator_agreement<S: Scalar>(kappa: usize, c: &CurveSpec, base: (S, S), cfg: &EvalConfig) -> Result<AgreementReport> {
    let point = point_string(&base.0, &base.1);
    let s = local_graph_series(c, base, Side::Y, kappa, None, cfg)?;
    let g = generate(kappa)?;
    let left = eval_jet_expression(&g.left, &s, cfg)?;
    let right = eval_jet_expression(&g.right, &s, cfg)?;
    let mut max_residual = left.sub(&right).magnitude();
    let mut pass = left.close_to(&right, cfg);

    let elimination = match kappa {
        2 | 3 => {
            let e = &golden_elimination_forms()[kappa - 2];
            let el = eval_jet_expression(&e.left, &s, cfg)?;
            let er = eval_jet_expression(&e.right, &s, cfg)?;
            let dl = el.sub(&left);
            let dr = er.sub(&right);
            let circulation_equivalent = dl.close_to(&dr, cfg);
            max_residual = max_residual.max(dl.sub(&dr).magnitude());
            pass &= circulation_equivalent;
            Some(EliminationReport {
                order: kappa,
                left_difference: dl.to_string(),
                right_difference: dr.to_string(),
                circulation_equivalent,
                values_equal: el.close_to(&left, cfg),
            })
        }
        _ => None,
    };

    Ok(AgreementReport {
        check: "agreement",
        kappa,
        curve: c.r.to_string(),
        point,
        mode: S::MODE,
        left: left.to_string(),
        right: right.to_string(),
        max_residual,
        elimination,
        pass,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RoundtripReport {
    pub check: &'static str,
    pub kappa: usize,
    pub curve: String,
    pub point: String,
    pub mode: Mode,
    pub x_jets: Vec<String>,
    pub y_jets: Vec<String>,
    pub returned: Vec<String>,
    pub max_residual: f64,
    pub pass: bool,
}

/// A fixed, non-degenerate choice `x^(k) = (−1)^(k+1)·(k+2)/(2k+1)` of `κ` jets.
pub fn default_disc_jets<S: Scalar>(like: &S, kappa: usize) -> Vec<S> {
    (1..=kappa as i64)
        .map(|k| {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            like.lift(&frac(sign * (k + 2), 2 * k + 1))
        })
        .collect()
}

/// Maps x-jets to y-jets with the trivialization change and back with its mirror.
pub fn check_trivialization_roundtrip<S: Scalar>(
    kappa: usize,
    c: &CurveSpec,
    base: (S, S),
    x_jets: Option<&[S]>,
    cfg: &EvalConfig,
) -> Result<RoundtripReport> {
    let (x, y) = base;
    on_curve(&c.r, &x, &y, cfg)?;
    let map = trivialization_change(kappa)?;
    let input = match x_jets {
        Some(j) if j.len() < kappa => return Err(Error::MissingJet { needed: kappa, available: j.len() }),
        Some(j) => j[..kappa].to_vec(),
        None => default_disc_jets(&x, kappa),
    };
    let mut vals = PointValues::new(&c.r, x.clone(), y.clone());
    let mut xs = vec![x.clone()];
    xs.extend(input.iter().cloned());
    let mut ys = vec![y.clone()];
    for comp in &map.components {
        ys.push(eval_with(comp, &mut vals, &xs, &[], cfg)?);
    }
    let mut back = vec![x.clone()];
    for comp in &map.components {
        back.push(eval_with(&comp.mirror(), &mut vals, &ys, &[], cfg)?);
    }
    let mut max_residual: f64 = 0.0;
    let mut pass = true;
    for (a, b) in xs.iter().zip(&back).skip(1) {
        max_residual = max_residual.max(a.sub(b).magnitude());
        pass &= a.close_to(b, cfg);
    }
    let strs = |v: &[S]| v.iter().skip(1).map(|s| s.to_string()).collect::<Vec<_>>();
    Ok(RoundtripReport {
        check: "roundtrip",
        kappa,
        curve: c.r.to_string(),
        point: point_string(&x, &y),
        mode: S::MODE,
        x_jets: strs(&xs),
        y_jets: strs(&ys),
        returned: strs(&back),
        max_residual,
        pass,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiniteDifferenceReport {
    pub check: &'static str,
    pub curve: String,
    pub point: String,
    pub step: f64,
    /// Series values `Y'`, `Y''`.
    pub series: [f64; 2],
    /// Central-difference values `Y'`, `Y''`.
    pub differences: [f64; 2],
    pub max_relative_error: f64,
    pub pass: bool,
}

/// Solves `R(x, ·) = 0` by Newton from `guess`.
fn solve_graph(c: &CurveSpec, x: f64, guess: f64) -> Result<f64> {
    let ry = c.r.partial(0, 1);
    let x = Complex64::new(x, 0.0);
    let mut y = Complex64::new(guess, 0.0);
    for _ in 0..100 {
        let d = eval_poly(&ry, &x, &y);
        if d.norm() == 0.0 {
            break;
        }
        let step = eval_poly(&c.r, &x, &y) / d;
        y -= step;
        if step.norm() <= 1e-15 * y.norm().max(1.0) {
            return Ok(y.re);
        }
    }
    Err(Error::Singular(format!("Newton did not converge on the graph at x = {x}")))
}

/// Compares series jets `Y'`, `Y''` of the graph `y = Y(x)` with central differences.
pub fn finite_difference_check(c: &CurveSpec, base: (f64, f64), step: f64, rel_tol: f64) -> Result<FiniteDifferenceReport> {
    let cfg = EvalConfig::default();
    if !(base.0.is_finite() && base.1.is_finite() && step > 0.0) {
        return Err(Error::Invalid("base point and step must be finite, step positive".into()));
    }
    let s = local_graph_series(c, (Complex64::new(base.0, 0.0), Complex64::new(base.1, 0.0)), Side::Y, 2, None, &cfg)?;
    let series = [s.y_jets[1].re, s.y_jets[2].re];
    let y0 = solve_graph(c, base.0, base.1)?;
    let yp = solve_graph(c, base.0 + step, y0)?;
    let ym = solve_graph(c, base.0 - step, y0)?;
    let differences = [(yp - ym) / (2.0 * step), (yp - 2.0 * y0 + ym) / (step * step)];
    let max_relative_error = series
        .iter()
        .zip(&differences)
        .map(|(a, b)| (a - b).abs() / a.abs().max(1.0))
        .fold(0.0, f64::max);
    Ok(FiniteDifferenceReport {
        check: "finite_difference",
        curve: c.r.to_string(),
        point: format!("{},{}", base.0, base.1),
        step,
        series,
        differences,
        max_relative_error,
        pass: max_relative_error <= rel_tol,
    })
}

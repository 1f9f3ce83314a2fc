use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generator::generate;
use crate::jetalgebra::Side;
use crate::numeric::eval::{eval_with, PointValues};
use crate::numeric::series::{graph_coefficients, series_mul};
use crate::numeric::{eval_poly, EvalConfig, Mode};
use crate::polycore::{infinity_chart, CurveSpec};
use crate::rational::to_f64;

/// Allowed distance between the fitted and the predicted log-log slope.
pub const SLOPE_TOLERANCE: f64 = 0.2;

/// All complex roots of `Σ coeffs[k] z^k` (Durand–Kerner, then Newton polish),
/// sorted by decreasing real part, then decreasing imaginary part.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|z| z.norm() == 0.0) {
        c.pop();
    }
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = c[n];
    let c: Vec<Complex64> = c.iter().map(|z| z / lead).collect();
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a);
    let deriv = |z: Complex64| {
        c.iter().enumerate().skip(1).rev().fold(Complex64::new(0.0, 0.0), |acc, (k, a)| acc * z + a * k as f64)
    };
    let radius = 1.0 + c[..n].iter().map(|z| z.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * radius.min(2.0)).collect();
    let mut converged = false;
    for _ in 0..2000 {
        let mut change: f64 = 0.0;
        for i in 0..n {
            let zi = roots[i];
            let denom = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (zi - roots[j]));
            if denom.norm() == 0.0 {
                roots[i] += Complex64::new(1e-8, 1e-8);
                continue;
            }
            let delta = eval(zi) / denom;
            roots[i] = zi - delta;
            change = change.max(delta.norm());
        }
        if change <= 1e-15 * radius {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Singular("root finder did not converge".into()));
    }
    for z in roots.iter_mut() {
        for _ in 0..3 {
            let d = deriv(*z);
            if d.norm() == 0.0 {
                break;
            }
            *z -= eval(*z) / d;
        }
    }
    roots.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
    Ok(roots)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeSample {
    pub y2: f64,
    pub x2: [f64; 2],
    pub abs_value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeReport {
    pub check: &'static str,
    pub kappa: usize,
    pub curve: String,
    /// The root `x₂` of `R₂(x₂, 0)` the branch starts from, as `re,im`.
    pub point: String,
    pub mode: Mode,
    pub expected: i64,
    pub slope: f64,
    pub samples: Vec<ProbeSample>,
    pub pass: bool,
}

/// Newton on `R₂(·, y₂) = 0`.
fn newton(r2: &crate::polycore::Poly2, r2x: &crate::polycore::Poly2, y2: f64, guess: Complex64) -> Result<Complex64> {
    let y = Complex64::new(y2, 0.0);
    let mut x = guess;
    for _ in 0..100 {
        let d = eval_poly(r2x, &x, &y);
        if d.norm() == 0.0 {
            break;
        }
        let step = eval_poly(r2, &x, &y) / d;
        x -= step;
        if step.norm() <= 1e-15 * x.norm().max(1.0) {
            return Ok(x);
        }
    }
    Err(Error::Singular(format!("Newton continuation failed at y2 = {y2}")))
}

/// Least-squares slope of `ln|v|` against `ln y₂`.
fn fit_slope(samples: &[ProbeSample]) -> f64 {
    let pts: Vec<(f64, f64)> = samples.iter().map(|s| (s.y2.ln(), s.abs_value.ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

/// Follows the curve towards a point at infinity in the chart `U₂` and fits the
/// decay rate of the left generator, which should be `|y₂|^(d−κ−2)`.
///
/// Points are `y₂ = t` for nine values of `t` spread log-uniformly over
/// `[1e−3, 1e−2]`; the disc is `y₂(ζ) = t + ζ` on the local graph `x₂ = X₂(y₂)`.
pub fn probe_infinity_vanishing(kappa: usize, c: &CurveSpec, cfg: &EvalConfig) -> Result<ProbeReport> {
    if kappa == 0 {
        return Err(Error::ZeroOrder);
    }
    if !c.adapted.infinity_transversal {
        return Err(Error::NotTransversal);
    }
    let d = c.d as usize;
    if d < kappa + 3 {
        return Err(Error::Invalid(format!("probe needs degree at least order + 3, got d = {d}, order = {kappa}")));
    }
    let r2 = infinity_chart(c)?;
    let r2x = r2.partial(1, 0);
    let at_infinity: Vec<Complex64> = r2.restrict_y_zero().coeffs().iter().map(|q| Complex64::new(to_f64(q), 0.0)).collect();
    let root = *polynomial_roots(&at_infinity)?.first().ok_or_else(|| Error::Invalid("no points at infinity".into()))?;
    let g = generate(kappa)?;

    let mut samples = Vec::new();
    let mut x2 = root;
    for k in 0..=8 {
        let t = 10f64.powf(-3.0 + k as f64 / 8.0);
        x2 = newton(&r2, &r2x, t, x2)?;
        let tz = Complex64::new(t, 0.0);
        let a = graph_coefficients(&r2, &x2, &tz, Side::X, kappa)?;
        // y₀ = 1/y₂ = Σ (−1)^j ζ^j / t^(j+1), x₀ = x₂·y₀.
        let b: Vec<Complex64> = (0..=kappa).map(|j| Complex64::new((-1f64).powi(j as i32) / t.powi(j as i32 + 1), 0.0)).collect();
        let x0 = series_mul(&a, &b);
        let mut fact = 1.0;
        let y_jets: Vec<Complex64> = b
            .iter()
            .enumerate()
            .map(|(j, v)| {
                if j > 0 {
                    fact *= j as f64;
                }
                v * fact
            })
            .collect();
        let mut vals = PointValues::new(&c.r, x0[0], b[0]);
        let v = eval_with(&g.left, &mut vals, &y_jets, &[], cfg)?;
        if v.norm() == 0.0 || !v.norm().is_finite() {
            return Err(Error::Singular(format!("generator value {v} at y2 = {t}")));
        }
        samples.push(ProbeSample { y2: t, x2: [x2.re, x2.im], abs_value: v.norm() });
    }
    let slope = fit_slope(&samples);
    let expected = d as i64 - kappa as i64 - 2;
    Ok(ProbeReport {
        check: "probe",
        kappa,
        curve: c.r.to_string(),
        point: format!("{},{}", root.re, root.im),
        mode: Mode::Float,
        expected,
        slope,
        samples,
        pass: (slope - expected as f64).abs() <= SLOPE_TOLERANCE,
    })
}

//! `jetdiff`: generate, verify, count and probe generating jet differentials of
//! plane curves from the command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad input.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use jetdiff::generator::{faa_expression, generate, trivialization_change};
use jetdiff::infinity::{symbolic_transfer_check, verify_uniform_order};
use jetdiff::jetalgebra::{JetExpression, Side};
use jetdiff::numeric::{
    check_generator_agreement, check_trivialization_roundtrip, local_graph_series, probe_infinity_vanishing, EvalConfig, Mode, Scalar,
};
use jetdiff::polycore::{parse_poly, validate_curve, CurveSpec};
use jetdiff::rational::{parse_rational, to_f64};
use jetdiff::sections::{asymptotic_estimate, count_sections, relative_gap};
use jetdiff::{Error, Rational};

#[derive(Parser, Debug)]
#[command(name = "jetdiff", version, about = "Generating jet differentials of plane curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GraphArg {
    /// `y = Y(x)`, disc parameter `x`.
    Y,
    /// `x = X(y)`, disc parameter `y`.
    X,
}

#[derive(clap::Args, Debug)]
struct NumericArgs {
    /// Curve equation, e.g. "x^4 + y^4 - 2".
    #[arg(long)]
    curve: String,
    /// Base point "x,y".
    #[arg(long)]
    point: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    /// Relative tolerance in float mode.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the generator of the given order.
    Gen {
        #[arg(short = 'k', long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = SideArg::Both)]
        side: SideArg,
    },
    /// Print the order-k derivative of R(x(ζ), y(ζ)).
    Faa {
        #[arg(short = 'k', long)]
        order: u32,
        /// 1 for R(x(ζ)), 2 for R(x(ζ), y(ζ)).
        #[arg(long, default_value_t = 2)]
        vars: u32,
    },
    /// Print y-jets written in x-jets up to the given order.
    Triv {
        #[arg(short = 'k', long)]
        order: usize,
    },
    /// Vanishing order of the generator along the line at infinity.
    Infinity {
        #[arg(short = 'k', long)]
        order: usize,
        #[arg(short = 'd', long)]
        degree: u32,
        /// Also expand on this concrete curve (orders up to 3).
        #[arg(long)]
        curve: Option<String>,
    },
    /// Count sections of weighted degree m.
    Count {
        #[arg(short = 'k', long)]
        order: usize,
        #[arg(short = 'm', long)]
        weight: u64,
        #[arg(short = 'd', long)]
        degree: u32,
        /// List every composition with its degree budget.
        #[arg(long)]
        breakdown: bool,
        /// Add the harmonic-number model and its relative gap.
        #[arg(long)]
        asymptotic: bool,
    },
    /// Evaluate both sides of the generator on a curve point and compare.
    Eval {
        #[arg(short = 'k', long)]
        order: usize,
        #[command(flatten)]
        num: NumericArgs,
    },
    /// Map x-jets to y-jets and back.
    Roundtrip {
        #[arg(short = 'k', long)]
        order: usize,
        #[command(flatten)]
        num: NumericArgs,
        /// x-jets "x',x'',…"; a fixed choice is used when omitted.
        #[arg(long)]
        jets: Option<String>,
    },
    /// Fit the decay rate of the generator near the line at infinity.
    Probe {
        #[arg(short = 'k', long)]
        order: usize,
        #[arg(long)]
        curve: String,
    },
    /// Jets of a disc on the local graph through a point.
    Series {
        #[arg(short = 'k', long)]
        order: usize,
        #[command(flatten)]
        num: NumericArgs,
        #[arg(long, value_enum, default_value_t = GraphArg::Y)]
        graph: GraphArg,
        /// Parameter jets "u',u'',…"; defaults to u' = 1.
        #[arg(long)]
        jets: Option<String>,
    },
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonUniform(_) | Error::Singular(_) | Error::ResidualPole { .. } => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(m)) => {
            eprintln!("check failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn usage(m: impl Into<String>) -> Failure {
    Failure::Usage(m.into())
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("reports serialize")),
        Format::Text => print!("{}", text()),
    }
}

fn parse_curve(text: &str) -> Result<CurveSpec, Failure> {
    Ok(validate_curve(parse_poly(text)?)?)
}

fn parse_list(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).collect()
}

fn parse_exact(text: &str) -> Result<Vec<Rational>, Failure> {
    parse_list(text).into_iter().map(|s| parse_rational(s).map_err(Failure::from)).collect()
}

/// Rational or decimal components as complex floats.
fn parse_float(text: &str) -> Result<Vec<Complex64>, Failure> {
    parse_list(text)
        .into_iter()
        .map(|s| match parse_rational(s) {
            Ok(q) => Ok(Complex64::new(to_f64(&q), 0.0)),
            Err(_) => s.parse::<f64>().map(|v| Complex64::new(v, 0.0)).map_err(|_| usage(format!("not a number: {s:?}"))),
        })
        .collect()
}

fn pair<S: Clone>(v: Vec<S>) -> Result<(S, S), Failure> {
    match v.as_slice() {
        [x, y] => Ok((x.clone(), y.clone())),
        _ => Err(usage("a point is written \"x,y\"")),
    }
}

fn config(num: &NumericArgs) -> Result<EvalConfig, Failure> {
    if !(num.tol > 0.0 && num.tol.is_finite()) {
        return Err(usage("--tol must be a positive number"));
    }
    Ok(EvalConfig { tolerance: num.tol, ..EvalConfig::default() })
}

fn check_order(k: usize) -> Result<(), Failure> {
    if k == 0 {
        Err(usage("--order must be at least 1"))
    } else {
        Ok(())
    }
}

fn render_side(name: &str, e: &JetExpression) -> String {
    let denom = match e.side() {
        Side::X => "R[1,0]",
        Side::Y => "R[0,1]",
    };
    format!("{name} ({}-jets over {denom}):\n{e}\n", e.side().own_letter())
}

fn run(cli: &Cli) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Gen { order, side } => {
            check_order(*order)?;
            let g = generate(*order)?;
            match side {
                SideArg::Both => emit(f, &*g, || {
                    format!("{}{}", render_side(&format!("J^{order} left"), &g.left), render_side(&format!("J^{order} right"), &g.right))
                }),
                SideArg::Left => emit(f, &g.left, || render_side(&format!("J^{order} left"), &g.left)),
                SideArg::Right => emit(f, &g.right, || render_side(&format!("J^{order} right"), &g.right)),
            }
            Ok(true)
        }
        Command::Faa { order, vars } => {
            let e = faa_expression(*order, *vars)?;
            emit(f, &e, || format!("R^({order}) =\n{e}\n"));
            Ok(true)
        }
        Command::Triv { order } => {
            let t = trivialization_change(*order)?;
            emit(f, &t, || {
                t.components.iter().enumerate().map(|(i, c)| format!("y^({}) =\n{c}\n", i + 1)).collect::<String>()
            });
            Ok(true)
        }
        Command::Infinity { order, degree, curve } => {
            check_order(*order)?;
            if *degree == 0 {
                return Err(usage("--degree must be at least 1"));
            }
            let g = generate(*order)?;
            let r = verify_uniform_order(&g, *degree)?;
            let symbolic = match curve {
                Some(c) => Some(symbolic_transfer_check(&parse_curve(c)?, *order)?),
                None => None,
            };
            let pass = symbolic.as_ref().is_none_or(|s| s.pass);
            #[derive(Serialize)]
            struct Out<'a> {
                bookkeeping: &'a jetdiff::infinity::InfinityReport,
                #[serde(skip_serializing_if = "Option::is_none")]
                symbolic: Option<&'a jetdiff::infinity::TransferCheck>,
            }
            emit(f, &Out { bookkeeping: &r, symbolic: symbolic.as_ref() }, || {
                let mut s = format!(
                    "order {}, degree {}: uniform order {} ({})\n",
                    r.kappa,
                    r.d,
                    r.value,
                    if r.vanishes { "vanishes at infinity" } else { "holomorphic, not vanishing" }
                );
                if let Some(t) = &symbolic {
                    let obs = t.observed.map_or("none (identically zero)".to_string(), |v| v.to_string());
                    s += &format!(
                        "symbolic transfer: expected {}, observed {obs}, denominator power {}: {}\n",
                        t.expected,
                        t.denominator_power,
                        if t.pass { "PASS" } else { "FAIL" }
                    );
                }
                s
            });
            Ok(pass)
        }
        Command::Count { order, weight, degree, breakdown, asymptotic } => {
            let c = count_sections(*order, *weight, *degree, *breakdown)?;
            let model = if *asymptotic { Some(asymptotic_estimate(*order, *weight, *degree)?) } else { None };
            let gap = model.as_ref().map(|m| relative_gap(&Rational::from_integer(c.total.clone().into()), m));
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                count: &'a jetdiff::sections::SectionCount,
                #[serde(skip_serializing_if = "Option::is_none")]
                model: Option<String>,
                #[serde(skip_serializing_if = "Option::is_none")]
                relative_gap: Option<f64>,
            }
            let out = Out { count: &c, model: model.as_ref().map(|m| m.to_string()), relative_gap: gap };
            emit(f, &out, || {
                let mut s = format!("{}\n", c.total);
                if let Some(rows) = &c.per_composition {
                    for r in rows {
                        let parts: Vec<String> = r.parts.iter().map(u64::to_string).collect();
                        s += &format!("({})  delta {}  dim {}\n", parts.join(","), r.delta, r.dim);
                    }
                }
                if let (Some(m), Some(g)) = (&model, gap) {
                    s += &format!("model {m} (~{:.6e}), relative gap {g:.6}\n", to_f64(m));
                }
                s
            });
            Ok(true)
        }
        Command::Eval { order, num } => {
            check_order(*order)?;
            let c = parse_curve(&num.curve)?;
            let cfg = config(num)?;
            match num.mode {
                ModeArg::Exact => eval_report(f, *order, &c, pair(parse_exact(&num.point)?)?, &cfg),
                ModeArg::Float => eval_report(f, *order, &c, pair(parse_float(&num.point)?)?, &cfg),
            }
        }
        Command::Roundtrip { order, num, jets } => {
            check_order(*order)?;
            let c = parse_curve(&num.curve)?;
            let cfg = config(num)?;
            match num.mode {
                ModeArg::Exact => {
                    let j = jets.as_deref().map(parse_exact).transpose()?;
                    roundtrip_report(f, *order, &c, pair(parse_exact(&num.point)?)?, j, &cfg)
                }
                ModeArg::Float => {
                    let j = jets.as_deref().map(parse_float).transpose()?;
                    roundtrip_report(f, *order, &c, pair(parse_float(&num.point)?)?, j, &cfg)
                }
            }
        }
        Command::Probe { order, curve } => {
            check_order(*order)?;
            let c = parse_curve(curve)?;
            let r = probe_infinity_vanishing(*order, &c, &EvalConfig::default())?;
            emit(f, &r, || {
                let mut s = format!("probe order {} on {} from x2 = {}\n", r.kappa, r.curve, r.point);
                for p in &r.samples {
                    s += &format!("  y2 = {:.6e}  |J| = {:.6e}\n", p.y2, p.abs_value);
                }
                s + &format!("slope {:.4}, expected {}: {}\n", r.slope, r.expected, verdict(r.pass))
            });
            Ok(r.pass)
        }
        Command::Series { order, num, graph, jets } => {
            check_order(*order)?;
            let c = parse_curve(&num.curve)?;
            let cfg = config(num)?;
            let side = match graph {
                GraphArg::Y => Side::Y,
                GraphArg::X => Side::X,
            };
            match num.mode {
                ModeArg::Exact => {
                    let j = jets.as_deref().map(parse_exact).transpose()?;
                    series_report(f, *order, &c, pair(parse_exact(&num.point)?)?, side, j, &cfg)
                }
                ModeArg::Float => {
                    let j = jets.as_deref().map(parse_float).transpose()?;
                    series_report(f, *order, &c, pair(parse_float(&num.point)?)?, side, j, &cfg)
                }
            }
        }
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn eval_report<S: Scalar>(f: Format, k: usize, c: &CurveSpec, base: (S, S), cfg: &EvalConfig) -> Outcome {
    let r = check_generator_agreement(k, c, base, cfg)?;
    emit(f, &r, || {
        let mode = if S::MODE == Mode::Exact { "exact" } else { "float" };
        let mut s = format!("order {} on {} at {} ({mode})\n", r.kappa, r.curve, r.point);
        s += &format!("left:  {}\nright: {}\n", r.left, r.right);
        if let Some(e) = &r.elimination {
            s += &format!(
                "elimination form: circulation-equivalent {}, equal values {}\n",
                e.circulation_equivalent, e.values_equal
            );
        }
        s + &format!("max residual {:e}: {}\n", r.max_residual, verdict(r.pass))
    });
    Ok(r.pass)
}

fn roundtrip_report<S: Scalar>(f: Format, k: usize, c: &CurveSpec, base: (S, S), jets: Option<Vec<S>>, cfg: &EvalConfig) -> Outcome {
    let r = check_trivialization_roundtrip(k, c, base, jets.as_deref(), cfg)?;
    emit(f, &r, || {
        format!(
            "order {} on {} at {}\nx-jets:   {}\ny-jets:   {}\nreturned: {}\nmax residual {:e}: {}\n",
            r.kappa,
            r.curve,
            r.point,
            r.x_jets.join(", "),
            r.y_jets.join(", "),
            r.returned.join(", "),
            r.max_residual,
            verdict(r.pass)
        )
    });
    Ok(r.pass)
}

fn series_report<S: Scalar>(
    f: Format,
    k: usize,
    c: &CurveSpec,
    base: (S, S),
    side: Side,
    jets: Option<Vec<S>>,
    cfg: &EvalConfig,
) -> Outcome {
    let s = local_graph_series(c, base, side, k, jets.as_deref(), cfg)?;
    emit(f, &s, || {
        let line = |name: char, v: &[S]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ").to_string() + &format!("  [{name}]\n");
        format!("{}{}", line('x', &s.x_jets), line('y', &s.y_jets))
    });
    Ok(true)
}

//! Concrete verification on curve points: local power-series graphs, evaluation
//! of jet expressions, two-sided agreement, trivialization round trips and
//! vanishing probes near the line at infinity.
//!
//! Everything is generic over [`Scalar`], implemented for exact rationals,
//! exact elements of a radical extension `Q[β]/(βⁿ − c)`, and `Complex64`.

mod algebraic;
mod checks;
mod eval;
mod probe;
mod scalar;
mod series;

pub use algebraic::AlgebraicNumber;
pub use checks::{
    check_generator_agreement, check_trivialization_roundtrip, default_disc_jets, finite_difference_check, AgreementReport,
    EliminationReport, FiniteDifferenceReport, RoundtripReport,
};
pub use eval::{eval_jet_expression, faa_residuals, PointValues};
pub use probe::{polynomial_roots, probe_infinity_vanishing, ProbeReport, ProbeSample};
pub use scalar::{eval_poly, EvalConfig, Mode, Scalar};
pub use series::{local_graph_series, SeriesPoint};

//! Exact sparse bivariate polynomials over the rationals, curve validation and
//! the affine chart at infinity.

mod curve;
mod parse;
mod poly2;
mod upoly;

pub use curve::{chart_partial_transfer, infinity_chart, validate_curve, AdaptedReport, ChartTransferReport, CurveSpec};
pub use parse::parse_poly;
pub use poly2::{Degree, Poly2, PolyTerm};
pub use upoly::UPoly;

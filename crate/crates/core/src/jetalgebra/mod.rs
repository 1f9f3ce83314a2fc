//! Formal derivative symbols `R[i,j]` and side-tagged jet expressions.
//!
//! The symbols are free differential indeterminates: no relation coming from a
//! particular curve is imposed here. Specialization to a curve happens in
//! [`crate::numeric`].

mod dpoly;
mod expr;
mod jet;

pub use dpoly::{DMonomial, DPoly, DSym};
pub use expr::{Coefficient, JetExpression, TermKey};
pub use jet::{jet_weight, JetMonomial, Side};

//! Exact symbolic engine for the generating jet differentials of smooth plane
//! projective curves.
//!
//! The crate is organised bottom-up:
//!
//! * [`polycore`] holds exact bivariate polynomials over the rationals, curve
//!   validation and the transfer to the affine chart at infinity.
//! * [`jetalgebra`] is the formal algebra of derivative symbols `R[i,j]` and
//!   side-tagged jet expressions with total differentiation.
//! * [`generator`] builds the generators `J^k`, the Faà di Bruno expansion and
//!   the explicit trivialization-change maps.
//! * [`infinity`] does the vanishing-order bookkeeping on the line at infinity.
//! * [`sections`] counts global sections of the Green–Griffiths bundle.
//! * [`numeric`] checks all of the above on concrete curve points.

pub mod error;
pub mod generator;
pub mod infinity;
pub mod jetalgebra;
pub mod mpoly;
pub mod numeric;
pub mod polycore;
pub mod rational;
pub mod sections;

pub use error::{Error, Result};
pub use rational::Rational;

//! The generating jet differentials `J^k`, the Faà di Bruno expansion of
//! `d^k R(x(ζ), y(ζ))` and the explicit trivialization-change maps.

mod faa;
mod generate;
mod golden;
mod trivialization;

pub use faa::{faa_di_bruno, faa_expression, FaaTerm, LetterAssignment};
pub use generate::{cancel_circulation_pairs, generate, recursion_step, GeneratorPair};
pub use golden::{golden_elimination_forms, ratio_term, RatioTerm};
pub use trivialization::{trivialization_change, TrivializationMap};

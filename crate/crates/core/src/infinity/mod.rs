//! Behaviour of the generators on the line at infinity, seen in the chart
//! `y₂ = 1/y`, `x₂ = x/y`.

mod order;
mod symbolic;
mod transfer;

pub use order::{monomial_infinity_order, verify_uniform_order, InfinityReport, MonomialOrder};
pub use symbolic::{symbolic_transfer_check, TermValuation, TransferCheck, SYMBOLIC_MAX_ORDER};
pub use transfer::{transfer_jet, TransferJet};

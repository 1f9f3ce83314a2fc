//! Counting global sections built from products of the generators:
//! weighted compositions, the line-bundle dimension formula and its
//! brute-force linear-algebra oracle, and the harmonic-number asymptotics.

mod compositions;
mod count;
mod quotient;

pub use compositions::{composition_count, enumerate_compositions, Compositions, WeightedComposition};
pub use count::{
    asymptotic_estimate, composition_weight_sum, count_sections, delta_degree, dim_h0, harmonic_model, harmonic_number,
    relative_gap, CompositionEntry, SectionCount,
};
pub use quotient::{brute_force_quotient_dim, DEFAULT_DESK_CAP};

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("zero denominator in coefficient at byte {offset}")]
    ZeroDenominator { offset: usize },

    #[error("declared degree {declared} does not match polynomial degree {actual}")]
    DegreeMismatch { declared: u32, actual: String },

    #[error("the zero polynomial does not define a curve")]
    ZeroCurve,

    #[error("foreign jet variable of order {order} cannot be eliminated by the first-order relation")]
    ForeignOrder { order: usize },

    #[error("expressions live on different sides")]
    SideMismatch,

    #[error("invalid derivative symbol R[{i},{j}]: total order must be at least 1")]
    InvalidSymbol { i: u32, j: u32 },

    #[error("order must be at least 1")]
    ZeroOrder,

    #[error("base point is not on the curve (residual {residual})")]
    NotOnCurve { residual: String },

    #[error("partial derivative {which} vanishes at the base point")]
    VanishingPartial { which: &'static str },

    #[error("jets of order {needed} required, only {available} available")]
    MissingJet { needed: usize, available: usize },

    #[error("malformed monomial: {0}")]
    MalformedMonomial(String),

    #[error("infinity orders are not uniform: {0}")]
    NonUniform(String),

    #[error("residual pole of order {order} on the line at infinity")]
    ResidualPole { order: i64 },

    #[error("curve is not transversal to the line at infinity")]
    NotTransversal,

    #[error("degree {delta} exceeds the configured cap {cap}")]
    DeskScale { delta: u32, cap: u32 },

    #[error("symbolic transfer supports order at most {max}, got {order}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("near-singular evaluation: {0}")]
    Singular(String),

    #[error("{0}")]
    Invalid(String),
}

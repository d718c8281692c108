use thiserror::Error;

/// Domain errors shared across the crate. The CLI reports these on stderr by
/// name and exits with status 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The closed-form product formula is stated only for nonnegative weights
    /// with the sector order equal to the stabilizer lcm.
    #[error("{0}")]
    ClosedFormInapplicable(String),

    /// Quotient constructions require every weight to be >= 1.
    #[error("all weights must be >= 1")]
    PositivityRequired,

    /// Quotient constructions require the sector order to equal the lcm of
    /// the weights.
    #[error("sector order {order} differs from the weight lcm {lcm}")]
    OrderMismatch { order: u64, lcm: u64 },

    /// All weights are zero, so there is no lattice kernel to compute.
    #[error("all weights are zero")]
    DegenerateWeights,

    /// The lcm of the weights does not fit in a u64, so sectors cannot be
    /// enumerated.
    #[error("weight lcm exceeds the representable sector-order range")]
    OrderTooLarge,

    /// A sector order must be a positive integer.
    #[error("sector order must be >= 1")]
    InvalidOrder,

    /// Malformed serialized data.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ClosedFormInapplicable(_) => "ClosedFormInapplicable",
            Error::PositivityRequired => "PositivityRequired",
            Error::OrderMismatch { .. } => "OrderMismatch",
            Error::DegenerateWeights => "DegenerateWeights",
            Error::OrderTooLarge => "OrderTooLarge",
            Error::InvalidOrder => "InvalidOrder",
            Error::Parse(_) => "ParseError",
        }
    }
}

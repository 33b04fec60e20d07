use thiserror::Error;

/// Errors raised by the exact engine.
///
/// Most of these signal a violated precondition on a series or operator; a
/// few (`StrayMonomial`) can only fire on an internal bug and are kept as
/// errors so identity checks surface them instead of panicking.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "series too short: operator defined to order {available}, argument needs order {needed}"
    )]
    SeriesTooShort { needed: usize, available: usize },

    #[error("bad constant term for {op}: expected {expected}, found {found}")]
    BadConstantTerm {
        op: &'static str,
        expected: &'static str,
        found: String,
    },

    #[error("inner series of a composition must have zero constant term, found {0}")]
    InnerConstantNonzero(String),

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("index ({n}, {k}) exceeds array order {order}")]
    OrderExceeded { n: usize, k: usize, order: usize },

    #[error("stray monomial y^{y_exp} x^{x_exp} in grammar output (expected y x^(mk+r))")]
    StrayMonomial { y_exp: u32, x_exp: u32 },

    #[error("instance too large: {labels} labels exceeds the enumeration cap of {cap}")]
    InstanceTooLarge { labels: usize, cap: usize },

    #[error("not solvable: {0}")]
    NotSolvable(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

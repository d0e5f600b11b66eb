use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("polynomial division is not exact")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("t = ±2 excluded (got t = {0}): discriminant t^2 - 4 is a square")]
    ExcludedTrace(i64),

    #[error("matrix [[{a},{b}],[{c},{d}]] does not have determinant 1")]
    NotUnimodular { a: i64, b: i64, c: i64, d: i64 },

    #[error("discriminant {0} is zero or a perfect square")]
    SquareDiscriminant(i64),

    #[error("form discriminant {found} does not match t^2 - 4 = {expected}")]
    DiscriminantMismatch { expected: i64, found: i64 },

    #[error("braid word parse error at byte {position}: {cause}")]
    Parse { position: usize, cause: String },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("negative link count at (t, n) = ({t}, {n}): |X| = {x_count} but M = {m}")]
    NegativeCount { t: i64, n: i64, x_count: u64, m: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

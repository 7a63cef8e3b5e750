use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the library. Every operation that can fail returns
/// exactly one of these variants; pure total functions return values directly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Generalized sequences are only defined forward; `k` was below the
    /// smallest index the operation supports.
    #[error("generalized sequence index must be at least {min}, got k = {k}")]
    NegativeIndexUnsupported { k: i64, min: i64 },

    /// Binomial coefficients require a nonnegative row index.
    #[error("binomial row index must be nonnegative, got n = {0}")]
    NegativeN(i64),

    /// The coefficient index `i` fell outside `0..=m/2`.
    #[error("coefficient index i = {i} is outside 0..={} for power m = {m}", m / 2)]
    IndexOutOfRange { m: i64, i: i64 },

    /// Power-sum expansions are defined for powers of at least 1.
    #[error("power must be at least 1, got m = {0}")]
    InvalidPower(i64),

    /// An index pair fell outside the domain of a multiple-index identity.
    #[error("{0}")]
    DomainError(String),

    /// A sweep configuration was rejected before any case ran.
    #[error("invalid sweep configuration: {0}")]
    ConfigError(String),

    /// The requested report format is not one of text, json, csv.
    #[error("unknown output format `{0}` (expected text, json, or csv)")]
    UnknownFormat(String),
}

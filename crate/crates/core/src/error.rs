use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A constructor was handed a NaN or infinite component.
    #[error("non-finite component: {0}")]
    NonFinite(f64),

    /// Two operands have incompatible lengths or dimensions.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// Vectors must hold at least one coefficient.
    #[error("vector must not be empty")]
    EmptyVector,

    /// A matrix payload does not describe a square matrix.
    #[error("expected {expected} entries for a {n}x{n} matrix, got {got}")]
    NotSquare { n: usize, expected: usize, got: usize },

    /// The value is a zero divisor; it has no inverse.
    #[error("value lies in the null-cone (zero divisor)")]
    NullCone,

    /// An idempotent channel of the argument vanishes, so the hyperbolic
    /// angle is undefined.
    #[error("channel {channel} has norm below tolerance; angle undefined")]
    ZeroChannel { channel: usize },

    /// A Gram matrix fails the Hermitian symmetry check.
    #[error("metric g{which} is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { which: usize, deviation: f64 },

    /// A Gram matrix is not positive definite.
    #[error("metric g{which} is not positive definite (smallest eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveDefinite { which: usize, min_eigenvalue: f64 },

    /// The operator fails the self-adjointness precondition.
    #[error("operator is not self-adjoint (max entry deviation {0:.3e})")]
    NotSelfAdjoint(f64),

    /// The eigensolver missed its residual target within the iteration budget.
    #[error("eigensolver failed to converge: {0}")]
    ConvergenceFailure(String),

    /// Exhaustive pairing was requested above the supported size.
    #[error("full pairing supports n <= {limit}, got n = {n}")]
    PairingOverflow { n: usize, limit: usize },

    /// Dimension exceeds what an operation supports.
    #[error("dimension {n} exceeds limit {limit} for {what}")]
    TooLarge {
        n: usize,
        limit: usize,
        what: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

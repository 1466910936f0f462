//! Shared error type for the whole crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Every failure mode surfaced by the library.
///
/// Arithmetic and structural misuse are separate variants so callers (CLI,
/// tests) can react to them individually; all variants render a
/// human-readable message and the binary additionally serializes the variant
/// name into its machine-readable error record.
#[derive(Debug, Error)]
pub enum Error {
    /// Division by the zero element of a field.
    #[error("division by zero")]
    DivisionByZero,

    /// Two field elements (or an element and a context) live in different
    /// fields.
    #[error("field descriptor mismatch: {0}")]
    DescriptorMismatch(String),

    /// No embedding exists between the requested fields, or the supplied
    /// generator image does not satisfy the source minimal polynomial.
    #[error("no embedding: {0}")]
    NoEmbedding(String),

    /// A field descriptor failed validation (non-prime p, reducible minimal
    /// polynomial, out-of-range extension degree, ...).
    #[error("invalid field descriptor: {0}")]
    InvalidDescriptor(String),

    /// Polynomials from different rings were combined.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// An identifier is neither a ring variable nor the coefficient-field
    /// generator.
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    /// A Frobenius power was requested for an exponent that is not a power of
    /// the characteristic.
    #[error("{q} is not a power of the characteristic {p}")]
    NotAPowerOfP { q: u64, p: u64 },

    /// Exponent vectors of different lengths were compared.
    #[error("exponent vector length mismatch")]
    LengthMismatch,

    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// The Buchberger S-pair budget was exhausted.
    #[error("resource limit: S-pair budget exhausted after {0} pairs")]
    ResourceLimit(u64),

    /// A colength (or another zero-dimensionality-dependent quantity) was
    /// requested for an ideal whose leading-term ideal misses a pure power of
    /// some variable.
    #[error("ideal is not zero-dimensional: no pure power of `{0}` in the leading term ideal")]
    NotZeroDimensional(String),

    /// The quotient is zero-dimensional but not supported at the origin, so a
    /// global colength would not be a local length.
    #[error("quotient is not supported at the origin: variable `{0}` is not nilpotent modulo the ideal")]
    NotSupportedAtOrigin(String),

    /// The unit ideal showed up where a proper ideal was required.
    #[error("ideal is the unit ideal")]
    UnitIdeal,

    /// The supplied elements are not a system of parameters in the required
    /// sense (wrong count, wrong dimension drop).
    #[error("not a system of parameters: {0}")]
    NotSystemOfParameters(String),

    /// The requested localization is outside the two supported shapes
    /// (rational point, curve prime) or its invariants failed.
    #[error("unsupported localization: {0}")]
    UnsupportedLocalization(String),

    /// A user-asserted minimal prime failed one of the verified containment /
    /// dimension checks.
    #[error("minimal-prime assertion failed verification: {0}")]
    MinhVerification(String),

    /// Not enough Hilbert-Kunz records (or wrong spacing) for the requested
    /// estimator.
    #[error("insufficient records for the requested estimate: {0}")]
    InsufficientRecords(String),

    /// A maximal ideal argument is not in rational-point shape
    /// (one monic linear generator per variable).
    #[error("maximal ideal is not in rational-point shape: {0}")]
    NotMaximalShape(String),

    /// Generic precondition violation for the multiplicity operations.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Scenario configuration errors (unknown keys, missing sections,
    /// inconsistent values).
    #[error("configuration error: {0}")]
    Config(String),

    /// Filesystem-level failure while reading configs or writing outputs.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable tag for the error record emitted by the CLI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::DescriptorMismatch(_) => "descriptor_mismatch",
            Error::NoEmbedding(_) => "no_embedding",
            Error::InvalidDescriptor(_) => "invalid_descriptor",
            Error::RingMismatch(_) => "ring_mismatch",
            Error::UnknownVariable(_) => "unknown_variable",
            Error::NotAPowerOfP { .. } => "not_a_power_of_p",
            Error::LengthMismatch => "length_mismatch",
            Error::Parse(_) => "parse_error",
            Error::ResourceLimit(_) => "resource_limit",
            Error::NotZeroDimensional(_) => "not_zero_dimensional",
            Error::NotSupportedAtOrigin(_) => "not_supported_at_origin",
            Error::UnitIdeal => "unit_ideal",
            Error::NotSystemOfParameters(_) => "not_system_of_parameters",
            Error::UnsupportedLocalization(_) => "unsupported_localization",
            Error::MinhVerification(_) => "minh_verification",
            Error::InsufficientRecords(_) => "insufficient_records",
            Error::NotMaximalShape(_) => "not_maximal_shape",
            Error::InvalidInput(_) => "invalid_input",
            Error::Config(_) => "config_error",
            Error::Io(_) => "io_error",
        }
    }
}

//! Error type shared by all modules.

use std::fmt;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `n < 3` is not a planar module in this setting.
    RingOrderTooSmall(u64),
    /// `n ≡ 2 (mod 4)` is rejected: `Z[ξ_{2m}] = Z[ξ_m]` for odd `m`, so the
    /// odd index is the canonical one.
    RingOrderTwoModFour(u64),
    /// The ring does not have class number one, so ideal colourings are not
    /// classified for it.
    NotClassNumberOne(u64),
    /// Two operands live in different rings.
    RingMismatch { left: u64, right: u64 },
    /// A Galois action `ξ ↦ ξ^k` needs `gcd(k, n) = 1`.
    NotCoprime { k: i64, n: u64 },
    /// The zero element generates no colouring.
    ZeroGenerator,
    /// A textual element could not be parsed.
    ParseElement(String),
    /// Matrix rows do not span a full-rank lattice.
    RankDeficient,
    /// A nonsingular matrix was required.
    SingularMatrix,
    /// Vector/matrix dimensions do not match.
    DimensionMismatch { expected: usize, got: usize },
    /// An integer that had to be prime was not.
    NotPrime(u64),
    /// The requested coset table is too large to materialise.
    TooManyCosets(String),
    /// The affine map is not a colour symmetry of the given colouring
    /// (a reflection applied to a colouring that is not perfect).
    NotAColourSymmetry,
    /// Operation restricted to a subset of ring indices (e.g. discrete
    /// lattice patches only exist for n = 3, 4).
    UnsupportedRing { n: u64, reason: &'static str },
    /// A norm-2 ideal was required.
    NormNotTwo(String),
    /// Patch exceeds the renderer point budget.
    TooManyPoints { count: usize, limit: usize },
    /// Output I/O failed.
    Io(String),
    /// An internal invariant was violated; always a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingOrderTooSmall(n) => write!(f, "ring index n = {n} must be at least 3"),
            Error::RingOrderTwoModFour(n) => write!(
                f,
                "n = {n} ≡ 2 (mod 4) is rejected: Z[ξ_{n}] equals Z[ξ_{m}], use n = {m}",
                m = n / 2
            ),
            Error::NotClassNumberOne(n) => write!(
                f,
                "class number one required: n = {n} is not in the admissible list \
                 3,4,5,7,8,9,11,12,13,15,16,17,19,20,21,24,25,27,28,32,33,35,36,40,44,45,48,60,84"
            ),
            Error::RingMismatch { left, right } => {
                write!(f, "ring mismatch: Z[ξ_{left}] vs Z[ξ_{right}]")
            }
            Error::NotCoprime { k, n } => write!(f, "gcd({k}, {n}) ≠ 1: not a Galois exponent"),
            Error::ZeroGenerator => write!(f, "the zero element does not generate an ideal"),
            Error::ParseElement(s) => write!(
                f,
                "malformed element '{s}': expected comma-separated integers, lowest degree first"
            ),
            Error::RankDeficient => write!(f, "rows do not span a full-rank lattice"),
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::TooManyCosets(norm) => {
                write!(
                    f,
                    "coset table with {norm} colours is too large to materialise"
                )
            }
            Error::NotAColourSymmetry => {
                write!(
                    f,
                    "reflections are not colour symmetries of a non-perfect colouring"
                )
            }
            Error::UnsupportedRing { n, reason } => write!(f, "n = {n} unsupported: {reason}"),
            Error::NormNotTwo(norm) => write!(f, "ideal norm is {norm}, expected 2"),
            Error::TooManyPoints { count, limit } => {
                write!(
                    f,
                    "patch has {count} points, exceeding the limit of {limit}"
                )
            }
            Error::Io(msg) => write!(f, "i/o error: {msg}"),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

/// Crate-wide result type.
pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(u32),

    #[error("expected {expected} coordinates, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("weight {0:?} is not dominant (negative λ-coefficient)")]
    NotDominant(Vec<i64>),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid partition {0:?}: parts must be positive")]
    InvalidPartition(Vec<u32>),

    #[error("monomial generator with {parts} parts is undefined on {len} values")]
    UndefinedGenerator { parts: usize, len: usize },

    #[error("class {class} is undefined at N = {n}: factor {factor} vanishes")]
    Domain {
        class: String,
        n: u32,
        factor: String,
    },

    #[error("no closed-form eigenvalue polynomial for class {0}")]
    UnsupportedClass(String),

    #[error("reference coefficient cof_{class}(λ_{k}, N={n}) vanishes")]
    DegenerateReference { class: String, k: usize, n: u32 },

    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// True for errors raised by evaluating outside a formula's domain.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Domain { .. } | Error::DegenerateReference { .. }
        )
    }
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a supported prime characteristic")]
    InvalidPrime(u32),

    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },

    #[error("{op} needs a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    /// A configured size limit was hit. `cap` names the limit that applies.
    #[error("{computation} exceeded the {cap_name} cap of {cap}")]
    CapExceeded {
        computation: String,
        cap_name: &'static str,
        cap: u64,
    },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("coset resolution failed: {0}")]
    CosetResolution(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn cap(computation: impl Into<String>, cap_name: &'static str, cap: u64) -> Self {
        Error::CapExceeded {
            computation: computation.into(),
            cap_name,
            cap,
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

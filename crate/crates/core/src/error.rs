use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid characteristic {0}: expected 0 or an odd prime below 2^31")]
    InvalidCharacteristic(u64),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("degree cap {cap} exceeded (pending work in degree {degree})")]
    DegreeCap { cap: u32, degree: u32 },
    #[error("resource guard: linear system of shape {rows}x{cols} exceeds the limit of {limit} entries")]
    ResourceGuard { rows: usize, cols: usize, limit: usize },
    #[error("shape out of range: {0}")]
    Shape(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("construction failed after trying seeds {seeds:?}: {reason}")]
    RetryExhausted { seeds: Vec<u64>, reason: String },
}

impl AlgebraError {
    /// True for errors caused by configured resource limits rather than
    /// by the mathematics or the input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            AlgebraError::DegreeCap { .. } | AlgebraError::ResourceGuard { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

use thiserror::Error;

/// Everything that can go wrong while building or manipulating states and operators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected} qubits, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("all amplitudes are zero; a quantum state needs a nonzero weight")]
    ZeroState,

    #[error("state is not normalized: squared norm is {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },

    #[error("amplitude at index {index} is not finite")]
    NonFinite { index: usize },

    #[error("operator maps the state to the zero vector (normalization factor {factor:e})")]
    Annihilated { factor: f64 },

    #[error("{what} on {qubits} qubits exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        qubits: usize,
        limit: usize,
    },

    #[error("{what} = {value} is outside {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("decimal ket label '{label}' at byte {pos} needs a qubit count")]
    ContextRequired { pos: usize, label: String },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::exactla::Field;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("gcd/lcm of two zero polynomials is undefined")]
    BothZero,

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("rational function has a pole at zero")]
    PoleAtZero,

    #[error("saturation exceeded word length {0}")]
    SaturationLimit(usize),

    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),

    #[error("orientation clash: {0}")]
    OrientationClash(String),

    #[error("not a closed diagram: {0}")]
    NotClosed(String),

    #[error("boundary too large: {size} points exceeds the bound {bound}")]
    SizeBound { size: usize, bound: usize },

    #[error("trace form is degenerate: {0}")]
    DegenerateTrace(String),

    #[error("closed component has no closed-sector value: {0}")]
    ClosedComponent(String),

    #[error("unsupported characteristic {0}")]
    UnsupportedCharacteristic(u64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::FieldMismatch { .. } => "FieldMismatch",
            Error::NotPrime(_) => "NotPrime",
            Error::NotSquare { .. } => "NotSquare",
            Error::BothZero => "BothZero",
            Error::AlphabetMismatch(_) => "AlphabetMismatch",
            Error::PoleAtZero => "PoleAtZero",
            Error::SaturationLimit(_) => "SaturationLimit",
            Error::BoundaryMismatch(_) => "BoundaryMismatch",
            Error::OrientationClash(_) => "OrientationClash",
            Error::NotClosed(_) => "NotClosed",
            Error::SizeBound { .. } => "SizeBound",
            Error::DegenerateTrace(_) => "DegenerateTrace",
            Error::ClosedComponent(_) => "ClosedComponent",
            Error::UnsupportedCharacteristic(_) => "UnsupportedCharacteristic",
            Error::Unsupported(_) => "Unsupported",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}

//! Error types shared by the matrix and pseudo-inverse modules.

use core::fmt;

use alloc::string::String;

/// Errors from matrix construction and numeric operations.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixError {
    /// Operand shapes do not conform for the requested operation.
    DimensionMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    /// A matrix dimension is zero.
    EmptyMatrix,
    /// Element data length does not match `rows * cols`.
    InvalidData { expected: usize, got: usize },
    /// A NaN or infinite element was supplied at construction.
    NonFinite { row: usize, col: usize },
    /// Raising a non-square matrix to a power other than one.
    NonSquarePower { rows: usize, cols: usize },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// A symmetric matrix was required.
    NotSymmetric,
    /// A bordering pivot fell at or below the positive-definiteness floor.
    NotPositiveDefinite { pivot: f64, index: usize },
    /// A sparse coordinate lies outside the declared dimensions.
    IndexOutOfRange { row: usize, col: usize },
    /// Sparse triplets are unsorted, duplicated, or store an explicit zero.
    InvalidCoo(String),
    /// A weight matrix failed its positive-definiteness validation.
    WeightNotPD,
    /// The dependent-column denominator vanished; the data are numerically
    /// dependent under the column weight matrix.
    SingularDelta { column: usize },
    /// A tolerance parameter was not strictly positive.
    InvalidTolerance,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::DimensionMismatch { expected, got } => write!(
                f,
                "dimension mismatch: expected {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            MatrixError::EmptyMatrix => write!(f, "matrix dimensions must be positive"),
            MatrixError::InvalidData { expected, got } => {
                write!(f, "element count mismatch: expected {expected}, got {got}")
            }
            MatrixError::NonFinite { row, col } => {
                write!(f, "non-finite element at ({row}, {col})")
            }
            MatrixError::NonSquarePower { rows, cols } => {
                write!(f, "cannot raise a {rows}x{cols} matrix to a power")
            }
            MatrixError::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            MatrixError::NotSymmetric => write!(f, "matrix is not symmetric"),
            MatrixError::NotPositiveDefinite { pivot, index } => write!(
                f,
                "matrix is not positive definite (pivot {pivot} at step {index})"
            ),
            MatrixError::IndexOutOfRange { row, col } => {
                write!(f, "sparse entry ({row}, {col}) is out of range")
            }
            MatrixError::InvalidCoo(detail) => write!(f, "invalid coordinate data: {detail}"),
            MatrixError::WeightNotPD => {
                write!(f, "weight matrix is not symmetric positive definite")
            }
            MatrixError::SingularDelta { column } => write!(
                f,
                "singular delta at column {column}: data numerically dependent under the weight"
            ),
            MatrixError::InvalidTolerance => write!(f, "tolerances must be strictly positive"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for MatrixError {}

/// Errors from parsing matrix text and the serialized string formats.
#[derive(Debug, Clone, PartialEq)]
pub enum TextError {
    /// The input contains no rows.
    Empty,
    /// A line has a different element count than the first line.
    RaggedRows {
        line: usize,
        expected: usize,
        got: usize,
    },
    /// A token could not be parsed as a decimal number.
    ParseError { token: String },
    /// Token count does not match the declared dimensions.
    LengthMismatch { expected: usize, got: usize },
    /// Parsed elements violate matrix construction invariants.
    Matrix(MatrixError),
}

impl fmt::Display for TextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TextError::Empty => write!(f, "input contains no matrix rows"),
            TextError::RaggedRows {
                line,
                expected,
                got,
            } => write!(
                f,
                "ragged rows: line {line} has {got} elements, expected {expected}"
            ),
            TextError::ParseError { token } => write!(f, "cannot parse element {token:?}"),
            TextError::LengthMismatch { expected, got } => {
                write!(f, "token count mismatch: expected {expected}, got {got}")
            }
            TextError::Matrix(e) => write!(f, "{e}"),
        }
    }
}

impl From<MatrixError> for TextError {
    fn from(e: MatrixError) -> Self {
        TextError::Matrix(e)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for TextError {}

use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by image construction, ring algebra, filtering and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("image shape mismatch: {left_width}x{left_height} vs {right_width}x{right_height}")]
    ShapeMismatch {
        left_width: usize,
        left_height: usize,
        right_width: usize,
        right_height: usize,
    },

    #[error("incompatible rings: Z_{left} vs Z_{right}")]
    IncompatibleRing { left: u32, right: u32 },

    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(u32),

    #[error("invalid dimensions {width}x{height}: both must be positive")]
    InvalidDimensions { width: usize, height: usize },

    #[error("expected {expected} pixels, got {actual}")]
    PixelCount { expected: usize, actual: usize },

    #[error("pixel value {value} at index {index} is outside Z_{modulus}")]
    PixelOutOfRange {
        index: usize,
        value: u32,
        modulus: u32,
    },

    #[error("scalar {value} is outside Z_{modulus}")]
    ScalarOutOfRange { value: u32, modulus: u32 },

    #[error("{0}")]
    Domain(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("row {row} is out of range for image height {height}")]
    RowOutOfRange { row: usize, height: usize },

    #[error("PGM parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("PGM sample {value} at byte {offset} exceeds maxval {maxval}")]
    SampleRange {
        offset: usize,
        value: u32,
        maxval: u32,
    },

    #[error("PGM payload truncated: expected {expected} bytes of pixel data, found {actual}")]
    Truncated { expected: usize, actual: usize },

    #[error("CSV record {index} has {actual} fields, header has {expected}")]
    Arity {
        index: usize,
        expected: usize,
        actual: usize,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn file(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::File {
            path: path.into(),
            source,
        }
    }
}

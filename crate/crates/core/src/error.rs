use thiserror::Error;

/// Errors produced while building instances, solving, enumerating paths, and
/// reading or writing files.
///
/// Row and column indices carried by variants are 1-based.
#[derive(Debug, Error)]
pub enum Error {
    #[error("expected {expected} values for a {rows}x{cols} matrix, got {actual}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
        actual: usize,
    },
    #[error("a cost matrix needs at least 2 rows and 1 column, got {rows}x{cols}")]
    TooSmall { rows: usize, cols: usize },
    #[error("value {value} at ({row}, {col}) is outside [0, 1]")]
    ValueOutOfRange { row: usize, col: usize, value: f64 },
    #[error("window {w} needs at least {} columns, matrix has {n}", 2 * .w)]
    WindowTooLarge { w: usize, n: usize },
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("shape mismatch: expected {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("instance has {count} feasible paths, enumeration cap is {cap}")]
    InstanceTooLarge { count: u128, cap: u128 },
    #[error("infeasible path: {reason}")]
    InfeasiblePath { reason: String },
    #[error("parse error at line {line}, field {column}: {token:?}")]
    Parse {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("ragged rows: line {line} has {found} fields, expected {expected}")]
    RaggedRows {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("empty input")]
    EmptyInput,
    #[error("unsupported magic number {0:?}, expected P2 or P5")]
    UnsupportedMagic(String),
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("truncated pixel data: expected {expected} samples, got {actual}")]
    TruncatedPixelData { expected: usize, actual: usize },
    #[error("maxval {0} is outside 1..=65535")]
    MaxvalOutOfRange(u64),
    #[error("sample {sample} at ({row}, {col}) exceeds maxval {maxval}")]
    SampleOutOfRange {
        row: usize,
        col: usize,
        sample: u32,
        maxval: u32,
    },
    #[error("malformed table dump: {0}")]
    MalformedTables(String),
    #[error("read failure: {0}")]
    ReadFailure(#[source] std::io::Error),
    #[error("write failure: {0}")]
    WriteFailure(#[source] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

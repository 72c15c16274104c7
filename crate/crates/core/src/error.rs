use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HullError {
    #[error("empty input: at least one point is required")]
    EmptyInput,

    #[error("non-finite coordinate ({x}, {y})")]
    NonFinite { x: f64, y: f64 },

    #[error("input of {len} points exceeds the brute-force limit of {max}")]
    TooLarge { len: usize, max: usize },

    #[error("{what} = {value} exceeds the coordinate cap of {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },

    #[error("hull size h = {h} must lie in [3, {max}]")]
    InvalidH { h: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

pub type Result<T, E = HullError> = std::result::Result<T, E>;

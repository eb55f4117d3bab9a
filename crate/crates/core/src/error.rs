use std::path::PathBuf;

/// Broad failure category, used to pick a process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Config,
    Io,
    Data,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Config => 2,
            ErrorKind::Io => 3,
            ErrorKind::Data => 4,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("missing column {0:?}")]
    MissingColumn(String),
    #[error("row {row}: label {value:?} is not 0 or 1")]
    InvalidLabel { row: u64, value: String },
    #[error("row {row}: score {value:?} is not a finite number")]
    InvalidScore { row: u64, value: String },
    #[error("score {0} is not finite")]
    NonFiniteScore(f64),
    #[error("class {0} empty")]
    EmptyClass(u8),
    #[error("invalid priors ({pi0}, {pi1}): both must be positive and sum to 1")]
    InvalidPriors { pi0: f64, pi1: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("mode undefined for Beta({alpha}, {beta}): both shapes must exceed 1")]
    ModeUndefined { alpha: f64, beta: f64 },
    #[error("configuration conflict: {0}")]
    Conflict(String),
    #[error("nothing to plot")]
    EmptyPlot,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Read { .. } | Error::Write { .. } => ErrorKind::Io,
            Error::Csv(e) if e.is_io_error() => ErrorKind::Io,
            Error::Csv(_)
            | Error::MissingColumn(_)
            | Error::InvalidLabel { .. }
            | Error::InvalidScore { .. }
            | Error::NonFiniteScore(_)
            | Error::EmptyClass(_) => ErrorKind::Data,
            Error::InvalidPriors { .. }
            | Error::InvalidParameter(_)
            | Error::ModeUndefined { .. }
            | Error::Conflict(_)
            | Error::EmptyPlot => ErrorKind::Config,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

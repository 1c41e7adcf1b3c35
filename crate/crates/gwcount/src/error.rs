use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("not a del-Pezzo surface: P^2 blown up at {0} points (need 0 <= k <= 8)")]
    NotDelPezzo(i64),

    #[error("class has {got} coordinates but surface has rank {want}")]
    RankMismatch { got: usize, want: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("cache file {path}: line {line}: {msg}")]
    CacheFormat {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    /// Raised when an exact identity that must hold on a correct build fails.
    /// CLI maps this to exit code 2.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Inconsistency(_) => 2,
            _ => 1,
        }
    }
}

use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Core(#[from] hyperspectra::Error),
    #[error("budget exceeded: {what} = {got} > {cap}")]
    Budget {
        what: &'static str,
        got: usize,
        cap: usize,
    },
    #[error("unknown theorem id `{0}` (see `verify --list`)")]
    UnknownTheorem(String),
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, VerifyError>;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring error: {0}")]
    Ring(String),
    #[error("matrix error: {0}")]
    Matrix(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("groebner error: {0}")]
    Groebner(String),
    #[error("case error: {0}")]
    Case(String),
    #[error("filtration error: {0}")]
    Filtration(String),
    #[error("kres error: {0}")]
    Kres(String),
    #[error("verify error: {0}")]
    Verify(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

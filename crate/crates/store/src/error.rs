use hrms_core::DomainError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("{table} {key:?} not found")]
    NotFound { table: &'static str, key: String },
    #[error("{table} {key:?} already exists")]
    Duplicate { table: &'static str, key: String },
    #[error("employee {0} has already resigned")]
    AlreadyResigned(String),
    #[error("employee {0} has resigned")]
    EmployeeResigned(String),
    #[error("integrity violation: {0}")]
    Integrity(String),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("storage failure: {0}")]
    Storage(String),
    #[error("corrupt store: {0}")]
    Corrupt(String),
    #[error("store at {0} is locked by another process")]
    Locked(String),
    #[error("no store found at {0}")]
    NotInitialized(String),
    #[error("{0} is not empty")]
    AlreadyInitialized(String),
    #[error("refusing to load into a non-empty store")]
    NotEmpty,
    #[error("store handle is unusable after a failed commit; reopen it")]
    Poisoned,
}

impl From<std::io::Error> for StoreError {
    fn from(e: std::io::Error) -> Self {
        StoreError::Storage(e.to_string())
    }
}

impl From<serde_json::Error> for StoreError {
    fn from(e: serde_json::Error) -> Self {
        StoreError::Corrupt(e.to_string())
    }
}

pub type Result<T, E = StoreError> = std::result::Result<T, E>;

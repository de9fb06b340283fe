//! Report generation over a committed store snapshot.
//!
//! Every report is a header, data rows in primary-key order and an optional
//! footer, rendered either as CSV or as an aligned plain-text table.

mod criteria;
mod kinds;
mod render;

pub use criteria::{ReportCriteria, ReportFormat, ReportKind};
pub use render::Document;

use hrms_store::{Reader, StoreError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("invalid report criteria: {0}")]
    InvalidCriteria(String),
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error("report encoding failed: {0}")]
    Encoding(String),
}

pub type Result<T> = std::result::Result<T, ReportError>;

/// Build the document described by `criteria` from `reader`.
pub fn generate_report<R: Reader + ?Sized>(reader: &R, criteria: &ReportCriteria) -> Result<Document> {
    criteria.validate()?;
    let table = kinds::build(reader, criteria)?;
    render::render(criteria, &table)
}

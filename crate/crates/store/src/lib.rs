//! Durable storage and authentication for the HRMS service.
//!
//! [`Store`] is an embedded, file-backed transactional store. Each HR table
//! is stored under its original attribute names (see [`schema`]); HR
//! operations such as [`Transaction::archive_resignation`] and
//! [`Transaction::update_leave_account`] run inside one transaction each.

pub mod auth;
mod dump;
pub mod engine;
pub mod error;
pub mod ops;
pub mod schema;

pub use auth::{AuthConfig, AuthError, Authenticator, Clock, ManualClock, Session, SystemClock};
pub use engine::{FailPoint, Reader, Snapshot, Store, StoreOptions, Transaction};
pub use error::{Result, StoreError};
pub use ops::{statement_key, EmployeeFilter, PutMode, Queries};
pub use schema::{Record, Row, SessionRecord, Table};

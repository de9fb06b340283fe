use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Rule violated by a single input field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldRule {
    MissingRequiredField,
    MalformedNumber,
    MalformedEmail,
    MalformedDate,
    DateOrderViolation,
    BadEnumValue,
    TooLong,
    MalformedIdentifier,
    OutOfRange,
}

impl fmt::Display for FieldRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One rejected field, named by its input attribute.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldError {
    pub field: String,
    pub rule: FieldRule,
}

impl FieldError {
    pub fn new(field: impl Into<String>, rule: FieldRule) -> Self {
        Self {
            field: field.into(),
            rule,
        }
    }
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.rule)
    }
}

/// Errors raised by the pure domain operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("negative amount {0} not allowed")]
    NegativeAmount(i64),
    #[error("money total exceeds the representable ceiling")]
    AmountOverflow,
    #[error("period start {start} is after period end {end}")]
    InvalidPeriod {
        start: chrono::NaiveDate,
        end: chrono::NaiveDate,
    },
    #[error("full-day hours must be positive")]
    InvalidFullDay,
    #[error("training pay factor must lie in (0, 1] and equal 1 outside training")]
    InvalidPayFactor,
    #[error("leave allocation for {0} is negative")]
    NegativeAllocation(crate::leave::LeaveType),
    #[error("insufficient {leave_type} balance: requested {requested}, remaining {remaining}")]
    InsufficientBalance {
        leave_type: crate::leave::LeaveType,
        requested: u32,
        remaining: u32,
    },
    #[error("unknown leave type {0:?}")]
    UnknownLeaveType(String),
    #[error("leave requests must be for at least one day")]
    InvalidLeaveDays,
    #[error("leave account for {0} is frozen")]
    AccountFrozen(String),
    #[error("employee {0} has already resigned")]
    AlreadyResigned(String),
    #[error("{0}")]
    DateOrderViolation(String),
    #[error("applicant {0} is not shortlisted")]
    NotShortlisted(String),
    #[error("illegal applicant transition {from:?} -> {to:?}")]
    IllegalTransition {
        from: crate::applicant::ApplicantStatus,
        to: crate::applicant::ApplicantStatus,
    },
    #[error("validation failed: {}", join_fields(.0))]
    Validation(Vec<FieldError>),
}

fn join_fields(errors: &[FieldError]) -> String {
    errors
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

impl From<Vec<FieldError>> for DomainError {
    fn from(errors: Vec<FieldError>) -> Self {
        DomainError::Validation(errors)
    }
}

pub type Result<T, E = DomainError> = std::result::Result<T, E>;

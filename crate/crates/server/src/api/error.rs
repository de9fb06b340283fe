use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use hrms_core::{DomainError, FieldError, FieldRule};
use hrms_reporting::ReportError;
use hrms_store::{AuthError, StoreError};
use serde::Serialize;

/// JSON error body returned by every failing endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApiError {
    pub http_status: u16,
    pub code: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub field_errors: Vec<FieldError>,
}

impl ApiError {
    pub fn new(status: StatusCode, code: &'static str, message: impl Into<String>) -> Self {
        ApiError {
            http_status: status.as_u16(),
            code,
            message: message.into(),
            field_errors: Vec::new(),
        }
    }

    pub fn validation(errors: Vec<FieldError>) -> Self {
        let fields: Vec<&str> = errors.iter().map(|e| e.field.as_str()).collect();
        ApiError {
            field_errors: errors.clone(),
            ..ApiError::new(
                StatusCode::UNPROCESSABLE_ENTITY,
                "validation_failed",
                format!("invalid fields: {}", fields.join(", ")),
            )
        }
    }

    pub fn field(field: &str, rule: FieldRule, message: impl Into<String>) -> Self {
        ApiError {
            message: message.into(),
            ..ApiError::validation(vec![FieldError::new(field, rule)])
        }
    }

    pub fn malformed(message: impl Into<String>) -> Self {
        ApiError::new(StatusCode::BAD_REQUEST, "malformed_body", message)
    }

    pub fn unauthorized(message: impl Into<String>) -> Self {
        ApiError::new(StatusCode::UNAUTHORIZED, "unauthorized", message)
    }

    pub fn not_found(message: impl Into<String>) -> Self {
        ApiError::new(StatusCode::NOT_FOUND, "not_found", message)
    }

    pub fn conflict(code: &'static str, message: impl Into<String>) -> Self {
        ApiError::new(StatusCode::CONFLICT, code, message)
    }

    pub fn internal(message: impl Into<String>) -> Self {
        ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "internal_error", message)
    }

    pub fn status(&self) -> StatusCode {
        StatusCode::from_u16(self.http_status).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR)
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status(), Json(self)).into_response()
    }
}

impl From<DomainError> for ApiError {
    fn from(e: DomainError) -> Self {
        use DomainError::*;
        let message = e.to_string();
        match e {
            Validation(errors) => ApiError::validation(errors),
            NegativeAmount(_) => ApiError::field("amount", FieldRule::OutOfRange, message),
            AmountOverflow => ApiError::field("amount", FieldRule::OutOfRange, message),
            InvalidPeriod { .. } => {
                ApiError::field("period_end", FieldRule::DateOrderViolation, message)
            }
            InvalidFullDay => ApiError::field("full_day_hours", FieldRule::OutOfRange, message),
            InvalidPayFactor => {
                ApiError::field("training_pay_factor", FieldRule::OutOfRange, message)
            }
            NegativeAllocation(_) => ApiError::internal(message),
            InvalidLeaveDays => ApiError::field("days", FieldRule::OutOfRange, message),
            UnknownLeaveType(_) => ApiError::field("type", FieldRule::BadEnumValue, message),
            DateOrderViolation(_) => ApiError::field("date", FieldRule::DateOrderViolation, message),
            InsufficientBalance { .. } => ApiError::conflict("insufficient_balance", message),
            AccountFrozen(_) | AlreadyResigned(_) => ApiError::conflict("resigned", message),
            NotShortlisted(_) | IllegalTransition { .. } => {
                ApiError::conflict("illegal_transition", message)
            }
        }
    }
}

impl From<StoreError> for ApiError {
    fn from(e: StoreError) -> Self {
        let message = e.to_string();
        match e {
            StoreError::NotFound { .. } => ApiError::not_found(message),
            StoreError::Duplicate { .. } => ApiError::conflict("duplicate", message),
            StoreError::AlreadyResigned(_) | StoreError::EmployeeResigned(_) => {
                ApiError::conflict("resigned", message)
            }
            StoreError::Integrity(_) => ApiError::conflict("integrity", message),
            StoreError::Domain(d) => d.into(),
            other => {
                tracing::error!(error = %other, "storage failure");
                ApiError::internal("storage failure")
            }
        }
    }
}

impl From<AuthError> for ApiError {
    fn from(e: AuthError) -> Self {
        match e {
            AuthError::InvalidCredentials => ApiError::new(
                StatusCode::UNAUTHORIZED,
                "invalid_credentials",
                "invalid credentials",
            ),
            AuthError::ExpiredSession | AuthError::UnknownToken => {
                ApiError::unauthorized(e.to_string())
            }
            AuthError::Store(s) => s.into(),
            AuthError::DuplicateUser(_) => ApiError::conflict("duplicate", e.to_string()),
            AuthError::WeakPassword => {
                ApiError::field("password", FieldRule::OutOfRange, e.to_string())
            }
            AuthError::BadUserId => {
                ApiError::field("userid", FieldRule::MalformedIdentifier, e.to_string())
            }
            AuthError::Entropy(_) => ApiError::internal(e.to_string()),
        }
    }
}

impl From<ReportError> for ApiError {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::InvalidCriteria(m) => ApiError {
                field_errors: vec![FieldError::new("criteria", FieldRule::OutOfRange)],
                ..ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, "invalid_criteria", m)
            },
            ReportError::Store(s) => s.into(),
            ReportError::Encoding(m) => ApiError::internal(m),
        }
    }
}

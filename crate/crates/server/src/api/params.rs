use std::collections::HashMap;

use chrono::NaiveDate;
use hrms_core::FieldRule;
use serde::Serialize;

use super::error::ApiError;

pub const DEFAULT_LIMIT: usize = 100;
pub const MAX_LIMIT: usize = 1000;

/// Query-string parameters.
pub struct Params(pub HashMap<String, String>);

impl Params {
    pub fn text(&self, name: &str) -> Option<&str> {
        self.0.get(name).map(|v| v.trim()).filter(|v| !v.is_empty())
    }

    pub fn date(&self, name: &str) -> Result<Option<NaiveDate>, ApiError> {
        self.text(name)
            .map(|v| {
                hrms_core::parse_date(v).ok_or_else(|| {
                    ApiError::field(name, FieldRule::MalformedDate, format!("{name} must be YYYY-MM-DD"))
                })
            })
            .transpose()
    }

    pub fn range(&self) -> Result<(Option<NaiveDate>, Option<NaiveDate>), ApiError> {
        let (from, to) = (self.date("from")?, self.date("to")?);
        if let (Some(f), Some(t)) = (from, to) {
            if f > t {
                return Err(ApiError::field("to", FieldRule::DateOrderViolation, "from is after to"));
            }
        }
        Ok((from, to))
    }

    pub fn choice<T: std::str::FromStr>(&self, name: &str) -> Result<Option<T>, ApiError> {
        self.text(name)
            .map(|v| {
                v.parse().map_err(|_| {
                    ApiError::field(name, FieldRule::BadEnumValue, format!("unknown {name} {v:?}"))
                })
            })
            .transpose()
    }

    pub fn flag(&self, name: &str) -> bool {
        self.text(name).is_some_and(|v| v.eq_ignore_ascii_case("true") || v == "1")
    }

    fn number(&self, name: &str, default: usize) -> Result<usize, ApiError> {
        self.text(name).map_or(Ok(default), |v| {
            v.parse()
                .map_err(|_| ApiError::field(name, FieldRule::MalformedNumber, format!("{name} must be a number")))
        })
    }

    pub fn page(&self) -> Result<Page, ApiError> {
        let offset = self.number("offset", 0)?;
        let limit = self.number("limit", DEFAULT_LIMIT)?;
        if limit == 0 || limit > MAX_LIMIT {
            return Err(ApiError::field(
                "limit",
                FieldRule::OutOfRange,
                format!("limit must be 1-{MAX_LIMIT}"),
            ));
        }
        Ok(Page { offset, limit })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Page {
    pub offset: usize,
    pub limit: usize,
}

#[derive(Debug, Serialize)]
pub struct Paged<T> {
    pub items: Vec<T>,
    pub total: usize,
    pub offset: usize,
    pub limit: usize,
}

impl Page {
    /// Slice `all`, already in primary-key order.
    pub fn apply<T>(self, all: Vec<T>) -> Paged<T> {
        let total = all.len();
        Paged {
            items: all.into_iter().skip(self.offset).take(self.limit).collect(),
            total,
            offset: self.offset,
            limit: self.limit,
        }
    }
}

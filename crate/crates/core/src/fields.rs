//! Raw text field maps and the collecting reader used by every validator.
//!
//! Validators never stop at the first problem: each accessor records a
//! [`FieldError`] and returns `None`, and [`FieldReader::finish`] hands back
//! the complete list.

use std::collections::BTreeMap;
use std::str::FromStr;

use chrono::NaiveDate;

use crate::error::{FieldError, FieldRule};

/// Untyped input keyed by attribute name.
pub type FieldMap = BTreeMap<String, String>;

pub const DATE_FORMAT: &str = "%Y-%m-%d";

/// Strict `YYYY-MM-DD` parse.
pub fn parse_date(text: &str) -> Option<NaiveDate> {
    let text = text.trim();
    if text.len() != 10 {
        return None;
    }
    NaiveDate::parse_from_str(text, DATE_FORMAT).ok()
}

pub fn is_digits(text: &str) -> bool {
    !text.is_empty() && text.bytes().all(|b| b.is_ascii_digit())
}

/// Exactly one `@`, non-empty local and domain parts, no whitespace.
pub fn is_email(text: &str) -> bool {
    let mut parts = text.split('@');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(local), Some(domain), None) => {
            !local.is_empty() && !domain.is_empty() && !text.chars().any(char::is_whitespace)
        }
        _ => false,
    }
}

/// Identifiers end up in URL paths and store keys.
pub fn is_identifier(text: &str) -> bool {
    !text.is_empty()
        && text
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_')
}

pub struct FieldReader<'a> {
    map: &'a FieldMap,
    errors: Vec<FieldError>,
}

impl<'a> FieldReader<'a> {
    pub fn new(map: &'a FieldMap) -> Self {
        Self {
            map,
            errors: Vec::new(),
        }
    }

    fn value(&self, name: &str) -> Option<&'a str> {
        self.map
            .get(name)
            .map(|v| v.trim())
            .filter(|v| !v.is_empty())
    }

    pub fn reject(&mut self, name: &str, rule: FieldRule) {
        if !self.errors.iter().any(|e| e.field == name) {
            self.errors.push(FieldError::new(name, rule));
        }
    }

    pub fn has_error(&self, name: &str) -> bool {
        self.errors.iter().any(|e| e.field == name)
    }

    pub fn text(&mut self, name: &str) -> Option<String> {
        match self.value(name) {
            Some(v) => Some(v.to_owned()),
            None => {
                self.reject(name, FieldRule::MissingRequiredField);
                None
            }
        }
    }

    pub fn optional_text(&mut self, name: &str) -> Option<String> {
        self.value(name).map(str::to_owned)
    }

    pub fn identifier(&mut self, name: &str, max_len: usize) -> Option<String> {
        let v = self.text(name)?;
        if v.chars().count() > max_len {
            self.reject(name, FieldRule::TooLong);
            None
        } else if !is_identifier(&v) {
            self.reject(name, FieldRule::MalformedIdentifier);
            None
        } else {
            Some(v)
        }
    }

    pub fn digits(&mut self, name: &str) -> Option<String> {
        let v = self.text(name)?;
        self.check_digits(name, v)
    }

    /// `Ok(None)` when absent; `Err(())` when present but malformed.
    pub fn optional_digits(&mut self, name: &str) -> Result<Option<String>, ()> {
        match self.value(name) {
            None => Ok(None),
            Some(v) => self.check_digits(name, v.to_owned()).map(Some).ok_or(()),
        }
    }

    fn check_digits(&mut self, name: &str, v: String) -> Option<String> {
        if is_digits(&v) {
            Some(v)
        } else {
            self.reject(name, FieldRule::MalformedNumber);
            None
        }
    }

    pub fn email(&mut self, name: &str) -> Option<String> {
        let v = self.text(name)?;
        if is_email(&v) {
            Some(v)
        } else {
            self.reject(name, FieldRule::MalformedEmail);
            None
        }
    }

    pub fn date(&mut self, name: &str) -> Option<NaiveDate> {
        let v = self.text(name)?;
        self.check_date(name, &v)
    }

    pub fn optional_date(&mut self, name: &str) -> Result<Option<NaiveDate>, ()> {
        match self.value(name) {
            None => Ok(None),
            Some(v) => self.check_date(name, v).map(Some).ok_or(()),
        }
    }

    fn check_date(&mut self, name: &str, v: &str) -> Option<NaiveDate> {
        let parsed = parse_date(v);
        if parsed.is_none() {
            self.reject(name, FieldRule::MalformedDate);
        }
        parsed
    }

    /// Non-negative integer count.
    pub fn count(&mut self, name: &str) -> Option<u32> {
        let v = self.text(name)?;
        match v.parse::<u32>() {
            Ok(n) if is_digits(&v) => Some(n),
            _ => {
                self.reject(name, FieldRule::MalformedNumber);
                None
            }
        }
    }

    pub fn choice<T: FromStr>(&mut self, name: &str) -> Option<T> {
        let v = self.text(name)?;
        match v.parse::<T>() {
            Ok(t) => Some(t),
            Err(_) => {
                self.reject(name, FieldRule::BadEnumValue);
                None
            }
        }
    }

    pub fn optional_choice<T: FromStr>(&mut self, name: &str) -> Result<Option<T>, ()> {
        match self.value(name) {
            None => Ok(None),
            Some(v) => match v.parse::<T>() {
                Ok(t) => Ok(Some(t)),
                Err(_) => {
                    self.reject(name, FieldRule::BadEnumValue);
                    Err(())
                }
            },
        }
    }

    pub fn finish(self) -> Result<(), Vec<FieldError>> {
        if self.errors.is_empty() {
            Ok(())
        } else {
            Err(self.errors)
        }
    }

    pub fn errors(&self) -> &[FieldError] {
        &self.errors
    }
}

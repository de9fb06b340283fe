//! Request body parsing with per-field error collection.

use axum::body::Bytes;
use axum::extract::{FromRequest, Request};
use chrono::NaiveDate;
use hrms_core::{FieldError, FieldMap, FieldRule, Hours, Money, PayItem};
use serde::de::DeserializeOwned;
use serde_json::{Map, Value};

use super::error::ApiError;

/// JSON body whose decoding failures become 400 `malformed_body`.
pub struct JsonBody<T>(pub T);

impl<S: Send + Sync, T: DeserializeOwned> FromRequest<S> for JsonBody<T> {
    type Rejection = ApiError;

    async fn from_request(req: Request, state: &S) -> Result<Self, Self::Rejection> {
        let bytes = Bytes::from_request(req, state)
            .await
            .map_err(|e| ApiError::malformed(e.body_text()))?;
        serde_json::from_slice(&bytes)
            .map(JsonBody)
            .map_err(|e| ApiError::malformed(format!("invalid JSON body: {e}")))
    }
}

fn scalar_text(v: &Value) -> Result<Option<String>, ()> {
    match v {
        Value::Null => Ok(None),
        Value::String(s) => Ok(Some(s.clone())),
        Value::Number(n) => Ok(Some(n.to_string())),
        Value::Bool(b) => Ok(Some(b.to_string())),
        _ => Err(()),
    }
}

/// Flatten a JSON object of scalars into a field map. `rename` maps an
/// incoming key to the canonical field name.
pub fn field_map(
    object: &Map<String, Value>,
    rename: impl Fn(&str) -> Option<&'static str>,
) -> Result<FieldMap, ApiError> {
    let mut map = FieldMap::new();
    for (key, value) in object {
        let text = scalar_text(value)
            .map_err(|_| ApiError::malformed(format!("field {key:?} must be a scalar")))?;
        let Some(text) = text else { continue };
        match rename(key) {
            Some(canonical) => {
                map.insert(canonical.to_owned(), text);
            }
            None => {
                map.entry(key.clone()).or_insert(text);
            }
        }
    }
    Ok(map)
}

/// Typed reads from a JSON object, collecting every field error.
pub struct Fields<'a> {
    object: &'a Map<String, Value>,
    errors: Vec<FieldError>,
}

impl<'a> Fields<'a> {
    pub fn new(object: &'a Map<String, Value>) -> Self {
        Fields {
            object,
            errors: Vec::new(),
        }
    }

    fn reject(&mut self, name: &str, rule: FieldRule) {
        if !self.errors.iter().any(|e| e.field == name) {
            self.errors.push(FieldError::new(name, rule));
        }
    }

    /// First present, non-null value under `name` or one of its aliases.
    fn raw(&self, names: &[&str]) -> Option<&'a Value> {
        names
            .iter()
            .filter_map(|n| self.object.get(*n))
            .find(|v| !v.is_null())
    }

    fn optional_text(&mut self, names: &[&str]) -> Option<String> {
        match self.raw(names).map(scalar_text) {
            Some(Ok(Some(s))) if !s.trim().is_empty() => Some(s.trim().to_owned()),
            Some(Err(())) => {
                self.reject(names[0], FieldRule::MalformedNumber);
                None
            }
            _ => None,
        }
    }

    pub fn text(&mut self, names: &[&str]) -> Option<String> {
        let v = self.optional_text(names);
        if v.is_none() {
            self.reject(names[0], FieldRule::MissingRequiredField);
        }
        v
    }

    pub fn optional_date(&mut self, names: &[&str]) -> Option<NaiveDate> {
        let text = self.optional_text(names)?;
        let date = hrms_core::parse_date(&text);
        if date.is_none() {
            self.reject(names[0], FieldRule::MalformedDate);
        }
        date
    }

    pub fn date(&mut self, names: &[&str]) -> Option<NaiveDate> {
        if self.raw(names).is_none() {
            self.reject(names[0], FieldRule::MissingRequiredField);
            return None;
        }
        self.optional_date(names)
    }

    fn integer(&mut self, name: &str, v: &Value) -> Option<i64> {
        let n = match v {
            Value::Number(n) => n.as_i64(),
            Value::String(s) => s.trim().parse().ok(),
            _ => None,
        };
        if n.is_none() {
            self.reject(name, FieldRule::MalformedNumber);
        }
        n
    }

    /// Non-negative integer amount in minor units.
    pub fn amount(&mut self, names: &[&str]) -> Option<Money> {
        let Some(v) = self.raw(names) else {
            self.reject(names[0], FieldRule::MissingRequiredField);
            return None;
        };
        let n = self.integer(names[0], v)?;
        if n < 0 {
            self.reject(names[0], FieldRule::OutOfRange);
            return None;
        }
        Some(Money(n))
    }

    /// A list of amounts, each either a bare integer or `{label, amount}`.
    pub fn items(&mut self, name: &str, default_label: &str) -> Vec<PayItem> {
        let list = match self.raw(&[name]) {
            None => return Vec::new(),
            Some(Value::Array(list)) => list,
            Some(_) => {
                self.reject(name, FieldRule::MalformedNumber);
                return Vec::new();
            }
        };
        let mut items = Vec::new();
        for (i, entry) in list.iter().enumerate() {
            let (label, amount) = match entry {
                Value::Object(o) => (
                    o.get("label")
                        .and_then(Value::as_str)
                        .map_or_else(|| format!("{default_label} {}", i + 1), str::to_owned),
                    o.get("amount").cloned().unwrap_or(Value::Null),
                ),
                other => (format!("{default_label} {}", i + 1), other.clone()),
            };
            match self.integer(name, &amount) {
                Some(n) if n >= 0 => items.push(PayItem::new(label, n)),
                Some(_) => self.reject(name, FieldRule::OutOfRange),
                None => {}
            }
        }
        items
    }

    pub fn count(&mut self, names: &[&str]) -> Option<u32> {
        let Some(v) = self.raw(names) else {
            self.reject(names[0], FieldRule::MissingRequiredField);
            return None;
        };
        let n = self.integer(names[0], v)?;
        let n = u32::try_from(n).ok();
        if n.is_none() {
            self.reject(names[0], FieldRule::OutOfRange);
        }
        n
    }

    /// Hours as a number or text (`8`, `7.5`, `15/2`), within `[0, 24]`.
    pub fn hours(&mut self, names: &[&str]) -> Option<Hours> {
        let Some(v) = self.raw(names) else {
            self.reject(names[0], FieldRule::MissingRequiredField);
            return None;
        };
        let text = match v {
            Value::Number(n) => n.to_string(),
            Value::String(s) => s.trim().to_owned(),
            _ => String::new(),
        };
        if text.starts_with('-') {
            self.reject(names[0], FieldRule::OutOfRange);
            return None;
        }
        match text.parse::<Hours>() {
            Ok(h) if h <= Hours::whole(24) => Some(h),
            Ok(_) => {
                self.reject(names[0], FieldRule::OutOfRange);
                None
            }
            Err(_) => {
                self.reject(names[0], FieldRule::MalformedNumber);
                None
            }
        }
    }

    pub fn finish(self) -> Result<(), ApiError> {
        if self.errors.is_empty() {
            Ok(())
        } else {
            Err(ApiError::validation(self.errors))
        }
    }
}

pub fn object(value: &Value) -> Result<&Map<String, Value>, ApiError> {
    value
        .as_object()
        .ok_or_else(|| ApiError::malformed("body must be a JSON object"))
}

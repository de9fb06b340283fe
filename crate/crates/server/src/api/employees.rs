use std::collections::HashMap;

use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::Json;
use hrms_core::employee::attr;
use hrms_core::{
    new_leave_account, validate_employee, EmployeeRecord, EmployeeStatus, FieldError, FieldMap,
    FieldRule,
};
use hrms_store::{EmployeeFilter, PutMode, Queries, Transaction};
use serde_json::Value;

use super::body::{field_map, object, JsonBody};
use super::params::{Paged, Params};
use super::{blocking, ApiError, AppState};

/// Attribute names, accepting the snake_case field names as aliases.
pub(crate) fn employee_fields(body: &Value) -> Result<FieldMap, ApiError> {
    let obj = object(body)?;
    let obj = match obj.get("employee") {
        Some(Value::Object(inner)) => inner,
        _ => obj,
    };
    field_map(obj, |k| match k {
        "empid" => Some(attr::EMP_ID),
        _ => attr::for_field(k),
    })
}

/// Validate, refusing a Resigned status, which only the resignation
/// endpoint may set.
pub(crate) fn checked_employee(fields: &FieldMap) -> Result<EmployeeRecord, ApiError> {
    let mut errors = validate_employee(fields).err().unwrap_or_default();
    let resigned = fields
        .get(attr::STATUS)
        .and_then(|s| s.parse::<EmployeeStatus>().ok())
        == Some(EmployeeStatus::Resigned);
    if resigned {
        errors.push(FieldError::new(attr::STATUS, FieldRule::BadEnumValue));
    }
    if errors.is_empty() {
        Ok(validate_employee(fields).expect("validated above"))
    } else {
        Err(ApiError::validation(errors))
    }
}

fn has_id(fields: &FieldMap) -> bool {
    fields.get(attr::EMP_ID).is_some_and(|v| !v.trim().is_empty())
}

/// Insert an employee with a fresh leave account, assigning an id if none given.
pub(crate) fn insert_employee(
    t: &mut Transaction<'_>,
    state: &AppState,
    mut fields: FieldMap,
) -> Result<EmployeeRecord, ApiError> {
    if !has_id(&fields) {
        fields.insert(attr::EMP_ID.to_owned(), t.next_employee_id()?);
    }
    let employee = checked_employee(&fields)?;
    t.put_employee(&employee, PutMode::InsertOnly)?;
    t.put_leave_account(&new_leave_account(
        &employee.emp_id,
        employee.full_name(),
        state.config.leave,
    )?)?;
    Ok(employee)
}

pub async fn create(
    State(state): State<AppState>,
    JsonBody(body): JsonBody<Value>,
) -> Result<(StatusCode, Json<EmployeeRecord>), ApiError> {
    let fields = employee_fields(&body)?;
    blocking(move || {
        let mut t = state.store.begin()?;
        let employee = insert_employee(&mut t, &state, fields)?;
        t.commit()?;
        Ok((StatusCode::CREATED, Json(employee)))
    })
    .await
}

pub async fn list(
    State(state): State<AppState>,
    Query(q): Query<HashMap<String, String>>,
) -> Result<Json<Paged<EmployeeRecord>>, ApiError> {
    let q = Params(q);
    let filter = EmployeeFilter {
        department: q.text("department").map(str::to_owned),
        status: q.choice("status")?,
    };
    let page = q.page()?;
    let all = state.store.read().list_employees(&filter)?;
    Ok(Json(page.apply(all)))
}

pub async fn fetch(
    State(state): State<AppState>,
    Path(empid): Path<String>,
) -> Result<Json<EmployeeRecord>, ApiError> {
    Ok(Json(state.store.read().employee(&empid)?))
}

pub async fn update(
    State(state): State<AppState>,
    Path(empid): Path<String>,
    JsonBody(body): JsonBody<Value>,
) -> Result<Json<EmployeeRecord>, ApiError> {
    let mut fields = employee_fields(&body)?;
    if !has_id(&fields) {
        fields.insert(attr::EMP_ID.to_owned(), empid.clone());
    } else if fields[attr::EMP_ID].trim() != empid {
        return Err(ApiError::field(
            attr::EMP_ID,
            FieldRule::MalformedIdentifier,
            "Empid in body differs from the path",
        ));
    }
    let employee = checked_employee(&fields)?;
    blocking(move || {
        let mut t = state.store.begin()?;
        let current = t.employee(&empid)?;
        if current.status == EmployeeStatus::Resigned {
            return Err(hrms_store::StoreError::EmployeeResigned(empid).into());
        }
        t.put_employee(&employee, PutMode::Upsert)?;
        if let Ok(account) = t.leave_account(&empid) {
            if account.emp_name != employee.full_name() {
                t.put_leave_account(&hrms_core::LeaveAccount {
                    emp_name: employee.full_name(),
                    ..account
                })?;
            }
        }
        t.commit()?;
        Ok(Json(employee))
    })
    .await
}

pub async fn remove(
    State(state): State<AppState>,
    Path(empid): Path<String>,
) -> Result<StatusCode, ApiError> {
    blocking(move || {
        state.store.write(|t| t.delete_employee(&empid))?;
        Ok(StatusCode::NO_CONTENT)
    })
    .await
}

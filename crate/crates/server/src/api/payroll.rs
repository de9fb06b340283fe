use std::collections::HashMap;

use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::Json;
use chrono::NaiveDate;
use hrms_core::{
    build_payroll_statement, compute_payable_units, AttendanceEntry, EmployeeStatus, FieldRule,
    Hours, PayFactor, PayrollInput, PayrollStatement,
};
use hrms_store::{PutMode, Queries, StoreError};
use serde::Serialize;
use serde_json::Value;

use super::body::{object, Fields, JsonBody};
use super::params::{Paged, Params};
use super::{blocking, ApiError, AppState};

const EMP_ID: &[&str] = &["emp_id", "empid", "Empid"];

pub async fn run(
    State(state): State<AppState>,
    Query(q): Query<HashMap<String, String>>,
    JsonBody(body): JsonBody<Value>,
) -> Result<(StatusCode, Json<PayrollStatement>), ApiError> {
    let force = Params(q).flag("force");
    let mut f = Fields::new(object(&body)?);
    let emp_id = f.text(EMP_ID);
    let start = f.date(&["period_start"]);
    let end = f.date(&["period_end"]);
    let basic = f.amount(&["basic_pay"]);
    let allowances = f.items("allowances", "allowance");
    let deductions = f.items("deductions", "deduction");
    f.finish()?;
    let (emp_id, start, end, basic) = (emp_id.unwrap(), start.unwrap(), end.unwrap(), basic.unwrap());
    if start > end {
        return Err(ApiError::field(
            "period_end",
            FieldRule::DateOrderViolation,
            "period_end precedes period_start",
        ));
    }

    blocking(move || {
        let mut t = state.store.begin()?;
        let employee = t.employee(&emp_id)?;
        if employee.status == EmployeeStatus::Resigned {
            return Err(StoreError::EmployeeResigned(emp_id).into());
        }
        let in_training = t
            .training_for(&emp_id)?
            .iter()
            .any(|tr| tr.overlaps(start, end));
        let attendance = t.attendance_for(&emp_id, Some(start), Some(end))?;
        let input = PayrollInput {
            emp_id,
            period_start: start,
            period_end: end,
            basic_pay: basic,
            allowances,
            deductions,
            in_training,
            training_pay_factor: if in_training {
                state.config.training_pay_factor
            } else {
                PayFactor::ONE
            },
        };
        let statement = build_payroll_statement(&input, &attendance, state.config.full_day_hours)?;
        let mode = if force { PutMode::Upsert } else { PutMode::InsertOnly };
        t.put_statement(&statement, mode)?;
        t.commit()?;
        Ok((StatusCode::CREATED, Json(statement)))
    })
    .await
}

pub async fn list(
    State(state): State<AppState>,
    Query(q): Query<HashMap<String, String>>,
) -> Result<Json<Paged<PayrollStatement>>, ApiError> {
    let q = Params(q);
    let (from, to) = q.range()?;
    let page = q.page()?;
    let emp_id = q.text("emp_id");
    let all: Vec<_> = state
        .store
        .read()
        .list_statements(from, to)?
        .into_iter()
        .filter(|s| emp_id.is_none_or(|e| s.emp_id == e))
        .collect();
    Ok(Json(page.apply(all)))
}

pub async fn record_attendance(
    State(state): State<AppState>,
    JsonBody(body): JsonBody<Value>,
) -> Result<(StatusCode, Json<AttendanceEntry>), ApiError> {
    let mut f = Fields::new(object(&body)?);
    let emp_id = f.text(EMP_ID);
    let date = f.date(&["date"]);
    let hours = f.hours(&["hours", "hours_worked"]);
    f.finish()?;
    let entry = AttendanceEntry::new(emp_id.unwrap(), date.unwrap(), hours.unwrap())
        .ok_or_else(|| ApiError::field("hours", FieldRule::OutOfRange, "hours must be 0-24"))?;

    blocking(move || {
        let mut t = state.store.begin()?;
        if t.employee(&entry.emp_id)?.status == EmployeeStatus::Resigned {
            return Err(StoreError::EmployeeResigned(entry.emp_id).into());
        }
        t.put_attendance(&entry)?;
        t.commit()?;
        Ok((StatusCode::CREATED, Json(entry)))
    })
    .await
}

#[derive(Serialize)]
pub struct AttendanceView {
    emp_id: String,
    from: Option<NaiveDate>,
    to: Option<NaiveDate>,
    entries: Vec<AttendanceEntry>,
    payable_days: u64,
    payable_hours: Hours,
}

pub async fn attendance(
    State(state): State<AppState>,
    Path(empid): Path<String>,
    Query(q): Query<HashMap<String, String>>,
) -> Result<Json<AttendanceView>, ApiError> {
    let (from, to) = Params(q).range()?;
    let snap = state.store.read();
    let entries = snap.attendance_for(&empid, from, to)?;
    if entries.is_empty() {
        // unknown employees are 404; known ones with no entries are empty
        snap.employee(&empid)?;
    }
    let units = compute_payable_units(
        &entries,
        from.unwrap_or(NaiveDate::MIN),
        to.unwrap_or(NaiveDate::MAX),
        state.config.full_day_hours,
    )?;
    Ok(Json(AttendanceView {
        emp_id: empid,
        from,
        to,
        entries,
        payable_days: units.payable_days,
        payable_hours: units.payable_hours,
    }))
}

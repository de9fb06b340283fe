use std::collections::{BTreeMap, HashMap};

use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::Json;
use chrono::NaiveDate;
use hrms_core::{
    validate_evaluation, validate_training, DomainError, EmployeeRecord, EmployeeStatus,
    FieldRule, LeaveAccount, LeaveType, PerformanceEvaluation, ResignationRecord, TrainingRecord,
    TrainingStatus,
};
use hrms_store::{PutMode, Queries, Reader, StoreError, Table};
use serde::Serialize;
use serde_json::Value;

use super::body::{field_map, object, Fields, JsonBody};
use super::params::{Paged, Params};
use super::{blocking, ApiError, AppState};

fn emp_alias(k: &str) -> Option<&'static str> {
    matches!(k, "empid" | "Empid").then_some("emp_id")
}

/// A domain date-order failure reported against `field`.
fn date_order(field: &'static str) -> impl Fn(StoreError) -> ApiError {
    move |e| match e {
        StoreError::Domain(DomainError::DateOrderViolation(m)) => {
            ApiError::field(field, FieldRule::DateOrderViolation, m)
        }
        other => other.into(),
    }
}

pub async fn create_training(
    State(state): State<AppState>,
    JsonBody(body): JsonBody<Value>,
) -> Result<(StatusCode, Json<TrainingRecord>), ApiError> {
    let fields = field_map(object(&body)?, emp_alias)?;
    let mut record = validate_training(&fields).map_err(ApiError::validation)?;
    record.status = TrainingStatus::InTraining;

    blocking(move || {
        let mut t = state.store.begin()?;
        let employee = t.employee(&record.emp_id)?;
        match employee.status {
            EmployeeStatus::Resigned => {
                return Err(StoreError::EmployeeResigned(record.emp_id).into())
            }
            EmployeeStatus::Active => t.put_employee(
                &EmployeeRecord {
                    status: EmployeeStatus::InTraining,
                    ..employee
                },
                PutMode::Upsert,
            )?,
            EmployeeStatus::InTraining => {}
        }
        t.put_training(&record, PutMode::InsertOnly)?;
        t.commit()?;
        Ok((StatusCode::CREATED, Json(record)))
    })
    .await
}

pub async fn list_training(
    State(state): State<AppState>,
    Query(q): Query<HashMap<String, String>>,
) -> Result<Json<Paged<TrainingRecord>>, ApiError> {
    let q = Params(q);
    let status = q.choice("status")?;
    let page = q.page()?;
    let emp_id = q.text("emp_id");
    let all: Vec<_> = state
        .store
        .read()
        .list_training(status)?
        .into_iter()
        .filter(|t| emp_id.is_none_or(|e| t.emp_id == e))
        .collect();
    Ok(Json(page.apply(all)))
}

pub async fn complete_training(
    State(state): State<AppState>,
    Path((empid, course)): Path<(String, String)>,
    JsonBody(body): JsonBody<Value>,
) -> Result<Json<TrainingRecord>, ApiError> {
    let mut f = Fields::new(object(&body)?);
    let end = f.optional_date(&["end_date"]);
    f.finish()?;
    let end = end.unwrap_or_else(|| state.today());

    blocking(move || {
        let mut t = state.store.begin()?;
        let trainings = t.training_for(&empid)?;
        let record = trainings
            .iter()
            .find(|r| r.course_name == course)
            .ok_or_else(|| ApiError::not_found(format!("no training {course:?} for {empid}")))?;
        if !record.is_open() {
            return Err(ApiError::conflict(
                "illegal_transition",
                format!("training {course:?} is already completed"),
            ));
        }
        let done = record
            .complete(end)
            .map_err(|e| date_order("end_date")(e.into()))?;
        t.put_training(&done, PutMode::Upsert)?;
        let still_open = trainings
            .iter()
            .any(|r| r.course_name != course && r.is_open());
        if let Some(employee) = t.get::<EmployeeRecord>(&empid)? {
            if !still_open && employee.status == EmployeeStatus::InTraining {
                t.put_employee(
                    &EmployeeRecord {
                        status: EmployeeStatus::Active,
                        ..employee
                    },
                    PutMode::Upsert,
                )?;
            }
        }
        t.commit()?;
        Ok(Json(done))
    })
    .await
}

fn evaluation_alias(k: &str) -> Option<&'static str> {
    emp_alias(k).or_else(|| {
        Table::Performance
            .columns()
            .iter()
            .find(|(_, stored)| *stored == k)
            .map(|(field, _)| *field)
    })
}

pub async fn create_evaluation(
    State(state): State<AppState>,
    JsonBody(body): JsonBody<Value>,
) -> Result<(StatusCode, Json<PerformanceEvaluation>), ApiError> {
    let fields = field_map(object(&body)?, evaluation_alias)?;
    let eval = validate_evaluation(&fields).map_err(ApiError::validation)?;
    blocking(move || {
        let mut t = state.store.begin()?;
        t.employee(&eval.emp_id)?;
        t.put_evaluation(&eval)?;
        t.commit()?;
        Ok((StatusCode::CREATED, Json(eval)))
    })
    .await
}

pub async fn evaluations(
    State(state): State<AppState>,
    Path(empid): Path<String>,
    Query(q): Query<HashMap<String, String>>,
) -> Result<Json<Paged<PerformanceEvaluation>>, ApiError> {
    let page = Params(q).page()?;
    let snap = state.store.read();
    let evals = snap.evaluations_for(&empid)?;
    if evals.is_empty() {
        snap.employee(&empid)?;
    }
    Ok(Json(page.apply(evals)))
}

#[derive(Serialize)]
pub struct LeaveView {
    emp_id: String,
    emp_name: String,
    frozen: bool,
    start: BTreeMap<&'static str, u32>,
    taken: BTreeMap<&'static str, u32>,
    remaining: BTreeMap<&'static str, u32>,
    last_taken: BTreeMap<&'static str, Option<NaiveDate>>,
}

const TYPES: [(LeaveType, &str); 3] = [
    (LeaveType::Vacation, "vacation"),
    (LeaveType::Sick, "sick"),
    (LeaveType::Holiday, "holiday"),
];

impl From<LeaveAccount> for LeaveView {
    fn from(acc: LeaveAccount) -> Self {
        let per = |f: &dyn Fn(LeaveType) -> u32| TYPES.iter().map(|(t, k)| (*k, f(*t))).collect();
        LeaveView {
            start: per(&|t| acc.bucket(t).start),
            taken: per(&|t| acc.bucket(t).taken()),
            remaining: per(&|t| acc.bucket(t).balance),
            last_taken: TYPES.iter().map(|(t, k)| (*k, acc.bucket(*t).last_taken)).collect(),
            frozen: acc.frozen,
            emp_name: acc.emp_name,
            emp_id: acc.emp_id,
        }
    }
}

pub async fn leave(
    State(state): State<AppState>,
    Path(empid): Path<String>,
) -> Result<Json<LeaveView>, ApiError> {
    Ok(Json(state.store.read().leave_account(&empid)?.into()))
}

pub async fn apply_leave(
    State(state): State<AppState>,
    Path(empid): Path<String>,
    JsonBody(body): JsonBody<Value>,
) -> Result<Json<LeaveView>, ApiError> {
    let mut f = Fields::new(object(&body)?);
    let kind = f.text(&["type", "leave_type"]);
    let days = f.count(&["days"]);
    let date = f.optional_date(&["date"]);
    f.finish()?;
    let kind = LeaveType::parse(&kind.unwrap())?;
    let days = days.unwrap();
    if days < 1 {
        return Err(ApiError::field("days", FieldRule::OutOfRange, "days must be at least 1"));
    }
    let date = date.unwrap_or_else(|| state.today());
    blocking(move || {
        let account = state
            .store
            .write(|t| t.update_leave_account(&empid, kind, days, date))?;
        Ok(Json(account.into()))
    })
    .await
}

pub async fn resign(
    State(state): State<AppState>,
    Path(empid): Path<String>,
    JsonBody(body): JsonBody<Value>,
) -> Result<(StatusCode, Json<ResignationRecord>), ApiError> {
    let mut f = Fields::new(object(&body)?);
    let position = f.text(&["position"]);
    let date = f.date(&["resignation_date", "Rdate", "date"]);
    f.finish()?;
    let (position, date) = (position.unwrap(), date.unwrap());
    blocking(move || {
        let record = state
            .store
            .write(|t| t.archive_resignation(&empid, &position, date))
            .map_err(date_order("resignation_date"))?;
        Ok((StatusCode::CREATED, Json(record)))
    })
    .await
}

pub async fn list_resignations(
    State(state): State<AppState>,
    Query(q): Query<HashMap<String, String>>,
) -> Result<Json<Paged<ResignationRecord>>, ApiError> {
    let q = Params(q);
    let page = q.page()?;
    let all = state.store.read().list_resignations(q.text("department"))?;
    Ok(Json(page.apply(all)))
}

pub async fn resignation(
    State(state): State<AppState>,
    Path(empid): Path<String>,
) -> Result<Json<ResignationRecord>, ApiError> {
    Ok(Json(state.store.read().resignation(&empid)?))
}

use std::collections::HashMap;

use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::Json;
use hrms_core::employee::attr;
use hrms_core::{
    match_applicant, new_leave_account, promote_applicant, validate_applicant,
    validate_requirement, ApplicantRecord, ApplicantStatus, EmployeeRecord, JobRequirement,
    LeaveAccount,
};
use hrms_store::{PutMode, Queries};
use serde::Serialize;
use serde_json::Value;

use super::body::{field_map, object, JsonBody};
use super::employees::{checked_employee, employee_fields};
use super::params::{Paged, Params};
use super::{blocking, ApiError, AppState};

pub async fn register(
    State(state): State<AppState>,
    JsonBody(body): JsonBody<Value>,
) -> Result<(StatusCode, Json<ApplicantRecord>), ApiError> {
    let fields = field_map(object(&body)?, |_| None)?;
    // validate before taking an id so bad input never consumes one
    validate_applicant(&fields, String::new()).map_err(ApiError::validation)?;
    blocking(move || {
        let mut t = state.store.begin()?;
        let id = t.next_applicant_id()?;
        let applicant = validate_applicant(&fields, id).map_err(ApiError::validation)?;
        t.put_applicant(&applicant)?;
        t.commit()?;
        tracing::info!(applicant_id = %applicant.applicant_id, "applicant registered");
        Ok((StatusCode::CREATED, Json(applicant)))
    })
    .await
}

pub async fn list(
    State(state): State<AppState>,
    Query(q): Query<HashMap<String, String>>,
) -> Result<Json<Paged<ApplicantRecord>>, ApiError> {
    let q = Params(q);
    let status = q.choice("status")?;
    let page = q.page()?;
    Ok(Json(page.apply(state.store.read().list_applicants(status)?)))
}

pub async fn fetch(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<ApplicantRecord>, ApiError> {
    Ok(Json(state.store.read().applicant(&id)?))
}

async fn transition(
    state: AppState,
    id: String,
    next: ApplicantStatus,
) -> Result<Json<ApplicantRecord>, ApiError> {
    blocking(move || {
        let updated = state.store.write(|t| {
            let updated = t.applicant(&id)?.transition(next)?;
            t.put_applicant(&updated)?;
            Ok(updated)
        })?;
        Ok(Json(updated))
    })
    .await
}

pub async fn shortlist(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<ApplicantRecord>, ApiError> {
    transition(state, id, ApplicantStatus::Shortlisted).await
}

pub async fn reject(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<ApplicantRecord>, ApiError> {
    transition(state, id, ApplicantStatus::Rejected).await
}

#[derive(Serialize)]
pub struct Hired {
    applicant: ApplicantRecord,
    employee: EmployeeRecord,
    leave: LeaveAccount,
}

pub async fn hire(
    State(state): State<AppState>,
    Path(id): Path<String>,
    JsonBody(body): JsonBody<Value>,
) -> Result<(StatusCode, Json<Hired>), ApiError> {
    let mut fields = employee_fields(&body)?;
    blocking(move || {
        let mut t = state.store.begin()?;
        let applicant = t.applicant(&id)?;
        let emp_id = match fields.remove(attr::EMP_ID).filter(|v| !v.trim().is_empty()) {
            Some(given) => given,
            None => t.next_employee_id()?,
        };
        let (applicant, employee) = promote_applicant(&applicant, &fields, &emp_id)?;
        checked_employee(&employee.to_field_map())?;
        let leave = new_leave_account(&employee.emp_id, employee.full_name(), state.config.leave)?;
        t.put_employee(&employee, PutMode::InsertOnly)?;
        t.put_leave_account(&leave)?;
        t.put_applicant(&applicant)?;
        t.commit()?;
        Ok((
            StatusCode::CREATED,
            Json(Hired {
                applicant,
                employee,
                leave,
            }),
        ))
    })
    .await
}

#[derive(Serialize)]
pub struct MatchReply {
    requirement: JobRequirement,
    applicant_ids: Vec<String>,
}

pub async fn matching(
    State(state): State<AppState>,
    JsonBody(body): JsonBody<Value>,
) -> Result<Json<MatchReply>, ApiError> {
    let obj = object(&body)?;
    let obj = match obj.get("requirement") {
        Some(Value::Object(inner)) => inner,
        _ => obj,
    };
    let fields = field_map(obj, |k| match k {
        "specialization" => Some("required_specialization"),
        "min_experience" => Some("min_experience_years"),
        _ => None,
    })?;
    let requirement = validate_requirement(&fields).map_err(ApiError::validation)?;
    blocking(move || {
        let mut t = state.store.begin()?;
        let applicant_ids = t
            .list_applicants(None)?
            .into_iter()
            .filter(|a| match_applicant(a, &requirement))
            .map(|a| a.applicant_id)
            .collect();
        t.put(&requirement)?;
        t.commit()?;
        Ok(Json(MatchReply {
            requirement,
            applicant_ids,
        }))
    })
    .await
}

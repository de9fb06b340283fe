use std::collections::HashMap;

use axum::extract::{Query, State};
use axum::http::header;
use axum::response::{IntoResponse, Response};
use hrms_reporting::{generate_report, ReportCriteria};

use super::params::Params;
use super::{ApiError, AppState};

pub async fn generate(
    State(state): State<AppState>,
    Query(q): Query<HashMap<String, String>>,
) -> Result<Response, ApiError> {
    let q = Params(q);
    let kind = q.text("kind").unwrap_or_default();
    let criteria = ReportCriteria::parse(
        kind,
        q.text("from"),
        q.text("to"),
        q.text("department"),
        q.text("format"),
    )?;
    let doc = generate_report(&state.store.read(), &criteria)?;
    Ok((
        [
            (header::CONTENT_TYPE, doc.content_type.to_owned()),
            (
                header::CONTENT_DISPOSITION,
                format!("attachment; filename=\"{}\"", doc.filename),
            ),
        ],
        doc.bytes,
    )
        .into_response())
}

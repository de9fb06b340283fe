//! JSON-over-HTTP API.
//!
//! Every route except login and applicant registration requires a bearer
//! token issued by `POST /api/login`.

mod applicants;
mod body;
mod employees;
pub mod error;
mod params;
mod payroll;
mod reports;
mod routes;
mod staff;

use std::sync::Arc;

use axum::extract::{Request, State};
use axum::http::{header, Method};
use axum::middleware::Next;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post, put};
use axum::{Json, Router};
use chrono::{DateTime, Utc};
use hrms_store::{AuthConfig, Authenticator, Clock, Store, SystemClock};
use serde::{Deserialize, Serialize};

use crate::config::Config;
pub use error::ApiError;
pub use routes::{api_reference, RouteDoc, ROUTES};
use body::JsonBody;

#[derive(Clone)]
pub struct AppState {
    pub store: Store,
    pub auth: Authenticator,
    pub config: Arc<Config>,
    pub clock: Arc<dyn Clock>,
}

impl AppState {
    pub fn new(store: Store, config: Config) -> Self {
        AppState::with_clock(store, config, Arc::new(SystemClock))
    }

    pub fn with_clock(store: Store, config: Config, clock: Arc<dyn Clock>) -> Self {
        let auth = Authenticator::new(
            store.clone(),
            clock.clone(),
            AuthConfig {
                session_ttl: config.session_ttl,
                iterations: config.pbkdf2_iterations,
            },
        );
        AppState {
            store,
            auth,
            config: Arc::new(config),
            clock,
        }
    }

    pub(crate) fn today(&self) -> chrono::NaiveDate {
        self.clock.now().date_naive()
    }
}

/// Run store work off the async executor.
pub(crate) async fn blocking<T: Send + 'static>(
    f: impl FnOnce() -> Result<T, ApiError> + Send + 'static,
) -> Result<T, ApiError> {
    tokio::task::spawn_blocking(f)
        .await
        .map_err(|e| ApiError::internal(e.to_string()))?
}

pub fn router(state: AppState) -> Router {
    let mut app = Router::new()
        .route("/api/login", post(login))
        .route("/api/employees", post(employees::create).get(employees::list))
        .route(
            "/api/employees/{empid}",
            get(employees::fetch)
                .put(employees::update)
                .delete(employees::remove),
        )
        .route("/api/payroll/run", post(payroll::run))
        .route("/api/payroll", get(payroll::list))
        .route("/api/attendance", post(payroll::record_attendance))
        .route("/api/attendance/{empid}", get(payroll::attendance))
        .route("/api/training", post(staff::create_training).get(staff::list_training))
        .route("/api/training/{empid}/{course}", put(staff::complete_training))
        .route("/api/performance", post(staff::create_evaluation))
        .route("/api/performance/{empid}", get(staff::evaluations))
        .route("/api/leave/{empid}", get(staff::leave))
        .route("/api/leave/{empid}/apply", post(staff::apply_leave))
        .route("/api/resignations", get(staff::list_resignations))
        .route(
            "/api/resignations/{empid}",
            post(staff::resign).get(staff::resignation),
        )
        .route("/api/applicants", post(applicants::register).get(applicants::list))
        .route("/api/applicants/match", post(applicants::matching))
        .route("/api/applicants/{id}", get(applicants::fetch))
        .route("/api/applicants/{id}/shortlist", post(applicants::shortlist))
        .route("/api/applicants/{id}/reject", post(applicants::reject))
        .route("/api/applicants/{id}/hire", post(applicants::hire))
        .route("/api/reports", get(reports::generate))
        .fallback(not_found);
    if let Some(dir) = &state.config.console_dir {
        app = app.nest_service("/console", tower_http::services::ServeDir::new(dir));
    }
    app.layer(axum::middleware::from_fn_with_state(
        state.clone(),
        require_session,
    ))
    .layer(axum::middleware::from_fn(log_request))
    .with_state(state)
}

async fn not_found() -> ApiError {
    ApiError {
        code: "route_not_found",
        ..ApiError::not_found("no such route")
    }
}

fn is_public(method: &Method, path: &str) -> bool {
    path == "/console"
        || path.starts_with("/console/")
        || ROUTES
            .iter()
            .any(|r| r.public && r.method == method.as_str() && r.path == path)
}

async fn require_session(State(state): State<AppState>, req: Request, next: Next) -> Response {
    if is_public(req.method(), req.uri().path()) {
        return next.run(req).await;
    }
    let token = req
        .headers()
        .get(header::AUTHORIZATION)
        .and_then(|v| v.to_str().ok())
        .and_then(|v| v.strip_prefix("Bearer "))
        .map(str::trim);
    let Some(token) = token else {
        return ApiError::unauthorized("missing bearer token").into_response();
    };
    match state.auth.verify_session(token) {
        Ok(_) => next.run(req).await,
        Err(e) => ApiError::from(e).into_response(),
    }
}

async fn log_request(req: Request, next: Next) -> Response {
    let method = req.method().clone();
    let path = req.uri().path().to_owned();
    let response = next.run(req).await;
    tracing::info!(%method, %path, status = response.status().as_u16(), "request");
    response
}

#[derive(Deserialize)]
struct LoginBody {
    #[serde(alias = "user_id", alias = "Userid")]
    userid: String,
    password: String,
}

#[derive(Serialize)]
struct LoginReply {
    token: String,
    user_id: String,
    expires_at: DateTime<Utc>,
}

async fn login(
    State(state): State<AppState>,
    JsonBody(body): JsonBody<LoginBody>,
) -> Result<Json<LoginReply>, ApiError> {
    let session = blocking(move || Ok(state.auth.authenticate(&body.userid, &body.password)?)).await?;
    Ok(Json(LoginReply {
        token: session.token,
        user_id: session.user_id,
        expires_at: session.expires_at,
    }))
}

#![allow(dead_code)]

use std::sync::Arc;

use axum::body::Body;
use axum::http::{header, HeaderMap, Request, StatusCode};
use axum::Router;
use chrono::{Duration, TimeZone, Utc};
use http_body_util::BodyExt;
use hrms_server::{router, AppState, Config};
use hrms_store::{ManualClock, Store};
use serde_json::{json, Value};
use tower::ServiceExt;

pub const ADMIN: &str = "admin";
pub const PASSWORD: &str = "s3cretpass";

pub struct TestApp {
    pub dir: tempfile::TempDir,
    pub state: AppState,
    pub app: Router,
    pub clock: Arc<ManualClock>,
    pub token: String,
}

pub struct Reply {
    pub status: StatusCode,
    pub headers: HeaderMap,
    pub bytes: Vec<u8>,
}

impl Reply {
    pub fn json(&self) -> Value {
        serde_json::from_slice(&self.bytes)
            .unwrap_or_else(|_| panic!("not JSON: {}", String::from_utf8_lossy(&self.bytes)))
    }

    pub fn text(&self) -> String {
        String::from_utf8(self.bytes.clone()).unwrap()
    }

    /// `(field, rule)` pairs of a 422 body.
    pub fn field_errors(&self) -> Vec<(String, String)> {
        self.json()["field_errors"]
            .as_array()
            .map(|a| {
                a.iter()
                    .map(|e| {
                        (
                            e["field"].as_str().unwrap().to_owned(),
                            e["rule"].as_str().unwrap().to_owned(),
                        )
                    })
                    .collect()
            })
            .unwrap_or_default()
    }
}

pub fn test_config() -> Config {
    Config {
        pbkdf2_iterations: 1_000,
        ..Config::default()
    }
}

impl TestApp {
    pub fn with_config(config: Config) -> Self {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::create(dir.path().join("store")).unwrap();
        let clock = Arc::new(ManualClock::new(
            Utc.with_ymd_and_hms(2024, 1, 1, 9, 0, 0).unwrap(),
        ));
        let state = AppState::with_clock(store, config, clock.clone());
        state.auth.enroll(ADMIN, PASSWORD).unwrap();
        let token = state.auth.authenticate(ADMIN, PASSWORD).unwrap().token;
        let app = router(state.clone());
        TestApp {
            dir,
            state,
            app,
            clock,
            token,
        }
    }

    pub fn new() -> Self {
        TestApp::with_config(test_config())
    }

    pub fn seeded() -> Self {
        let t = TestApp::new();
        hrms_server::seed::seed_demo(&t.state.store, &t.state.config).unwrap();
        t
    }

    pub async fn send(&self, method: &str, path: &str, body: Option<Value>, token: Option<&str>) -> Reply {
        let mut req = Request::builder().method(method).uri(path);
        if let Some(token) = token {
            req = req.header(header::AUTHORIZATION, format!("Bearer {token}"));
        }
        let req = match body {
            Some(b) => req
                .header(header::CONTENT_TYPE, "application/json")
                .body(Body::from(b.to_string())),
            None => req.body(Body::empty()),
        }
        .unwrap();
        let res = self.app.clone().oneshot(req).await.unwrap();
        let status = res.status();
        let headers = res.headers().clone();
        let bytes = res.into_body().collect().await.unwrap().to_bytes().to_vec();
        Reply {
            status,
            headers,
            bytes,
        }
    }

    pub async fn call(&self, method: &str, path: &str, body: Option<Value>) -> Reply {
        self.send(method, path, body, Some(&self.token)).await
    }

    pub async fn get(&self, path: &str) -> Reply {
        self.call("GET", path, None).await
    }

    pub async fn post(&self, path: &str, body: Value) -> Reply {
        self.call("POST", path, Some(body)).await
    }

    pub fn advance(&self, by: Duration) {
        self.clock.advance(by);
    }
}

pub fn employee_body(emp_id: &str, dept: &str) -> Value {
    json!({
        "Title": "Mr",
        "Empid": emp_id,
        "Firname": "Arun",
        "Lastname": "Kumar",
        "Blood": "O+",
        "Nation": "Indian",
        "Address": "12 Main Road",
        "City": "Namakkal",
        "State": "Tamil Nadu",
        "Pin": "637001",
        "Home": "04286222333",
        "Workplace": "04286222444",
        "Email": "arun@example.com",
        "Status": "Active",
        "Supervisor": "Priya",
        "Hdate": "2010-01-04",
        "Dept": dept,
        "Bdate": "1985-07-19",
        "gender": "M",
        "marital": "S"
    })
}

pub fn applicant_body(name: &str, spec: &str, years: u32) -> Value {
    json!({
        "name": name,
        "contact_email": "someone@example.com",
        "contact_phone": "9840000000",
        "work_experience_years": years,
        "specialization": spec,
        "interest": "Backend",
        "resume_text": "Worked on things."
    })
}

pub fn evaluation_body(emp_id: &str, date: &str) -> Value {
    json!({
        "emp_name": "Arun Kumar",
        "emp_id": emp_id,
        "department": "CS",
        "workgroup": "Platform",
        "division": "Engineering",
        "position": "Engineer",
        "evaluation_date": date,
        "evaluator": "Priya",
        "review_from": "2023-07-01",
        "review_to": "2023-12-31",
        "responsibility": "Payroll service"
    })
}

/// Substitute `{param}` segments with a harmless value.
pub fn concrete(path: &str) -> String {
    path.split('/')
        .map(|seg| if seg.starts_with('{') { "X1" } else { seg })
        .collect::<Vec<_>>()
        .join("/")
}

//! Endpoint inventory, used for the published reference and the auth sweep.

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RouteDoc {
    pub method: &'static str,
    pub path: &'static str,
    pub public: bool,
    pub summary: &'static str,
}

const fn r(method: &'static str, path: &'static str, summary: &'static str) -> RouteDoc {
    RouteDoc {
        method,
        path,
        public: false,
        summary,
    }
}

const fn public(method: &'static str, path: &'static str, summary: &'static str) -> RouteDoc {
    RouteDoc {
        method,
        path,
        public: true,
        summary,
    }
}

pub const ROUTES: &[RouteDoc] = &[
    public("POST", "/api/login", "Exchange `{userid, password}` for `{token, user_id, expires_at}`."),
    r("POST", "/api/employees", "Create an employee and its leave account. Body: employee attributes. 201, 409 duplicate, 422."),
    r("GET", "/api/employees", "List employees. Query: `department`, `status`, `offset`, `limit`."),
    r("GET", "/api/employees/{empid}", "Fetch one employee."),
    r("PUT", "/api/employees/{empid}", "Replace an employee's attributes."),
    r("DELETE", "/api/employees/{empid}", "Delete an employee and its leave account. 204."),
    r("POST", "/api/payroll/run", "Compute and store a statement. Body: `emp_id, period_start, period_end, basic_pay, allowances, deductions`. Query: `force=true` to replace. 201, 409."),
    r("GET", "/api/payroll", "List statements. Query: `emp_id`, `from`, `to` (period start), `offset`, `limit`."),
    r("POST", "/api/attendance", "Record hours for a day. Body: `emp_id, date, hours` (0-24). Replaces an existing entry for that day."),
    r("GET", "/api/attendance/{empid}", "Entries in date order with `payable_days` and `payable_hours`. Query: `from`, `to`."),
    r("POST", "/api/training", "Open a training record. Body: `emp_id, course_name, start_date, end_date?`. Marks the employee InTraining."),
    r("GET", "/api/training", "List training. Query: `status`, `emp_id`, `offset`, `limit`."),
    r("PUT", "/api/training/{empid}/{course}", "Complete a training. Body: `end_date`. Restores Active when no training remains open."),
    r("POST", "/api/performance", "Store an evaluation. Body: evaluation fields."),
    r("GET", "/api/performance/{empid}", "Evaluations for one employee, newest first."),
    r("GET", "/api/leave/{empid}", "Leave balances: `start`, `taken`, `remaining`, `last_taken` per type."),
    r("POST", "/api/leave/{empid}/apply", "Take leave. Body: `type, days, date?`. 409 when the balance is insufficient."),
    r("POST", "/api/resignations/{empid}", "Resign an employee. Body: `position, resignation_date`. 201, 409 already resigned."),
    r("GET", "/api/resignations", "List ex-employees. Query: `department`, `offset`, `limit`."),
    r("GET", "/api/resignations/{empid}", "Fetch one resignation record."),
    public("POST", "/api/applicants", "Register an applicant. Body: `name, contact_email, contact_phone, work_experience_years, specialization, interest, resume_text`. 201."),
    r("GET", "/api/applicants", "List applicants. Query: `status`, `offset`, `limit`."),
    r("GET", "/api/applicants/{id}", "Fetch one applicant."),
    r("POST", "/api/applicants/{id}/shortlist", "Move a submitted applicant to Shortlisted."),
    r("POST", "/api/applicants/{id}/reject", "Reject a submitted or shortlisted applicant."),
    r("POST", "/api/applicants/{id}/hire", "Hire a shortlisted applicant. Body: employee attributes. Creates the employee and leave account."),
    r("POST", "/api/applicants/match", "Store a job requirement and return matching applicant ids. Body: `required_specialization, min_experience_years, department?`."),
    r("GET", "/api/reports", "Generate a report. Query: `kind`, `from`, `to`, `department`, `format` (CSV or PlainText)."),
];

/// Markdown endpoint reference.
pub fn api_reference() -> String {
    let mut out = String::from(
        "# HRMS API reference\n\n\
         JSON over HTTP. Send `Authorization: Bearer <token>` on every route not marked public.\n\
         Errors use `{http_status, code, message, field_errors?}`; validation failures are 422 and\n\
         list every invalid field. List endpoints return `{items, total, offset, limit}` with a\n\
         default limit of 100.\n\n\
         | Method | Path | Auth | Description |\n\
         |---|---|---|---|\n",
    );
    for route in ROUTES {
        let _ = writeln!(
            out,
            "| {} | `{}` | {} | {} |",
            route.method,
            route.path,
            if route.public { "public" } else { "bearer" },
            route.summary
        );
    }
    out
}

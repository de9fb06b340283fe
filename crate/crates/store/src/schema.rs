//! Stored table layout.
//!
//! Rows are JSON objects keyed by stored attribute names. The HR tables keep
//! the attribute names of the original schema (`Empid`, `vacbalance`, `Rdate`,
//! ...); [`Table::columns`] maps each record field to its stored attribute and
//! is the single source for that mapping.

use std::fmt;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use hrms_core::employee::attr;
use hrms_core::{
    ApplicantRecord, AttendanceEntry, Credential, EmployeeRecord, JobRequirement, LeaveAccount,
    PayrollStatement, PerformanceEvaluation, ResignationRecord, TrainingRecord,
};

use crate::error::{Result, StoreError};

pub type Row = Map<String, Value>;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Table {
    #[serde(rename = "LOGIN")]
    Login,
    #[serde(rename = "EMPLOYEE")]
    Employee,
    #[serde(rename = "LEAVE_MANAGEMENT")]
    Leave,
    #[serde(rename = "PERFORMANCE")]
    Performance,
    #[serde(rename = "RESIGNATION")]
    Resignation,
    #[serde(rename = "ATTENDANCE")]
    Attendance,
    #[serde(rename = "TRAINING")]
    Training,
    #[serde(rename = "PAYROLL")]
    Payroll,
    #[serde(rename = "APPLICANT")]
    Applicant,
    #[serde(rename = "JOB_REQUIREMENT")]
    Requirement,
    #[serde(rename = "SESSION")]
    Session,
    #[serde(rename = "SEQUENCE")]
    Sequence,
}

const EMPLOYEE_COLUMNS: [(&str, &str); 22] = {
    let mut cols = [("", ""); 22];
    let mut i = 0;
    while i < 22 {
        cols[i] = (attr::FIELD_NAMES[i], attr::ALL[i]);
        i += 1;
    }
    cols
};

const LEAVE_COLUMNS: &[(&str, &str)] = &[
    ("emp_name", "empname"),
    ("emp_id", "Empid"),
    ("vacation_start", "vacstart"),
    ("vacation_balance", "vacbalance"),
    ("vacation_last_taken", "Vldate"),
    ("sick_start", "sickstart"),
    ("sick_balance", "sickbalance"),
    ("sick_last_taken", "Sldate"),
    ("holiday_start", "holstart"),
    ("holiday_balance", "Holbal"),
    ("holiday_last_taken", "Hldate"),
    ("frozen", "frozen"),
];

const PERFORMANCE_COLUMNS: &[(&str, &str)] = &[
    ("emp_name", "Empname"),
    ("emp_id", "Empid"),
    ("department", "Dept"),
    ("workgroup", "Workgroup"),
    ("division", "Division"),
    ("position", "Position"),
    ("evaluation_date", "Evaluate"),
    ("evaluator", "Evaluator"),
    ("review_from", "Revfr"),
    ("review_to", "Revto"),
    ("responsibility", "responsibility"),
];

const RESIGNATION_COLUMNS: &[(&str, &str)] = &[
    ("title", "Title"),
    ("emp_name", "Empname"),
    ("emp_id", "Empid"),
    ("position", "position"),
    ("department", "Dept"),
    ("supervisor", "Superv"),
    ("joining_date", "Jdate"),
    ("resignation_date", "Rdate"),
    ("email", "Email"),
    ("gender", "Gender"),
    ("city", "City"),
    ("home_phone", "Homephone"),
];

const LOGIN_COLUMNS: &[(&str, &str)] = &[
    ("user_id", "Userid"),
    ("password_digest", "password"),
    ("salt", "salt"),
    ("iterations", "iterations"),
];

impl Table {
    pub const ALL: [Table; 12] = [
        Table::Login,
        Table::Employee,
        Table::Leave,
        Table::Performance,
        Table::Resignation,
        Table::Attendance,
        Table::Training,
        Table::Payroll,
        Table::Applicant,
        Table::Requirement,
        Table::Session,
        Table::Sequence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Table::Login => "LOGIN",
            Table::Employee => "EMPLOYEE",
            Table::Leave => "LEAVE_MANAGEMENT",
            Table::Performance => "PERFORMANCE",
            Table::Resignation => "RESIGNATION",
            Table::Attendance => "ATTENDANCE",
            Table::Training => "TRAINING",
            Table::Payroll => "PAYROLL",
            Table::Applicant => "APPLICANT",
            Table::Requirement => "JOB_REQUIREMENT",
            Table::Session => "SESSION",
            Table::Sequence => "SEQUENCE",
        }
    }

    /// `(record field, stored attribute)` pairs whose names differ or matter
    /// for auditing. Fields not listed are stored under their own name.
    pub fn columns(self) -> &'static [(&'static str, &'static str)] {
        match self {
            Table::Login => LOGIN_COLUMNS,
            Table::Employee => &EMPLOYEE_COLUMNS,
            Table::Leave => LEAVE_COLUMNS,
            Table::Performance => PERFORMANCE_COLUMNS,
            Table::Resignation => RESIGNATION_COLUMNS,
            _ => &[],
        }
    }

    /// Stored attributes forming the primary key, in order.
    pub fn key_columns(self) -> &'static [&'static str] {
        match self {
            Table::Login => &["Userid"],
            Table::Employee | Table::Leave | Table::Resignation => &["Empid"],
            Table::Performance => &["Empid", "Evaluate"],
            Table::Attendance => &["emp_id", "date"],
            Table::Training => &["emp_id", "course_name"],
            Table::Payroll => &["emp_id", "period_start"],
            Table::Applicant => &["applicant_id"],
            Table::Requirement => &["department", "required_specialization"],
            Table::Session => &["token_digest"],
            Table::Sequence => &["name"],
        }
    }

    pub fn stored_name(self, field: &str) -> &str {
        self.columns()
            .iter()
            .find(|(f, _)| *f == field)
            .map_or(field, |(_, s)| s)
    }

    pub fn field_name(self, stored: &str) -> &str {
        self.columns()
            .iter()
            .find(|(_, s)| *s == stored)
            .map_or(stored, |(f, _)| f)
    }

    /// Primary key of a stored row.
    pub fn key_of(self, row: &Row) -> Result<String> {
        let mut parts = Vec::with_capacity(2);
        for col in self.key_columns() {
            let part = match row.get(*col) {
                Some(Value::String(s)) => s.clone(),
                Some(Value::Number(n)) => n.to_string(),
                _ => {
                    return Err(StoreError::Corrupt(format!(
                        "{} row lacks key attribute {col}",
                        self.name()
                    )))
                }
            };
            parts.push(part);
        }
        Ok(parts.join("|"))
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Table {
    type Err = StoreError;

    fn from_str(s: &str) -> Result<Self> {
        Table::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| StoreError::Corrupt(format!("unknown table {s:?}")))
    }
}

/// A record type persisted in one table.
pub trait Record: Serialize + DeserializeOwned {
    const TABLE: Table;

    fn to_row(&self) -> Result<Row> {
        match serde_json::to_value(self)? {
            Value::Object(fields) => Ok(fields
                .into_iter()
                .map(|(k, v)| (Self::TABLE.stored_name(&k).to_owned(), v))
                .collect()),
            _ => Err(StoreError::Corrupt("record is not an object".into())),
        }
    }

    fn from_row(row: &Row) -> Result<Self> {
        let fields: Map<String, Value> = row
            .iter()
            .map(|(k, v)| (Self::TABLE.field_name(k).to_owned(), v.clone()))
            .collect();
        Ok(serde_json::from_value(Value::Object(fields))?)
    }

    fn key(&self) -> Result<String> {
        Self::TABLE.key_of(&self.to_row()?)
    }
}

/// Next value of a named counter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRow {
    pub name: String,
    pub next: u64,
}

/// A stored session, keyed by the digest of its bearer token.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionRecord {
    pub token_digest: String,
    pub user_id: String,
    pub issued_at: chrono::DateTime<chrono::Utc>,
    pub expires_at: chrono::DateTime<chrono::Utc>,
}

macro_rules! record {
    ($($ty:ty => $table:expr),+ $(,)?) => {
        $(impl Record for $ty { const TABLE: Table = $table; })+
    };
}

record! {
    Credential => Table::Login,
    EmployeeRecord => Table::Employee,
    LeaveAccount => Table::Leave,
    PerformanceEvaluation => Table::Performance,
    ResignationRecord => Table::Resignation,
    AttendanceEntry => Table::Attendance,
    TrainingRecord => Table::Training,
    PayrollStatement => Table::Payroll,
    ApplicantRecord => Table::Applicant,
    JobRequirement => Table::Requirement,
    SessionRecord => Table::Session,
    SequenceRow => Table::Sequence,
}

/// Deserialize a stored row of `table` just to prove it is well-formed.
pub fn check_row(table: Table, row: &Row) -> Result<()> {
    fn probe<R: Record>(row: &Row) -> Result<()> {
        R::from_row(row).map(|_| ())
    }
    match table {
        Table::Login => probe::<Credential>(row),
        Table::Employee => probe::<EmployeeRecord>(row),
        Table::Leave => probe::<LeaveAccount>(row),
        Table::Performance => probe::<PerformanceEvaluation>(row),
        Table::Resignation => probe::<ResignationRecord>(row),
        Table::Attendance => probe::<AttendanceEntry>(row),
        Table::Training => probe::<TrainingRecord>(row),
        Table::Payroll => probe::<PayrollStatement>(row),
        Table::Applicant => probe::<ApplicantRecord>(row),
        Table::Requirement => probe::<JobRequirement>(row),
        Table::Session => probe::<SessionRecord>(row),
        Table::Sequence => probe::<SequenceRow>(row),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hrms_core::{new_leave_account, LeaveAllocations};

    #[test]
    fn leave_rows_use_table_attributes() {
        let acc = new_leave_account("E1", "Arun", LeaveAllocations::default()).unwrap();
        let row = acc.to_row().unwrap();
        assert_eq!(row["vacbalance"], 20);
        assert_eq!(row["Holbal"], 8);
        assert_eq!(row["Empid"], "E1");
        assert!(row.contains_key("Vldate"));
        assert_eq!(LeaveAccount::from_row(&row).unwrap(), acc);
        assert_eq!(acc.key().unwrap(), "E1");
    }

    #[test]
    fn column_maps_are_bijective() {
        for t in Table::ALL {
            let cols = t.columns();
            for (i, (f, s)) in cols.iter().enumerate() {
                assert!(cols[i + 1..].iter().all(|(f2, s2)| f2 != f && s2 != s), "{t}");
            }
        }
    }

    #[test]
    fn table_names_parse_back() {
        for t in Table::ALL {
            assert_eq!(t.name().parse::<Table>().unwrap(), t);
            assert_eq!(serde_json::to_value(t).unwrap(), t.name());
        }
    }
}

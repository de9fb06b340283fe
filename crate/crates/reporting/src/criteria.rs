use std::fmt;
use std::str::FromStr;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::{ReportError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReportKind {
    EmployeeRoster,
    PayrollRegister,
    LeaveSummary,
    TrainingStatus,
    PerformanceLog,
    ResignationLog,
    ApplicantFunnel,
}

impl ReportKind {
    pub const ALL: [ReportKind; 7] = [
        ReportKind::EmployeeRoster,
        ReportKind::PayrollRegister,
        ReportKind::LeaveSummary,
        ReportKind::TrainingStatus,
        ReportKind::PerformanceLog,
        ReportKind::ResignationLog,
        ReportKind::ApplicantFunnel,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ReportKind::EmployeeRoster => "EmployeeRoster",
            ReportKind::PayrollRegister => "PayrollRegister",
            ReportKind::LeaveSummary => "LeaveSummary",
            ReportKind::TrainingStatus => "TrainingStatus",
            ReportKind::PerformanceLog => "PerformanceLog",
            ReportKind::ResignationLog => "ResignationLog",
            ReportKind::ApplicantFunnel => "ApplicantFunnel",
        }
    }
}

impl fmt::Display for ReportKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ReportKind {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self> {
        ReportKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ReportError::InvalidCriteria(format!("unknown report kind {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum ReportFormat {
    #[default]
    #[serde(rename = "CSV")]
    Csv,
    PlainText,
}

impl ReportFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ReportFormat::Csv => "csv",
            ReportFormat::PlainText => "txt",
        }
    }

    pub fn content_type(self) -> &'static str {
        match self {
            ReportFormat::Csv => "text/csv; charset=utf-8",
            ReportFormat::PlainText => "text/plain; charset=utf-8",
        }
    }
}

impl FromStr for ReportFormat {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "plaintext" | "plain" | "text" | "txt" => Ok(ReportFormat::PlainText),
            _ => Err(ReportError::InvalidCriteria(format!("unknown report format {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportCriteria {
    pub kind: ReportKind,
    /// Inclusive `(from, to)`.
    pub period: Option<(NaiveDate, NaiveDate)>,
    pub department: Option<String>,
    pub format: ReportFormat,
}

impl ReportCriteria {
    pub fn new(kind: ReportKind, format: ReportFormat) -> Self {
        ReportCriteria {
            kind,
            period: None,
            department: None,
            format,
        }
    }

    pub fn with_period(mut self, from: NaiveDate, to: NaiveDate) -> Self {
        self.period = Some((from, to));
        self
    }

    pub fn with_department(mut self, department: impl Into<String>) -> Self {
        self.department = Some(department.into());
        self
    }

    /// Assemble criteria from optional textual parts, as given on a query
    /// string or command line. `from` and `to` must come together.
    pub fn parse(
        kind: &str,
        from: Option<&str>,
        to: Option<&str>,
        department: Option<&str>,
        format: Option<&str>,
    ) -> Result<Self> {
        let date = |name: &str, v: &str| {
            hrms_core::parse_date(v)
                .ok_or_else(|| ReportError::InvalidCriteria(format!("{name} must be YYYY-MM-DD")))
        };
        let period = match (from, to) {
            (None, None) => None,
            (Some(f), Some(t)) => Some((date("from", f)?, date("to", t)?)),
            _ => {
                return Err(ReportError::InvalidCriteria(
                    "from and to must be given together".into(),
                ))
            }
        };
        let criteria = ReportCriteria {
            kind: kind.parse()?,
            period,
            department: department
                .map(str::trim)
                .filter(|d| !d.is_empty())
                .map(str::to_owned),
            format: format.map(str::parse).transpose()?.unwrap_or_default(),
        };
        criteria.validate()?;
        Ok(criteria)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some((from, to)) = self.period {
            if from > to {
                return Err(ReportError::InvalidCriteria(format!(
                    "period start {from} is after end {to}"
                )));
            }
        } else if self.kind == ReportKind::PayrollRegister {
            return Err(ReportError::InvalidCriteria(
                "PayrollRegister requires a period".into(),
            ));
        }
        Ok(())
    }

    /// `<kind>_<from>_<to>.<ext>`, with `all` for an open period.
    pub fn filename(&self) -> String {
        let (from, to) = match self.period {
            Some((f, t)) => (f.to_string(), t.to_string()),
            None => ("all".to_owned(), "all".to_owned()),
        };
        format!("{}_{from}_{to}.{}", self.kind, self.format.extension())
    }

    pub(crate) fn in_period(&self, date: NaiveDate) -> bool {
        self.period.is_none_or(|(f, t)| date >= f && date <= t)
    }

    pub(crate) fn in_department(&self, department: Option<&str>) -> bool {
        match (&self.department, department) {
            (None, _) => true,
            (Some(want), Some(have)) => want == have,
            (Some(_), None) => false,
        }
    }
}

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::employee::{text_enum, MAX_ID_LEN};
use crate::error::{DomainError, FieldError, FieldRule, Result};
use crate::fields::{FieldMap, FieldReader};

text_enum!(
    TrainingStatus {
        InTraining => "InTraining",
        Completed => "Completed",
    }
);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrainingRecord {
    pub emp_id: String,
    pub course_name: String,
    pub start_date: NaiveDate,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub end_date: Option<NaiveDate>,
    pub status: TrainingStatus,
}

impl TrainingRecord {
    pub fn is_open(&self) -> bool {
        self.status == TrainingStatus::InTraining
    }

    /// True when any day of the training falls inside `[from, to]`.
    pub fn overlaps(&self, from: NaiveDate, to: NaiveDate) -> bool {
        self.start_date <= to && self.end_date.is_none_or(|end| end >= from)
    }

    pub fn complete(&self, end_date: NaiveDate) -> Result<TrainingRecord> {
        if end_date < self.start_date {
            return Err(DomainError::DateOrderViolation(format!(
                "training end {end_date} precedes start {}",
                self.start_date
            )));
        }
        Ok(TrainingRecord {
            end_date: Some(end_date),
            status: TrainingStatus::Completed,
            ..self.clone()
        })
    }
}

/// Fields: `emp_id`, `course_name`, `start_date`, optional `end_date`, optional `status`
/// (defaults to InTraining).
pub fn validate_training(raw: &FieldMap) -> std::result::Result<TrainingRecord, Vec<FieldError>> {
    let mut r = FieldReader::new(raw);
    let emp_id = r.identifier("emp_id", MAX_ID_LEN);
    let course_name = r.text("course_name");
    let start_date = r.date("start_date");
    let end_date = r.optional_date("end_date");
    let status = r.optional_choice::<TrainingStatus>("status");

    if let (Some(start), Ok(Some(end))) = (start_date, end_date) {
        if end < start {
            r.reject("end_date", FieldRule::DateOrderViolation);
        }
    }
    if let (Ok(Some(TrainingStatus::Completed)), Ok(None)) = (status, end_date) {
        r.reject("end_date", FieldRule::MissingRequiredField);
    }
    r.finish()?;
    Ok(TrainingRecord {
        emp_id: emp_id.unwrap(),
        course_name: course_name.unwrap(),
        start_date: start_date.unwrap(),
        end_date: end_date.unwrap(),
        status: status.unwrap().unwrap_or(TrainingStatus::InTraining),
    })
}

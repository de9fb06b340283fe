use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::employee::MAX_ID_LEN;
use crate::error::{FieldError, FieldRule};
use crate::fields::{FieldMap, FieldReader};

/// A dated appraisal of one employee over a review period.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerformanceEvaluation {
    pub emp_name: String,
    pub emp_id: String,
    pub department: String,
    pub workgroup: String,
    pub division: String,
    pub position: String,
    pub evaluation_date: NaiveDate,
    pub evaluator: String,
    pub review_from: NaiveDate,
    pub review_to: NaiveDate,
    pub responsibility: String,
}

/// Every field is required and `review_from ≤ review_to ≤ evaluation_date`.
pub fn validate_evaluation(raw: &FieldMap) -> Result<PerformanceEvaluation, Vec<FieldError>> {
    let mut r = FieldReader::new(raw);
    let emp_name = r.text("emp_name");
    let emp_id = r.identifier("emp_id", MAX_ID_LEN);
    let department = r.text("department");
    let workgroup = r.text("workgroup");
    let division = r.text("division");
    let position = r.text("position");
    let evaluation_date = r.date("evaluation_date");
    let evaluator = r.text("evaluator");
    let review_from = r.date("review_from");
    let review_to = r.date("review_to");
    let responsibility = r.text("responsibility");

    if let (Some(from), Some(to)) = (review_from, review_to) {
        if from > to {
            r.reject("review_from", FieldRule::DateOrderViolation);
        }
    }
    if let (Some(to), Some(eval)) = (review_to, evaluation_date) {
        if to > eval {
            r.reject("review_to", FieldRule::DateOrderViolation);
        }
    }
    r.finish()?;
    Ok(PerformanceEvaluation {
        emp_name: emp_name.unwrap(),
        emp_id: emp_id.unwrap(),
        department: department.unwrap(),
        workgroup: workgroup.unwrap(),
        division: division.unwrap(),
        position: position.unwrap(),
        evaluation_date: evaluation_date.unwrap(),
        evaluator: evaluator.unwrap(),
        review_from: review_from.unwrap(),
        review_to: review_to.unwrap(),
        responsibility: responsibility.unwrap(),
    })
}

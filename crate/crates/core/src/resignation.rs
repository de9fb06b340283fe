use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::employee::{EmployeeRecord, EmployeeStatus, Gender};
use crate::error::{DomainError, Result};

/// Archived contact and tenure details of an ex-employee.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResignationRecord {
    pub title: String,
    pub emp_name: String,
    pub emp_id: String,
    pub position: String,
    pub department: String,
    pub supervisor: String,
    pub joining_date: NaiveDate,
    pub resignation_date: NaiveDate,
    pub email: String,
    pub gender: Gender,
    pub city: String,
    pub home_phone: String,
}

/// Build the archive row for `employee`. The resignation date must be strictly
/// after the hire date.
pub fn resign_employee(
    employee: &EmployeeRecord,
    position: &str,
    resignation_date: NaiveDate,
) -> Result<ResignationRecord> {
    if employee.status == EmployeeStatus::Resigned {
        return Err(DomainError::AlreadyResigned(employee.emp_id.clone()));
    }
    if resignation_date <= employee.hire_date {
        return Err(DomainError::DateOrderViolation(format!(
            "resignation date {resignation_date} must be after hire date {}",
            employee.hire_date
        )));
    }
    Ok(ResignationRecord {
        title: employee.title.clone(),
        emp_name: employee.full_name(),
        emp_id: employee.emp_id.clone(),
        position: position.trim().to_owned(),
        department: employee.department.clone(),
        supervisor: employee.supervisor.clone(),
        joining_date: employee.hire_date,
        resignation_date,
        email: employee.email.clone(),
        gender: employee.gender,
        city: employee.city.clone(),
        home_phone: employee.home_phone.clone(),
    })
}

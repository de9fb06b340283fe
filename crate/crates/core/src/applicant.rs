//! Resume tracking: applicant records, their state machine, requirement
//! matching and promotion to employee.

use serde::{Deserialize, Serialize};

use crate::employee::{attr, text_enum, validate_employee, EmployeeRecord};
use crate::error::{DomainError, FieldError, Result};
use crate::fields::{FieldMap, FieldReader};

text_enum!(
    ApplicantStatus {
        Submitted => "Submitted",
        Shortlisted => "Shortlisted",
        Hired => "Hired",
        Rejected => "Rejected",
    }
);

impl ApplicantStatus {
    pub fn can_become(self, next: ApplicantStatus) -> bool {
        use ApplicantStatus::*;
        matches!(
            (self, next),
            (Submitted, Shortlisted) | (Submitted, Rejected) | (Shortlisted, Hired) | (Shortlisted, Rejected)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApplicantRecord {
    pub applicant_id: String,
    pub name: String,
    pub contact_email: String,
    pub contact_phone: String,
    pub work_experience_years: u32,
    pub specialization: String,
    pub interest: String,
    pub resume_text: String,
    pub status: ApplicantStatus,
    /// Employee id assigned on hire.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub emp_id: Option<String>,
}

impl ApplicantRecord {
    pub fn transition(&self, next: ApplicantStatus) -> Result<ApplicantRecord> {
        if !self.status.can_become(next) {
            return Err(DomainError::IllegalTransition {
                from: self.status,
                to: next,
            });
        }
        Ok(ApplicantRecord {
            status: next,
            ..self.clone()
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobRequirement {
    pub department: String,
    pub required_specialization: String,
    pub min_experience_years: u32,
}

pub fn applicant_id(sequence: u64) -> String {
    format!("A{sequence:06}")
}

pub fn employee_id(sequence: u64) -> String {
    format!("E{sequence:06}")
}

/// Registration fields: `name`, `contact_email`, `contact_phone`,
/// `work_experience_years`, `specialization`, `interest`, `resume_text`.
pub fn validate_applicant(
    raw: &FieldMap,
    applicant_id: String,
) -> std::result::Result<ApplicantRecord, Vec<FieldError>> {
    let mut r = FieldReader::new(raw);
    let name = r.text("name");
    let contact_email = r.email("contact_email");
    let contact_phone = r.digits("contact_phone");
    let work_experience_years = r.count("work_experience_years");
    let specialization = r.text("specialization");
    let interest = r.text("interest");
    let resume_text = r.text("resume_text");
    r.finish()?;
    Ok(ApplicantRecord {
        applicant_id,
        name: name.unwrap(),
        contact_email: contact_email.unwrap(),
        contact_phone: contact_phone.unwrap(),
        work_experience_years: work_experience_years.unwrap(),
        specialization: specialization.unwrap(),
        interest: interest.unwrap(),
        resume_text: resume_text.unwrap(),
        status: ApplicantStatus::Submitted,
        emp_id: None,
    })
}

/// Fields: optional `department`, `required_specialization`, `min_experience_years`.
pub fn validate_requirement(raw: &FieldMap) -> std::result::Result<JobRequirement, Vec<FieldError>> {
    let mut r = FieldReader::new(raw);
    let department = r.optional_text("department").unwrap_or_default();
    let required_specialization = r.text("required_specialization");
    let min_experience_years = r.count("min_experience_years");
    r.finish()?;
    Ok(JobRequirement {
        department,
        required_specialization: required_specialization.unwrap(),
        min_experience_years: min_experience_years.unwrap(),
    })
}

/// Case-insensitive, trimmed specialization equality plus the experience floor.
pub fn match_applicant(applicant: &ApplicantRecord, requirement: &JobRequirement) -> bool {
    let have = applicant.specialization.trim().to_lowercase();
    let want = requirement.required_specialization.trim().to_lowercase();
    have == want && applicant.work_experience_years >= requirement.min_experience_years
}

/// Hire a shortlisted applicant. `emp_id` overrides any id in the fields.
pub fn promote_applicant(
    applicant: &ApplicantRecord,
    employee_fields: &FieldMap,
    emp_id: &str,
) -> Result<(ApplicantRecord, EmployeeRecord)> {
    if applicant.status != ApplicantStatus::Shortlisted {
        return Err(DomainError::NotShortlisted(applicant.applicant_id.clone()));
    }
    let mut fields = employee_fields.clone();
    fields.insert(attr::EMP_ID.to_owned(), emp_id.to_owned());
    let employee = validate_employee(&fields)?;
    let mut hired = applicant.transition(ApplicantStatus::Hired)?;
    hired.emp_id = Some(employee.emp_id.clone());
    Ok((hired, employee))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::FieldRule;

    fn applicant(spec: &str, years: u32, status: ApplicantStatus) -> ApplicantRecord {
        ApplicantRecord {
            applicant_id: applicant_id(1),
            name: "Meena".into(),
            contact_email: "meena@example.com".into(),
            contact_phone: "9000000001".into(),
            work_experience_years: years,
            specialization: spec.into(),
            interest: "Security".into(),
            resume_text: "B.E., 3 years at a network operator".into(),
            status,
            emp_id: None,
        }
    }

    fn req(spec: &str, min: u32) -> JobRequirement {
        JobRequirement {
            department: "IT".into(),
            required_specialization: spec.into(),
            min_experience_years: min,
        }
    }

    #[test]
    fn matching_rule() {
        assert!(match_applicant(
            &applicant("Networks", 3, ApplicantStatus::Submitted),
            &req("networks", 2)
        ));
        assert!(match_applicant(
            &applicant("  Networks ", 2, ApplicantStatus::Submitted),
            &req("NETWORKS", 2)
        ));
        assert!(!match_applicant(
            &applicant("Networks", 1, ApplicantStatus::Submitted),
            &req("Networks", 2)
        ));
        assert!(!match_applicant(
            &applicant("Databases", 9, ApplicantStatus::Submitted),
            &req("Networks", 2)
        ));
    }

    #[test]
    fn state_machine_is_exactly_four_edges() {
        let mut legal = Vec::new();
        for &from in ApplicantStatus::ALL {
            for &to in ApplicantStatus::ALL {
                if from.can_become(to) {
                    legal.push((from.as_str(), to.as_str()));
                }
            }
        }
        assert_eq!(
            legal,
            vec![
                ("Submitted", "Shortlisted"),
                ("Submitted", "Rejected"),
                ("Shortlisted", "Hired"),
                ("Shortlisted", "Rejected"),
            ]
        );
    }

    fn employee_fields() -> FieldMap {
        [
            ("Title", "Ms"),
            ("Firname", "Meena"),
            ("Lastname", "S"),
            ("Blood", "B+"),
            ("Nation", "Indian"),
            ("Address", "9 North St"),
            ("City", "Erode"),
            ("State", "Tamil Nadu"),
            ("Pin", "638001"),
            ("Home", "0424123456"),
            ("Workplace", "0424654321"),
            ("Email", "meena@example.com"),
            ("Status", "Active"),
            ("Supervisor", "Ravi"),
            ("Hdate", "2024-02-01"),
            ("Dept", "IT"),
            ("Bdate", "1995-03-03"),
            ("gender", "F"),
            ("marital", "S"),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_owned(), v.to_owned()))
        .collect()
    }

    #[test]
    fn promote_happy_path() {
        let a = applicant("Networks", 3, ApplicantStatus::Shortlisted);
        let (hired, emp) = promote_applicant(&a, &employee_fields(), &employee_id(42)).unwrap();
        assert_eq!(hired.status, ApplicantStatus::Hired);
        assert_eq!(emp.emp_id, "E000042");
        assert_eq!(hired.emp_id.as_deref(), Some("E000042"));
    }

    #[test]
    fn promote_requires_shortlist() {
        let a = applicant("Networks", 3, ApplicantStatus::Submitted);
        assert_eq!(
            promote_applicant(&a, &employee_fields(), "E000001"),
            Err(DomainError::NotShortlisted("A000001".into()))
        );
    }

    #[test]
    fn promote_reports_missing_email() {
        let a = applicant("Networks", 3, ApplicantStatus::Shortlisted);
        let mut f = employee_fields();
        f.remove("Email");
        assert_eq!(
            promote_applicant(&a, &f, "E000001"),
            Err(DomainError::Validation(vec![FieldError::new(
                "Email",
                FieldRule::MissingRequiredField
            )]))
        );
    }

    #[test]
    fn registration_validation() {
        let mut raw: FieldMap = [
            ("name", "Meena"),
            ("contact_email", "meena@example.com"),
            ("contact_phone", "9000000001"),
            ("work_experience_years", "3"),
            ("specialization", "Networks"),
            ("interest", "Security"),
            ("resume_text", "..."),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_owned(), v.to_owned()))
        .collect();
        let a = validate_applicant(&raw, applicant_id(7)).unwrap();
        assert_eq!(a.applicant_id, "A000007");
        assert_eq!(a.status, ApplicantStatus::Submitted);

        raw.insert("work_experience_years".into(), "-1".into());
        raw.insert("contact_phone".into(), "call me".into());
        let errs = validate_applicant(&raw, applicant_id(8)).unwrap_err();
        assert_eq!(errs.len(), 2);
    }
}

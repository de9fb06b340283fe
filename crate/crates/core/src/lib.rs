//! Domain model for the HRMS service.
//!
//! Everything here is a pure function over values: record types, payroll
//! arithmetic, leave-balance bookkeeping, lifecycle transitions, applicant
//! matching and input validation. Storage and transport live in other crates.

pub mod applicant;
pub mod credential;
pub mod employee;
pub mod error;
pub mod fields;
pub mod leave;
pub mod payroll;
pub mod performance;
pub mod resignation;
pub mod training;
pub mod units;

pub use applicant::{
    match_applicant, promote_applicant, validate_applicant, validate_requirement, ApplicantRecord,
    ApplicantStatus, JobRequirement,
};
pub use credential::Credential;
pub use employee::{
    check_employee, validate_employee, EmployeeRecord, EmployeeStatus, Gender, MaritalStatus,
};
pub use error::{DomainError, FieldError, FieldRule};
pub use fields::{parse_date, FieldMap};
pub use leave::{new_leave_account, remaining_leave, LeaveAccount, LeaveAllocations, LeaveType};
pub use payroll::{
    build_payroll_statement, compute_gross_pay, compute_net_pay, compute_payable_units,
    AttendanceEntry, PayItem, PayableUnits, PayrollInput, PayrollStatement,
};
pub use performance::{validate_evaluation, PerformanceEvaluation};
pub use resignation::{resign_employee, ResignationRecord};
pub use training::{validate_training, TrainingRecord, TrainingStatus};
pub use units::{Hours, Money, PayFactor};

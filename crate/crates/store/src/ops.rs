//! HR operations over the transactional store.

use chrono::NaiveDate;

use hrms_core::applicant::{applicant_id, employee_id};
use hrms_core::{
    resign_employee, ApplicantRecord, ApplicantStatus, AttendanceEntry, EmployeeRecord,
    EmployeeStatus, LeaveAccount, LeaveType, PayrollStatement, PerformanceEvaluation,
    ResignationRecord, TrainingRecord, TrainingStatus,
};

use crate::engine::{Reader, Transaction};
use crate::error::{Result, StoreError};
use crate::schema::{Record, SequenceRow, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PutMode {
    /// Insert or replace the whole record.
    Upsert,
    /// Fail with [`StoreError::Duplicate`] if the key exists.
    InsertOnly,
}

/// Conjunctive employee filter.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EmployeeFilter {
    pub department: Option<String>,
    pub status: Option<EmployeeStatus>,
}

impl EmployeeFilter {
    pub fn matches(&self, e: &EmployeeRecord) -> bool {
        self.department.as_ref().is_none_or(|d| &e.department == d)
            && self.status.is_none_or(|s| e.status == s)
    }
}

fn in_range(date: NaiveDate, from: Option<NaiveDate>, to: Option<NaiveDate>) -> bool {
    from.is_none_or(|f| date >= f) && to.is_none_or(|t| date <= t)
}

/// Queries available on snapshots and inside transactions.
pub trait Queries: Reader {
    fn employee(&self, emp_id: &str) -> Result<EmployeeRecord> {
        self.require(emp_id)
    }

    /// Employees in `emp_id` order.
    fn list_employees(&self, filter: &EmployeeFilter) -> Result<Vec<EmployeeRecord>> {
        Ok(self
            .list::<EmployeeRecord>()?
            .into_iter()
            .filter(|e| filter.matches(e))
            .collect())
    }

    fn leave_account(&self, emp_id: &str) -> Result<LeaveAccount> {
        self.require(emp_id)
    }

    fn resignation(&self, emp_id: &str) -> Result<ResignationRecord> {
        self.require(emp_id)
    }

    fn list_resignations(&self, department: Option<&str>) -> Result<Vec<ResignationRecord>> {
        Ok(self
            .list::<ResignationRecord>()?
            .into_iter()
            .filter(|r| department.is_none_or(|d| r.department == d))
            .collect())
    }

    /// Entries for one employee in date order, optionally bounded.
    fn attendance_for(
        &self,
        emp_id: &str,
        from: Option<NaiveDate>,
        to: Option<NaiveDate>,
    ) -> Result<Vec<AttendanceEntry>> {
        Ok(self
            .list::<AttendanceEntry>()?
            .into_iter()
            .filter(|a| a.emp_id == emp_id && in_range(a.date, from, to))
            .collect())
    }

    fn list_training(&self, status: Option<TrainingStatus>) -> Result<Vec<TrainingRecord>> {
        Ok(self
            .list::<TrainingRecord>()?
            .into_iter()
            .filter(|t| status.is_none_or(|s| t.status == s))
            .collect())
    }

    fn training_for(&self, emp_id: &str) -> Result<Vec<TrainingRecord>> {
        Ok(self
            .list::<TrainingRecord>()?
            .into_iter()
            .filter(|t| t.emp_id == emp_id)
            .collect())
    }

    /// Newest evaluation first.
    fn evaluations_for(&self, emp_id: &str) -> Result<Vec<PerformanceEvaluation>> {
        let mut evals: Vec<_> = self
            .list::<PerformanceEvaluation>()?
            .into_iter()
            .filter(|e| e.emp_id == emp_id)
            .collect();
        evals.reverse();
        Ok(evals)
    }

    fn list_applicants(&self, status: Option<ApplicantStatus>) -> Result<Vec<ApplicantRecord>> {
        Ok(self
            .list::<ApplicantRecord>()?
            .into_iter()
            .filter(|a| status.is_none_or(|s| a.status == s))
            .collect())
    }

    fn applicant(&self, id: &str) -> Result<ApplicantRecord> {
        self.require(id)
    }

    fn statement(&self, emp_id: &str, period_start: NaiveDate) -> Result<Option<PayrollStatement>> {
        self.get(&statement_key(emp_id, period_start))
    }

    /// Statements whose period starts inside `[from, to]`.
    fn list_statements(
        &self,
        from: Option<NaiveDate>,
        to: Option<NaiveDate>,
    ) -> Result<Vec<PayrollStatement>> {
        Ok(self
            .list::<PayrollStatement>()?
            .into_iter()
            .filter(|s| in_range(s.period_start, from, to))
            .collect())
    }
}

impl<T: Reader + ?Sized> Queries for T {}

pub fn statement_key(emp_id: &str, period_start: NaiveDate) -> String {
    format!("{emp_id}|{period_start}")
}

impl Transaction<'_> {
    fn put_unique<R: Record>(&mut self, record: &R, mode: PutMode) -> Result<()> {
        if mode == PutMode::InsertOnly {
            let key = record.key()?;
            if self.contains(R::TABLE, &key) {
                return Err(StoreError::Duplicate {
                    table: R::TABLE.name(),
                    key,
                });
            }
        }
        self.put(record)
    }

    /// Employee ids are unique across active and resigned employees; the
    /// resignation archive is checked as well as the employee table.
    pub fn put_employee(&mut self, record: &EmployeeRecord, mode: PutMode) -> Result<()> {
        if mode == PutMode::InsertOnly && self.contains(Table::Resignation, &record.emp_id) {
            return Err(StoreError::Duplicate {
                table: Table::Employee.name(),
                key: record.emp_id.clone(),
            });
        }
        self.put_unique(record, mode)
    }

    /// Remove an active employee and their leave account. Attendance,
    /// training, evaluation and payroll rows are kept for audit.
    pub fn delete_employee(&mut self, emp_id: &str) -> Result<()> {
        let employee = self.employee(emp_id)?;
        if employee.status == EmployeeStatus::Resigned {
            return Err(StoreError::EmployeeResigned(emp_id.to_owned()));
        }
        self.delete(Table::Employee, emp_id);
        self.delete(Table::Leave, emp_id);
        Ok(())
    }

    /// Mark the employee Resigned, archive the resignation row and freeze the
    /// leave account, all in this transaction.
    pub fn archive_resignation(
        &mut self,
        emp_id: &str,
        position: &str,
        resignation_date: NaiveDate,
    ) -> Result<ResignationRecord> {
        let employee = self.employee(emp_id)?;
        if employee.status == EmployeeStatus::Resigned {
            return Err(StoreError::AlreadyResigned(emp_id.to_owned()));
        }
        let record = resign_employee(&employee, position, resignation_date)?;
        self.put(&EmployeeRecord {
            status: EmployeeStatus::Resigned,
            ..employee
        })?;
        self.put(&record)?;
        if let Some(account) = self.get::<LeaveAccount>(emp_id)? {
            self.put(&account.frozen())?;
        }
        Ok(record)
    }

    pub fn put_leave_account(&mut self, account: &LeaveAccount) -> Result<()> {
        self.put(account)
    }

    /// Read, apply and write back one leave request.
    pub fn update_leave_account(
        &mut self,
        emp_id: &str,
        leave_type: LeaveType,
        days: u32,
        taken_on: NaiveDate,
    ) -> Result<LeaveAccount> {
        let account = self.leave_account(emp_id)?;
        let employee = self.employee(emp_id)?;
        if employee.status == EmployeeStatus::Resigned || account.frozen {
            return Err(StoreError::EmployeeResigned(emp_id.to_owned()));
        }
        let next = account.apply_leave(leave_type, days, taken_on)?;
        self.put(&next)?;
        Ok(next)
    }

    pub fn put_attendance(&mut self, entry: &AttendanceEntry) -> Result<()> {
        self.put(entry)
    }

    pub fn put_training(&mut self, record: &TrainingRecord, mode: PutMode) -> Result<()> {
        self.put_unique(record, mode)
    }

    pub fn put_evaluation(&mut self, eval: &PerformanceEvaluation) -> Result<()> {
        self.put(eval)
    }

    pub fn put_applicant(&mut self, applicant: &ApplicantRecord) -> Result<()> {
        self.put(applicant)
    }

    pub fn put_statement(&mut self, statement: &PayrollStatement, mode: PutMode) -> Result<()> {
        self.put_unique(statement, mode)
    }

    /// Take the next value of a named counter, starting at 1.
    pub fn next_sequence(&mut self, name: &str) -> Result<u64> {
        let current = self
            .get::<SequenceRow>(name)?
            .map_or(1, |s| s.next);
        self.put(&SequenceRow {
            name: name.to_owned(),
            next: current + 1,
        })?;
        Ok(current)
    }

    /// Next free `E000000`-style employee id.
    pub fn next_employee_id(&mut self) -> Result<String> {
        loop {
            let id = employee_id(self.next_sequence("employee")?);
            if !self.contains(Table::Employee, &id) && !self.contains(Table::Resignation, &id) {
                return Ok(id);
            }
        }
    }

    pub fn next_applicant_id(&mut self) -> Result<String> {
        loop {
            let id = applicant_id(self.next_sequence("applicant")?);
            if !self.contains(Table::Applicant, &id) {
                return Ok(id);
            }
        }
    }
}

#![allow(dead_code)]

use chrono::NaiveDate;
use hrms_core::{new_leave_account, validate_employee, EmployeeRecord, FieldMap, LeaveAllocations};
use hrms_store::{PutMode, Store};

pub fn d(s: &str) -> NaiveDate {
    hrms_core::parse_date(s).unwrap()
}

pub fn employee_map(emp_id: &str, dept: &str) -> FieldMap {
    [
        ("Title", "Mr"),
        ("Empid", emp_id),
        ("Firname", "Arun"),
        ("Lastname", "Kumar"),
        ("Blood", "O+"),
        ("Nation", "Indian"),
        ("Address", "12 Main Road"),
        ("City", "Namakkal"),
        ("State", "Tamil Nadu"),
        ("Pin", "637001"),
        ("Home", "04286222333"),
        ("Workplace", "04286222444"),
        ("Email", "arun@example.com"),
        ("Status", "Active"),
        ("Supervisor", "Priya"),
        ("Hdate", "2010-01-04"),
        ("Dept", dept),
        ("Bdate", "1985-07-19"),
        ("gender", "M"),
        ("marital", "S"),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_owned(), v.to_owned()))
    .collect()
}

pub fn employee(emp_id: &str, dept: &str) -> EmployeeRecord {
    validate_employee(&employee_map(emp_id, dept)).unwrap()
}

pub fn new_store() -> (tempfile::TempDir, Store) {
    let dir = tempfile::tempdir().unwrap();
    let store = Store::create(dir.path().join("store")).unwrap();
    (dir, store)
}

/// Employee plus a default leave account.
pub fn hire(store: &Store, emp_id: &str, dept: &str) -> EmployeeRecord {
    let e = employee(emp_id, dept);
    store
        .write(|t| {
            t.put_employee(&e, PutMode::InsertOnly)?;
            t.put_leave_account(
                &new_leave_account(&e.emp_id, e.full_name(), LeaveAllocations::default()).unwrap(),
            )
        })
        .unwrap();
    e
}

/// Shape of one randomized employee and the records hanging off it.
#[derive(Debug, Clone)]
pub struct EmployeeSeed {
    pub dept: u8,
    pub attendance: Vec<u8>,
    pub basic: i64,
    pub allowance: i64,
    pub deduction: i64,
    pub leave_days: u8,
    pub in_training: bool,
    pub resigned: bool,
}

pub fn employee_seed() -> impl proptest::strategy::Strategy<Value = EmployeeSeed> {
    use proptest::prelude::*;
    (
        0u8..4,
        prop::collection::vec(0u8..=24, 1..6),
        0i64..5_000_000,
        0i64..1_000_000,
        0i64..1_000_000,
        0u8..15,
        any::<bool>(),
        prop::bool::weighted(0.2),
    )
        .prop_map(
            |(dept, attendance, basic, allowance, deduction, leave_days, in_training, resigned)| {
                EmployeeSeed {
                    dept,
                    attendance,
                    basic,
                    allowance,
                    deduction,
                    leave_days,
                    in_training,
                    resigned,
                }
            },
        )
}

/// Write every record type for each seed; returns the number of rows written.
pub fn populate(store: &Store, seeds: &[EmployeeSeed]) -> usize {
    use hrms_core::*;
    use hrms_store::SessionRecord;

    let depts = ["CS", "HR", "Finance", "Sales"];
    let start = d("2024-01-01");
    let mut rows = 0;
    store
        .write(|t| {
            for (i, seed) in seeds.iter().enumerate() {
                let id = format!("E{:06}", i + 1);
                let mut e = employee(&id, depts[seed.dept as usize]);
                e.city = format!("City{}", i % 7);
                t.put_employee(&e, PutMode::InsertOnly)?;
                let acc = new_leave_account(&id, e.full_name(), LeaveAllocations::default())?;
                t.put_leave_account(&acc)?;
                rows += 2;
                if seed.leave_days > 0 {
                    t.update_leave_account(&id, LeaveType::Vacation, seed.leave_days.into(), start)?;
                }

                let mut entries = Vec::new();
                for (k, h) in seed.attendance.iter().enumerate() {
                    let date = start + chrono::Duration::days(k as i64);
                    let entry = AttendanceEntry::new(&id, date, Hours::whole((*h).into())).unwrap();
                    t.put_attendance(&entry)?;
                    entries.push(entry);
                    rows += 1;
                }

                let training = TrainingRecord {
                    emp_id: id.clone(),
                    course_name: format!("Course {}", i % 3),
                    start_date: start,
                    end_date: (!seed.in_training).then_some(d("2024-01-20")),
                    status: if seed.in_training {
                        TrainingStatus::InTraining
                    } else {
                        TrainingStatus::Completed
                    },
                };
                t.put_training(&training, PutMode::InsertOnly)?;

                let input = PayrollInput {
                    emp_id: id.clone(),
                    period_start: start,
                    period_end: d("2024-01-31"),
                    basic_pay: Money(seed.basic),
                    allowances: vec![PayItem::new("HRA", seed.allowance)],
                    deductions: vec![PayItem::new("Tax", seed.deduction)],
                    in_training: seed.in_training,
                    training_pay_factor: if seed.in_training {
                        PayFactor::new(1, 2).unwrap()
                    } else {
                        PayFactor::ONE
                    },
                };
                let statement = build_payroll_statement(&input, &entries, Hours::whole(8))?;
                t.put_statement(&statement, PutMode::InsertOnly)?;

                t.put_evaluation(&PerformanceEvaluation {
                    emp_name: e.full_name(),
                    emp_id: id.clone(),
                    department: e.department.clone(),
                    workgroup: "Core".into(),
                    division: "Ops".into(),
                    position: "Engineer".into(),
                    evaluation_date: d("2024-02-01"),
                    evaluator: "Priya".into(),
                    review_from: d("2023-07-01"),
                    review_to: d("2023-12-31"),
                    responsibility: format!("Area {i}"),
                })?;
                rows += 3;

                if seed.resigned {
                    t.archive_resignation(&id, "Engineer", d("2024-03-01"))?;
                    rows += 1;
                }

                let applicant = ApplicantRecord {
                    applicant_id: t.next_applicant_id()?,
                    name: format!("Applicant {i}"),
                    contact_email: format!("a{i}@example.com"),
                    contact_phone: format!("9{i:09}"),
                    work_experience_years: (i % 10) as u32,
                    specialization: depts[i % 4].to_owned(),
                    interest: "Backend".into(),
                    resume_text: "Line one\nline \"two\"".into(),
                    status: ApplicantStatus::ALL[i % ApplicantStatus::ALL.len()],
                    emp_id: None,
                };
                t.put_applicant(&applicant)?;
                rows += 1;
            }
            for (k, dept) in depts.iter().enumerate() {
                t.put(&JobRequirement {
                    department: (*dept).to_owned(),
                    required_specialization: format!("Spec{k}"),
                    min_experience_years: k as u32,
                })?;
                rows += 1;
            }
            t.put(&Credential {
                user_id: "admin".into(),
                password_digest: "00".repeat(32),
                salt: "11".repeat(16),
                iterations: 1000,
            })?;
            let at = chrono::DateTime::from_timestamp(1_704_067_200, 0).unwrap();
            t.put(&SessionRecord {
                token_digest: "ab".repeat(32),
                user_id: "admin".into(),
                issued_at: at,
                expires_at: at + chrono::Duration::hours(8),
            })?;
            rows += 2;
            Ok(())
        })
        .unwrap();
    // sequence counters are rows too
    rows + 1
}

//! The demo fixture loaded by `hrms seed --demo`.
//!
//! Six employees (ids E000001-E000006) in CS, HR, Finance and Sales; E000004
//! is in training and E000006 resigns on 2024-02-29. Every employee has
//! five 8-hour days of attendance (2024-01-01 to 2024-01-05) and a January
//! 2024 payroll statement. E000002 has taken 3 vacation days and E000001
//! has one evaluation. Two applicants are registered: A000001 (Networks,
//! 3 years, Submitted) and A000002 (Databases, 1 year, Shortlisted).

use chrono::{Duration, NaiveDate};
use hrms_core::{
    build_payroll_statement, new_leave_account, validate_employee, ApplicantRecord,
    ApplicantStatus, AttendanceEntry, FieldMap, Hours, LeaveType, Money, PayFactor, PayItem,
    PayrollInput, PerformanceEvaluation, TrainingRecord, TrainingStatus,
};
use hrms_store::{PutMode, Queries, Reader, Store, StoreError, Table};
use serde::Serialize;

use crate::config::Config;

pub const PERIOD_START: &str = "2024-01-01";
pub const PERIOD_END: &str = "2024-01-31";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeedSummary {
    pub employees: usize,
    pub active_employees: usize,
    pub applicants: usize,
    pub resignations: usize,
    pub attendance_entries: usize,
    pub statements: usize,
}

struct Person {
    title: &'static str,
    first: &'static str,
    last: &'static str,
    dept: &'static str,
    city: &'static str,
    hired: &'static str,
    born: &'static str,
    gender: &'static str,
    basic: i64,
}

const PEOPLE: [Person; 6] = [
    Person { title: "Mr", first: "Arun", last: "Kumar", dept: "CS", city: "Namakkal", hired: "2015-06-01", born: "1988-04-12", gender: "M", basic: 100_000 },
    Person { title: "Ms", first: "Priya", last: "Raman", dept: "HR", city: "Salem", hired: "2012-03-15", born: "1984-11-02", gender: "F", basic: 120_000 },
    Person { title: "Mr", first: "Karthik", last: "Subramanian", dept: "Finance", city: "Erode", hired: "2018-08-20", born: "1991-01-30", gender: "M", basic: 95_000 },
    Person { title: "Ms", first: "Divya", last: "Natarajan", dept: "CS", city: "Namakkal", hired: "2023-12-01", born: "1999-07-21", gender: "F", basic: 60_000 },
    Person { title: "Mr", first: "Suresh", last: "Babu", dept: "Sales", city: "Karur", hired: "2016-02-01", born: "1986-09-09", gender: "M", basic: 80_000 },
    Person { title: "Ms", first: "Meena", last: "Iyer", dept: "CS", city: "Trichy", hired: "2014-05-05", born: "1987-12-24", gender: "F", basic: 110_000 },
];

fn d(s: &str) -> NaiveDate {
    hrms_core::parse_date(s).expect("fixture date")
}

fn fields(p: &Person, emp_id: &str, phone_suffix: usize) -> FieldMap {
    let email = format!("{}.{}@example.com", p.first, p.last).to_lowercase();
    let home = format!("0428622{phone_suffix:04}");
    [
        ("Title", p.title),
        ("Empid", emp_id),
        ("Firname", p.first),
        ("Lastname", p.last),
        ("Blood", "O+"),
        ("Nation", "Indian"),
        ("Address", "14 College Road"),
        ("City", p.city),
        ("State", "Tamil Nadu"),
        ("Pin", "637001"),
        ("Home", &home),
        ("Workplace", "04286200100"),
        ("Email", &email),
        ("Status", "Active"),
        ("Supervisor", "Priya Raman"),
        ("Hdate", p.hired),
        ("Dept", p.dept),
        ("Bdate", p.born),
        ("gender", p.gender),
        ("marital", "S"),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_owned(), v.to_owned()))
    .collect()
}

/// Load the fixture in one transaction. Refuses a store that already holds
/// employees or applicants.
pub fn seed_demo(store: &Store, config: &Config) -> Result<SeedSummary, StoreError> {
    let start = d(PERIOD_START);
    let end = d(PERIOD_END);
    store.write(|t| {
        if t.count(Table::Employee) > 0 || t.count(Table::Applicant) > 0 {
            return Err(StoreError::NotEmpty);
        }
        let mut ids = Vec::new();
        for (i, person) in PEOPLE.iter().enumerate() {
            let id = t.next_employee_id()?;
            let employee = validate_employee(&fields(person, &id, i + 1))
                .map_err(hrms_core::DomainError::Validation)?;
            t.put_employee(&employee, PutMode::InsertOnly)?;
            t.put_leave_account(&new_leave_account(&id, employee.full_name(), config.leave)?)?;
            ids.push(id);
        }

        let trainee = &ids[3];
        let mut employee = t.employee(trainee)?;
        employee.status = hrms_core::EmployeeStatus::InTraining;
        t.put_employee(&employee, PutMode::Upsert)?;
        let training = TrainingRecord {
            emp_id: trainee.clone(),
            course_name: "Network Security".into(),
            start_date: d("2024-01-08"),
            end_date: None,
            status: TrainingStatus::InTraining,
        };
        t.put_training(&training, PutMode::InsertOnly)?;

        let mut attendance = 0;
        for (id, person) in ids.iter().zip(&PEOPLE) {
            let mut entries = Vec::new();
            for day in 0..5 {
                let entry = AttendanceEntry::new(id, start + Duration::days(day), Hours::whole(8))
                    .expect("8 hours");
                t.put_attendance(&entry)?;
                entries.push(entry);
                attendance += 1;
            }
            let in_training = training.emp_id == *id;
            let input = PayrollInput {
                emp_id: id.clone(),
                period_start: start,
                period_end: end,
                basic_pay: Money(person.basic),
                allowances: vec![
                    PayItem::new("HRA", person.basic / 5),
                    PayItem::new("Transport", 5_000),
                ],
                deductions: vec![PayItem::new("Income tax", person.basic * 3 / 20)],
                in_training,
                training_pay_factor: if in_training {
                    config.training_pay_factor
                } else {
                    PayFactor::ONE
                },
            };
            let statement = build_payroll_statement(&input, &entries, config.full_day_hours)?;
            t.put_statement(&statement, PutMode::InsertOnly)?;
        }

        t.update_leave_account(&ids[1], LeaveType::Vacation, 3, d("2024-01-15"))?;
        let arun = t.employee(&ids[0])?;
        t.put_evaluation(&PerformanceEvaluation {
            emp_name: arun.full_name(),
            emp_id: arun.emp_id.clone(),
            department: arun.department.clone(),
            workgroup: "Platform".into(),
            division: "Engineering".into(),
            position: "Senior Engineer".into(),
            evaluation_date: d("2024-01-31"),
            evaluator: "Priya Raman".into(),
            review_from: d("2023-07-01"),
            review_to: d("2023-12-31"),
            responsibility: "Payroll service maintenance".into(),
        })?;

        t.archive_resignation(&ids[5], "Engineer", d("2024-02-29"))?;

        for (name, email, phone, years, spec, status) in [
            ("Meera Krishnan", "meera@example.com", "9840000001", 3, "Networks", ApplicantStatus::Submitted),
            ("Vikram Singh", "vikram@example.com", "9840000002", 1, "Databases", ApplicantStatus::Shortlisted),
        ] {
            let applicant_id = t.next_applicant_id()?;
            t.put_applicant(&ApplicantRecord {
                applicant_id,
                name: name.into(),
                contact_email: email.into(),
                contact_phone: phone.into(),
                work_experience_years: years,
                specialization: spec.into(),
                interest: "Full-time role".into(),
                resume_text: format!("{years} years of {spec} work."),
                status,
                emp_id: None,
            })?;
        }

        Ok(SeedSummary {
            employees: PEOPLE.len(),
            active_employees: PEOPLE.len() - 1,
            applicants: 2,
            resignations: 1,
            attendance_entries: attendance,
            statements: PEOPLE.len(),
        })
    })
}

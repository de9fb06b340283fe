use std::collections::BTreeMap;

use hrms_core::employee::attr;
use hrms_core::{
    ApplicantRecord, EmployeeRecord, EmployeeStatus, LeaveAccount, LeaveType, Money,
    PerformanceEvaluation, ResignationRecord, TrainingRecord,
};
use hrms_store::{Queries, Reader};

use crate::criteria::{ReportCriteria, ReportKind};
use crate::Result;

pub const NEGATIVE_NET: &str = "NEGATIVE_NET";
pub const EXHAUSTED: &str = "EXHAUSTED";

pub(crate) struct Grid {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub footer: Option<Vec<String>>,
}

impl Grid {
    fn new(header: &[&str]) -> Self {
        Grid {
            header: header.iter().map(|h| (*h).to_owned()).collect(),
            rows: Vec::new(),
            footer: None,
        }
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

pub(crate) fn build<R: Reader + ?Sized>(reader: &R, c: &ReportCriteria) -> Result<Grid> {
    match c.kind {
        ReportKind::EmployeeRoster => roster(reader, c),
        ReportKind::PayrollRegister => payroll(reader, c),
        ReportKind::LeaveSummary => leave(reader, c),
        ReportKind::TrainingStatus => training(reader, c),
        ReportKind::PerformanceLog => performance(reader, c),
        ReportKind::ResignationLog => resignations(reader, c),
        ReportKind::ApplicantFunnel => applicants(reader),
    }
}

fn departments<R: Reader + ?Sized>(reader: &R) -> Result<BTreeMap<String, String>> {
    Ok(reader
        .list::<EmployeeRecord>()?
        .into_iter()
        .map(|e| (e.emp_id, e.department))
        .collect())
}

/// Employees not Resigned, all attributes.
fn roster<R: Reader + ?Sized>(reader: &R, c: &ReportCriteria) -> Result<Grid> {
    let mut grid = Grid::new(&attr::ALL);
    for e in reader.list::<EmployeeRecord>()? {
        if e.status == EmployeeStatus::Resigned || !c.in_department(Some(&e.department)) {
            continue;
        }
        let fields = e.to_field_map();
        grid.rows.push(
            attr::ALL
                .iter()
                .map(|a| fields.get(*a).cloned().unwrap_or_default())
                .collect(),
        );
    }
    Ok(grid)
}

fn payroll<R: Reader + ?Sized>(reader: &R, c: &ReportCriteria) -> Result<Grid> {
    let depts = departments(reader)?;
    let (from, to) = c.period.unzip();
    let mut grid = Grid::new(&[
        "emp_id",
        "period_start",
        "period_end",
        "basic_pay",
        "in_training",
        "basic_applied",
        "total_allowances",
        "total_deductions",
        "gross_pay",
        "net_pay",
        "payable_days",
        "payable_hours",
        "flag",
    ]);
    let mut gross = 0i128;
    let mut net = 0i128;
    for s in reader.list_statements(from, to)? {
        if !c.in_department(depts.get(&s.emp_id).map(String::as_str)) {
            continue;
        }
        gross += i128::from(s.gross_pay.0);
        net += i128::from(s.net_pay.0);
        grid.rows.push(vec![
            s.emp_id.clone(),
            s.period_start.to_string(),
            s.period_end.to_string(),
            s.basic_pay.to_string(),
            s.in_training.to_string(),
            s.basic_applied.to_string(),
            s.total_allowances().to_string(),
            s.total_deductions().to_string(),
            s.gross_pay.to_string(),
            s.net_pay.to_string(),
            s.payable_days.to_string(),
            s.payable_hours.to_string(),
            if s.net_pay < Money::ZERO { NEGATIVE_NET } else { "" }.to_owned(),
        ]);
    }
    let mut footer = vec![String::new(); grid.header.len()];
    footer[0] = "TOTAL".to_owned();
    footer[8] = gross.to_string();
    footer[9] = net.to_string();
    grid.footer = Some(footer);
    Ok(grid)
}

fn leave<R: Reader + ?Sized>(reader: &R, c: &ReportCriteria) -> Result<Grid> {
    let depts = departments(reader)?;
    let mut grid = Grid::new(&[
        "Empid", "empname", "vacstart", "vactaken", "vacbalance", "Vldate", "sickstart",
        "sicktaken", "sickbalance", "Sldate", "holstart", "holtaken", "Holbal", "Hldate",
        "frozen", "flag",
    ]);
    for acc in reader.list::<LeaveAccount>()? {
        if !c.in_department(depts.get(&acc.emp_id).map(String::as_str)) {
            continue;
        }
        let mut row = vec![acc.emp_id.clone(), acc.emp_name.clone()];
        let mut exhausted = Vec::new();
        for t in [LeaveType::Vacation, LeaveType::Sick, LeaveType::Holiday] {
            let b = acc.bucket(t);
            if b.balance == 0 && b.start > 0 {
                exhausted.push(t.to_string());
            }
            row.extend([
                b.start.to_string(),
                b.taken().to_string(),
                b.balance.to_string(),
                opt(&b.last_taken),
            ]);
        }
        row.push(acc.frozen.to_string());
        row.push(if exhausted.is_empty() {
            String::new()
        } else {
            format!("{EXHAUSTED}:{}", exhausted.join("+"))
        });
        grid.rows.push(row);
    }
    Ok(grid)
}

fn training<R: Reader + ?Sized>(reader: &R, c: &ReportCriteria) -> Result<Grid> {
    let depts = departments(reader)?;
    let mut grid = Grid::new(&["emp_id", "course_name", "start_date", "end_date", "status"]);
    for t in reader.list::<TrainingRecord>()? {
        let in_period = c.period.is_none_or(|(f, to)| t.overlaps(f, to));
        if !in_period || !c.in_department(depts.get(&t.emp_id).map(String::as_str)) {
            continue;
        }
        grid.rows.push(vec![
            t.emp_id,
            t.course_name,
            t.start_date.to_string(),
            opt(&t.end_date),
            t.status.to_string(),
        ]);
    }
    Ok(grid)
}

fn performance<R: Reader + ?Sized>(reader: &R, c: &ReportCriteria) -> Result<Grid> {
    let mut grid = Grid::new(&[
        "Empname", "Empid", "Dept", "Workgroup", "Division", "Position", "Evaluate", "Evaluator",
        "Revfr", "Revto", "responsibility",
    ]);
    for e in reader.list::<PerformanceEvaluation>()? {
        if !c.in_period(e.evaluation_date) || !c.in_department(Some(&e.department)) {
            continue;
        }
        grid.rows.push(vec![
            e.emp_name,
            e.emp_id,
            e.department,
            e.workgroup,
            e.division,
            e.position,
            e.evaluation_date.to_string(),
            e.evaluator,
            e.review_from.to_string(),
            e.review_to.to_string(),
            e.responsibility,
        ]);
    }
    Ok(grid)
}

fn resignations<R: Reader + ?Sized>(reader: &R, c: &ReportCriteria) -> Result<Grid> {
    let mut grid = Grid::new(&[
        "Title", "Empname", "Empid", "position", "Dept", "Superv", "Jdate", "Rdate", "Email",
        "Gender", "City", "Homephone",
    ]);
    for r in reader.list::<ResignationRecord>()? {
        if !c.in_period(r.resignation_date) || !c.in_department(Some(&r.department)) {
            continue;
        }
        grid.rows.push(vec![
            r.title,
            r.emp_name,
            r.emp_id,
            r.position,
            r.department,
            r.supervisor,
            r.joining_date.to_string(),
            r.resignation_date.to_string(),
            r.email,
            r.gender.to_string(),
            r.city,
            r.home_phone,
        ]);
    }
    Ok(grid)
}

fn applicants<R: Reader + ?Sized>(reader: &R) -> Result<Grid> {
    let mut grid = Grid::new(&[
        "applicant_id",
        "name",
        "specialization",
        "work_experience_years",
        "interest",
        "status",
        "emp_id",
    ]);
    for a in reader.list::<ApplicantRecord>()? {
        grid.rows.push(vec![
            a.applicant_id,
            a.name,
            a.specialization,
            a.work_experience_years.to_string(),
            a.interest,
            a.status.to_string(),
            opt(&a.emp_id),
        ]);
    }
    Ok(grid)
}

//! Gross/net pay and payable units from attendance.

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::error::{DomainError, Result};
use crate::units::{Hours, Money, PayFactor};

/// Hours worked by one employee on one day; at most 24.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttendanceEntry {
    pub emp_id: String,
    pub date: NaiveDate,
    pub hours_worked: Hours,
}

impl AttendanceEntry {
    pub const MAX_HOURS: Hours = Hours::from_seconds(24 * 3600);

    pub fn new(emp_id: impl Into<String>, date: NaiveDate, hours_worked: Hours) -> Option<Self> {
        (hours_worked <= Self::MAX_HOURS).then(|| AttendanceEntry {
            emp_id: emp_id.into(),
            date,
            hours_worked,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PayItem {
    pub label: String,
    pub amount: Money,
}

impl PayItem {
    pub fn new(label: impl Into<String>, amount: i64) -> Self {
        PayItem {
            label: label.into(),
            amount: Money(amount),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PayrollInput {
    pub emp_id: String,
    pub period_start: NaiveDate,
    pub period_end: NaiveDate,
    pub basic_pay: Money,
    pub allowances: Vec<PayItem>,
    pub deductions: Vec<PayItem>,
    pub in_training: bool,
    pub training_pay_factor: PayFactor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PayrollStatement {
    pub emp_id: String,
    pub period_start: NaiveDate,
    pub period_end: NaiveDate,
    pub basic_pay: Money,
    pub in_training: bool,
    pub training_pay_factor: PayFactor,
    pub basic_applied: Money,
    pub allowances: Vec<PayItem>,
    pub deductions: Vec<PayItem>,
    pub gross_pay: Money,
    pub net_pay: Money,
    pub payable_days: u64,
    pub payable_hours: Hours,
}

impl PayrollStatement {
    pub fn total_allowances(&self) -> Money {
        Money(self.allowances.iter().map(|a| a.amount.0).sum())
    }

    pub fn total_deductions(&self) -> Money {
        Money(self.deductions.iter().map(|d| d.amount.0).sum())
    }
}

fn checked_total(start: Money, amounts: &[Money]) -> Result<Money> {
    amounts.iter().try_fold(start, |acc, &a| {
        if a.is_negative() {
            return Err(DomainError::NegativeAmount(a.0));
        }
        acc.checked_add(a).ok_or(DomainError::AmountOverflow)
    })
}

/// `basic_applied + Σ allowances`.
pub fn compute_gross_pay(basic_applied: Money, allowances: &[Money]) -> Result<Money> {
    if basic_applied.is_negative() {
        return Err(DomainError::NegativeAmount(basic_applied.0));
    }
    checked_total(basic_applied, allowances)
}

/// `gross − Σ deductions`; the result may be negative.
pub fn compute_net_pay(gross: Money, deductions: &[Money]) -> Result<Money> {
    if gross.is_negative() {
        return Err(DomainError::NegativeAmount(gross.0));
    }
    let total = checked_total(Money::ZERO, deductions)?;
    gross.checked_sub(total).ok_or(DomainError::AmountOverflow)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PayableUnits {
    pub payable_days: u64,
    pub payable_hours: Hours,
}

/// Sum the hours dated inside `[period_start, period_end]` and count full days.
pub fn compute_payable_units(
    entries: &[AttendanceEntry],
    period_start: NaiveDate,
    period_end: NaiveDate,
    full_day_hours: Hours,
) -> Result<PayableUnits> {
    if period_start > period_end {
        return Err(DomainError::InvalidPeriod {
            start: period_start,
            end: period_end,
        });
    }
    let payable_hours: Hours = entries
        .iter()
        .filter(|e| e.date >= period_start && e.date <= period_end)
        .map(|e| e.hours_worked)
        .sum();
    let payable_days = payable_hours
        .whole_units(full_day_hours)
        .ok_or(DomainError::InvalidFullDay)?;
    Ok(PayableUnits {
        payable_days,
        payable_hours,
    })
}

/// Compose the training factor, gross, net and payable units into one statement.
pub fn build_payroll_statement(
    input: &PayrollInput,
    attendance: &[AttendanceEntry],
    full_day_hours: Hours,
) -> Result<PayrollStatement> {
    if !input.in_training && !input.training_pay_factor.is_one() {
        return Err(DomainError::InvalidPayFactor);
    }
    if input.basic_pay.is_negative() {
        return Err(DomainError::NegativeAmount(input.basic_pay.0));
    }
    let units = compute_payable_units(
        attendance,
        input.period_start,
        input.period_end,
        full_day_hours,
    )?;
    let basic_applied = input.training_pay_factor.apply(input.basic_pay);
    let allowances: Vec<Money> = input.allowances.iter().map(|a| a.amount).collect();
    let deductions: Vec<Money> = input.deductions.iter().map(|d| d.amount).collect();
    let gross_pay = compute_gross_pay(basic_applied, &allowances)?;
    let net_pay = compute_net_pay(gross_pay, &deductions)?;

    Ok(PayrollStatement {
        emp_id: input.emp_id.clone(),
        period_start: input.period_start,
        period_end: input.period_end,
        basic_pay: input.basic_pay,
        in_training: input.in_training,
        training_pay_factor: input.training_pay_factor,
        basic_applied,
        allowances: input.allowances.clone(),
        deductions: input.deductions.clone(),
        gross_pay,
        net_pay,
        payable_days: units.payable_days,
        payable_hours: units.payable_hours,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> NaiveDate {
        crate::fields::parse_date(s).unwrap()
    }

    fn m(v: &[i64]) -> Vec<Money> {
        v.iter().copied().map(Money).collect()
    }

    #[test]
    fn gross_examples() {
        assert_eq!(compute_gross_pay(Money(100_000), &[]), Ok(Money(100_000)));
        // 100000 + 20000 + 5000
        assert_eq!(
            compute_gross_pay(Money(100_000), &m(&[20_000, 5_000])),
            Ok(Money(125_000))
        );
        assert_eq!(compute_gross_pay(Money(0), &m(&[0])), Ok(Money(0)));
        assert_eq!(
            compute_gross_pay(Money(0), &m(&[-1])),
            Err(DomainError::NegativeAmount(-1))
        );
        assert_eq!(
            compute_gross_pay(Money(i64::MAX), &m(&[1])),
            Err(DomainError::AmountOverflow)
        );
    }

    #[test]
    fn net_examples() {
        assert_eq!(compute_net_pay(Money(125_000), &m(&[15_000])), Ok(Money(110_000)));
        assert_eq!(compute_net_pay(Money(125_000), &[]), Ok(Money(125_000)));
        assert_eq!(compute_net_pay(Money(10_000), &m(&[15_000])), Ok(Money(-5_000)));
        assert_eq!(
            compute_net_pay(Money(10_000), &m(&[-5])),
            Err(DomainError::NegativeAmount(-5))
        );
    }

    fn entry(date: &str, hours: u64) -> AttendanceEntry {
        AttendanceEntry::new("E1", d(date), Hours::whole(hours)).unwrap()
    }

    #[test]
    fn payable_units_examples() {
        let eight = Hours::whole(8);
        assert_eq!(
            compute_payable_units(&[], d("2024-01-01"), d("2024-01-31"), eight).unwrap(),
            PayableUnits {
                payable_days: 0,
                payable_hours: Hours::ZERO
            }
        );
        let week: Vec<_> = (1..=5).map(|i| entry(&format!("2024-01-0{i}"), 8)).collect();
        let u = compute_payable_units(&week, d("2024-01-01"), d("2024-01-31"), eight).unwrap();
        assert_eq!((u.payable_days, u.payable_hours), (5, Hours::whole(40)));

        let mixed = vec![entry("2024-01-10", 4), entry("2024-02-01", 8)];
        let u = compute_payable_units(&mixed, d("2024-01-01"), d("2024-01-31"), eight).unwrap();
        assert_eq!((u.payable_days, u.payable_hours), (0, Hours::whole(4)));
    }

    #[test]
    fn payable_units_rejects_inverted_period() {
        assert!(matches!(
            compute_payable_units(&[], d("2024-02-01"), d("2024-01-01"), Hours::whole(8)),
            Err(DomainError::InvalidPeriod { .. })
        ));
        assert_eq!(
            compute_payable_units(&[], d("2024-01-01"), d("2024-01-01"), Hours::ZERO),
            Err(DomainError::InvalidFullDay)
        );
    }

    fn input(basic: i64, allow: &[i64], deduct: &[i64], factor: Option<PayFactor>) -> PayrollInput {
        PayrollInput {
            emp_id: "E1".into(),
            period_start: d("2024-01-01"),
            period_end: d("2024-01-31"),
            basic_pay: Money(basic),
            allowances: allow.iter().map(|&a| PayItem::new("a", a)).collect(),
            deductions: deduct.iter().map(|&x| PayItem::new("d", x)).collect(),
            in_training: factor.is_some(),
            training_pay_factor: factor.unwrap_or_default(),
        }
    }

    #[test]
    fn statement_examples() {
        let s = build_payroll_statement(
            &input(100_000, &[20_000, 5_000], &[15_000], None),
            &[],
            Hours::whole(8),
        )
        .unwrap();
        assert_eq!(
            (s.basic_applied, s.gross_pay, s.net_pay),
            (Money(100_000), Money(125_000), Money(110_000))
        );

        let half = PayFactor::new(1, 2).unwrap();
        let s = build_payroll_statement(&input(100_001, &[], &[], Some(half)), &[], Hours::whole(8))
            .unwrap();
        assert_eq!(s.basic_applied, Money(50_001));

        let s = build_payroll_statement(&input(0, &[], &[], None), &[], Hours::whole(8)).unwrap();
        assert_eq!((s.gross_pay, s.net_pay), (Money(0), Money(0)));
    }

    #[test]
    fn factor_outside_training_rejected() {
        let mut i = input(100, &[], &[], None);
        i.training_pay_factor = PayFactor::new(1, 2).unwrap();
        assert_eq!(
            build_payroll_statement(&i, &[], Hours::whole(8)),
            Err(DomainError::InvalidPayFactor)
        );
    }

    #[test]
    fn statement_echoes_items() {
        let i = input(10, &[1, 2], &[3], None);
        let s = build_payroll_statement(&i, &[], Hours::whole(8)).unwrap();
        assert_eq!(s.allowances, i.allowances);
        assert_eq!(s.deductions, i.deductions);
        assert_eq!(s.total_allowances(), Money(3));
        assert_eq!(s.total_deductions(), Money(3));
    }
}

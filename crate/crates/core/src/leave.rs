//! Per-employee leave accounts for vacation, sick and holiday leave.
//!
//! Balances are whole days. For every type `start - balance` equals the days
//! granted so far; a failed request returns an error and leaves the account
//! untouched.

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::employee::text_enum;
use crate::error::{DomainError, Result};

text_enum!(
    LeaveType {
        Vacation => "Vacation",
        Sick => "Sick",
        Holiday => "Holiday",
    }
);

impl LeaveType {
    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
            .map_err(|_| DomainError::UnknownLeaveType(text.to_owned()))
    }
}

/// Days allocated per leave type when an account is opened.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeaveAllocations {
    pub vacation: i64,
    pub sick: i64,
    pub holiday: i64,
}

impl Default for LeaveAllocations {
    fn default() -> Self {
        LeaveAllocations {
            vacation: 20,
            sick: 10,
            holiday: 8,
        }
    }
}

/// One leave type's bucket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeaveBucket {
    pub start: u32,
    pub balance: u32,
    pub last_taken: Option<NaiveDate>,
}

impl LeaveBucket {
    fn fresh(days: u32) -> Self {
        LeaveBucket {
            start: days,
            balance: days,
            last_taken: None,
        }
    }

    pub fn taken(&self) -> u32 {
        self.start - self.balance
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeaveAccount {
    pub emp_id: String,
    pub emp_name: String,
    pub vacation_start: u32,
    pub vacation_balance: u32,
    pub vacation_last_taken: Option<NaiveDate>,
    pub sick_start: u32,
    pub sick_balance: u32,
    pub sick_last_taken: Option<NaiveDate>,
    pub holiday_start: u32,
    pub holiday_balance: u32,
    pub holiday_last_taken: Option<NaiveDate>,
    /// Set when the employee resigns; frozen accounts accept no requests.
    #[serde(default)]
    pub frozen: bool,
}

fn allocation(days: i64, leave_type: LeaveType) -> Result<u32> {
    if days < 0 {
        return Err(DomainError::NegativeAllocation(leave_type));
    }
    u32::try_from(days).map_err(|_| DomainError::NegativeAllocation(leave_type))
}

pub fn new_leave_account(
    emp_id: impl Into<String>,
    emp_name: impl Into<String>,
    allocations: LeaveAllocations,
) -> Result<LeaveAccount> {
    let vacation = LeaveBucket::fresh(allocation(allocations.vacation, LeaveType::Vacation)?);
    let sick = LeaveBucket::fresh(allocation(allocations.sick, LeaveType::Sick)?);
    let holiday = LeaveBucket::fresh(allocation(allocations.holiday, LeaveType::Holiday)?);
    let mut account = LeaveAccount {
        emp_id: emp_id.into(),
        emp_name: emp_name.into(),
        vacation_start: 0,
        vacation_balance: 0,
        vacation_last_taken: None,
        sick_start: 0,
        sick_balance: 0,
        sick_last_taken: None,
        holiday_start: 0,
        holiday_balance: 0,
        holiday_last_taken: None,
        frozen: false,
    };
    account.set_bucket(LeaveType::Vacation, vacation);
    account.set_bucket(LeaveType::Sick, sick);
    account.set_bucket(LeaveType::Holiday, holiday);
    Ok(account)
}

impl LeaveAccount {
    pub fn bucket(&self, leave_type: LeaveType) -> LeaveBucket {
        let (start, balance, last_taken) = match leave_type {
            LeaveType::Vacation => (
                self.vacation_start,
                self.vacation_balance,
                self.vacation_last_taken,
            ),
            LeaveType::Sick => (self.sick_start, self.sick_balance, self.sick_last_taken),
            LeaveType::Holiday => (
                self.holiday_start,
                self.holiday_balance,
                self.holiday_last_taken,
            ),
        };
        LeaveBucket {
            start,
            balance,
            last_taken,
        }
    }

    fn set_bucket(&mut self, leave_type: LeaveType, b: LeaveBucket) {
        let (start, balance, last_taken) = match leave_type {
            LeaveType::Vacation => (
                &mut self.vacation_start,
                &mut self.vacation_balance,
                &mut self.vacation_last_taken,
            ),
            LeaveType::Sick => (
                &mut self.sick_start,
                &mut self.sick_balance,
                &mut self.sick_last_taken,
            ),
            LeaveType::Holiday => (
                &mut self.holiday_start,
                &mut self.holiday_balance,
                &mut self.holiday_last_taken,
            ),
        };
        *start = b.start;
        *balance = b.balance;
        *last_taken = b.last_taken;
    }

    /// `0 ≤ balance ≤ start` for every type.
    pub fn is_consistent(&self) -> bool {
        LeaveType::ALL.iter().all(|&t| {
            let b = self.bucket(t);
            b.balance <= b.start
        })
    }

    pub fn remaining(&self, leave_type: LeaveType) -> u32 {
        self.bucket(leave_type).balance
    }

    /// Grant `days` of `leave_type` leave taken on `taken_on`.
    pub fn apply_leave(
        &self,
        leave_type: LeaveType,
        days: u32,
        taken_on: NaiveDate,
    ) -> Result<LeaveAccount> {
        if days < 1 {
            return Err(DomainError::InvalidLeaveDays);
        }
        if self.frozen {
            return Err(DomainError::AccountFrozen(self.emp_id.clone()));
        }
        let bucket = self.bucket(leave_type);
        if days > bucket.balance {
            return Err(DomainError::InsufficientBalance {
                leave_type,
                requested: days,
                remaining: bucket.balance,
            });
        }
        let mut next = self.clone();
        next.set_bucket(
            leave_type,
            LeaveBucket {
                start: bucket.start,
                balance: bucket.balance - days,
                last_taken: Some(taken_on),
            },
        );
        Ok(next)
    }

    pub fn frozen(&self) -> LeaveAccount {
        LeaveAccount {
            frozen: true,
            ..self.clone()
        }
    }
}

/// Pure read of the remaining days for a type named in text.
pub fn remaining_leave(account: &LeaveAccount, leave_type: &str) -> Result<u32> {
    Ok(account.remaining(LeaveType::parse(leave_type)?))
}

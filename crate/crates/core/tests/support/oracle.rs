#![allow(dead_code)]

/// Long-hand round-half-up of `amount * n / den`.
pub fn scaled(amount: i64, n: i64, den: i64) -> i64 {
    let product = amount as i128 * n as i128;
    let mut q = product / den as i128;
    let r = product - q * den as i128;
    if r * 2 >= den as i128 {
        q += 1;
    }
    q as i64
}

/// Gross, net, payable days and payable seconds computed item by item.
pub fn oracle(
    basic: i64,
    factor: (i64, i64),
    allowances: &[i64],
    deductions: &[i64],
    hours: &[(u32, u64)],
    days_in_period: u32,
    full_day_secs: u64,
) -> (i64, i64, i64, u64, u64) {
    let applied = scaled(basic, factor.0, factor.1);
    let mut gross = applied;
    for a in allowances {
        gross += a;
    }
    let mut net = gross;
    for x in deductions {
        net -= x;
    }
    let mut secs = 0;
    for (day, s) in hours {
        if *day < days_in_period {
            secs += s;
        }
    }
    let mut days = 0;
    let mut left = secs;
    while left >= full_day_secs {
        left -= full_day_secs;
        days += 1;
    }
    (applied, gross, net, days, secs)
}

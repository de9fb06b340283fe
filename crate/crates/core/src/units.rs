//! Money, hours and pay-factor value types.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use num_rational::Ratio;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Money in integer minor units (cents, paise).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Money(pub i64);

impl Money {
    pub const ZERO: Money = Money(0);

    pub fn minor_units(self) -> i64 {
        self.0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn checked_add(self, other: Money) -> Option<Money> {
        self.0.checked_add(other.0).map(Money)
    }

    pub fn checked_sub(self, other: Money) -> Option<Money> {
        self.0.checked_sub(other.0).map(Money)
    }
}

impl fmt::Display for Money {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parse `n`, `n.ddd` or `p/q` into an exact non-negative rational.
pub fn parse_ratio(text: &str) -> Option<Ratio<i64>> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: i64 = digits_only(num.trim())?.parse().ok()?;
        let den: i64 = digits_only(den.trim())?.parse().ok()?;
        if den == 0 {
            return None;
        }
        return Some(Ratio::new(num, den));
    }
    let (whole, frac) = match text.split_once('.') {
        Some((w, f)) => (w, f),
        None => (text, ""),
    };
    let whole: i64 = digits_only(whole)?.parse().ok()?;
    if frac.is_empty() {
        return if text.ends_with('.') {
            None
        } else {
            Some(Ratio::from_integer(whole))
        };
    }
    if frac.len() > 12 {
        return None;
    }
    let scale = 10i64.pow(frac.len() as u32);
    let frac: i64 = digits_only(frac)?.parse().ok()?;
    Some(Ratio::new(whole.checked_mul(scale)?.checked_add(frac)?, scale))
}

fn digits_only(s: &str) -> Option<&str> {
    (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())).then_some(s)
}

fn fmt_ratio(r: Ratio<i64>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.to_integer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Multiplier applied to basic pay while an employee is in training; 0 < factor ≤ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PayFactor(Ratio<i64>);

impl PayFactor {
    pub const ONE: PayFactor = PayFactor(Ratio::new_raw(1, 1));

    pub fn new(numer: i64, denom: i64) -> Option<Self> {
        if denom <= 0 || numer <= 0 || numer > denom {
            return None;
        }
        Some(PayFactor(Ratio::new(numer, denom)))
    }

    pub fn is_one(self) -> bool {
        self.0 == Ratio::from_integer(1)
    }

    pub fn ratio(self) -> Ratio<i64> {
        self.0
    }

    /// `round_half_up(amount × factor)` for non-negative amounts.
    pub fn apply(self, amount: Money) -> Money {
        let n = i128::from(*self.0.numer());
        let d = i128::from(*self.0.denom());
        let a = i128::from(amount.0);
        // factor ≤ 1, so the result never exceeds `amount`
        Money(((2 * a * n + d) / (2 * d)) as i64)
    }
}

impl Default for PayFactor {
    fn default() -> Self {
        PayFactor::ONE
    }
}

impl fmt::Display for PayFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_ratio(self.0, f)
    }
}

impl FromStr for PayFactor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let r = parse_ratio(s).ok_or_else(|| format!("not a ratio: {s:?}"))?;
        PayFactor::new(*r.numer(), *r.denom()).ok_or_else(|| format!("factor {s} outside (0, 1]"))
    }
}

impl Serialize for PayFactor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PayFactor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = deserializer.deserialize_any(RatioText)?;
        text.parse().map_err(de::Error::custom)
    }
}

/// Accepts a JSON number or string and yields its canonical text.
struct RatioText;

impl Visitor<'_> for RatioText {
    type Value = String;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a non-negative number or a \"p/q\" string")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<String, E> {
        Ok(v.to_string())
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<String, E> {
        Ok(v.to_string())
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<String, E> {
        if !v.is_finite() {
            return Err(E::custom("non-finite number"));
        }
        // shortest round-trip representation
        Ok(format!("{v}"))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<String, E> {
        Ok(v.to_owned())
    }
}

/// A duration in whole seconds, written and read as (fractional) hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Hours {
    seconds: u64,
}

const SECONDS_PER_HOUR: u64 = 3600;

impl Hours {
    pub const ZERO: Hours = Hours { seconds: 0 };

    pub const fn from_seconds(seconds: u64) -> Self {
        Hours { seconds }
    }

    pub fn whole(hours: u64) -> Self {
        Hours {
            seconds: hours * SECONDS_PER_HOUR,
        }
    }

    pub fn seconds(self) -> u64 {
        self.seconds
    }

    pub fn as_ratio(self) -> Ratio<i64> {
        Ratio::new(self.seconds as i64, SECONDS_PER_HOUR as i64)
    }

    pub fn as_f64(self) -> f64 {
        self.seconds as f64 / SECONDS_PER_HOUR as f64
    }

    pub fn from_ratio(r: Ratio<i64>) -> Option<Self> {
        if *r.numer() < 0 {
            return None;
        }
        let scaled = r.numer().checked_mul(SECONDS_PER_HOUR as i64)?;
        (scaled % r.denom() == 0).then(|| Hours {
            seconds: (scaled / r.denom()) as u64,
        })
    }

    /// Whole multiples of `unit` contained in `self`.
    pub fn whole_units(self, unit: Hours) -> Option<u64> {
        (unit.seconds > 0).then(|| self.seconds / unit.seconds)
    }

    fn has_finite_decimal(self) -> bool {
        let mut d = *self.as_ratio().denom();
        while d % 2 == 0 {
            d /= 2;
        }
        while d % 5 == 0 {
            d /= 5;
        }
        d == 1
    }
}

impl Add for Hours {
    type Output = Hours;

    fn add(self, rhs: Hours) -> Hours {
        Hours {
            seconds: self.seconds + rhs.seconds,
        }
    }
}

impl Sum for Hours {
    fn sum<I: Iterator<Item = Hours>>(iter: I) -> Hours {
        iter.fold(Hours::ZERO, Add::add)
    }
}

impl fmt::Display for Hours {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.has_finite_decimal() && !self.as_ratio().is_integer() {
            write!(f, "{}", self.as_f64())
        } else {
            fmt_ratio(self.as_ratio(), f)
        }
    }
}

impl FromStr for Hours {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let r = parse_ratio(s).ok_or_else(|| format!("not an hour count: {s:?}"))?;
        Hours::from_ratio(r).ok_or_else(|| format!("{s} hours is not a whole number of seconds"))
    }
}

impl Serialize for Hours {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let r = self.as_ratio();
        if r.is_integer() {
            serializer.serialize_u64(r.to_integer() as u64)
        } else if self.has_finite_decimal() {
            serializer.serialize_f64(self.as_f64())
        } else {
            serializer.collect_str(self)
        }
    }
}

impl<'de> Deserialize<'de> for Hours {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = deserializer.deserialize_any(RatioText)?;
        text.parse().map_err(de::Error::custom)
    }
}

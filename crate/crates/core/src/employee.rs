//! Employee records and their ingress validation.

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::error::{FieldError, FieldRule};
use crate::fields::{FieldMap, FieldReader, DATE_FORMAT};

/// Employee ids are at most ten characters wide.
pub const MAX_ID_LEN: usize = 10;

/// Input attribute names for an employee, in table order.
pub mod attr {
    pub const TITLE: &str = "Title";
    pub const EMP_ID: &str = "Empid";
    pub const FIRST_NAME: &str = "Firname";
    pub const MIDDLE_NAME: &str = "Midname";
    pub const LAST_NAME: &str = "Lastname";
    pub const BLOOD_GROUP: &str = "Blood";
    pub const NATIONALITY: &str = "Nation";
    pub const ADDRESS: &str = "Address";
    pub const CITY: &str = "City";
    pub const STATE: &str = "State";
    pub const PIN: &str = "Pin";
    pub const HOME_PHONE: &str = "Home";
    pub const WORK_PHONE: &str = "Workplace";
    pub const MOBILE: &str = "Mobile";
    pub const EMAIL: &str = "Email";
    pub const STATUS: &str = "Status";
    pub const SUPERVISOR: &str = "Supervisor";
    pub const HIRE_DATE: &str = "Hdate";
    pub const DEPARTMENT: &str = "Dept";
    pub const BIRTH_DATE: &str = "Bdate";
    pub const GENDER: &str = "gender";
    pub const MARITAL: &str = "marital";

    pub const ALL: [&str; 22] = [
        TITLE, EMP_ID, FIRST_NAME, MIDDLE_NAME, LAST_NAME, BLOOD_GROUP, NATIONALITY, ADDRESS,
        CITY, STATE, PIN, HOME_PHONE, WORK_PHONE, MOBILE, EMAIL, STATUS, SUPERVISOR, HIRE_DATE,
        DEPARTMENT, BIRTH_DATE, GENDER, MARITAL,
    ];

    /// Record field name for each attribute, same order as [`ALL`].
    pub const FIELD_NAMES: [&str; 22] = [
        "title", "emp_id", "first_name", "middle_name", "last_name", "blood_group",
        "nationality", "address", "city", "state", "pin", "home_phone", "work_phone", "mobile",
        "email", "status", "supervisor", "hire_date", "department", "birth_date", "gender",
        "marital",
    ];

    pub fn for_field(field: &str) -> Option<&'static str> {
        FIELD_NAMES
            .iter()
            .position(|f| *f == field)
            .map(|i| ALL[i])
    }
}

macro_rules! text_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        pub enum $name {
            $(#[serde(rename = $text)] $variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl ::std::fmt::Display for $name {
            fn fmt(&self, f: &mut ::std::fmt::Formatter<'_>) -> ::std::fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl ::std::str::FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                let s = s.trim();
                $(if s.eq_ignore_ascii_case($text) { return Ok($name::$variant); })+
                Err(format!("unknown {} {:?}", stringify!($name), s))
            }
        }
    };
}

pub(crate) use text_enum;

text_enum!(
    EmployeeStatus {
        Active => "Active",
        InTraining => "InTraining",
        Resigned => "Resigned",
    }
);

text_enum!(
    Gender {
        Male => "M",
        Female => "F",
    }
);

text_enum!(
    MaritalStatus {
        Single => "S",
        Married => "M",
    }
);

/// One employee row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmployeeRecord {
    pub title: String,
    pub emp_id: String,
    pub first_name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub middle_name: Option<String>,
    pub last_name: String,
    pub blood_group: String,
    pub nationality: String,
    pub address: String,
    pub city: String,
    pub state: String,
    pub pin: String,
    pub home_phone: String,
    pub work_phone: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mobile: Option<String>,
    pub email: String,
    pub status: EmployeeStatus,
    pub supervisor: String,
    pub hire_date: NaiveDate,
    pub department: String,
    pub birth_date: NaiveDate,
    pub gender: Gender,
    pub marital: MaritalStatus,
}

impl EmployeeRecord {
    pub fn full_name(&self) -> String {
        match &self.middle_name {
            Some(m) => format!("{} {} {}", self.first_name, m, self.last_name),
            None => format!("{} {}", self.first_name, self.last_name),
        }
    }

    /// Inverse of [`validate_employee`].
    pub fn to_field_map(&self) -> FieldMap {
        let date = |d: NaiveDate| d.format(DATE_FORMAT).to_string();
        let mut m = FieldMap::new();
        let mut put = |k: &str, v: String| {
            m.insert(k.to_owned(), v);
        };
        put(attr::TITLE, self.title.clone());
        put(attr::EMP_ID, self.emp_id.clone());
        put(attr::FIRST_NAME, self.first_name.clone());
        if let Some(mid) = &self.middle_name {
            put(attr::MIDDLE_NAME, mid.clone());
        }
        put(attr::LAST_NAME, self.last_name.clone());
        put(attr::BLOOD_GROUP, self.blood_group.clone());
        put(attr::NATIONALITY, self.nationality.clone());
        put(attr::ADDRESS, self.address.clone());
        put(attr::CITY, self.city.clone());
        put(attr::STATE, self.state.clone());
        put(attr::PIN, self.pin.clone());
        put(attr::HOME_PHONE, self.home_phone.clone());
        put(attr::WORK_PHONE, self.work_phone.clone());
        if let Some(mobile) = &self.mobile {
            put(attr::MOBILE, mobile.clone());
        }
        put(attr::EMAIL, self.email.clone());
        put(attr::STATUS, self.status.to_string());
        put(attr::SUPERVISOR, self.supervisor.clone());
        put(attr::HIRE_DATE, date(self.hire_date));
        put(attr::DEPARTMENT, self.department.clone());
        put(attr::BIRTH_DATE, date(self.birth_date));
        put(attr::GENDER, self.gender.to_string());
        put(attr::MARITAL, self.marital.to_string());
        m
    }
}

/// Validate a raw attribute map into an [`EmployeeRecord`].
///
/// Every offending attribute is reported once, under its input name. A
/// record is returned only when no rule is violated.
pub fn validate_employee(candidate: &FieldMap) -> Result<EmployeeRecord, Vec<FieldError>> {
    let mut r = FieldReader::new(candidate);

    let title = r.text(attr::TITLE);
    let emp_id = r.identifier(attr::EMP_ID, MAX_ID_LEN);
    let first_name = r.text(attr::FIRST_NAME);
    let middle_name = r.optional_text(attr::MIDDLE_NAME);
    let last_name = r.text(attr::LAST_NAME);
    let blood_group = r.text(attr::BLOOD_GROUP);
    let nationality = r.text(attr::NATIONALITY);
    let address = r.text(attr::ADDRESS);
    let city = r.text(attr::CITY);
    let state = r.text(attr::STATE);
    let pin = r.digits(attr::PIN);
    let home_phone = r.digits(attr::HOME_PHONE);
    let work_phone = r.digits(attr::WORK_PHONE);
    let mobile = r.optional_digits(attr::MOBILE);
    let email = r.email(attr::EMAIL);
    let status = r.choice::<EmployeeStatus>(attr::STATUS);
    let supervisor = r.text(attr::SUPERVISOR);
    let hire_date = r.date(attr::HIRE_DATE);
    let department = r.text(attr::DEPARTMENT);
    let birth_date = r.date(attr::BIRTH_DATE);
    let gender = r.choice::<Gender>(attr::GENDER);
    let marital = r.choice::<MaritalStatus>(attr::MARITAL);

    if let (Some(born), Some(hired)) = (birth_date, hire_date) {
        if born >= hired {
            r.reject(attr::BIRTH_DATE, FieldRule::DateOrderViolation);
        }
    }
    r.finish()?;

    // finish() succeeded, so every required value is present
    Ok(EmployeeRecord {
        title: title.unwrap(),
        emp_id: emp_id.unwrap(),
        first_name: first_name.unwrap(),
        middle_name,
        last_name: last_name.unwrap(),
        blood_group: blood_group.unwrap(),
        nationality: nationality.unwrap(),
        address: address.unwrap(),
        city: city.unwrap(),
        state: state.unwrap(),
        pin: pin.unwrap(),
        home_phone: home_phone.unwrap(),
        work_phone: work_phone.unwrap(),
        mobile: mobile.unwrap(),
        email: email.unwrap(),
        status: status.unwrap(),
        supervisor: supervisor.unwrap(),
        hire_date: hire_date.unwrap(),
        department: department.unwrap(),
        birth_date: birth_date.unwrap(),
        gender: gender.unwrap(),
        marital: marital.unwrap(),
    })
}

/// Re-check an already typed record against the same rules.
pub fn check_employee(record: &EmployeeRecord) -> Result<(), Vec<FieldError>> {
    validate_employee(&record.to_field_map()).map(|_| ())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn valid_map() -> FieldMap {
        [
            ("Title", "Mr"),
            ("Empid", "E100"),
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
            ("Dept", "CS"),
            ("Bdate", "1985-07-19"),
            ("gender", "M"),
            ("marital", "S"),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_owned(), v.to_owned()))
        .collect()
    }

    #[test]
    fn valid_map_round_trips() {
        let rec = validate_employee(&valid_map()).unwrap();
        assert_eq!(rec.last_name, "Kumar");
        assert_eq!(rec.middle_name, None);
        assert_eq!(rec.mobile, None);
        assert_eq!(rec.to_field_map(), valid_map());
    }

    #[test]
    fn empty_last_name_is_missing() {
        let mut m = valid_map();
        m.insert("Lastname".into(), String::new());
        assert_eq!(
            validate_employee(&m).unwrap_err(),
            vec![FieldError::new("Lastname", FieldRule::MissingRequiredField)]
        );
    }

    #[test]
    fn alphanumeric_pin_is_malformed_number() {
        let mut m = valid_map();
        m.insert("Pin".into(), "63A101".into());
        assert_eq!(
            validate_employee(&m).unwrap_err(),
            vec![FieldError::new("Pin", FieldRule::MalformedNumber)]
        );
    }

    #[test]
    fn birth_after_hire_is_order_violation() {
        let mut m = valid_map();
        m.insert("Bdate".into(), "2001-05-01".into());
        m.insert("Hdate".into(), "1999-01-01".into());
        assert_eq!(
            validate_employee(&m).unwrap_err(),
            vec![FieldError::new("Bdate", FieldRule::DateOrderViolation)]
        );
    }

    #[test]
    fn overlong_id_rejected() {
        let mut m = valid_map();
        m.insert("Empid".into(), "E12345678901".into());
        assert_eq!(
            validate_employee(&m).unwrap_err(),
            vec![FieldError::new("Empid", FieldRule::TooLong)]
        );
    }

    #[test]
    fn optional_fields_validate_when_present() {
        let mut m = valid_map();
        m.insert("Mobile".into(), "98x".into());
        m.insert("Midname".into(), "R".into());
        assert_eq!(
            validate_employee(&m).unwrap_err(),
            vec![FieldError::new("Mobile", FieldRule::MalformedNumber)]
        );
        m.insert("Mobile".into(), "9876543210".into());
        let rec = validate_employee(&m).unwrap();
        assert_eq!(rec.full_name(), "Arun R Kumar");
    }

    #[test]
    fn several_errors_reported_together() {
        let mut m = valid_map();
        m.remove("Email");
        m.insert("gender".into(), "X".into());
        m.insert("Hdate".into(), "yesterday".into());
        let errs = validate_employee(&m).unwrap_err();
        assert_eq!(errs.len(), 3);
    }

    #[test]
    fn attribute_lookup_by_field() {
        assert_eq!(attr::for_field("pin"), Some("Pin"));
        assert_eq!(attr::for_field("marital"), Some("marital"));
        assert_eq!(attr::for_field("nope"), None);
    }
}

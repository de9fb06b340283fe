#![allow(dead_code)]

use hrms_core::{FieldMap, FieldRule};

pub fn valid() -> FieldMap {
    [
        ("Title", "Ms"),
        ("Empid", "E000042"),
        ("Firname", "Lakshmi"),
        ("Midname", "R"),
        ("Lastname", "Narayan"),
        ("Blood", "B+"),
        ("Nation", "Indian"),
        ("Address", "4 Temple Street"),
        ("City", "Namakkal"),
        ("State", "Tamil Nadu"),
        ("Pin", "637001"),
        ("Home", "04286200100"),
        ("Workplace", "04286200200"),
        ("Mobile", "9840012345"),
        ("Email", "lakshmi@example.com"),
        ("Status", "InTraining"),
        ("Supervisor", "Priya"),
        ("Hdate", "2011-06-01"),
        ("Dept", "Finance"),
        ("Bdate", "1988-02-29"),
        ("gender", "F"),
        ("marital", "M"),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_owned(), v.to_owned()))
    .collect()
}

pub const REQUIRED_TEXT: &[&str] = &[
    "Title", "Firname", "Lastname", "Blood", "Nation", "Address", "City", "State", "Supervisor",
    "Dept",
];

/// (field, replacement, expected rule); `None` removes the field.
pub fn catalog() -> Vec<(&'static str, Option<&'static str>, FieldRule)> {
    use FieldRule::*;
    let mut c = Vec::new();
    for f in REQUIRED_TEXT {
        c.push((*f, Some(""), MissingRequiredField));
        c.push((*f, Some("   "), MissingRequiredField));
        c.push((*f, None, MissingRequiredField));
    }
    for f in ["Empid", "Pin", "Home", "Workplace", "Email", "Status", "Hdate", "Bdate", "gender", "marital"] {
        c.push((f, Some(""), MissingRequiredField));
        c.push((f, None, MissingRequiredField));
    }
    c.extend([
        ("Empid", Some("E 42"), MalformedIdentifier),
        ("Empid", Some("E42;drop"), MalformedIdentifier),
        ("Empid", Some("E0000000042"), TooLong),
        ("Pin", Some("63700A"), MalformedNumber),
        ("Pin", Some("-637001"), MalformedNumber),
        ("Home", Some("0428 620"), MalformedNumber),
        ("Workplace", Some("12.5"), MalformedNumber),
        ("Mobile", Some("98400x2345"), MalformedNumber),
        ("Mobile", Some("+919840012345"), MalformedNumber),
        ("Email", Some("lakshmi.example.com"), MalformedEmail),
        ("Email", Some("a@b@c"), MalformedEmail),
        ("Email", Some("@example.com"), MalformedEmail),
        ("Email", Some("lak shmi@example.com"), MalformedEmail),
        ("Hdate", Some("2011-13-01"), MalformedDate),
        ("Hdate", Some("01/06/2011"), MalformedDate),
        ("Hdate", Some("2011-6-1"), MalformedDate),
        ("Bdate", Some("1987-02-29"), MalformedDate),
        ("Bdate", Some("yesterday"), MalformedDate),
        ("Bdate", Some("2011-06-01"), DateOrderViolation),
        ("Bdate", Some("2020-01-01"), DateOrderViolation),
        ("Status", Some("Retired"), BadEnumValue),
        ("Status", Some("Resigning"), BadEnumValue),
        ("gender", Some("X"), BadEnumValue),
        ("gender", Some("Male"), BadEnumValue),
        ("marital", Some("D"), BadEnumValue),
    ]);
    c
}

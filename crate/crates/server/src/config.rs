//! Service configuration: a flat `key = value` file in the data directory,
//! overridden by `HRMS_<KEY>` environment variables, overridden in turn by
//! command-line flags.

use std::collections::BTreeMap;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use chrono::Duration;
use hrms_core::{Hours, LeaveAllocations, PayFactor};
use thiserror::Error;

pub const CONFIG_FILE: &str = "hrms.conf";
pub const DEFAULT_LISTEN: &str = "127.0.0.1:8080";

/// Recognised keys, in the order written by `hrms init`.
pub const KEYS: [&str; 9] = [
    "listen",
    "leave_vacation",
    "leave_sick",
    "leave_holiday",
    "full_day_hours",
    "training_pay_factor",
    "session_ttl_hours",
    "pbkdf2_iterations",
    "console_dir",
];

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{origin}: unknown key {key:?}")]
    UnknownKey { origin: String, key: String },
    #[error("{origin}: bad value for {key}: {message}")]
    BadValue {
        origin: String,
        key: String,
        message: String,
    },
    #[error("{origin}: expected `key = value`")]
    Syntax { origin: String },
    #[error("reading {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

#[derive(Debug, Clone)]
pub struct Config {
    pub listen: SocketAddr,
    pub leave: LeaveAllocations,
    pub full_day_hours: Hours,
    pub training_pay_factor: PayFactor,
    pub session_ttl: Duration,
    pub pbkdf2_iterations: u32,
    pub console_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            listen: DEFAULT_LISTEN.parse().unwrap(),
            leave: LeaveAllocations::default(),
            full_day_hours: Hours::whole(8),
            training_pay_factor: PayFactor::ONE,
            session_ttl: Duration::hours(8),
            pbkdf2_iterations: hrms_store::auth::DEFAULT_ITERATIONS,
            console_dir: None,
        }
    }
}

fn parse<T: FromStr>(origin: &str, key: &str, value: &str) -> Result<T, ConfigError>
where
    T::Err: std::fmt::Display,
{
    value.parse().map_err(|e: T::Err| ConfigError::BadValue {
        origin: origin.to_owned(),
        key: key.to_owned(),
        message: e.to_string(),
    })
}

fn bad(origin: &str, key: &str, message: &str) -> ConfigError {
    ConfigError::BadValue {
        origin: origin.to_owned(),
        key: key.to_owned(),
        message: message.to_owned(),
    }
}

impl Config {
    /// Read `<data_dir>/hrms.conf` if present, then apply environment overrides.
    pub fn load(
        data_dir: &Path,
        env: impl Fn(&str) -> Option<String>,
    ) -> Result<Config, ConfigError> {
        let mut config = Config::default();
        let path = data_dir.join(CONFIG_FILE);
        match std::fs::read_to_string(&path) {
            Ok(text) => {
                for (origin, key, value) in parse_file(&text, &path)? {
                    config.set(&origin, &key, &value)?;
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(source) => return Err(ConfigError::Io { path, source }),
        }
        for key in KEYS {
            let var = format!("HRMS_{}", key.to_ascii_uppercase());
            if let Some(value) = env(&var) {
                config.set(&var, key, &value)?;
            }
        }
        Ok(config)
    }

    pub fn set(&mut self, origin: &str, key: &str, value: &str) -> Result<(), ConfigError> {
        let value = value.trim();
        match key {
            "listen" => self.listen = parse(origin, key, value)?,
            "leave_vacation" => self.leave.vacation = i64::from(parse::<u32>(origin, key, value)?),
            "leave_sick" => self.leave.sick = i64::from(parse::<u32>(origin, key, value)?),
            "leave_holiday" => self.leave.holiday = i64::from(parse::<u32>(origin, key, value)?),
            "full_day_hours" => {
                let hours: Hours = parse(origin, key, value)?;
                if hours == Hours::ZERO || hours > Hours::whole(24) {
                    return Err(bad(origin, key, "must be in (0, 24]"));
                }
                self.full_day_hours = hours;
            }
            "training_pay_factor" => self.training_pay_factor = parse(origin, key, value)?,
            "session_ttl_hours" => {
                let hours: u32 = parse(origin, key, value)?;
                if hours == 0 {
                    return Err(bad(origin, key, "must be at least 1"));
                }
                self.session_ttl = Duration::hours(hours.into());
            }
            "pbkdf2_iterations" => {
                let n: u32 = parse(origin, key, value)?;
                if n < 1_000 {
                    return Err(bad(origin, key, "must be at least 1000"));
                }
                self.pbkdf2_iterations = n;
            }
            "console_dir" => {
                self.console_dir = (!value.is_empty()).then(|| PathBuf::from(value));
            }
            _ => {
                return Err(ConfigError::UnknownKey {
                    origin: origin.to_owned(),
                    key: key.to_owned(),
                })
            }
        }
        Ok(())
    }

    /// File contents written by `hrms init`.
    pub fn default_file() -> String {
        let c = Config::default();
        format!(
            "# HRMS service configuration. HRMS_<KEY> environment variables and\n\
             # command-line flags take precedence over these values.\n\
             listen = {}\n\
             leave_vacation = {}\n\
             leave_sick = {}\n\
             leave_holiday = {}\n\
             full_day_hours = {}\n\
             training_pay_factor = {}\n\
             session_ttl_hours = {}\n\
             pbkdf2_iterations = {}\n\
             # console_dir = /path/to/console/dist\n",
            c.listen,
            c.leave.vacation,
            c.leave.sick,
            c.leave.holiday,
            c.full_day_hours,
            c.training_pay_factor,
            c.session_ttl.num_hours(),
            c.pbkdf2_iterations,
        )
    }
}

fn parse_file(text: &str, path: &Path) -> Result<Vec<(String, String, String)>, ConfigError> {
    let mut seen = BTreeMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let origin = format!("{}:{}", path.display(), n + 1);
        let Some((key, value)) = line.split_once('=') else {
            return Err(ConfigError::Syntax { origin });
        };
        seen.insert(key.trim().to_owned(), (origin, value.trim().to_owned()));
    }
    Ok(seen
        .into_iter()
        .map(|(k, (origin, v))| (origin, k, v))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_env(_: &str) -> Option<String> {
        None
    }

    #[test]
    fn defaults_without_file() {
        let dir = tempfile::tempdir().unwrap();
        let c = Config::load(dir.path(), no_env).unwrap();
        assert_eq!(c.listen.to_string(), "127.0.0.1:8080");
        assert_eq!(c.leave, LeaveAllocations::default());
        assert_eq!(c.session_ttl, Duration::hours(8));
        assert!(c.training_pay_factor.is_one());
    }

    #[test]
    fn default_file_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join(CONFIG_FILE), Config::default_file()).unwrap();
        let c = Config::load(dir.path(), no_env).unwrap();
        assert_eq!(c.full_day_hours, Hours::whole(8));
        assert_eq!(c.leave.holiday, 8);
    }

    #[test]
    fn env_overrides_file() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(
            dir.path().join(CONFIG_FILE),
            "listen = 0.0.0.0:9000\nleave_sick = 12\ntraining_pay_factor = 3/4\n",
        )
        .unwrap();
        let c = Config::load(dir.path(), |k| (k == "HRMS_LISTEN").then(|| "127.0.0.1:7000".into()))
            .unwrap();
        assert_eq!(c.listen.to_string(), "127.0.0.1:7000");
        assert_eq!(c.leave.sick, 12);
        assert_eq!(c.training_pay_factor, PayFactor::new(3, 4).unwrap());
    }

    #[test]
    fn bad_lines_rejected() {
        let dir = tempfile::tempdir().unwrap();
        for text in ["nonsense\n", "colour = red\n", "full_day_hours = 0\n", "training_pay_factor = 3/2\n"] {
            std::fs::write(dir.path().join(CONFIG_FILE), text).unwrap();
            assert!(Config::load(dir.path(), no_env).is_err(), "{text}");
        }
    }
}

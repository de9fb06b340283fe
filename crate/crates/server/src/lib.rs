//! HRMS service: HTTP API, configuration, demo fixture and admin CLI.

pub mod api;
pub mod cli;
pub mod config;
pub mod seed;

pub use api::{router, AppState};
pub use config::Config;

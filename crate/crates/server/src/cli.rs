//! The `hrms` administrative command line.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use hrms_reporting::{generate_report, ReportCriteria, ReportError};
use hrms_store::{AuthConfig, AuthError, Authenticator, Store, StoreError, SystemClock};
use serde_json::json;

use crate::config::{Config, ConfigError, CONFIG_FILE};

pub const PASSWORD_ENV: &str = "HRMS_ADMIN_PASSWORD";

#[derive(Debug, Parser)]
#[command(name = "hrms", version, about = "HR management service and admin tool")]
pub struct Cli {
    /// Store and configuration directory.
    #[arg(long, global = true, env = "HRMS_DATA_DIR", default_value = "hrms-data")]
    pub data_dir: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Create an empty store and a default hrms.conf.
    Init,
    /// Manage administrator credentials.
    Admin {
        #[command(subcommand)]
        action: AdminCommand,
    },
    /// Run the HTTP API until interrupted.
    Serve {
        /// Overrides `listen` from the config file and HRMS_LISTEN.
        #[arg(long)]
        listen: Option<SocketAddr>,
    },
    /// Write a report document to a file.
    Report {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        #[arg(long)]
        department: Option<String>,
        /// CSV or PlainText.
        #[arg(long, default_value = "CSV")]
        format: String,
        /// Output path; `-` for stdout.
        #[arg(long)]
        out: PathBuf,
    },
    /// Export every record as line-delimited JSON.
    Dump {
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Import a dump. A non-empty store is replaced only with --force.
    Load {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        force: bool,
    },
    /// Insert the demo fixture.
    Seed {
        #[arg(long)]
        demo: bool,
    },
    /// Print the API endpoint reference as Markdown.
    Routes,
}

#[derive(Debug, Subcommand)]
pub enum AdminCommand {
    /// Enroll an administrator. The password is read from HRMS_ADMIN_PASSWORD
    /// or prompted for without echo.
    Enroll {
        #[arg(long)]
        user: String,
    },
}

/// A failed command: exit status plus message.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 1, kind: "usage", message: message.into() }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        Failure { code: 2, kind: "validation", message: message.into() }
    }

    pub fn storage(message: impl Into<String>) -> Self {
        Failure { code: 3, kind: "storage", message: message.into() }
    }
}

impl From<StoreError> for Failure {
    fn from(e: StoreError) -> Self {
        match e {
            StoreError::Domain(_) | StoreError::Duplicate { .. } => Failure::validation(e.to_string()),
            _ => Failure::storage(e.to_string()),
        }
    }
}

impl From<AuthError> for Failure {
    fn from(e: AuthError) -> Self {
        match e {
            AuthError::Store(s) => s.into(),
            AuthError::Entropy(_) => Failure::storage(e.to_string()),
            _ => Failure::validation(e.to_string()),
        }
    }
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::InvalidCriteria(_) => Failure::validation(e.to_string()),
            ReportError::Store(s) => s.into(),
            ReportError::Encoding(_) => Failure::storage(e.to_string()),
        }
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::storage(e.to_string())
    }
}

/// Parse arguments, run, and report failures on stderr as one JSON line.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    init_logging();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!(
                "{}",
                json!({ "error": f.kind, "exit_code": f.code, "message": f.message })
            );
            ExitCode::from(f.code)
        }
    }
}

fn init_logging() {
    let filter = tracing_subscriber::EnvFilter::try_from_env("HRMS_LOG")
        .unwrap_or_else(|_| tracing_subscriber::EnvFilter::new("info"));
    let _ = tracing_subscriber::fmt()
        .with_env_filter(filter)
        .with_writer(io::stderr)
        .with_ansi(io::IsTerminal::is_terminal(&io::stderr()))
        .try_init();
}

fn load_config(dir: &Path) -> Result<Config, Failure> {
    Ok(Config::load(dir, |k| std::env::var(k).ok())?)
}

fn open(dir: &Path) -> Result<Store, Failure> {
    if !Store::exists(dir) {
        return Err(Failure::storage(format!(
            "no store at {}; run `hrms init` first",
            dir.display()
        )));
    }
    Ok(Store::open(dir)?)
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        None => Box::new(io::stdout().lock()),
        Some(p) if p == Path::new("-") => Box::new(io::stdout().lock()),
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
    })
}

pub fn run(cli: Cli) -> Result<(), Failure> {
    let dir = cli.data_dir.as_path();
    match cli.command {
        Command::Init => {
            Store::create(dir)?;
            std::fs::write(dir.join(CONFIG_FILE), Config::default_file())?;
            eprintln!("initialized store in {}", dir.display());
        }
        Command::Admin {
            action: AdminCommand::Enroll { user },
        } => {
            let config = load_config(dir)?;
            let store = open(dir)?;
            let password = read_password()?;
            let auth = Authenticator::new(
                store,
                Arc::new(SystemClock),
                AuthConfig {
                    session_ttl: config.session_ttl,
                    iterations: config.pbkdf2_iterations,
                },
            );
            auth.enroll(&user, &password)?;
            eprintln!("enrolled {user}");
        }
        Command::Serve { listen } => {
            let mut config = load_config(dir)?;
            if let Some(addr) = listen {
                config.listen = addr;
            }
            let store = open(dir)?;
            serve(store, config)?;
        }
        Command::Report {
            kind,
            from,
            to,
            department,
            format,
            out,
        } => {
            let criteria = ReportCriteria::parse(
                &kind,
                from.as_deref(),
                to.as_deref(),
                department.as_deref(),
                Some(&format),
            )?;
            let store = open(dir)?;
            let doc = generate_report(&store.read(), &criteria)?;
            let mut w = output(Some(&out))?;
            w.write_all(&doc.bytes)?;
            w.flush()?;
            eprintln!("{} rows written to {}", doc.rows, out.display());
        }
        Command::Dump { out } => {
            let store = open(dir)?;
            let mut w = output(out.as_deref())?;
            let n = store.dump(&mut w)?;
            w.flush()?;
            eprintln!("dumped {n} records");
        }
        Command::Load { input, force } => {
            let store = open(dir)?;
            let file = File::open(&input)?;
            let n = store.load(BufReader::new(file), force).map_err(|e| match e {
                StoreError::NotEmpty => Failure::storage("store is not empty; use --force to replace it"),
                other => other.into(),
            })?;
            eprintln!("loaded {n} records");
        }
        Command::Seed { demo } => {
            if !demo {
                return Err(Failure::usage("only `seed --demo` is supported"));
            }
            let config = load_config(dir)?;
            let store = open(dir)?;
            let summary = crate::seed::seed_demo(&store, &config).map_err(|e| match e {
                StoreError::NotEmpty => Failure::storage("store already holds employees or applicants"),
                other => other.into(),
            })?;
            println!("{}", serde_json::to_string(&summary).expect("summary serializes"));
        }
        Command::Routes => print!("{}", crate::api::api_reference()),
    }
    Ok(())
}

fn read_password() -> Result<String, Failure> {
    if let Ok(p) = std::env::var(PASSWORD_ENV) {
        return Ok(p);
    }
    let first = rpassword::prompt_password("Password: ")
        .map_err(|e| Failure::usage(format!("cannot read password: {e}; set {PASSWORD_ENV}")))?;
    let second = rpassword::prompt_password("Repeat password: ")
        .map_err(|e| Failure::usage(format!("cannot read password: {e}")))?;
    if first != second {
        return Err(Failure::validation("passwords do not match"));
    }
    Ok(first)
}

fn serve(store: Store, config: Config) -> Result<(), Failure> {
    let runtime = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()?;
    runtime.block_on(async move {
        let listener = tokio::net::TcpListener::bind(config.listen).await?;
        let addr = listener.local_addr()?;
        let state = crate::AppState::new(store, config);
        if let Ok(n) = state.auth.purge_expired() {
            tracing::info!(purged = n, "expired sessions removed");
        }
        let app = crate::router(state);
        eprintln!("listening on {addr}");
        tracing::info!(%addr, "serving");
        axum::serve(listener, app)
            .with_graceful_shutdown(shutdown_signal())
            .await?;
        tracing::info!("shut down");
        Ok::<_, Failure>(())
    })
}

async fn shutdown_signal() {
    let ctrl_c = async {
        let _ = tokio::signal::ctrl_c().await;
    };
    #[cfg(unix)]
    let terminate = async {
        match tokio::signal::unix::signal(tokio::signal::unix::SignalKind::terminate()) {
            Ok(mut s) => {
                s.recv().await;
            }
            Err(_) => std::future::pending::<()>().await,
        }
    };
    #[cfg(not(unix))]
    let terminate = std::future::pending::<()>();
    tokio::select! {
        _ = ctrl_c => {},
        _ = terminate => {},
    }
}

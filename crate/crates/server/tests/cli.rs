use std::io::{BufRead, BufReader, Read, Write};
use std::net::TcpStream;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_hrms");
const PASSWORD: &str = "clipass123";

fn hrms(dir: &Path, args: &[&str]) -> Output {
    Command::new(BIN)
        .arg("--data-dir")
        .arg(dir)
        .args(args)
        .env("HRMS_ADMIN_PASSWORD", PASSWORD)
        .env("HRMS_PBKDF2_ITERATIONS", "1000")
        .env("HRMS_LOG", "info")
        .stdin(Stdio::null())
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn ready(dir: &Path) {
    let out = hrms(dir, &["init"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
}

#[test]
fn init_writes_config_once() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("data");
    ready(&dir);
    let conf = std::fs::read_to_string(dir.join("hrms.conf")).unwrap();
    assert!(conf.contains("pbkdf2_iterations"));
    let again = hrms(&dir, &["init"]);
    assert_ne!(code(&again), 0);
}

#[test]
fn enroll_via_environment() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("data");
    ready(&dir);
    let out = hrms(&dir, &["admin", "enroll", "--user", "admin"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(!stderr(&out).contains(PASSWORD));

    let dup = hrms(&dir, &["admin", "enroll", "--user", "admin"]);
    assert_eq!(code(&dup), 2);
    let line: serde_json::Value = serde_json::from_str(stderr(&dup).lines().last().unwrap()).unwrap();
    assert_eq!(line["exit_code"], 2);

    let weak = Command::new(BIN)
        .arg("--data-dir")
        .arg(&dir)
        .args(["admin", "enroll", "--user", "bob"])
        .env("HRMS_ADMIN_PASSWORD", "short")
        .stdin(Stdio::null())
        .output()
        .unwrap();
    assert_eq!(code(&weak), 2);

    for entry in walk(&dir) {
        let bytes = std::fs::read(&entry).unwrap();
        assert!(
            !String::from_utf8_lossy(&bytes).contains(PASSWORD),
            "{}",
            entry.display()
        );
    }
}

fn walk(dir: &Path) -> Vec<std::path::PathBuf> {
    let mut out = Vec::new();
    for e in std::fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        if p.is_dir() {
            out.extend(walk(&p));
        } else {
            out.push(p);
        }
    }
    out
}

#[test]
fn seed_then_report() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("data");
    ready(&dir);
    let out = hrms(&dir, &["seed", "--demo"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["active_employees"], 5);
    assert_ne!(code(&hrms(&dir, &["seed", "--demo"])), 0);

    let csv_path = tmp.path().join("roster.csv");
    let out = hrms(
        &dir,
        &["report", "--kind", "EmployeeRoster", "--out", csv_path.to_str().unwrap()],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let rows = csv::Reader::from_path(&csv_path).unwrap().records().count();
    assert_eq!(rows, 5);

    let out = hrms(
        &dir,
        &["report", "--kind", "PayrollRegister", "--out", csv_path.to_str().unwrap()],
    );
    assert_eq!(code(&out), 2, "{}", stderr(&out));
}

#[test]
fn dump_load_round_trip() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("data");
    ready(&dir);
    hrms(&dir, &["seed", "--demo"]);
    let first = hrms(&dir, &["dump"]);
    assert_eq!(code(&first), 0);
    let file = tmp.path().join("backup.jsonl");
    std::fs::write(&file, &first.stdout).unwrap();

    let refused = hrms(&dir, &["load", "--in", file.to_str().unwrap()]);
    assert_ne!(code(&refused), 0);

    std::fs::remove_dir_all(&dir).unwrap();
    ready(&dir);
    let out = hrms(&dir, &["load", "--in", file.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let second = hrms(&dir, &["dump"]);
    assert_eq!(first.stdout, second.stdout);

    let forced = hrms(&dir, &["load", "--in", file.to_str().unwrap(), "--force"]);
    assert_eq!(code(&forced), 0);
    assert_eq!(hrms(&dir, &["dump"]).stdout, first.stdout);
}

#[test]
fn usage_and_missing_store() {
    let tmp = tempfile::tempdir().unwrap();
    let out = hrms(tmp.path(), &["frobnicate"]);
    assert_eq!(code(&out), 1);
    let out = hrms(&tmp.path().join("absent"), &["dump"]);
    assert_eq!(code(&out), 3);
    let help = hrms(tmp.path(), &["--help"]);
    assert_eq!(code(&help), 0);
    let routes = hrms(tmp.path(), &["routes"]);
    assert_eq!(
        String::from_utf8(routes.stdout).unwrap(),
        hrms_server::api::api_reference()
    );
}

#[test]
fn serve_answers_login() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("data");
    ready(&dir);
    hrms(&dir, &["admin", "enroll", "--user", "admin"]);
    let mut child = Command::new(BIN)
        .arg("--data-dir")
        .arg(&dir)
        .args(["serve", "--listen", "127.0.0.1:0"])
        .env("HRMS_LOG", "debug")
        .stdin(Stdio::null())
        .stdout(Stdio::null())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut lines = BufReader::new(child.stderr.take().unwrap()).lines();
    let addr = loop {
        let line = lines.next().expect("server exited").unwrap();
        if let Some(a) = line.strip_prefix("listening on ") {
            break a.trim().to_owned();
        }
    };

    let body = format!(r#"{{"userid":"admin","password":"{PASSWORD}"}}"#);
    let mut stream = TcpStream::connect(&addr).unwrap();
    write!(
        stream,
        "POST /api/login HTTP/1.1\r\nHost: {addr}\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
        body.len()
    )
    .unwrap();
    let mut reply = String::new();
    stream.read_to_string(&mut reply).unwrap();
    assert!(reply.starts_with("HTTP/1.1 200"), "{reply}");
    assert!(reply.contains("\"token\""));

    let mut stream = TcpStream::connect(&addr).unwrap();
    write!(stream, "GET /api/employees HTTP/1.1\r\nHost: {addr}\r\nConnection: close\r\n\r\n").unwrap();
    let mut reply = String::new();
    stream.read_to_string(&mut reply).unwrap();
    assert!(reply.starts_with("HTTP/1.1 401"), "{reply}");

    child.kill().unwrap();
    child.wait().unwrap();
    let log: Vec<String> = lines.map_while(Result::ok).collect();
    let log = log.join("\n");
    assert!(log.contains("/api/login"), "{log}");
    assert!(!log.contains(PASSWORD));
}

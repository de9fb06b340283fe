//! File-backed store: an in-memory table image rebuilt from an append-only
//! write-ahead log.
//!
//! Directory layout:
//!
//! ```text
//! <dir>/VERSION   schema-version stamp
//! <dir>/wal.log   one JSON object per line: begin, put/del..., commit
//! <dir>/LOCK      held exclusively while a handle is open
//! ```
//!
//! A transaction becomes durable when its `commit` line is on disk. On open,
//! the log is replayed and any trailing transaction without a commit line is
//! discarded and truncated away. Writers are serialized by a single mutex, so
//! every transaction observes and produces a serial history.

use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions, TryLockError};
use std::io::{BufRead, BufReader, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, MutexGuard, RwLock, RwLockReadGuard};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use hrms_core::EmployeeStatus;

use crate::error::{Result, StoreError};
use crate::schema::{Record, Row, Table, SCHEMA_VERSION};

const VERSION_FILE: &str = "VERSION";
const WAL_FILE: &str = "wal.log";
const LOCK_FILE: &str = "LOCK";
const COMPACT_THRESHOLD: u64 = 8 << 20;

pub(crate) type Tables = BTreeMap<Table, BTreeMap<String, Row>>;

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum WalLine {
    Begin { tx: u64 },
    Put { table: Table, key: String, row: Row },
    Del { table: Table, key: String },
    Commit { tx: u64 },
}

/// Crash simulation: the next commit writes only its first `after_bytes`
/// bytes of log, then the handle refuses all further work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FailPoint {
    pub after_bytes: usize,
}

#[derive(Debug, Clone)]
pub struct StoreOptions {
    /// fsync the log after every commit.
    pub sync: bool,
}

impl Default for StoreOptions {
    fn default() -> Self {
        StoreOptions { sync: true }
    }
}

struct Writer {
    wal: File,
    next_tx: u64,
    fail: Option<FailPoint>,
    poisoned: bool,
}

struct Inner {
    dir: PathBuf,
    options: StoreOptions,
    committed: RwLock<Tables>,
    writer: Mutex<Writer>,
    _lock: File,
}

/// Shareable handle to an open store.
#[derive(Clone)]
pub struct Store {
    inner: Arc<Inner>,
}

impl std::fmt::Debug for Store {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Store").field("dir", &self.inner.dir).finish()
    }
}

fn is_empty_dir(dir: &Path) -> Result<bool> {
    Ok(fs::read_dir(dir)?.next().is_none())
}

impl Store {
    /// Create a fresh store in `dir`, which must be absent or empty.
    pub fn create(dir: impl AsRef<Path>) -> Result<Store> {
        let dir = dir.as_ref();
        if dir.exists() && !is_empty_dir(dir)? {
            return Err(StoreError::AlreadyInitialized(dir.display().to_string()));
        }
        fs::create_dir_all(dir)?;
        fs::write(dir.join(VERSION_FILE), format!("hrms-store {SCHEMA_VERSION}\n"))?;
        File::create(dir.join(WAL_FILE))?.sync_all()?;
        Store::open(dir)
    }

    pub fn open(dir: impl AsRef<Path>) -> Result<Store> {
        Store::open_with(dir, StoreOptions::default())
    }

    pub fn open_with(dir: impl AsRef<Path>, options: StoreOptions) -> Result<Store> {
        let dir = dir.as_ref().to_path_buf();
        let version = fs::read_to_string(dir.join(VERSION_FILE))
            .map_err(|_| StoreError::NotInitialized(dir.display().to_string()))?;
        if version.trim() != format!("hrms-store {SCHEMA_VERSION}") {
            return Err(StoreError::Corrupt(format!(
                "unsupported schema stamp {:?}",
                version.trim()
            )));
        }

        let lock = OpenOptions::new()
            .create(true)
            .truncate(false)
            .write(true)
            .open(dir.join(LOCK_FILE))?;
        match lock.try_lock() {
            Ok(()) => {}
            Err(TryLockError::WouldBlock) => {
                return Err(StoreError::Locked(dir.display().to_string()))
            }
            Err(TryLockError::Error(e)) => return Err(e.into()),
        }

        let wal_path = dir.join(WAL_FILE);
        let (tables, next_tx, good_len) = replay(&wal_path)?;
        let mut wal = OpenOptions::new().read(true).write(true).open(&wal_path)?;
        if wal.metadata()?.len() != good_len {
            tracing::warn!(path = %wal_path.display(), "discarding incomplete log tail");
            wal.set_len(good_len)?;
            wal.sync_all()?;
        }
        wal.seek(SeekFrom::End(0))?;

        let store = Store {
            inner: Arc::new(Inner {
                dir,
                options,
                committed: RwLock::new(tables),
                writer: Mutex::new(Writer {
                    wal,
                    next_tx,
                    fail: None,
                    poisoned: false,
                }),
                _lock: lock,
            }),
        };
        if good_len > COMPACT_THRESHOLD {
            store.compact()?;
        }
        Ok(store)
    }

    pub fn dir(&self) -> &Path {
        &self.inner.dir
    }

    /// Whether `dir` holds a store.
    pub fn exists(dir: impl AsRef<Path>) -> bool {
        dir.as_ref().join(VERSION_FILE).is_file()
    }

    /// Arm a crash simulation for the next commit.
    pub fn inject_failure(&self, point: FailPoint) {
        self.lock_writer().fail = Some(point);
    }

    fn lock_writer(&self) -> MutexGuard<'_, Writer> {
        self.inner
            .writer
            .lock()
            .unwrap_or_else(|poison| poison.into_inner())
    }

    /// Start a transaction. Blocks while another transaction is open.
    pub fn begin(&self) -> Result<Transaction<'_>> {
        let writer = self.lock_writer();
        if writer.poisoned {
            return Err(StoreError::Poisoned);
        }
        Ok(Transaction {
            inner: &self.inner,
            writer,
            pending: BTreeMap::new(),
        })
    }

    /// Run `f` in a transaction; commit on `Ok`, roll back on `Err`.
    pub fn write<T>(&self, f: impl FnOnce(&mut Transaction<'_>) -> Result<T>) -> Result<T> {
        let mut txn = self.begin()?;
        let out = f(&mut txn)?;
        txn.commit()?;
        Ok(out)
    }

    /// Consistent view of committed state.
    pub fn read(&self) -> Snapshot<'_> {
        Snapshot {
            tables: self
                .inner
                .committed
                .read()
                .unwrap_or_else(|poison| poison.into_inner()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.read().tables.values().all(BTreeMap::is_empty)
    }

    /// Rewrite the log as a single transaction holding the current image.
    pub fn compact(&self) -> Result<()> {
        let mut writer = self.lock_writer();
        if writer.poisoned {
            return Err(StoreError::Poisoned);
        }
        let tables = self.read().tables.clone();
        let tx = writer.next_tx;
        let mut buf = Vec::new();
        encode_line(&mut buf, &WalLine::Begin { tx })?;
        for (table, rows) in &tables {
            for (key, row) in rows {
                encode_line(
                    &mut buf,
                    &WalLine::Put {
                        table: *table,
                        key: key.clone(),
                        row: row.clone(),
                    },
                )?;
            }
        }
        encode_line(&mut buf, &WalLine::Commit { tx })?;

        let tmp = self.inner.dir.join("wal.log.tmp");
        let mut f = File::create(&tmp)?;
        f.write_all(&buf)?;
        f.sync_all()?;
        drop(f);
        let wal_path = self.inner.dir.join(WAL_FILE);
        fs::rename(&tmp, &wal_path)?;
        if let Ok(d) = File::open(&self.inner.dir) {
            let _ = d.sync_all();
        }
        let mut wal = OpenOptions::new().read(true).write(true).open(&wal_path)?;
        wal.seek(SeekFrom::End(0))?;
        writer.wal = wal;
        writer.next_tx = tx + 1;
        Ok(())
    }
}

fn encode_line(buf: &mut Vec<u8>, line: &WalLine) -> Result<()> {
    serde_json::to_writer(&mut *buf, line)?;
    buf.push(b'\n');
    Ok(())
}

/// Rebuild the table image. Returns the image, the next transaction id and
/// the byte length of the log up to the last complete commit.
fn replay(path: &Path) -> Result<(Tables, u64, u64)> {
    let mut tables = Tables::new();
    let mut reader = BufReader::new(File::open(path)?);
    let mut offset = 0u64;
    let mut good_len = 0u64;
    let mut next_tx = 1;
    let mut open: Option<(u64, Vec<WalLine>)> = None;
    let mut line = Vec::new();

    loop {
        line.clear();
        let n = reader.read_until(b'\n', &mut line)?;
        if n == 0 || line.last() != Some(&b'\n') {
            break;
        }
        offset += n as u64;
        let Ok(parsed) = serde_json::from_slice::<WalLine>(&line) else {
            break;
        };
        match parsed {
            WalLine::Begin { tx } => open = Some((tx, Vec::new())),
            WalLine::Commit { tx } => match open.take() {
                Some((begun, ops)) if begun == tx => {
                    for op in ops {
                        apply(&mut tables, op);
                    }
                    good_len = offset;
                    next_tx = tx + 1;
                }
                _ => break,
            },
            op => match open.as_mut() {
                Some((_, ops)) => ops.push(op),
                None => break,
            },
        }
    }
    Ok((tables, next_tx, good_len))
}

fn apply(tables: &mut Tables, op: WalLine) {
    match op {
        WalLine::Put { table, key, row } => {
            tables.entry(table).or_default().insert(key, row);
        }
        WalLine::Del { table, key } => {
            if let Some(rows) = tables.get_mut(&table) {
                rows.remove(&key);
            }
        }
        WalLine::Begin { .. } | WalLine::Commit { .. } => {}
    }
}

/// Read access shared by snapshots and transactions.
pub trait Reader {
    fn row(&self, table: Table, key: &str) -> Option<Row>;

    /// All rows of `table` in key order.
    fn scan(&self, table: Table) -> Vec<(String, Row)>;

    fn get<R: Record>(&self, key: &str) -> Result<Option<R>> {
        self.row(R::TABLE, key).map(|r| R::from_row(&r)).transpose()
    }

    fn require<R: Record>(&self, key: &str) -> Result<R> {
        self.get(key)?.ok_or_else(|| StoreError::NotFound {
            table: R::TABLE.name(),
            key: key.to_owned(),
        })
    }

    fn list<R: Record>(&self) -> Result<Vec<R>> {
        self.scan(R::TABLE)
            .iter()
            .map(|(_, row)| R::from_row(row))
            .collect()
    }

    fn count(&self, table: Table) -> usize {
        self.scan(table).len()
    }
}

pub struct Snapshot<'s> {
    tables: RwLockReadGuard<'s, Tables>,
}

impl Reader for Snapshot<'_> {
    fn row(&self, table: Table, key: &str) -> Option<Row> {
        self.tables.get(&table)?.get(key).cloned()
    }

    fn scan(&self, table: Table) -> Vec<(String, Row)> {
        self.tables
            .get(&table)
            .map(|rows| rows.iter().map(|(k, r)| (k.clone(), r.clone())).collect())
            .unwrap_or_default()
    }
}

impl Snapshot<'_> {
    pub(crate) fn tables(&self) -> &Tables {
        &self.tables
    }
}

/// Buffered writes over the committed image. Dropping without
/// [`Transaction::commit`] rolls back.
pub struct Transaction<'s> {
    inner: &'s Inner,
    writer: MutexGuard<'s, Writer>,
    pending: BTreeMap<(Table, String), Option<Row>>,
}

impl Reader for Transaction<'_> {
    fn row(&self, table: Table, key: &str) -> Option<Row> {
        if let Some(p) = self.pending.get(&(table, key.to_owned())) {
            return p.clone();
        }
        let committed = self.inner.committed.read().unwrap_or_else(|p| p.into_inner());
        committed.get(&table)?.get(key).cloned()
    }

    fn scan(&self, table: Table) -> Vec<(String, Row)> {
        let committed = self.inner.committed.read().unwrap_or_else(|p| p.into_inner());
        let mut rows: BTreeMap<String, Row> = committed.get(&table).cloned().unwrap_or_default();
        drop(committed);
        for ((t, key), change) in self.pending.range((table, String::new())..) {
            if *t != table {
                break;
            }
            match change {
                Some(row) => rows.insert(key.clone(), row.clone()),
                None => rows.remove(key),
            };
        }
        rows.into_iter().collect()
    }
}

impl Transaction<'_> {
    pub fn put<R: Record>(&mut self, record: &R) -> Result<()> {
        let row = record.to_row()?;
        self.put_row(R::TABLE, row)
    }

    pub fn put_row(&mut self, table: Table, row: Row) -> Result<()> {
        let key = table.key_of(&row)?;
        self.pending.insert((table, key), Some(row));
        Ok(())
    }

    pub fn delete(&mut self, table: Table, key: &str) {
        self.pending.insert((table, key.to_owned()), None);
    }

    pub fn contains(&self, table: Table, key: &str) -> bool {
        self.row(table, key).is_some()
    }

    /// Remove every row in every table.
    pub fn clear_all(&mut self) {
        for table in Table::ALL {
            for (key, _) in self.scan(table) {
                self.delete(table, &key);
            }
        }
    }

    pub fn rollback(self) {}

    pub fn commit(mut self) -> Result<()> {
        if self.pending.is_empty() {
            return Ok(());
        }
        self.check_integrity()?;

        let tx = self.writer.next_tx;
        let mut buf = Vec::new();
        encode_line(&mut buf, &WalLine::Begin { tx })?;
        for ((table, key), change) in &self.pending {
            let line = match change {
                Some(row) => WalLine::Put {
                    table: *table,
                    key: key.clone(),
                    row: row.clone(),
                },
                None => WalLine::Del {
                    table: *table,
                    key: key.clone(),
                },
            };
            encode_line(&mut buf, &line)?;
        }
        encode_line(&mut buf, &WalLine::Commit { tx })?;

        let writer = &mut *self.writer;
        if let Some(point) = writer.fail.take() {
            let cut = point.after_bytes.min(buf.len());
            let _ = writer.wal.write_all(&buf[..cut]);
            let _ = writer.wal.sync_data();
            writer.poisoned = true;
            return Err(StoreError::Storage(format!(
                "injected crash after {cut} of {} log bytes",
                buf.len()
            )));
        }
        if let Err(e) = writer.wal.write_all(&buf) {
            writer.poisoned = true;
            return Err(e.into());
        }
        if self.inner.options.sync {
            if let Err(e) = writer.wal.sync_data() {
                writer.poisoned = true;
                return Err(e.into());
            }
        }
        writer.next_tx = tx + 1;

        let mut committed = self
            .inner
            .committed
            .write()
            .unwrap_or_else(|p| p.into_inner());
        for ((table, key), change) in std::mem::take(&mut self.pending) {
            let rows = committed.entry(table).or_default();
            match change {
                Some(row) => rows.insert(key, row),
                None => rows.remove(&key),
            };
        }
        Ok(())
    }

    /// Checks against the post-commit image:
    /// - leave, attendance, training, evaluation and payroll rows written in
    ///   this transaction reference an existing employee
    /// - a resignation row exists only for an employee that is absent or Resigned
    /// - an employee row is Resigned exactly when a resignation row exists
    fn check_integrity(&self) -> Result<()> {
        let status_of = |emp_id: &str| -> Option<Option<EmployeeStatus>> {
            let row = self.row(Table::Employee, emp_id)?;
            Some(
                row.get("Status")
                    .and_then(Value::as_str)
                    .and_then(|s| s.parse().ok()),
            )
        };
        let emp_of = |table: Table, row: &Row| -> Option<String> {
            let col = match table {
                Table::Leave | Table::Performance => "Empid",
                _ => "emp_id",
            };
            row.get(col).and_then(Value::as_str).map(str::to_owned)
        };

        for ((table, key), change) in &self.pending {
            let Some(row) = change else { continue };
            match table {
                Table::Leave
                | Table::Attendance
                | Table::Training
                | Table::Performance
                | Table::Payroll => {
                    let emp = emp_of(*table, row).unwrap_or_default();
                    if status_of(&emp).is_none() {
                        return Err(StoreError::Integrity(format!(
                            "{table} row {key:?} references unknown employee {emp:?}"
                        )));
                    }
                }
                Table::Resignation => match status_of(key) {
                    None | Some(Some(EmployeeStatus::Resigned)) => {}
                    Some(_) => {
                        return Err(StoreError::Integrity(format!(
                            "resignation for {key:?} while the employee is not resigned"
                        )))
                    }
                },
                Table::Employee => {
                    let resigned = status_of(key) == Some(Some(EmployeeStatus::Resigned));
                    let archived = self.row(Table::Resignation, key).is_some();
                    if resigned != archived {
                        return Err(StoreError::Integrity(format!(
                            "employee {key:?} status and resignation archive disagree"
                        )));
                    }
                }
                _ => {}
            }
        }
        Ok(())
    }
}

//! Line-delimited export used for backups and seeding.
//!
//! ```text
//! {"schema":"HRMS_DUMP","fields":{"version":1}}
//! {"schema":"EMPLOYEE","fields":{"Empid":"E000001",...}}
//! ...
//! ```
//!
//! Tables appear in a fixed order and rows in key order, so dumping the same
//! store image always yields the same bytes.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::engine::Store;
use crate::error::{Result, StoreError};
use crate::schema::{check_row, Row, Table, SCHEMA_VERSION};

const HEADER: &str = "HRMS_DUMP";

#[derive(Debug, Serialize, Deserialize)]
struct DumpLine {
    schema: String,
    fields: Row,
}

impl Store {
    /// Write every committed row. Returns the number of records written.
    pub fn dump(&self, mut out: impl Write) -> Result<usize> {
        let header = DumpLine {
            schema: HEADER.to_owned(),
            fields: json!({ "version": SCHEMA_VERSION })
                .as_object()
                .cloned()
                .unwrap_or_default(),
        };
        serde_json::to_writer(&mut out, &header)?;
        out.write_all(b"\n")?;

        let snapshot = self.read();
        let mut count = 0;
        for table in Table::ALL {
            let Some(rows) = snapshot.tables().get(&table) else {
                continue;
            };
            for row in rows.values() {
                serde_json::to_writer(
                    &mut out,
                    &DumpLine {
                        schema: table.name().to_owned(),
                        fields: row.clone(),
                    },
                )?;
                out.write_all(b"\n")?;
                count += 1;
            }
        }
        out.flush()?;
        Ok(count)
    }

    /// Ingest a dump in one transaction. A non-empty store is refused unless
    /// `force`, in which case its contents are replaced.
    pub fn load(&self, input: impl BufRead, force: bool) -> Result<usize> {
        let mut lines = input.lines();
        let header: DumpLine = match lines.next() {
            Some(line) => serde_json::from_str(&line?)?,
            None => return Err(StoreError::Corrupt("empty dump".into())),
        };
        if header.schema != HEADER || header.fields.get("version") != Some(&json!(SCHEMA_VERSION)) {
            return Err(StoreError::Corrupt("not an HRMS dump of this schema version".into()));
        }

        let mut txn = self.begin()?;
        if !self.is_empty_in(&txn) {
            if !force {
                return Err(StoreError::NotEmpty);
            }
            txn.clear_all();
        }
        let mut count = 0;
        for (n, line) in lines.enumerate() {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let parsed: DumpLine = serde_json::from_str(&line)
                .map_err(|e| StoreError::Corrupt(format!("line {}: {e}", n + 2)))?;
            let table: Table = parsed.schema.parse()?;
            check_row(table, &parsed.fields)
                .map_err(|e| StoreError::Corrupt(format!("line {}: {e}", n + 2)))?;
            txn.put_row(table, parsed.fields)?;
            count += 1;
        }
        txn.commit()?;
        Ok(count)
    }

    fn is_empty_in(&self, txn: &crate::engine::Transaction<'_>) -> bool {
        use crate::engine::Reader;
        Table::ALL.iter().all(|t| txn.count(*t) == 0)
    }
}

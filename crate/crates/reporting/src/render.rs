use std::fmt::Write as _;

use crate::criteria::{ReportCriteria, ReportFormat};
use crate::kinds::Grid;
use crate::{ReportError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub bytes: Vec<u8>,
    pub content_type: &'static str,
    pub filename: String,
    /// Data rows, excluding header and footer.
    pub rows: usize,
}

pub(crate) fn render(criteria: &ReportCriteria, grid: &Grid) -> Result<Document> {
    let bytes = match criteria.format {
        ReportFormat::Csv => csv_bytes(grid)?,
        ReportFormat::PlainText => text_bytes(criteria, grid).into_bytes(),
    };
    Ok(Document {
        bytes,
        content_type: criteria.format.content_type(),
        filename: criteria.filename(),
        rows: grid.rows.len(),
    })
}

fn csv_bytes(grid: &Grid) -> Result<Vec<u8>> {
    let enc = |e: csv::Error| ReportError::Encoding(e.to_string());
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(&grid.header).map_err(enc)?;
    for row in grid.rows.iter().chain(&grid.footer) {
        w.write_record(row).map_err(enc)?;
    }
    w.into_inner().map_err(|e| ReportError::Encoding(e.to_string()))
}

/// Control characters would break the column alignment.
fn cell(s: &str) -> String {
    s.chars().map(|c| if c.is_control() { ' ' } else { c }).collect()
}

fn text_bytes(criteria: &ReportCriteria, grid: &Grid) -> String {
    let mut widths: Vec<usize> = grid.header.iter().map(|h| h.chars().count()).collect();
    for row in grid.rows.iter().chain(&grid.footer) {
        for (w, v) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell(v).chars().count());
        }
    }
    let line = |out: &mut String, cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(v, w)| format!("{:<w$}", cell(v), w = *w))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();

    let mut out = String::new();
    let _ = writeln!(out, "{} report", criteria.kind);
    let period = criteria
        .period
        .map_or("all".to_owned(), |(f, t)| format!("{f} to {t}"));
    let dept = criteria.department.as_deref().unwrap_or("all");
    let _ = writeln!(out, "period: {period}  department: {dept}");
    out.push('\n');
    line(&mut out, &grid.header);
    line(&mut out, &rule);
    for row in &grid.rows {
        line(&mut out, row);
    }
    if let Some(footer) = &grid.footer {
        line(&mut out, &rule);
        line(&mut out, footer);
    }
    let _ = writeln!(out, "\n{} row(s)", grid.rows.len());
    out
}

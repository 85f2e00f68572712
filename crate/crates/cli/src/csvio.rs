//! CSV encoding of experiment records.
//!
//! Schema: header `kind,n,seed,d_min,abs_det`, one row per record, reals
//! printed with 17 significant digits so values round-trip exactly, LF
//! line endings, UTF-8.

use cpsimplex::experiments::{ExperimentRecord, RecordKind};

pub const HEADER: &str = "kind,n,seed,d_min,abs_det";

/// Lossless 17-significant-digit rendering of a real.
pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn format_records(records: &[ExperimentRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.kind.as_str(),
            r.n,
            r.seed,
            format_real(r.d_min),
            format_real(r.abs_det),
        ));
    }
    out
}

pub fn parse_records(text: &str) -> Result<Vec<ExperimentRecord>, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == HEADER => {}
        other => return Err(format!("bad CSV header: {other:?}")),
    }
    let mut records = Vec::new();
    for (lineno, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 5 {
            return Err(format!("line {}: expected 5 fields", lineno + 2));
        }
        let kind = RecordKind::parse(fields[0])
            .ok_or_else(|| format!("line {}: unknown kind {:?}", lineno + 2, fields[0]))?;
        let n: usize = fields[1]
            .parse()
            .map_err(|e| format!("line {}: bad n: {e}", lineno + 2))?;
        let seed: u64 = fields[2]
            .parse()
            .map_err(|e| format!("line {}: bad seed: {e}", lineno + 2))?;
        let d_min: f64 = fields[3]
            .parse()
            .map_err(|e| format!("line {}: bad d_min: {e}", lineno + 2))?;
        let abs_det: f64 = fields[4]
            .parse()
            .map_err(|e| format!("line {}: bad abs_det: {e}", lineno + 2))?;
        if !d_min.is_finite() || !abs_det.is_finite() {
            return Err(format!("line {}: non-finite value", lineno + 2));
        }
        records.push(ExperimentRecord {
            kind,
            n,
            seed,
            d_min,
            abs_det,
        });
    }
    Ok(records)
}

//! JSON input files for the `distance` command.
//!
//! Shape: `{"mode": "vertices" | "faces", "vectors": [[[re, im], ...], ...]}`.
//! All rows must share one length `m`; a file with `m` rows describes a
//! simplex, a file with two longer rows a pair of points. Non-finite
//! numbers are rejected (they are not valid JSON to begin with).

use cpsimplex::{CVector, Cplx};
use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Vertices,
    Faces,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputConfig {
    pub mode: Mode,
    pub vectors: Vec<Vec<[f64; 2]>>,
}

/// What a validated input file describes.
pub enum Payload {
    Simplex { mode: Mode, rows: Vec<CVector> },
    Pair { rows: [CVector; 2] },
}

impl InputConfig {
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid config JSON: {e}"))
    }

    pub fn validate(self) -> Result<Payload, String> {
        if self.vectors.is_empty() {
            return Err("config violates precondition: vectors must not be empty".into());
        }
        let m = self.vectors[0].len();
        if m == 0 {
            return Err("config violates precondition: rows must not be empty".into());
        }
        for (i, row) in self.vectors.iter().enumerate() {
            if row.len() != m {
                return Err(format!(
                    "config violates precondition: row {i} has length {}, expected {m}",
                    row.len()
                ));
            }
            for (j, pair) in row.iter().enumerate() {
                if !pair[0].is_finite() || !pair[1].is_finite() {
                    return Err(format!(
                        "config violates precondition: non-finite entry at row {i}, column {j}"
                    ));
                }
            }
        }
        let rows: Vec<CVector> = self
            .vectors
            .iter()
            .map(|row| {
                CVector::new(row.iter().map(|p| Cplx::new(p[0], p[1])).collect())
                    .map_err(|e| format!("config violates precondition: {e}"))
            })
            .collect::<Result<_, _>>()?;

        if rows.len() == m {
            Ok(Payload::Simplex {
                mode: self.mode,
                rows,
            })
        } else if rows.len() == 2 {
            Ok(Payload::Pair {
                rows: [rows[0].clone(), rows[1].clone()],
            })
        } else {
            Err(format!(
                "config violates precondition: {} rows of length {m}; need {m} (simplex) or 2 (pair)",
                rows.len()
            ))
        }
    }
}

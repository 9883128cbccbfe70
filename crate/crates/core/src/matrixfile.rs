//! The exact JSON interchange format for line-set matrices.
//!
//! ```json
//! {
//!   "m": 4, "n": 3,
//!   "entries": [[[{"num":1,"den":3,"rad":3}], ...], ...],
//!   "metadata": { "id": "III.A.1", "notes": "..." }
//! }
//! ```
//!
//! Each entry is a surd as a term array; terms are written in normal form
//! and re-normalized on read. This is the only exact interchange format; the
//! CSV export of doubles is lossy and documented as non-authoritative.

use serde::{Deserialize, Serialize};

use crate::exact::{ExactError, Surd, SurdTerm};
use crate::frames::{FramesError, LineSet};

#[derive(Debug, thiserror::Error)]
pub enum MatrixFileError {
    #[error("malformed matrix file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("entry ({0},{1}): {2}")]
    Entry(usize, usize, ExactError),
    #[error("declared shape {0}×{1} does not match the entry array")]
    ShapeMismatch(usize, usize),
    #[error(transparent)]
    Frames(#[from] FramesError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub m: usize,
    pub n: usize,
    pub entries: Vec<Vec<Vec<SurdTerm>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl MatrixFile {
    pub fn from_line_set(ls: &LineSet, metadata: Option<Metadata>) -> Result<Self, MatrixFileError> {
        let entries = ls
            .rows()
            .map(|row| row.iter().map(Surd::to_terms).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        Ok(MatrixFile {
            m: ls.m(),
            n: ls.n(),
            entries,
            metadata,
        })
    }

    pub fn to_line_set(&self) -> Result<LineSet, MatrixFileError> {
        if self.entries.len() != self.m || self.entries.iter().any(|r| r.len() != self.n) {
            return Err(MatrixFileError::ShapeMismatch(self.m, self.n));
        }
        let rows = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, terms)| {
                        Surd::from_terms(terms).map_err(|e| MatrixFileError::Entry(i + 1, j + 1, e))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LineSet::from_rows(rows)?)
    }

    pub fn from_json(json: &str) -> Result<Self, MatrixFileError> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matrix file serializes")
    }
}

/// Parse a matrix file and materialize the line set in one step.
pub fn parse_line_set(json: &str) -> Result<LineSet, MatrixFileError> {
    MatrixFile::from_json(json)?.to_line_set()
}

/// Row-major CSV of doubles, shortest round-trip formatting, no header.
/// Non-authoritative: verdicts come from the exact format only.
pub fn to_float_csv(ls: &LineSet) -> String {
    let mut out = String::new();
    for row in ls.rows() {
        let line: Vec<String> = row.iter().map(|e| format!("{}", e.to_f64())).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_preserves_values() {
        let ls = crate::construct::family_one_third(4).unwrap();
        let file = MatrixFile::from_line_set(&ls, None).unwrap();
        let back = parse_line_set(&file.to_json()).unwrap();
        assert_eq!(ls, back);
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let json = r#"{"m": 2, "n": 2, "entries": [[[{"num":1,"den":1,"rad":1}]]]}"#;
        let file = MatrixFile::from_json(json).unwrap();
        assert!(matches!(
            file.to_line_set(),
            Err(MatrixFileError::ShapeMismatch(2, 2))
        ));
    }

    #[test]
    fn float_csv_has_one_row_per_vector() {
        let ls = crate::construct::simplex(3).unwrap();
        let csv = to_float_csv(&ls);
        assert_eq!(csv.lines().count(), 4);
        // off-diagonal entry 1/√12, correctly rounded
        assert!(csv.contains("0.28867513459481287"));
    }
}

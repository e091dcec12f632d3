//! JSON file formats for R-matrices and metrics.

use super::{MetricData, RError, RMatrix, Reality};
use crate::qcoeff::{QMatrix, QRat};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {msg}")]
    Syntax { line: usize, column: usize, msg: String },
    #[error("invalid data: {0}")]
    Invalid(String),
}

impl From<serde_json::Error> for FileError {
    fn from(e: serde_json::Error) -> Self {
        FileError::Syntax {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        }
    }
}

impl From<RError> for FileError {
    fn from(e: RError) -> Self {
        FileError::Invalid(e.to_string())
    }
}

#[derive(Serialize, Deserialize)]
struct EntryWire {
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    #[serde(flatten)]
    value: QRat,
}

#[derive(Serialize, Deserialize)]
struct RMatrixWire {
    n: usize,
    #[serde(default)]
    name: String,
    entries: Vec<EntryWire>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lambda: Option<QRat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    reality: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    involution: Option<Vec<usize>>,
}

/// Contents of an R-matrix file.
#[derive(Clone, Debug)]
pub struct RMatrixFile {
    pub matrix: RMatrix,
    pub lambda: Option<QRat>,
    pub reality: Reality,
}

impl RMatrixFile {
    pub fn to_json(&self) -> String {
        let (reality, involution) = match &self.reality {
            Reality::TypeI => ("I", None),
            Reality::TypeII(v) => ("II", Some(v.clone())),
            Reality::None => ("none", None),
        };
        let w = RMatrixWire {
            n: self.matrix.n(),
            name: self.matrix.name.clone(),
            entries: self
                .matrix
                .entries()
                .map(|([i, j, k, l], v)| EntryWire { i, j, k, l, value: v.clone() })
                .collect(),
            lambda: self.lambda.clone(),
            reality: Some(reality.into()),
            involution,
        };
        serde_json::to_string_pretty(&w).expect("serializable")
    }
}

pub fn parse_rmatrix(text: &str) -> Result<RMatrixFile, FileError> {
    let w: RMatrixWire = serde_json::from_str(text)?;
    if w.n == 0 || w.n > 255 {
        return Err(FileError::Invalid(format!("n = {} out of range", w.n)));
    }
    for (pos, e) in w.entries.iter().enumerate() {
        for x in [e.i, e.j, e.k, e.l] {
            if !(1..=w.n).contains(&x) {
                return Err(FileError::Invalid(format!("entry {pos}: index {x} outside 1..={}", w.n)));
            }
        }
    }
    let reality = match (w.reality.as_deref(), w.involution) {
        (None | Some("none"), _) => Reality::None,
        (Some("I"), _) => Reality::TypeI,
        (Some("II"), Some(inv)) => Reality::TypeII(inv),
        (Some("II"), None) => return Err(FileError::Invalid("reality II needs an involution".into())),
        (Some(other), _) => return Err(FileError::Invalid(format!("unknown reality {other:?}"))),
    };
    let name = if w.name.is_empty() { "file".to_string() } else { w.name };
    let matrix = RMatrix::from_entries(
        w.n,
        name,
        w.entries.into_iter().map(|e| ([e.i, e.j, e.k, e.l], e.value)),
    );
    Ok(RMatrixFile {
        matrix,
        lambda: w.lambda,
        reality,
    })
}

pub fn load_rmatrix(path: &Path) -> Result<RMatrixFile, FileError> {
    parse_rmatrix(&read(path)?)
}

fn read(path: &Path) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Serialize, Deserialize)]
struct MetricWire {
    n: usize,
    eta_lower: Vec<Vec<QRat>>,
}

pub fn parse_metric(text: &str) -> Result<MetricData, FileError> {
    let w: MetricWire = serde_json::from_str(text)?;
    if w.eta_lower.len() != w.n || w.eta_lower.iter().any(|r| r.len() != w.n) {
        return Err(FileError::Invalid(format!("eta_lower must be {0}x{0}", w.n)));
    }
    let mut m = QMatrix::zeros(w.n, w.n);
    for (r, row) in w.eta_lower.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            m.set(r, c, v);
        }
    }
    Ok(MetricData::from_lower(m)?)
}

pub fn load_metric(path: &Path) -> Result<MetricData, FileError> {
    parse_metric(&read(path)?)
}

pub fn metric_to_json(m: &MetricData) -> String {
    let rows = (0..m.n)
        .map(|r| (0..m.n).map(|c| m.eta_lower.get(r, c).clone()).collect())
        .collect();
    serde_json::to_string_pretty(&MetricWire { n: m.n, eta_lower: rows }).expect("serializable")
}

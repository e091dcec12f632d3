//! Pass/fail records shared by every check.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u64,
    pub params: BTreeMap<String, String>,
    /// Human-readable lines; not part of the json body.
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn pass(check: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            status: Status::Pass,
            witness: None,
            millis: 0,
            params: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn fail(check: impl Into<String>, witness: impl Into<String>) -> Self {
        VerificationReport {
            status: Status::Fail,
            witness: Some(witness.into()),
            ..Self::pass(check)
        }
    }

    pub fn error(check: impl Into<String>, msg: impl Into<String>) -> Self {
        VerificationReport {
            status: Status::Error,
            witness: Some(msg.into()),
            ..Self::pass(check)
        }
    }

    /// Pass when `witness` is None, fail with it otherwise.
    pub fn from_witness(check: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(check),
            Some(w) => Self::fail(check, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn param(mut self, k: &str, v: impl ToString) -> Self {
        self.params.insert(k.to_string(), v.to_string());
        self
    }

    pub fn note(mut self, line: impl Into<String>) -> Self {
        self.notes.push(line.into());
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.millis = start.elapsed().as_millis() as u64;
        self
    }

    /// Merge several reports into one named bundle; fails if any part does.
    pub fn combine(check: impl Into<String>, parts: Vec<VerificationReport>) -> Self {
        let mut out = Self::pass(check);
        for p in parts {
            out.millis += p.millis;
            let line = format!("{}: {}", p.check, p.status_word());
            out.notes.push(line);
            out.notes.extend(p.notes.iter().map(|n| format!("  {n}")));
            if !p.passed() && out.status == Status::Pass {
                out.status = p.status;
                out.witness = p.witness.map(|w| format!("{}: {}", p.check, w));
            }
        }
        out
    }

    pub fn status_word(&self) -> &'static str {
        match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} ({} ms)", self.status_word(), self.check, self.millis)?;
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        for n in &self.notes {
            write!(f, "\n  {n}")?;
        }
        Ok(())
    }
}

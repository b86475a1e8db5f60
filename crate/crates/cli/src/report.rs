use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

/// One checked instance. `indices` names the polynomial or pair it refers to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Detail {
    pub check: String,
    pub indices: BTreeMap<String, i64>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub info: Option<Value>,
}

impl Detail {
    pub fn new(check: &str, indices: &[(&str, i64)], verdict: Verdict) -> Detail {
        Detail {
            check: check.to_string(),
            indices: indices.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            verdict,
            witness: None,
            info: None,
        }
    }

    pub fn pass(check: &str, indices: &[(&str, i64)]) -> Detail {
        Detail::new(check, indices, Verdict::Pass)
    }

    pub fn from_bool(check: &str, indices: &[(&str, i64)], ok: bool) -> Detail {
        Detail::new(check, indices, if ok { Verdict::Pass } else { Verdict::Fail })
    }

    pub fn with_witness(mut self, w: Value) -> Detail {
        self.witness = Some(w);
        self
    }

    /// Attaches `w` only when the detail failed.
    pub fn witness_if_failed(self, w: impl FnOnce() -> Value) -> Detail {
        if self.verdict == Verdict::Fail {
            self.with_witness(w())
        } else {
            self
        }
    }

    pub fn with_info(mut self, info: Value) -> Detail {
        self.info = Some(info);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    pub details: Vec<Detail>,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str, parameters: BTreeMap<String, Value>, details: Vec<Detail>) -> Report {
        let status = status_of(&details);
        Report {
            command: command.to_string(),
            parameters,
            status,
            details,
            version: env!("CARGO_PKG_VERSION").to_string(),
            timing_ms: None,
        }
    }
}

pub fn status_of(details: &[Detail]) -> Status {
    if details.iter().any(|d| d.verdict == Verdict::Error) {
        Status::Error
    } else if details.iter().any(|d| d.verdict == Verdict::Fail) {
        Status::Fail
    } else {
        Status::Pass
    }
}

//! Machine-readable check reports, one JSON object per line.

use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED-CAP")]
    SkippedCap,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SkippedCap => "SKIPPED-CAP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: Value,
    pub status: Status,
    pub witness: Option<Value>,
    pub millis: u64,
}

impl VerificationReport {
    /// PASS or FAIL from `passed`; a FAIL without a witness gets one naming
    /// the check.
    pub fn from_outcome(check: &str, params: Value, passed: bool, witness: Value, started: Instant) -> Self {
        let witness = match (passed, witness) {
            (false, Value::Null) => json!({ "reason": format!("{check} failed") }),
            (_, w) => w,
        };
        Self {
            check: check.to_string(),
            params,
            status: if passed { Status::Pass } else { Status::Fail },
            witness: (!witness.is_null()).then_some(witness),
            millis: started.elapsed().as_millis() as u64,
        }
    }

    /// SKIPPED-CAP for a cap error; other errors are returned unchanged.
    pub fn from_error(check: &str, params: Value, err: Error, started: Instant) -> Result<Self> {
        match err {
            Error::CapExceeded {
                computation,
                cap_name,
                cap,
            } => Ok(Self {
                check: check.to_string(),
                params,
                status: Status::SkippedCap,
                witness: Some(json!({ "cap": cap_name, "limit": cap, "computation": computation })),
                millis: started.elapsed().as_millis() as u64,
            }),
            other => Err(other),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// One human-readable line.
    pub fn summary(&self) -> String {
        let params = match &self.params {
            Value::Object(m) => m
                .iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k}={s}"),
                    v => format!("{k}={v}"),
                })
                .collect::<Vec<_>>()
                .join(" "),
            _ => String::new(),
        };
        let mut line = format!("{:<11} {} {params} ({} ms)", self.status, self.check, self.millis);
        if self.status == Status::SkippedCap {
            if let Some(w) = &self.witness {
                line.push_str(&format!("\n    cap {} = {}: {}", w["cap"], w["limit"], w["computation"]));
            }
        }
        line
    }
}

/// Hex SHA-256 of a text table.
pub fn table_hash(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r = VerificationReport::from_outcome("lemma-4.1", json!({"p": 3}), true, Value::Null, Instant::now());
        let v: Value = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(v["status"], "PASS");
        assert_eq!(v["witness"], Value::Null);
        assert_eq!(v["params"]["p"], 3);
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 5);
    }

    #[test]
    fn fail_always_has_witness() {
        let r = VerificationReport::from_outcome("x", json!({}), false, Value::Null, Instant::now());
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.is_some());
    }

    #[test]
    fn cap_becomes_skipped() {
        let e = Error::cap("thing", "max-order", 10);
        let r = VerificationReport::from_error("x", json!({}), e, Instant::now()).unwrap();
        assert_eq!(r.status, Status::SkippedCap);
        assert_eq!(r.witness.unwrap()["cap"], "max-order");
        assert!(VerificationReport::from_error("x", json!({}), Error::Internal("y".into()), Instant::now()).is_err());
    }

    #[test]
    fn hashes_are_stable() {
        assert_eq!(table_hash("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}

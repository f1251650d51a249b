//! Claim reports shared by the test suites and the command line.

use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::Rational;

pub const SCHEMA: u32 = 1;

pub fn ser_rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub claim_id: String,
    pub paper_ref: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub residuals: Vec<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub witness: Value,
}

impl Claim {
    pub fn new(id: &str, reference: &str, ok: bool) -> Self {
        Claim {
            claim_id: id.into(),
            paper_ref: reference.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            residuals: Vec::new(),
            witness: Value::Null,
        }
    }

    /// Passes iff `residuals` is empty.
    pub fn from_residuals(id: &str, reference: &str, residuals: Vec<String>) -> Self {
        Claim { residuals, ..Claim::new(id, reference, true) }.recheck()
    }

    fn recheck(mut self) -> Self {
        if !self.residuals.is_empty() {
            self.status = Status::Fail;
        }
        self
    }

    pub fn with_witness(mut self, w: Value) -> Self {
        self.witness = w;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub seed: u64,
    pub claims: Vec<Claim>,
    pub summary: Summary,
}

impl Report {
    /// Claims are sorted by id so the output does not depend on run order.
    pub fn new(command: &str, seed: u64, mut claims: Vec<Claim>) -> Self {
        claims.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
        let passed = claims.iter().filter(|c| c.passed()).count();
        let summary = Summary { total: claims.len(), passed, failed: claims.len() - passed };
        Report { schema: SCHEMA, command: command.into(), seed, claims, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn first_failure(&self) -> Option<&Claim> {
        self.claims.iter().find(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

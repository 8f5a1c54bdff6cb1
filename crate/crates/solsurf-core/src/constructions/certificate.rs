//! Serializable certification records emitted alongside constructions.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CritRecord {
    pub location: Vec<f64>,
    pub value: f64,
    pub multiplicity: u32,
    pub kind: String,
    pub residual: f64,
}

/// Certificate block written next to every constructed object: the
/// certified critical points, the checks that were run, and the largest
/// residual seen.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub construction: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub critical_points: Vec<CritRecord>,
    pub residual_max: f64,
    pub passed: bool,
}

impl Certificate {
    pub fn new(construction: &str) -> Self {
        Certificate {
            construction: construction.to_string(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            critical_points: Vec::new(),
            residual_max: 0.0,
            passed: true,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn check(&mut self, name: &str, pass: bool, detail: impl ToString) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            detail: detail.to_string(),
        });
        if !pass {
            self.passed = false;
        }
    }

    pub fn record_residual(&mut self, r: f64) {
        if r > self.residual_max {
            self.residual_max = r;
        }
    }
}

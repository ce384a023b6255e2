//! Structured verification reports and JSON payloads for ring elements.

use serde::Serialize;
use serde_json::{json, Value};

use crate::pi_ring::PiRingElem;
use crate::witt::ZqElem;
use crate::zp::PAdicInt;

/// Outcome of one identity check: both sides, their residual, and a verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub inputs: Value,
    pub lhs: Value,
    pub rhs: Value,
    pub residual: Value,
    pub pass: bool,
}

impl Report {
    pub fn new(check: impl Into<String>, inputs: Value) -> Self {
        Report {
            check: check.into(),
            inputs,
            lhs: Value::Null,
            rhs: Value::Null,
            residual: Value::Null,
            pass: false,
        }
    }

    pub fn sides(mut self, lhs: Value, rhs: Value, residual: Value, pass: bool) -> Self {
        self.lhs = lhs;
        self.rhs = rhs;
        self.residual = residual;
        self.pass = pass;
        self
    }

    /// A report for a check that could not be evaluated.
    pub fn failed(mut self, reason: impl std::fmt::Display) -> Self {
        self.residual = json!({ "error": reason.to_string() });
        self.pass = false;
        self
    }
}

/// Self-describing JSON form of a value.
pub trait ToPayload {
    fn to_payload(&self) -> Value;
}

impl ToPayload for PAdicInt {
    fn to_payload(&self) -> Value {
        json!({ "p": self.p(), "n": 1, "N": self.precision(), "digits": self.digits() })
    }
}

impl ToPayload for ZqElem {
    fn to_payload(&self) -> Value {
        serde_json::to_value(self.payload()).expect("plain struct")
    }
}

impl ToPayload for PiRingElem {
    fn to_payload(&self) -> Value {
        serde_json::to_value(self.payload()).expect("plain struct")
    }
}

impl ToPayload for i64 {
    fn to_payload(&self) -> Value {
        json!(self)
    }
}

impl ToPayload for u32 {
    fn to_payload(&self) -> Value {
        json!(self)
    }
}

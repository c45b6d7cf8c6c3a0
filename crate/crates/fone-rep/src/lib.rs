//! JSON formats and command implementations for the `fone-rep` binary.
//! Every command returns a canonical [`serde_json::Value`].

pub mod commands;
pub mod json;

use std::fmt;

use fone_core::cmp::CmpError;
use fone_core::monoid::MonoidError;
use fone_core::ordered::OrderError;
use fone_core::rep::RepError;
use serde_json::Value;

#[derive(Debug)]
pub enum CliError {
    Io(String),
    /// Bad input; `witness` is printed to stderr as JSON.
    Invalid {
        msg: String,
        witness: Option<Value>,
    },
    /// A configured size cap was exceeded.
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Invalid { .. } => 2,
            CliError::Cap(_) => 3,
        }
    }

    /// The stderr payload.
    pub fn to_json(&self) -> Value {
        let (kind, msg) = match self {
            CliError::Io(m) => ("io", m),
            CliError::Invalid { msg, .. } => ("validation", msg),
            CliError::Cap(m) => ("cap", m),
        };
        let mut v = serde_json::json!({"error": kind, "message": msg});
        if let CliError::Invalid { witness: Some(w), .. } = self {
            v["witness"] = w.clone();
        }
        v
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(m) | CliError::Cap(m) | CliError::Invalid { msg: m, .. } => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<MonoidError> for CliError {
    fn from(e: MonoidError) -> Self {
        let witness = match &e {
            MonoidError::NotAssociative(t) | MonoidError::RelationInconsistent(t) => Some(serde_json::json!(t)),
            MonoidError::IncompleteTable { l, r } | MonoidError::NotClosed(l, r) => Some(serde_json::json!([l, r])),
            _ => None,
        };
        if e == MonoidError::TooLarge {
            return CliError::Cap(e.to_string());
        }
        CliError::Invalid { msg: e.to_string(), witness }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::DimTooLarge { .. } => CliError::Cap(e.to_string()),
            RepError::NotFunctorial(ref a, ref b) => {
                CliError::Invalid { msg: e.to_string(), witness: Some(serde_json::json!([a, b])) }
            }
            _ => CliError::Invalid { msg: e.to_string(), witness: None },
        }
    }
}

impl From<CmpError> for CliError {
    fn from(e: CmpError) -> Self {
        match e {
            CmpError::GroupTooLarge { .. } => CliError::Cap(e.to_string()),
            CmpError::Rep(r) => r.into(),
            CmpError::Monoid(m) => m.into(),
            _ => CliError::Invalid { msg: e.to_string(), witness: None },
        }
    }
}

impl From<OrderError> for CliError {
    fn from(e: OrderError) -> Self {
        CliError::Invalid { msg: e.to_string(), witness: None }
    }
}

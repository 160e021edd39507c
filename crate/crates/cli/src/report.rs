//! Machine-readable command reports.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct ErrorInfo {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    /// SHA-256 of the input file bytes, hex encoded.
    pub input_sha256: Option<String>,
    pub parameters: BTreeMap<&'static str, Value>,
    pub results: Value,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            input_sha256: None,
            parameters: BTreeMap::new(),
            results: Value::Null,
            warnings: Vec::new(),
            error: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Header plus rows, rendered as RFC 4180 CSV.
pub fn to_csv(table: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in table {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("utf-8 input")
}

/// Scalar rendering of a JSON value for one CSV cell.
pub fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

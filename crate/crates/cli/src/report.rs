//! Machine-readable reports.
//!
//! Every run prints one JSON document to standard output: the subcommand,
//! an echo of its inputs, the structured results, provenance notes (for
//! example the conjectural marker), and a status. Key order is fixed by
//! construction, so identical inputs produce byte-identical output.

use std::path::Path;

use serde_json::{json, Map, Value};

use covercount::rational::Rat;

use crate::error::CliError;

pub struct ReportDraft {
    command: &'static str,
    inputs: Value,
    notes: Vec<String>,
}

impl ReportDraft {
    pub fn new(command: &'static str, inputs: Value) -> Self {
        ReportDraft {
            command,
            inputs,
            notes: Vec::new(),
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn ok(self, results: Value) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": results,
            "notes": self.notes,
            "status": "ok",
        })
    }

    /// An error report; `partial` carries any results computed before the
    /// failure (the inverted table behind a failed integrality gate, say).
    pub fn fail(self, error: &CliError, partial: Option<Value>) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": partial,
            "notes": self.notes,
            "status": "error",
            "error": {
                "kind": error.kind(),
                "message": error.to_string(),
            },
        })
    }
}

pub fn render(report: &Value) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

pub fn write_out(text: &str, out: &Path) -> Result<(), CliError> {
    std::fs::write(out, text).map_err(|source| CliError::Io {
        path: out.to_path_buf(),
        source,
    })
}

/// Degree-keyed table as a JSON object in ascending numeric order.
pub fn degree_table<'a>(entries: impl Iterator<Item = (u64, &'a Rat)>) -> Value {
    let mut map = Map::new();
    for (degree, value) in entries {
        map.insert(degree.to_string(), Value::String(value.to_string()));
    }
    Value::Object(map)
}

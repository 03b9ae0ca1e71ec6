//! Command reports, printable as `key = value` text or as a single JSON
//! document. Exact quantities are always carried as strings.

use serde_json::{Map, Value};

#[derive(Debug, Default)]
pub struct OutputRecord {
    fields: Map<String, Value>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        let mut record = OutputRecord::default();
        record.push("command", command);
        record
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    /// Adds `key` as an exact string and, unless it is an integer,
    /// `key_decimal` as its truncated decimal expansion.
    pub fn push_exact(
        &mut self,
        key: &str,
        value: &dedekind::Rational,
        digits: usize,
    ) -> &mut Self {
        self.push(key, value.to_string());
        if !value.is_integer() {
            self.push(&format!("{key}_decimal"), value.render_decimal(digits));
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.fields).expect("maps of strings serialize")
    }

    /// One `key = value` line per field; a `*_decimal` field is folded into the
    /// line of the exact value it renders.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.fields {
            if key == "command" || key.ends_with("_decimal") {
                continue;
            }
            out.push_str(key);
            out.push_str(" = ");
            out.push_str(&scalar(value));
            if let Some(decimal) = self.fields.get(&format!("{key}_decimal")) {
                out.push_str(" ≈ ");
                out.push_str(&scalar(decimal));
            }
            out.push('\n');
        }
        out
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

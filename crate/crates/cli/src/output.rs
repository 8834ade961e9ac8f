use locinv::Dimension;
use serde_json::{json, Map, Value};

/// One invocation's result, rendered either as plain text or as a single
/// JSON document.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub inputs: Map<String, Value>,
    pub field: Option<String>,
    pub values: Map<String, Value>,
    pub flags: Map<String, Value>,
    pub warnings: Vec<String>,
    /// Text rendering; when absent a lone value is printed bare and
    /// several as `key: value` lines.
    pub text: Option<String>,
}

impl Report {
    pub fn input(&mut self, key: &str, v: impl Into<Value>) {
        self.inputs.insert(key.to_string(), v.into());
    }

    pub fn value(&mut self, key: &str, v: impl Into<Value>) {
        self.values.insert(key.to_string(), v.into());
    }

    pub fn flag(&mut self, key: &str, v: impl Into<Value>) {
        self.flags.insert(key.to_string(), v.into());
    }

    pub fn json(&self) -> String {
        let doc = json!({
            "inputs": self.inputs,
            "field": self.field,
            "values": self.values,
            "flags": self.flags,
            "warnings": self.warnings,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
        s.push('\n');
        s
    }

    pub fn text(&self) -> String {
        let mut out = match &self.text {
            Some(t) => t.clone(),
            None if self.values.len() == 1 && self.flags.is_empty() => {
                self.values.values().map(|v| format!("{}\n", plain(v))).collect()
            }
            None => self.values.iter().map(|(k, v)| format!("{k}: {}\n", plain(v))).collect(),
        };
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

pub fn dim(d: Dimension) -> Value {
    match d {
        Dimension::Finite(n) => Value::from(n),
        Dimension::Infinite => Value::from("infinite"),
    }
}

/// A JSON value as it appears in text output.
pub fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "n/a".to_string(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

//! Schema-stable output records for the CLI: every record carries the
//! command, its parameters, a value (real or structured), an optional error
//! bound, citation anchors, and whether the value was computed here or cited
//! from prior work.

use std::collections::BTreeMap;

use serde::Serialize;

/// Whether a reported constant was computed by this tool or taken from the
/// cited literature. Cited values are never recomputed and must never be
/// presented as computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Computed,
    Cited,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub value: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_bound: Option<f64>,
    pub citations: Vec<String>,
    pub provenance: Provenance,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            value: serde_json::Value::Null,
            error_bound: None,
            citations: Vec::new(),
            provenance: Provenance::Computed,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn value(mut self, value: impl Into<serde_json::Value>) -> Self {
        self.value = value.into();
        self
    }

    pub fn error_bound(mut self, e: f64) -> Self {
        self.error_bound = Some(e);
        self
    }

    pub fn cite(mut self, anchor: &str) -> Self {
        self.citations.push(anchor.to_string());
        self
    }

    pub fn cited(mut self) -> Self {
        self.provenance = Provenance::Cited;
        self
    }

    /// Render as JSON (one object, compact, key order fixed by the schema).
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }

    /// Render as a flat `key,value` CSV block with header.
    pub fn to_csv(&self, precision: usize) -> String {
        let mut out = String::from("command,value,error_bound,provenance\n");
        let value = match &self.value {
            serde_json::Value::Number(n) => format_float(n.as_f64().unwrap_or(f64::NAN), precision),
            other => format!("{:?}", other.to_string()),
        };
        let err = self.error_bound.map(|e| format!("{e:.3e}")).unwrap_or_default();
        let prov = match self.provenance {
            Provenance::Computed => "computed",
            Provenance::Cited => "cited",
        };
        out.push_str(&format!("{},{value},{err},{prov}\n", self.command));
        out
    }

    /// Render human-readable text.
    pub fn to_text(&self, precision: usize) -> String {
        let mut out = String::new();
        out.push_str(&self.command);
        if !self.parameters.is_empty() {
            let params: Vec<String> =
                self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!(" ({})", params.join(", ")));
        }
        out.push_str(": ");
        out.push_str(&render_value(&self.value, precision));
        if let Some(e) = self.error_bound {
            out.push_str(&format!(" ± {e:.3e}"));
        }
        match self.provenance {
            Provenance::Computed => {}
            Provenance::Cited => out.push_str("  [cited]"),
        }
        if !self.citations.is_empty() {
            out.push_str(&format!("  [{}]", self.citations.join(", ")));
        }
        out
    }
}

fn render_value(v: &serde_json::Value, precision: usize) -> String {
    match v {
        serde_json::Value::Number(n) => match n.as_f64() {
            Some(x) => format_float(x, precision),
            None => n.to_string(),
        },
        serde_json::Value::Object(map) => {
            let fields: Vec<String> =
                map.iter().map(|(k, v)| format!("{k}={}", render_value(v, precision))).collect();
            format!("{{{}}}", fields.join(", "))
        }
        serde_json::Value::Array(items) => {
            let fields: Vec<String> = items.iter().map(|v| render_value(v, precision)).collect();
            format!("[{}]", fields.join(", "))
        }
        other => other.to_string(),
    }
}

/// Format with `precision` significant printed digits.
pub fn format_float(x: f64, precision: usize) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        // integers print exactly
        return format!("{x}");
    }
    format!("{:.*}", precision, x)
}

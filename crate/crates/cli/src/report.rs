//! Human-readable and JSON reports.

use homlie::exactlin::{format_scalar, Scalar, Subspace};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::Value;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    /// 1-based basis positions.
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckEntry {
    pub fn pass(name: &str) -> Self {
        CheckEntry {
            name: name.into(),
            passed: true,
            witness: None,
            detail: None,
        }
    }

    /// A failure with a 0-based witness tuple, stored 1-based.
    pub fn fail(name: &str, witness: Option<Vec<usize>>, detail: Option<String>) -> Self {
        CheckEntry {
            name: name.into(),
            passed: false,
            witness: witness.map(|w| w.into_iter().map(|k| k + 1).collect()),
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<CheckEntry>,
    pub outputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    /// Plain-text lines describing the result.
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            checks: Vec::new(),
            outputs: Vec::new(),
            result: None,
            lines: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn push(&mut self, c: CheckEntry) {
        self.checks.push(c);
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = write!(out, "{}: {}", c.name, if c.passed { "pass" } else { "FAIL" });
            if let Some(w) = &c.witness {
                let parts: Vec<String> = w.iter().map(usize::to_string).collect();
                let _ = write!(out, " at ({})", parts.join(", "));
            }
            if let Some(d) = &c.detail {
                let _ = write!(out, ", {d}");
            }
            out.push('\n');
        }
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        for p in &self.outputs {
            let _ = writeln!(out, "wrote {p}");
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}

/// Writes `v` as a combination of the basis names, e.g. `x1 - 1/2·x3`.
pub fn render_vector(v: &[Scalar], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !mag.is_one() {
            let _ = write!(out, "{}·", format_scalar(&mag));
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_subspace(s: &Subspace, names: &[String]) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = s.basis().iter().map(|v| render_vector(v, names)).collect();
    format!("span{{{}}}", parts.join(", "))
}

pub fn vector_json(v: &[Scalar]) -> Value {
    Value::from(v.iter().map(format_scalar).collect::<Vec<_>>())
}

pub fn subspace_json(s: &Subspace) -> Value {
    Value::from(s.basis().iter().map(|v| vector_json(v)).collect::<Vec<_>>())
}

//! Command reports: a command echo, a result value, verdicts and counts, rendered as JSON
//! or text.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use nbhd_core::Report;

#[derive(Debug, Serialize)]
pub struct VerdictOut {
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct CountOut {
    pub name: String,
    pub value: usize,
}

#[derive(Debug, Serialize)]
pub struct Output {
    pub command: String,
    pub result: Value,
    pub verdicts: Vec<VerdictOut>,
    pub counts: Vec<CountOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Output {
    pub fn new(command: impl Into<String>, result: Value) -> Self {
        Output {
            command: command.into(),
            result,
            verdicts: Vec::new(),
            counts: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn check(&mut self, check: impl Into<String>, pass: bool, witness: Vec<String>) {
        let witness = (!pass && !witness.is_empty()).then_some(witness);
        self.verdicts.push(VerdictOut {
            check: check.into(),
            pass,
            witness,
        });
    }

    pub fn count(&mut self, name: impl Into<String>, value: usize) {
        self.counts.push(CountOut {
            name: name.into(),
            value,
        });
    }

    /// Append a core report's verdicts and counts, prefixing names when `prefix` is nonempty.
    pub fn absorb(&mut self, prefix: &str, r: Report) {
        let name = |n: String| {
            if prefix.is_empty() {
                n
            } else {
                format!("{prefix}/{n}")
            }
        };
        for v in r.verdicts {
            self.check(name(v.check), v.pass, v.witness);
        }
        for (n, c) in r.counts {
            self.count(name(n), c);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("output serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.command).unwrap();
        render(&mut out, &self.result, 1);
        for v in &self.verdicts {
            let tag = if v.pass { "PASS" } else { "FAIL" };
            match &v.witness {
                Some(w) => writeln!(out, "  {tag} {}: {}", v.check, w.join(" ")).unwrap(),
                None => writeln!(out, "  {tag} {}", v.check).unwrap(),
            }
        }
        for c in &self.counts {
            writeln!(out, "  {} = {}", c.name, c.value).unwrap();
        }
        if let Some(ms) = self.timing_ms {
            writeln!(out, "  time = {ms:.3} ms").unwrap();
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a)
            if a.iter()
                .all(|x| matches!(x, Value::String(_) | Value::Number(_))) =>
        {
            Some(format!(
                "[{}]",
                a.iter()
                    .map(|x| scalar(x).unwrap())
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        }
        _ => None,
    }
}

fn render(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        render(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}-").unwrap();
                        render(out, x, depth + 1);
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap_or_default()).unwrap(),
    }
}

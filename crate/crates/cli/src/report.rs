use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use scottlab_core::report::{Bounds, Verdict, Witness};

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub subject: String,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
    pub passed: bool,
    /// Printed with the table only.
    #[serde(skip)]
    pub footer: Option<String>,
}

impl Report {
    pub fn new(command: &str, subject: impl Into<String>, verdicts: Vec<Verdict>) -> Self {
        let passed = verdicts.iter().all(|v| v.holds);
        Report {
            command: command.into(),
            subject: subject.into(),
            verdicts,
            data: Value::Null,
            passed,
            footer: None,
        }
    }

    pub fn with_data(mut self, data: impl Serialize) -> Self {
        self.data = serde_json::to_value(data).expect("report data serializes");
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("{} {}\n", self.command, self.subject);
        let width = self
            .verdicts
            .iter()
            .map(|v| v.property.chars().count())
            .max()
            .unwrap_or(0);
        for v in &self.verdicts {
            let pad = width - v.property.chars().count();
            let _ = write!(
                out,
                "  {}{}  {}",
                v.property,
                " ".repeat(pad),
                if v.holds { "yes" } else { "NO" }
            );
            if let Some(b) = &v.bounds {
                let _ = write!(out, "  [{}]", bounds(b));
            }
            if let Some(w) = &v.witness {
                let _ = write!(out, "  witness: {}", witness(w));
            }
            if let Some(d) = &v.detail {
                let _ = write!(out, "  ({d})");
            }
            out.push('\n');
        }
        if let Some(f) = &self.footer {
            let _ = writeln!(out, "{f}");
        }
        let _ = writeln!(out, "{}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

fn bounds(b: &Bounds) -> String {
    let mut parts = Vec::new();
    if let Some(d) = b.depth {
        parts.push(format!("depth {d}"));
    }
    if let Some(n) = b.n_max {
        parts.push(format!("n ≤ {n}"));
    }
    if let Some(s) = b.subfamily {
        parts.push(format!("subfamilies ≤ {s}"));
    }
    parts.join(", ")
}

fn witness(w: &Witness) -> String {
    match w {
        Witness::Set(s) => format!("{{{}}}", s.join(",")),
        Witness::Pair(a, b) => format!("({a}, {b})"),
        Witness::Family(f) => f
            .iter()
            .map(|s| format!("{{{}}}", s.join(",")))
            .collect::<Vec<_>>()
            .join(" "),
        Witness::Index(i) => format!("#{i}"),
        Witness::Note(n) => n.clone(),
    }
}

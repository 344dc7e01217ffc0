//! Report rendering: human-readable text and a stable structured (JSON)
//! schema that CI can diff.

use parthopf_core::report::Report;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Structured,
}

/// Everything a command produced: named certificates plus free-form notes
/// (dimensions, basis tables, matrices).
pub struct RunOutput {
    pub command: String,
    pub reports: Vec<(String, Report)>,
    pub notes: Vec<String>,
}

impl RunOutput {
    pub fn new(command: &str) -> RunOutput {
        RunOutput {
            command: command.to_string(),
            reports: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.reports.iter().all(|(_, r)| r.pass())
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.render_text(),
            OutputFormat::Structured => self.render_json().to_string(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for (subject, report) in &self.reports {
            out.push_str(&format!("{subject}\n"));
            for item in &report.items {
                let tag = if item.informational {
                    if item.pass {
                        "info"
                    } else {
                        "INFO-FAIL"
                    }
                } else if item.pass {
                    "pass"
                } else {
                    "FAIL"
                };
                out.push_str(&format!("  [{tag}] {}", item.identity));
                if !item.pass {
                    out.push_str(&format!(" ({} failures", item.failure_count));
                    if let Some(w) = item.witnesses.first() {
                        out.push_str(&format!("; first witness {w:?}"));
                    }
                    out.push(')');
                }
                out.push('\n');
            }
        }
        for note in &self.notes {
            out.push_str(note);
            out.push('\n');
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.pass() { "pass" } else { "fail" }
        ));
        out
    }

    fn render_json(&self) -> Value {
        let reports: Vec<Value> = self
            .reports
            .iter()
            .map(|(subject, report)| {
                let items: Vec<Value> = report
                    .items
                    .iter()
                    .map(|i| {
                        json!({
                            "identity": i.identity,
                            "pass": i.pass,
                            "informational": i.informational,
                            "failure_count": i.failure_count,
                            "witnesses": i.witnesses,
                        })
                    })
                    .collect();
                json!({ "subject": subject, "pass": report.pass(), "items": items })
            })
            .collect();
        json!({
            "schema": "parthopf-report-v1",
            "command": self.command,
            "pass": self.pass(),
            "reports": reports,
            "notes": self.notes,
        })
    }
}

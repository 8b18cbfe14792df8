//! Check-row reports rendered as json, csv or text, byte-identical
//! across runs for a fixed configuration.

use serde::Serialize;

use crate::Format;

#[derive(Debug, Serialize)]
pub struct Row {
    pub check: String,
    pub subject: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub r#type: String,
    pub mode: String,
    pub rows: Vec<Row>,
    pub notes: Vec<String>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &str, ctype: &str, mode: &str) -> Self {
        Report {
            command: command.into(),
            r#type: ctype.into(),
            mode: mode.into(),
            rows: Vec::new(),
            notes: Vec::new(),
            pass: true,
        }
    }

    pub fn push_cmp<T: PartialEq + std::fmt::Display>(
        &mut self,
        check: &str,
        subject: String,
        expected: T,
        computed: T,
    ) {
        let pass = expected == computed;
        self.rows.push(Row {
            check: check.into(),
            subject,
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
        });
        self.pass &= pass;
    }

    pub fn push_bool(&mut self, check: &str, subject: String, pass: bool) {
        self.rows.push(Row {
            check: check.into(),
            subject,
            expected: "true".into(),
            computed: pass.to_string(),
            pass,
        });
        self.pass &= pass;
    }

    pub fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serializable"),
            Format::Csv => {
                let mut out = String::from("check,subject,expected,computed,pass\n");
                for r in &self.rows {
                    out.push_str(&format!(
                        "{},{},{},{},{}\n",
                        csv_field(&r.check),
                        csv_field(&r.subject),
                        csv_field(&r.expected),
                        csv_field(&r.computed),
                        r.pass
                    ));
                }
                out.push_str(&format!("verdict,{},,,{}\n", csv_field(&self.r#type), self.pass));
                out
            }
            Format::Dot | Format::Text => {
                let mut out = String::new();
                out.push_str(&format!(
                    "{} — type {} (mode {})\n",
                    self.command, self.r#type, self.mode
                ));
                for r in &self.rows {
                    out.push_str(&format!(
                        "[{}] {} {}: expected {} computed {}\n",
                        if r.pass { "PASS" } else { "FAIL" },
                        r.check,
                        r.subject,
                        r.expected,
                        r.computed
                    ));
                }
                for n in &self.notes {
                    out.push_str(&format!("note: {n}\n"));
                }
                out.push_str(&format!(
                    "{}: {} of {} checks passed\n",
                    if self.pass { "PASS" } else { "FAIL" },
                    self.rows.iter().filter(|r| r.pass).count(),
                    self.rows.len()
                ));
                out
            }
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

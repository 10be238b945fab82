use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Markdown,
}

/// A command result: a JSON payload plus a flat table for csv/markdown.
pub struct Report {
    pub command: String,
    pub data: Value,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Plain-text rendering; defaults to the markdown table.
    pub text: Option<String>,
    pub ok: bool,
}

impl Report {
    pub fn new(command: &str, data: impl Serialize) -> Report {
        Report {
            command: command.to_string(),
            data: serde_json::to_value(data).expect("serializable"),
            headers: Vec::new(),
            rows: Vec::new(),
            text: None,
            ok: true,
        }
    }

    pub fn table(mut self, headers: &[&str], rows: Vec<Vec<String>>) -> Report {
        self.headers = headers.iter().map(|s| s.to_string()).collect();
        self.rows = rows;
        self
    }

    pub fn text(mut self, t: String) -> Report {
        self.text = Some(t);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let v = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": self.command,
                    "ok": self.ok,
                    "result": self.data,
                });
                serde_json::to_string_pretty(&v).expect("serializable") + "\n"
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf8")
            }
            Format::Markdown => markdown(&self.headers, &self.rows),
            Format::Text => self
                .text
                .clone()
                .unwrap_or_else(|| markdown(&self.headers, &self.rows)),
        }
    }

    pub fn emit(&self, format: Format) {
        let mut out = std::io::stdout().lock();
        let _ = out.write_all(self.render(format).as_bytes());
    }
}

fn markdown(headers: &[String], rows: &[Vec<String>]) -> String {
    let cell = |s: &str| s.replace('|', "\\|");
    let mut s = String::new();
    s += &format!("| {} |\n", headers.iter().map(|h| cell(h)).collect::<Vec<_>>().join(" | "));
    s += &format!("|{}\n", "---|".repeat(headers.len()));
    for r in rows {
        s += &format!("| {} |\n", r.iter().map(|c| cell(c)).collect::<Vec<_>>().join(" | "));
    }
    s
}

pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

//! Output rendering: the same rows printed as human text, JSON lines, or CSV.
//!
//! JSON output never contains floating-point degree values; degrees stay
//! "num/den" strings and the decimal approximation is a text-mode extra.

use std::fmt::Display;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One output record: a kind tag plus ordered key/value pairs.
pub struct Row {
    kind: &'static str,
    fields: Vec<(&'static str, String)>,
}

impl Row {
    pub fn new(kind: &'static str) -> Row {
        Row { kind, fields: Vec::new() }
    }

    pub fn push(&mut self, key: &'static str, value: impl Display) {
        self.fields.push((key, value.to_string()));
    }
}

pub struct Sink {
    format: Format,
    writer: BufWriter<Box<dyn Write>>,
    csv_signature: Option<Vec<&'static str>>,
}

impl Sink {
    pub fn create(format: Format, out: Option<&Path>) -> io::Result<Sink> {
        let writer: Box<dyn Write> = match out {
            Some(path) => Box::new(File::create(path)?),
            None => Box::new(io::stdout()),
        };
        Ok(Sink { format, writer: BufWriter::new(writer), csv_signature: None })
    }

    /// Text mode may carry decimal approximations; structured modes must not.
    pub fn wants_approx(&self) -> bool {
        self.format == Format::Text
    }

    pub fn row(&mut self, row: Row) {
        match self.format {
            Format::Text => self.write_text(&row),
            Format::Json => self.write_json(&row),
            Format::Csv => self.write_csv(&row),
        }
    }

    /// Pass-through for canonical documents (algebra files, witnesses).
    pub fn raw(&mut self, text: &str) {
        self.writer.write_all(text.as_bytes()).expect("write output");
    }

    pub fn finish(&mut self) -> io::Result<()> {
        self.writer.flush()
    }

    fn write_text(&mut self, row: &Row) {
        let verdict = row
            .fields
            .iter()
            .find(|(k, _)| matches!(*k, "pass" | "match"))
            .map(|(_, v)| v == "true");
        match verdict {
            Some(pass) => {
                let mut line = String::from(if pass { "[PASS]" } else { "[FAIL]" });
                for (k, v) in &row.fields {
                    if matches!(*k, "pass" | "match") {
                        continue;
                    }
                    line.push_str("  ");
                    if matches!(*k, "check" | "subject" | "detail" | "family") {
                        line.push_str(v);
                    } else {
                        line.push_str(&format!("{k}={v}"));
                    }
                }
                writeln!(self.writer, "{line}").expect("write output");
            }
            None => {
                writeln!(self.writer, "{}:", row.kind).expect("write output");
                for (k, v) in &row.fields {
                    writeln!(self.writer, "  {k}: {v}").expect("write output");
                }
            }
        }
    }

    fn write_json(&mut self, row: &Row) {
        let mut map = serde_json::Map::new();
        map.insert("kind".into(), serde_json::Value::String(row.kind.into()));
        for (k, v) in &row.fields {
            if *k == "degree_approx" {
                continue;
            }
            map.insert((*k).into(), json_value(v));
        }
        let line = serde_json::Value::Object(map).to_string();
        writeln!(self.writer, "{line}").expect("write output");
    }

    fn write_csv(&mut self, row: &Row) {
        let signature: Vec<&'static str> =
            std::iter::once("kind").chain(row.fields.iter().map(|(k, _)| *k)).collect();
        if self.csv_signature.as_ref() != Some(&signature) {
            let header = signature.join(",");
            writeln!(self.writer, "{header}").expect("write output");
            self.csv_signature = Some(signature);
        }
        let mut cells = vec![csv_escape(row.kind)];
        cells.extend(row.fields.iter().map(|(_, v)| csv_escape(v)));
        writeln!(self.writer, "{}", cells.join(",")).expect("write output");
    }
}

/// Booleans and integers become JSON scalars; everything else stays a string,
/// so "5/8" is never turned into a float.
fn json_value(v: &str) -> serde_json::Value {
    match v {
        "true" => serde_json::Value::Bool(true),
        "false" => serde_json::Value::Bool(false),
        _ => match v.parse::<u64>() {
            Ok(n) => serde_json::Value::Number(n.into()),
            Err(_) => serde_json::Value::String(v.into()),
        },
    }
}

fn csv_escape(v: &str) -> String {
    if v.contains([',', '"', '\n']) {
        format!("\"{}\"", v.replace('"', "\"\""))
    } else {
        v.to_string()
    }
}

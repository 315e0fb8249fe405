use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};
use shapewilf::report::SuiteReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Rows of strings under fixed headers, rendered in any format.
pub struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<const N: usize>(headers: [&'static str; N]) -> Self {
        Table { headers: headers.to_vec(), rows: Vec::new() }
    }

    pub fn push<const N: usize>(&mut self, row: [String; N]) {
        debug_assert_eq!(N, self.headers.len());
        self.rows.push(row.to_vec());
    }

    fn objects(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> =
                        self.headers.iter().zip(row).map(|(h, v)| (h.to_string(), Value::String(v.clone()))).collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    fn csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()
    }

    /// Aligned columns in text mode.
    pub fn emit(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Csv => self.csv(out),
            Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&self.objects())?),
            Format::Text => {
                let widths: Vec<usize> = (0..self.headers.len())
                    .map(|i| self.rows.iter().map(|r| r[i].len()).chain([self.headers[i].len()]).max().unwrap_or(0))
                    .collect();
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                    padded.join("  ").trim_end().to_string()
                };
                writeln!(out, "{}", line(self.headers.clone()))?;
                for row in &self.rows {
                    writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
                }
                Ok(())
            }
        }
    }

    /// Text mode prints bare counts when there is a single row.
    pub fn emit_counts(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match (format, self.rows.as_slice()) {
            (Format::Text, [row]) => writeln!(out, "{}", row[2]),
            _ => self.emit(format, out),
        }
    }

    /// Text mode prints only column `col`, one value per line.
    pub fn emit_column(&self, format: Format, col: usize, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Text => self.rows.iter().try_for_each(|row| writeln!(out, "{}", row[col])),
            _ => self.emit(format, out),
        }
    }
}

pub fn emit_json<T: serde::Serialize>(value: &T, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)
}

pub fn emit_report(report: &SuiteReport, format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => emit_json(report, out),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["suite", "label", "diagram", "pattern", "expected", "actual", "provenance"])?;
            for f in &report.failures {
                w.write_record([
                    report.suite.as_str(),
                    &f.label,
                    f.diagram.as_deref().unwrap_or(""),
                    f.pattern.as_deref().unwrap_or(""),
                    &f.expected,
                    &f.actual,
                    &f.provenance.to_string(),
                ])?;
            }
            w.flush()
        }
        Format::Text => {
            let verdict = if report.passed() { "pass" } else { "FAIL" };
            writeln!(out, "{}: {verdict} ({} checks, {} failed)", report.suite, report.checked, report.failed)?;
            for f in &report.failures {
                writeln!(
                    out,
                    "  {} on Y({}) [{}] {}: expected {}, got {}",
                    f.label,
                    f.diagram.as_deref().unwrap_or("-"),
                    f.pattern.as_deref().unwrap_or("-"),
                    f.provenance,
                    f.expected,
                    f.actual
                )?;
            }
            for note in &report.notes {
                writeln!(out, "  note: {note}")?;
            }
            Ok(())
        }
    }
}

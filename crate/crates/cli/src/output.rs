//! Output records and their TEXT, JSON and CSV renderings.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;
pub const CSV_HEADER: [&str; 5] = ["alpha", "quantity", "value", "provenance", "extra"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Provenance {
    /// A closed-form bound.
    Theorem,
    /// A search or grid result.
    Oracle,
    /// The value of a named extremal function.
    Extremal,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Theorem => "THEOREM",
            Provenance::Oracle => "ORACLE",
            Provenance::Extremal => "EXTREMAL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub alpha: f64,
    pub quantity: String,
    pub value: f64,
    pub provenance: Provenance,
    #[serde(default)]
    pub extra: BTreeMap<String, Value>,
}

impl OutputRecord {
    pub fn new(alpha: f64, quantity: impl Into<String>, value: f64, provenance: Provenance) -> Self {
        debug_assert!(value.is_finite(), "record values are finite");
        Self { alpha, quantity: quantity.into(), value, provenance, extra: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.extra.insert(key.to_owned(), value.into());
        self
    }

    /// `extra["pass"]`, or `true` when the record carries no verdict.
    pub fn passed(&self) -> bool {
        self.extra.get("pass").and_then(Value::as_bool).unwrap_or(true)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub records: Vec<OutputRecord>,
}

impl Report {
    pub fn new(records: Vec<OutputRecord>) -> Self {
        Self { version: SCHEMA_VERSION, records }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// `x` with ten significant digits.
pub fn sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..10).contains(&exp) {
        format!("{:.*}", (9 - exp) as usize, x)
    } else {
        format!("{x:.9e}")
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::Number(n) if n.is_f64() => sig10(n.as_f64().unwrap_or(f64::NAN)),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn write_report(report: &Report, format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        Format::Csv => write_csv(&report.records, out),
        Format::Text => write_text(&report.records, out),
    }
}

fn write_csv(records: &[OutputRecord], out: &mut dyn Write) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        let extra = serde_json::to_string(&r.extra)?;
        w.write_record([r.alpha.to_string(), r.quantity.clone(), r.value.to_string(), r.provenance.to_string(), extra])?;
    }
    w.flush()
}

fn write_text(records: &[OutputRecord], out: &mut dyn Write) -> io::Result<()> {
    let rows: Vec<[String; 5]> = records
        .iter()
        .map(|r| {
            let extra: Vec<String> = r.extra.iter().map(|(k, v)| format!("{k}={}", text_value(v))).collect();
            [sig10(r.alpha), r.quantity.clone(), sig10(r.value), r.provenance.to_string(), extra.join(" ")]
        })
        .collect();
    let mut widths = CSV_HEADER.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: [&str; 5]| {
        let mut s = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i == 4 {
                s.push_str(cell);
            } else {
                s.push_str(&format!("{cell:<w$}  ", w = widths[i]));
            }
        }
        s.trim_end().to_owned()
    };
    writeln!(out, "{}", line(CSV_HEADER))?;
    for row in &rows {
        writeln!(out, "{}", line([&row[0], &row[1], &row[2], &row[3], &row[4]]))?;
    }
    Ok(())
}

/// Parses CSV written by [`write_report`] back into records.
pub fn parse_csv(data: &str) -> Result<Vec<OutputRecord>, String> {
    #[derive(Deserialize)]
    struct Row {
        alpha: f64,
        quantity: String,
        value: f64,
        provenance: Provenance,
        extra: String,
    }
    let mut reader = csv::Reader::from_reader(data.as_bytes());
    let header: Vec<String> = reader.headers().map_err(|e| e.to_string())?.iter().map(str::to_owned).collect();
    if header != CSV_HEADER {
        return Err(format!("unexpected header {header:?}"));
    }
    reader
        .deserialize::<Row>()
        .map(|row| {
            let row = row.map_err(|e| e.to_string())?;
            let extra = serde_json::from_str(&row.extra).map_err(|e| e.to_string())?;
            Ok(OutputRecord { alpha: row.alpha, quantity: row.quantity, value: row.value, provenance: row.provenance, extra })
        })
        .collect()
}

//! Deterministic text output: number formatting, energy units, and
//! table/CSV/JSON emission of row-oriented documents.

use std::fmt::Write as _;

use serde_json::{Map, Number, Value};

/// Hartree in electron-volts (CODATA 2018).
pub const HARTREE_EV: f64 = 27.211_386_245_988;
/// Hartree in rydberg.
pub const HARTREE_RYDBERG: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum EnergyUnit {
    Hartree,
    Rydberg,
    #[value(name = "ev")]
    ElectronVolt,
}

impl EnergyUnit {
    pub fn per_hartree(self) -> f64 {
        match self {
            EnergyUnit::Hartree => 1.0,
            EnergyUnit::Rydberg => HARTREE_RYDBERG,
            EnergyUnit::ElectronVolt => HARTREE_EV,
        }
    }

    pub fn from_hartree(self, e: f64) -> f64 {
        e * self.per_hartree()
    }

    pub fn suffix(self) -> &'static str {
        match self {
            EnergyUnit::Hartree => "hartree",
            EnergyUnit::Rydberg => "rydberg",
            EnergyUnit::ElectronVolt => "ev",
        }
    }
}

/// 12 significant digits; scientific notation outside `[1e-3, 1e6)`.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let a = x.abs();
    if !(1e-3..1e6).contains(&a) {
        return sci;
    }
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    let decimals = (11 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
    Empty,
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Num(x) => format_number(*x),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(i) => Value::from(*i),
            // the JSON value is the printed value, so CSV and JSON agree
            Cell::Num(x) => format_number(*x)
                .parse::<f64>()
                .ok()
                .and_then(Number::from_f64)
                .map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<i64> for Cell {
    fn from(x: i64) -> Self {
        Cell::Int(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

/// A row-oriented document with an optional header object for JSON.
#[derive(Debug, Clone, Default)]
pub struct Document {
    /// Top-level JSON members emitted before the rows.
    pub preamble: Vec<(String, Value)>,
    /// Key under which rows appear in JSON.
    pub rows_key: String,
    /// CSV/table column names.
    pub columns: Vec<String>,
    /// JSON keys, parallel to `columns`.
    pub json_keys: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Document {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
            OutputFormat::Table => self.to_table(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut top = Map::new();
        for (k, v) in &self.preamble {
            top.insert(k.clone(), v.clone());
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .json_keys
                    .iter()
                    .zip(row)
                    .map(|(k, c)| (k.clone(), c.to_json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        top.insert(self.rows_key.clone(), Value::Array(rows));
        let mut s =
            serde_json::to_string_pretty(&Value::Object(top)).expect("JSON value serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::render).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                rendered
                    .iter()
                    .map(|r| r.get(i).map_or(0, |s| s.chars().count()))
                    .chain(std::iter::once(c.chars().count()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();

        let mut out = String::new();
        for (k, v) in &self.preamble {
            let _ = writeln!(out, "# {k}: {}", preamble_text(v));
        }
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let header: Vec<String> = self.columns.clone();
        let _ = writeln!(out, "{}", line(&header));
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        let _ = writeln!(out, "{}", line(&rule));
        for r in &rendered {
            let _ = writeln!(out, "{}", line(r));
        }
        out
    }
}

fn preamble_text(v: &Value) -> String {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", preamble_text(v)))
            .collect::<Vec<_>>()
            .join(", "),
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_f64() => format_number(n.as_f64().unwrap_or(f64::NAN)),
        other => other.to_string(),
    }
}

/// JSON number carrying exactly the printed value of `x`.
pub fn json_number(x: f64) -> Value {
    Cell::Num(x).to_json()
}

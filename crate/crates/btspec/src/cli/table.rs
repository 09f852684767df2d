use crate::error::Result;
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;

pub const SCHEMA: &str = "btspec-v1";

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    F(f64),
    I(i64),
    S(String),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::F(x)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::I(x as i64)
    }
}

impl From<i64> for Cell {
    fn from(x: i64) -> Self {
        Cell::I(x)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::S(x.to_string())
    }
}

impl From<String> for Cell {
    fn from(x: String) -> Self {
        Cell::S(x)
    }
}

/// 17 significant digits, fixed exponent form.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::F(x) => fmt_f64(*x),
            Cell::I(i) => i.to_string(),
            Cell::S(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::S(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            // keep the formatted digits so JSON output is byte-stable too
            Cell::F(x) if x.is_finite() => Value::Number(serde_json::Number::from_f64(fmt_f64(*x).parse().unwrap()).unwrap()),
            Cell::F(x) => Value::String(fmt_f64(*x)),
            Cell::I(i) => json!(i),
            Cell::S(s) => json!(s),
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::F(x) => Some(*x),
            Cell::I(i) => Some(*i as f64),
            Cell::S(_) => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Numeric column by name; non-numeric cells read as NaN.
    pub fn values(&self, name: &str) -> Option<Vec<f64>> {
        let c = self.column(name)?;
        Some(self.rows.iter().map(|r| r[c].as_f64().unwrap_or(f64::NAN)).collect())
    }

    pub fn write_csv<C: Serialize, W: Write>(&self, config: &C, mut w: W) -> Result<()> {
        let cfg = serde_json::to_string(config).map_err(|e| crate::Error::Io(e.to_string()))?;
        write!(w, "# {SCHEMA}\n# config: {cfg}\n{}\n", self.columns.join(","))?;
        for r in &self.rows {
            let line: Vec<String> = r.iter().map(Cell::csv).collect();
            write!(w, "{}\n", line.join(","))?;
        }
        Ok(())
    }

    pub fn write_json<C: Serialize, W: Write>(&self, config: &C, mut w: W) -> Result<()> {
        let rows: Vec<Value> = self.rows.iter().map(|r| Value::Array(r.iter().map(Cell::json).collect())).collect();
        let doc = json!({ "schema": SCHEMA, "config": config, "columns": self.columns, "rows": rows });
        let s = serde_json::to_string_pretty(&doc).map_err(|e| crate::Error::Io(e.to_string()))?;
        write!(w, "{s}\n")?;
        Ok(())
    }
}

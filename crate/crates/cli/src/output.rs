//! Tabular output shared by all subcommands: CSV with a fixed header row
//! and trailing `#` comment lines, or a JSON array of objects carrying the
//! same field names. Floats are printed with 9 significant digits so that
//! identical runs produce byte-identical files.

use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub enum Value {
    Int(i64),
    Float(f64),
    Str(String),
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v as i64)
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Float(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Str(v.to_string())
    }
}

/// Formats a float with 9 significant digits in plain decimal notation.
pub fn sig9(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exponent = v.abs().log10().floor() as i32;
    let precision = (8 - exponent).clamp(0, 17) as usize;
    format!("{v:.precision$}")
}

#[derive(Debug, Clone)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
    comments: Vec<String>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
            comments: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    /// Appends a `#` comment emitted after the CSV body; ignored in JSON.
    pub fn push_comment(&mut self, comment: impl Into<String>) {
        self.comments.push(comment.into());
    }

    pub fn write(&self, format: Format, mut out: impl Write) -> std::io::Result<()> {
        match format {
            Format::Csv => self.write_csv(&mut out),
            Format::Json => self.write_json(&mut out),
        }
    }

    fn write_csv(&self, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|v| match v {
                    Value::Int(i) => i.to_string(),
                    Value::Float(f) => sig9(*f),
                    Value::Str(s) => s.clone(),
                })
                .collect();
            writeln!(out, "{}", cells.join(","))?;
        }
        for comment in &self.comments {
            writeln!(out, "# {comment}")?;
        }
        Ok(())
    }

    fn write_json(&self, out: &mut impl Write) -> std::io::Result<()> {
        let records: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut map = serde_json::Map::new();
                for (name, value) in self.columns.iter().zip(row) {
                    let json = match value {
                        Value::Int(i) => serde_json::json!(i),
                        Value::Float(f) => serde_json::json!(f),
                        Value::Str(s) => serde_json::json!(s),
                    };
                    map.insert((*name).to_string(), json);
                }
                serde_json::Value::Object(map)
            })
            .collect();
        serde_json::to_writer_pretty(&mut *out, &records)?;
        writeln!(out)?;
        Ok(())
    }
}

use std::io::Write;

use anyhow::Result;
use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Text(String),
    Bool(bool),
    Missing,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Float(v) => format!("{v:.16e}"),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Float(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Int(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
            Cell::Missing => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Missing, Cell::Float)
    }
}

/// Output of one subcommand: a table (or a single record) plus parameters and
/// an optional summary that only appears in JSON.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub parameters: Vec<(&'static str, Cell)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// One-row result rendered as an object rather than a list.
    pub record: bool,
    pub summary: Option<Map<String, Value>>,
}

impl Report {
    pub fn table(command: &'static str, columns: Vec<&'static str>) -> Self {
        Self {
            command,
            parameters: Vec::new(),
            columns,
            rows: Vec::new(),
            record: false,
            summary: None,
        }
    }

    pub fn param(mut self, name: &'static str, value: impl Into<Cell>) -> Self {
        self.parameters.push((name, value.into()));
        self
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let object = |row: &[Cell]| -> Value {
            Value::Object(
                self.columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.to_string(), v.json()))
                    .collect(),
            )
        };
        let mut top = Map::new();
        top.insert("command".into(), Value::from(self.command));
        top.insert(
            "parameters".into(),
            Value::Object(
                self.parameters
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.json()))
                    .collect(),
            ),
        );
        if self.record {
            top.insert(
                "result".into(),
                self.rows.first().map_or(Value::Null, |r| object(r)),
            );
        } else {
            top.insert("rows".into(), self.rows.iter().map(|r| object(r)).collect());
        }
        if let Some(summary) = &self.summary {
            top.insert("summary".into(), Value::Object(summary.clone()));
        }
        Value::Object(top)
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        serde_json::to_writer_pretty(&mut out, &self.to_json())?;
        out.write_all(b"\n")?;
        Ok(())
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut r = Report::table("t", vec!["a", "b"]);
        r.rows.push(vec![Cell::Float(0.1), Cell::Missing]);
        r.rows.push(vec![Cell::Int(3), Cell::Bool(true)]);
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "a,b\n1.0000000000000001e-1,\n3,true\n"
        );
    }

    #[test]
    fn json_keeps_column_order() {
        let mut r = Report::table("t", vec!["z", "a"]).param("k", 1.0);
        r.rows.push(vec![Cell::Float(1.0), Cell::Float(f64::NAN)]);
        let text = r.to_json().to_string();
        assert_eq!(
            text,
            r#"{"command":"t","parameters":{"k":1.0},"rows":[{"z":1.0,"a":null}]}"#
        );
    }
}

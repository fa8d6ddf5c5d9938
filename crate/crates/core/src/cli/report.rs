//! Report rows and their table, JSON and CSV encodings.

use std::fmt::Write as _;

use serde_json::{Map, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Int(u64),
    Str(String),
    List(Vec<String>),
    Null,
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Int(i) => Value::from(*i),
            Cell::Str(s) => Value::from(s.as_str()),
            Cell::List(v) => Value::from(v.clone()),
            Cell::Null => Value::Null,
        }
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Null => Ok(Cell::Null),
            Value::Number(n) => n
                .as_u64()
                .map(Cell::Int)
                .ok_or_else(|| Error::Domain(format!("unexpected number {n}"))),
            Value::String(s) => Ok(Cell::Str(s.clone())),
            Value::Array(items) => items
                .iter()
                .map(|i| {
                    i.as_str()
                        .map(str::to_owned)
                        .ok_or_else(|| Error::Domain("list entries must be strings".into()))
                })
                .collect::<Result<_>>()
                .map(Cell::List),
            other => Err(Error::Domain(format!("unexpected cell {other}"))),
        }
    }

    /// Flat text form used by CSV and the table.
    pub fn flat(&self, sep: &str) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Str(s) => s.clone(),
            Cell::List(v) => v.join(sep),
            Cell::Null => String::new(),
        }
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(u64::from(v))
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Str(v.to_owned())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Str(v)
    }
}

impl From<Vec<String>> for Cell {
    fn from(v: Vec<String>) -> Self {
        Cell::List(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Null, Into::into)
    }
}

/// Ordered named fields.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Row {
    fields: Vec<(String, Cell)>,
}

impl Row {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, cell: impl Into<Cell>) -> Self {
        self.fields.push((name.to_owned(), cell.into()));
        self
    }

    pub fn get(&self, name: &str) -> Option<&Cell> {
        self.fields.iter().find(|(k, _)| k == name).map(|(_, c)| c)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.fields.iter().map(|(k, _)| k.as_str())
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.fields.iter().map(|(_, c)| c)
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (k, c) in &self.fields {
            m.insert(k.clone(), c.to_json());
        }
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Domain("a row must be a JSON object".into()))?;
        let fields = obj
            .iter()
            .map(|(k, c)| Ok((k.clone(), Cell::from_json(c)?)))
            .collect::<Result<_>>()?;
        Ok(Self { fields })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub n: u32,
    pub q: usize,
    pub max_degree: u32,
    pub exact: bool,
    pub rows: Vec<Row>,
    pub verdict: Verdict,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut params = Map::new();
        params.insert("n".into(), Value::from(self.n));
        params.insert("q".into(), Value::from(self.q));
        params.insert("max_degree".into(), Value::from(self.max_degree));
        params.insert("exact".into(), Value::from(self.exact));
        let mut top = Map::new();
        top.insert("params".into(), Value::Object(params));
        top.insert(
            "rows".into(),
            Value::Array(self.rows.iter().map(Row::to_json).collect()),
        );
        top.insert("verdict".into(), Value::from(self.verdict.as_str()));
        let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("JSON values serialize");
        s.push('\n');
        s
    }

    fn header(&self) -> Vec<&str> {
        self.rows.first().map_or_else(Vec::new, |r| r.names().collect())
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = self.header();
        if !header.is_empty() {
            w.write_record(&header).map_err(csv_err)?;
        }
        for r in &self.rows {
            w.write_record(r.cells().map(|c| c.flat(";"))).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Domain(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# {} n={} q={} max_degree={} exact={}",
            self.command, self.n, self.q, self.max_degree, self.exact
        );
        let header = self.header();
        if !header.is_empty() {
            let grid: Vec<Vec<String>> = self
                .rows
                .iter()
                .map(|r| r.cells().map(|c| c.flat("; ")).collect())
                .collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|i| {
                    grid.iter()
                        .map(|row| row[i].chars().count())
                        .chain([header[i].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: Vec<&str>| {
                let mut s = String::new();
                for (i, c) in cells.iter().enumerate() {
                    if i + 1 == cells.len() {
                        s.push_str(c);
                    } else {
                        let _ = write!(s, "{c:<w$}  ", w = widths[i]);
                    }
                }
                s.trim_end().to_owned()
            };
            let _ = writeln!(out, "{}", line(header.clone()));
            for row in &grid {
                let _ = writeln!(out, "{}", line(row.iter().map(String::as_str).collect()));
            }
        }
        let _ = writeln!(out, "verdict: {}", self.verdict.as_str());
        out
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Domain(format!("csv: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report {
            command: "basis".into(),
            n: 1,
            q: 2,
            max_degree: 4,
            exact: false,
            rows: vec![
                Row::new().with("degree", 2u32).with("count", 1usize).with("elements", vec!["b2".to_owned()]),
                Row::new()
                    .with("degree", 4u32)
                    .with("count", 1usize)
                    .with("elements", vec!["b2*b2".to_owned()]),
            ],
            verdict: Verdict::Pass,
        }
    }

    #[test]
    fn json_keeps_field_order() {
        let j = sample().to_json();
        let deg = j.find("\"degree\"").unwrap();
        let count = j.find("\"count\"").unwrap();
        assert!(deg < count);
        assert!(j.ends_with("}\n"));
        let v: Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["params"]["q"], 2);
    }

    #[test]
    fn csv_and_table() {
        let c = sample().to_csv().unwrap();
        assert_eq!(c, "degree,count,elements\n2,1,b2\n4,1,b2*b2\n");
        let t = sample().to_table();
        assert!(t.starts_with("# basis n=1 q=2"));
        assert!(t.contains("degree  count  elements"));
        assert!(t.ends_with("verdict: pass\n"));
    }

    #[test]
    fn row_json_round_trip() {
        let r = Row::new()
            .with("degree", 3u32)
            .with("canonical_count", Option::<usize>::None)
            .with("reps", vec!["b1*b2".to_owned()])
            .with("verdict", "pass");
        assert_eq!(Row::from_json(&r.to_json()).unwrap(), r);
    }
}

//! Tables and their CSV/JSON serialization.
//!
//! Reals are written in scientific notation with 17 significant digits so
//! that every value round-trips exactly.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{Map, Number, Value as Json};

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(i64),
    Real(f64),
    Text(String),
    Bool(bool),
    List(Vec<Value>),
}

impl From<u32> for Value {
    fn from(v: u32) -> Self {
        Value::Int(i64::from(v))
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Real(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_owned())
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(v: Vec<T>) -> Self {
        Value::List(v.into_iter().map(Into::into).collect())
    }
}

pub fn format_real(v: f64) -> String {
    format!("{v:.16e}")
}

impl Value {
    fn csv(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Real(v) => format_real(*v),
            Value::Text(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
            Value::List(items) => items.iter().map(Value::csv).collect::<Vec<_>>().join(","),
        }
    }

    fn json(&self) -> Json {
        match self {
            Value::Int(v) => Json::from(*v),
            Value::Real(v) if v.is_finite() => {
                Json::Number(Number::from_str(&format_real(*v)).expect("scientific notation is valid JSON"))
            }
            Value::Real(_) => Json::Null,
            Value::Text(s) => Json::from(s.as_str()),
            Value::Bool(b) => Json::from(*b),
            Value::List(items) => Json::Array(items.iter().map(Value::json).collect()),
        }
    }

    fn is_finite(&self) -> bool {
        match self {
            Value::Real(v) => v.is_finite(),
            Value::List(items) => items.iter().all(Value::is_finite),
            _ => true,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub config: Vec<(String, Value)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    pub metadata: Vec<(String, Value)>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Self::default()
        }
    }

    pub fn config(&mut self, key: &str, value: impl Into<Value>) {
        self.config.push((key.to_owned(), value.into()));
    }

    pub fn meta(&mut self, key: &str, value: impl Into<Value>) {
        self.metadata.push((key.to_owned(), value.into()));
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// First non-finite entry, as `(row, column)`.
    pub fn first_non_finite(&self) -> Option<(usize, &str)> {
        self.rows.iter().enumerate().find_map(|(i, row)| {
            row.iter()
                .position(|v| !v.is_finite())
                .map(|j| (i, self.columns[j].as_str()))
        })
    }

    /// `# key=value` lines for the config and metadata, a header, then rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.config.iter().chain(&self.metadata) {
            writeln!(out, "# {k}={}", v.csv()).unwrap();
        }
        writeln!(out, "{}", self.columns.join(",")).unwrap();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Value::csv).collect();
            writeln!(out, "{}", cells.join(",")).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let object = |pairs: &[(String, Value)]| {
            Json::Object(pairs.iter().map(|(k, v)| (k.clone(), v.json())).collect::<Map<_, _>>())
        };
        let mut root = Map::new();
        root.insert("config".into(), object(&self.config));
        root.insert("columns".into(), Json::from(self.columns.clone()));
        root.insert(
            "rows".into(),
            Json::Array(
                self.rows
                    .iter()
                    .map(|r| Json::Array(r.iter().map(Value::json).collect()))
                    .collect(),
            ),
        );
        root.insert("metadata".into(), object(&self.metadata));
        let mut text = serde_json::to_string_pretty(&Json::Object(root)).expect("tree serializes");
        text.push('\n');
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(&["n", "F"]);
        t.config("command", "demo");
        t.config("x0", vec![0.0, 1.5]);
        t.push(vec![1u32.into(), 0.1.into()]);
        t.meta("engine", "mehler");
        t
    }

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_real(0.1), "1.0000000000000001e-1");
        assert_eq!(format_real(-2.0), "-2.0000000000000000e0");
        let v = 0.973_367_891_234_567_8_f64;
        assert_eq!(format_real(v).parse::<f64>().unwrap(), v);
    }

    #[test]
    fn csv_layout() {
        assert_eq!(
            sample().to_csv(),
            "# command=demo\n# x0=0.0000000000000000e0,1.5000000000000000e0\n# engine=mehler\nn,F\n1,1.0000000000000001e-1\n"
        );
    }

    #[test]
    fn json_layout() {
        let parsed: Json = serde_json::from_str(&sample().to_json()).unwrap();
        let keys: Vec<&String> = parsed.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["config", "columns", "rows", "metadata"]);
        assert_eq!(parsed["rows"][0][0], Json::from(1));
        assert!(sample().to_json().contains("1.0000000000000001e-1"));
    }

    #[test]
    fn non_finite_detection() {
        let mut t = sample();
        assert_eq!(t.first_non_finite(), None);
        t.push(vec![2u32.into(), f64::NAN.into()]);
        assert_eq!(t.first_non_finite(), Some((1, "F")));
    }
}

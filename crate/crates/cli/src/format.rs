//! Byte-stable CSV and JSON-lines output.

use std::fs::File;
use std::io::{self, BufWriter, Write};

/// `%.17g`: 17 significant digits, shortest of fixed or exponent form,
/// trailing zeros removed.
pub fn g17(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let e_form = format!("{x:.16e}");
    let (mantissa, exp) = e_form.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("exponent");
    if !(-4..17).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        trim_zeros(&format!("{x:.*}", (16 - exp) as usize)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => g17(*x),
            Cell::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Num(x) if x.is_finite() => g17(*x),
            Cell::Num(_) => "null".into(),
            Cell::Text(s) => serde_json::to_string(s).expect("string serialises"),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.into())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

pub type Record = Vec<(&'static str, Cell)>;

/// One JSON object on a single line, keys in record order.
pub fn json_line(rec: &Record) -> String {
    let body: Vec<String> = rec
        .iter()
        .map(|(k, v)| format!("{}:{}", serde_json::to_string(k).expect("key"), v.json()))
        .collect();
    format!("{{{}}}", body.join(","))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    JsonLines,
}

pub fn open(path: &str) -> io::Result<Box<dyn Write>> {
    if path == "-" {
        Ok(Box::new(BufWriter::new(io::stdout().lock())))
    } else {
        Ok(Box::new(BufWriter::new(File::create(path)?)))
    }
}

pub struct Table {
    out: Box<dyn Write>,
    format: Format,
    columns: Vec<&'static str>,
}

impl Table {
    /// Opens `path` ("-" for stdout); CSV gets its header immediately.
    pub fn create(path: &str, format: Format, columns: &[&'static str]) -> io::Result<Self> {
        let mut out = open(path)?;
        if format == Format::Csv {
            out.write_all(columns.join(",").as_bytes())?;
            out.write_all(b"\n")?;
        }
        Ok(Table { out, format, columns: columns.to_vec() })
    }

    pub fn write(&mut self, rec: &Record) -> io::Result<()> {
        debug_assert!(rec.iter().map(|(k, _)| *k).eq(self.columns.iter().copied()));
        let line = match self.format {
            Format::Csv => rec.iter().map(|(_, v)| v.csv()).collect::<Vec<_>>().join(","),
            Format::JsonLines => json_line(rec),
        };
        self.out.write_all(line.as_bytes())?;
        self.out.write_all(b"\n")
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printf_g17() {
        assert_eq!(g17(0.1), "0.10000000000000001");
        assert_eq!(g17(123.0), "123");
        assert_eq!(g17(-2.5), "-2.5");
        assert_eq!(g17(1e-5), "1.0000000000000001e-05");
        assert_eq!(g17(1e20), "1e+20");
        assert_eq!(g17(1e16), "10000000000000000");
        assert_eq!(g17(1e17), "1e+17");
        assert_eq!(g17(0.0001), "0.0001");
        assert_eq!(g17(-0.0), "-0");
        assert_eq!(g17(f64::NAN), "nan");
        assert_eq!(g17(f64::NEG_INFINITY), "-inf");
        assert_eq!(g17(1.0 / 3.0), "0.33333333333333331");
        assert_eq!(g17(f64::MIN_POSITIVE), "2.2250738585072014e-308");
    }

    #[test]
    fn g17_round_trips() {
        for x in [0.1, 1.0 / 3.0, std::f64::consts::PI * 1e-200, 6.02214076e23, -7.5e-5, 12345.678] {
            assert_eq!(g17(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn json_lines_are_valid() {
        let rec: Record = vec![("a", 1.5.into()), ("b", f64::NAN.into()), ("c", "x\"y".into()), ("d", true.into())];
        let line = json_line(&rec);
        assert_eq!(line, r#"{"a":1.5,"b":null,"c":"x\"y","d":true}"#);
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(v["a"], 1.5);
    }

    #[test]
    fn csv_quotes_text() {
        assert_eq!(Cell::from("a,b").csv(), "\"a,b\"");
        assert_eq!(Cell::from(1e-7).csv(), "9.9999999999999995e-08");
    }
}

//! CSV emission for histograms, convergence traces and row profiles.
//!
//! Output is a header line followed by one row per record, LF line endings,
//! with real numbers printed to 12 significant digits.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use crate::entropy::Histogram;
use crate::error::{Error, Result};
use crate::io::profile::ProfileLine;
use crate::mshi::{ConvergenceTrace, TraceRecord};

/// Significant digits used when printing reals.
pub const REAL_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Int(i64),
    Real(f64),
    Text(String),
}

impl Field {
    fn render(&self) -> String {
        match self {
            Field::Int(v) => v.to_string(),
            Field::Real(v) => format_real(*v),
            Field::Text(s) => s.clone(),
        }
    }
}

impl From<u64> for Field {
    fn from(v: u64) -> Self {
        Field::Int(v as i64)
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Int(v as i64)
    }
}

impl From<u32> for Field {
    fn from(v: u32) -> Self {
        Field::Int(i64::from(v))
    }
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Real(v)
    }
}

/// Formats `x` with [`REAL_DIGITS`] significant digits, `%g` style:
/// positional notation for moderate exponents, scientific otherwise, with
/// trailing zeros removed.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", REAL_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..REAL_DIGITS as i32).contains(&exp) {
        let decimals = (REAL_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_zeros(mantissa.to_string()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// A header plus rows of fields.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Field>>,
}

impl CsvTable {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Field>) {
        self.rows.push(row);
    }

    pub fn write_to<W: Write>(&self, out: W) -> Result<()> {
        for (index, row) in self.rows.iter().enumerate() {
            if row.len() != self.header.len() {
                return Err(Error::Arity {
                    index,
                    expected: self.header.len(),
                    actual: row.len(),
                });
            }
        }
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Field::render))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_to(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is utf-8"))
    }
}

pub fn emit_csv(table: &CsvTable, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::file(path, e))?;
    table.write_to(file)
}

/// `level,count` for each level with a nonzero count.
pub fn histogram_table(hist: &Histogram) -> CsvTable {
    let mut t = CsvTable::new(&["level", "count"]);
    for (level, count) in hist.nonzero() {
        t.push(vec![level.into(), count.into()]);
    }
    t
}

pub fn trace_table(trace: &ConvergenceTrace) -> CsvTable {
    let mut t = CsvTable::new(&["iteration", "criterion_value", "entropy"]);
    for r in &trace.records {
        t.push(vec![
            r.iteration.into(),
            r.criterion_value.into(),
            r.entropy.into(),
        ]);
    }
    t
}

pub fn profile_table(profile: &ProfileLine) -> CsvTable {
    let mut t = CsvTable::new(&["col", "value"]);
    for (col, &v) in profile.values.iter().enumerate() {
        t.push(vec![col.into(), v.into()]);
    }
    t
}

fn parse_field<T: std::str::FromStr>(raw: &str, line: usize) -> Result<T> {
    raw.trim()
        .parse()
        .map_err(|_| Error::Domain(format!("trace line {line}: cannot parse field {raw:?}")))
}

/// Parses a trace written by [`trace_table`].
pub fn read_trace_csv(path: impl AsRef<Path>) -> Result<ConvergenceTrace> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::file(path, e))?;
    let mut reader = csv::Reader::from_reader(file);
    let mut trace = ConvergenceTrace::default();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec?;
        let line = i + 2;
        if rec.len() != 3 {
            return Err(Error::Arity {
                index: i,
                expected: 3,
                actual: rec.len(),
            });
        }
        trace.records.push(TraceRecord {
            iteration: parse_field(&rec[0], line)?,
            criterion_value: parse_field(&rec[1], line)?,
            entropy: parse_field(&rec[2], line)?,
        });
    }
    Ok(trace)
}

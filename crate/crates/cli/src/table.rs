//! Deterministic CSV output.
//!
//! Reals are rounded to 12 significant digits and printed in the shortest
//! form that reads back to the rounded value, so identical inputs give
//! identical bytes.

use std::io::Write;
use std::path::Path;

use crate::error::CliError;

/// Rounds to 12 significant digits and prints the shortest representation.
pub fn format_real(v: f64) -> String {
    if v == 0.0 {
        // also folds -0.0
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let rounded: f64 = format!("{v:.11e}").parse().expect("formatted float parses");
    rounded.to_string()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Self { header: header.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Values of column `name` parsed as reals, for plotting.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.header.iter().position(|h| *h == name)?;
        self.rows.iter().map(|r| r[idx].parse().ok()).collect()
    }

    pub fn write_to<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory cannot fail");
        buf
    }
}

pub fn write_csv(table: &Table, path: &Path) -> Result<(), CliError> {
    std::fs::write(path, table.to_bytes())
        .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display())))
}

/// One `index,time_s,amplitude` row of a signal CSV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignalRow {
    pub index: usize,
    pub time_s: f64,
    pub amplitude: f64,
}

/// Reads back a signal CSV written by `synth`.
pub fn read_signal_csv(path: &Path) -> Result<Vec<SignalRow>, CliError> {
    let data_err = |e: &dyn std::fmt::Display| CliError::Data(format!("{}: {e}", path.display()));
    let mut rdr = csv::Reader::from_path(path).map_err(|e| data_err(&e))?;
    let headers = rdr.headers().map_err(|e| data_err(&e))?.clone();
    if headers.iter().collect::<Vec<_>>() != ["index", "time_s", "amplitude"] {
        return Err(data_err(&"not a signal CSV (expected index,time_s,amplitude)"));
    }
    rdr.records()
        .map(|rec| {
            let rec = rec.map_err(|e| data_err(&e))?;
            let field = |i: usize| rec.get(i).unwrap_or("");
            Ok(SignalRow {
                index: field(0).parse().map_err(|e| data_err(&e))?,
                time_s: field(1).parse().map_err(|e| data_err(&e))?,
                amplitude: field(2).parse().map_err(|e| data_err(&e))?,
            })
        })
        .collect()
}

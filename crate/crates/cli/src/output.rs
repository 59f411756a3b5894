//! JSON and CSV rendering. CSV floats carry 17 significant digits.

use std::io::Write;

use serde::Serialize;

use crate::commands::{FamilyDescriptor, SpectrumRow, VerifyRow, WavefunctionRow};
use crate::error::CliError;

fn io_err(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(format!("write failed: {e}"))
}

pub fn write_json<W: Write, T: Serialize + ?Sized>(mut out: W, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut out, value).map_err(io_err)?;
    writeln!(out).map_err(io_err)
}

pub fn float(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt(v: Option<f64>) -> String {
    v.map(float).unwrap_or_default()
}

/// A table that can be written as CSV with a fixed header.
pub trait CsvRow {
    const HEADER: &'static [&'static str];
    fn fields(&self) -> Vec<String>;
}

impl CsvRow for SpectrumRow {
    const HEADER: &'static [&'static str] = &["family", "n", "l", "energy", "residual", "branch", "p", "q"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.family.to_string(),
            self.n.to_string(),
            self.l.to_string(),
            float(self.energy),
            float(self.residual),
            self.branch.to_string(),
            float(self.p),
            float(self.q),
        ]
    }
}

impl CsvRow for WavefunctionRow {
    const HEADER: &'static [&'static str] = &["x", "psi", "psi_squared_weighted"];
    fn fields(&self) -> Vec<String> {
        vec![float(self.x), float(self.psi), float(self.psi_squared_weighted)]
    }
}

impl CsvRow for VerifyRow {
    const HEADER: &'static [&'static str] =
        &["family", "n", "l", "residual_root", "closed_form", "oracle", "rel_closed_form", "rel_oracle", "pass"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.family.to_string(),
            self.n.to_string(),
            self.l.to_string(),
            float(self.residual_root),
            opt(self.closed_form),
            opt(self.oracle),
            opt(self.rel_closed_form),
            opt(self.rel_oracle),
            self.pass.to_string(),
        ]
    }
}

impl CsvRow for FamilyDescriptor {
    const HEADER: &'static [&'static str] = &["case", "family", "branch", "c3", "params", "supported_l"];
    fn fields(&self) -> Vec<String> {
        let params: Vec<String> = self.params.iter().map(|p| format!("{} [{}]", p.name, p.unit)).collect();
        vec![
            self.case.to_string(),
            self.family.to_string(),
            self.branch.to_string(),
            self.c3.to_string(),
            params.join("; "),
            self.supported_l.to_string(),
        ]
    }
}

pub fn write_csv<W: Write, R: CsvRow>(out: W, rows: &[R]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(R::HEADER).map_err(io_err)?;
    for r in rows {
        w.write_record(r.fields()).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

pub fn write_list_text<W: Write>(mut out: W, rows: &[FamilyDescriptor]) -> Result<(), CliError> {
    writeln!(out, "{:<4} {:<20} {:<9} {:<11} {:<4} parameters", "case", "family", "branch", "c3", "l").map_err(io_err)?;
    for r in rows {
        let params: Vec<String> = r.params.iter().map(|p| format!("{} [{}]", p.name, p.unit)).collect();
        writeln!(
            out,
            "{:<4} {:<20} {:<9} {:<11} {:<4} {}",
            r.case,
            r.family,
            r.branch.to_string(),
            r.c3,
            r.supported_l,
            params.join(", ")
        )
        .map_err(io_err)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip_through_text() {
        for v in [0.1f64, -1.0 / 18.0, 2.123105625617661, 1e-300, -5.28125] {
            assert_eq!(float(v).parse::<f64>().unwrap(), v);
        }
    }
}

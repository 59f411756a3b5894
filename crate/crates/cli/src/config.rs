//! Run configuration: JSON schema, flag parsing and default resolution.

use std::path::Path;

use serde::{Deserialize, Serialize};
use specbound_core::potentials::{Family, PotentialSpec, UnitsConfig};
use specbound_core::{Grid, Potential, Units};

use crate::error::CliError;

/// Environment variable overriding the default output format.
pub const FORMAT_ENV: &str = "SPECBOUND_DEFAULT_FORMAT";

pub const DEFAULT_L: usize = 0;
pub const DEFAULT_N_MAX: usize = 2;
pub const DEFAULT_REL_TOL: f64 = 1e-5;
pub const DEFAULT_SAMPLES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(CliError::Invalid(format!("unknown output format {other:?} (expected json or csv)"))),
        }
    }
}

fn default_units() -> Units {
    UnitsConfig::default()
}
fn default_n_max() -> usize {
    DEFAULT_N_MAX
}
fn default_rel_tol() -> f64 {
    DEFAULT_REL_TOL
}

/// One run: what `--config` files contain, and what flags resolve to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub potential: Potential,
    #[serde(default = "default_units")]
    pub units: Units,
    #[serde(default)]
    pub l: usize,
    #[serde(default = "default_n_max")]
    pub n_max: usize,
    /// Oracle grid; `None` picks the per-family default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_format: Option<OutputFormat>,
    #[serde(default = "default_rel_tol")]
    pub rel_tol: f64,
}

impl RunConfig {
    pub fn new(potential: Potential) -> Self {
        Self {
            potential,
            units: default_units(),
            l: DEFAULT_L,
            n_max: DEFAULT_N_MAX,
            grid: None,
            output_format: None,
            rel_tol: DEFAULT_REL_TOL,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.potential.check(self.l, &self.units).map_err(|e| CliError::Invalid(e.to_string()))?;
        if !(self.rel_tol.is_finite() && self.rel_tol > 0.0) {
            return Err(CliError::Invalid(format!("rel_tol must be positive, got {}", self.rel_tol)));
        }
        if let Some(g) = &self.grid {
            g.validate().map_err(|e| CliError::Invalid(e.to_string()))?;
        }
        Ok(())
    }
}

pub fn load_config(path: &Path) -> Result<Vec<RunConfig>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read config {}: {e}", path.display())))?;
    parse_config(&text).map_err(|e| CliError::Invalid(format!("config {}: {e}", path.display())))
}

pub fn parse_config(text: &str) -> Result<Vec<RunConfig>, String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    match value {
        serde_json::Value::Array(items) => items
            .into_iter()
            .enumerate()
            .map(|(i, v)| serde_json::from_value(v).map_err(|e| format!("entry {i}: {e}")))
            .collect(),
        v => serde_json::from_value(v).map(|c| vec![c]).map_err(|e| e.to_string()),
    }
}

/// `--param key=value` list to a spec of the named family.
pub fn spec_from_params(family: &str, params: &[String]) -> Result<Potential, CliError> {
    let fam = Family::parse(family).ok_or_else(|| {
        let known: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        CliError::Invalid(format!("unknown potential {family:?}; known: {}", known.join(", ")))
    })?;
    let names = fam.params();
    let mut values: Vec<Option<f64>> = vec![None; names.len()];
    for raw in params {
        let (key, val) = raw
            .split_once('=')
            .ok_or_else(|| CliError::Invalid(format!("--param {raw:?} is not key=value")))?;
        let key = key.trim();
        let idx = names
            .iter()
            .position(|p| p.name == key)
            .or_else(|| names.iter().position(|p| p.name.eq_ignore_ascii_case(key)))
            .ok_or_else(|| {
                let known: Vec<&str> = names.iter().map(|p| p.name).collect();
                CliError::Invalid(format!("{} has no parameter {key:?}; expected {}", fam.name(), known.join(", ")))
            })?;
        let v: f64 =
            val.trim().parse().map_err(|_| CliError::Invalid(format!("parameter {key}: {val:?} is not a number")))?;
        values[idx] = Some(v);
    }
    let mut out = Vec::with_capacity(names.len());
    for (info, v) in names.iter().zip(values) {
        out.push(v.ok_or_else(|| CliError::Invalid(format!("{} needs --param {}=<value>", fam.name(), info.name)))?);
    }
    fam.with_values(&out).map_err(|e| CliError::Invalid(e.to_string()))
}

/// `xmin,xmax,npts`.
pub fn parse_grid(text: &str) -> Result<Grid, CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = || CliError::Invalid(format!("--grid {text:?} must be xmin,xmax,npts"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let x_min: f64 = parts[0].parse().map_err(|_| bad())?;
    let x_max: f64 = parts[1].parse().map_err(|_| bad())?;
    let n_points: usize = parts[2].parse().map_err(|_| bad())?;
    Grid::new(x_min, x_max, n_points).map_err(|e| CliError::Invalid(e.to_string()))
}

/// Flag > config file > environment > JSON.
pub fn resolve_format(flag: Option<OutputFormat>, config: Option<OutputFormat>) -> Result<OutputFormat, CliError> {
    if let Some(f) = flag.or(config) {
        return Ok(f);
    }
    match std::env::var(FORMAT_ENV) {
        Ok(v) if !v.trim().is_empty() => v.parse(),
        _ => Ok(OutputFormat::Json),
    }
}

/// Convenience for tests and docs: the desk parameter set of each family.
pub fn desk_spec(family: Family) -> Potential {
    match family {
        Family::GeneralizedMorse => PotentialSpec::GeneralizedMorse { v1: 100.0, v2: 20.0, a: 1.0 },
        Family::Mie => PotentialSpec::Mie { v0: 5.0, a: 1.0 },
        Family::KratzerFues => PotentialSpec::KratzerFues { de: 10.0, re: 1.0 },
        Family::Coulomb => PotentialSpec::Coulomb { e2: 1.0 },
        Family::Pseudoharmonic => PotentialSpec::Pseudoharmonic { v0: 2.0, r0: 1.0 },
        Family::NoncentralRadial => PotentialSpec::NoncentralRadial { alpha: -1.0, lambda: 0.0 },
        Family::DeformedRosenMorse => PotentialSpec::DeformedRosenMorse { v1: 4.0, v2: 8.0, a: 0.5, eta: 1.0 },
        Family::WoodsSaxon => PotentialSpec::WoodsSaxon { v1: 5.0, v2: 10.0, a: 1.0 },
        Family::PoschlTeller => PotentialSpec::PoschlTeller { v0: 10.0, a: 1.0, eta: 1.0 },
    }
}

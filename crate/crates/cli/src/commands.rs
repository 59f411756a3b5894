//! The four subcommands as pure functions from a resolved config to a report.

use serde::Serialize;
use specbound_core::numerics::{bound_count_discrepancy, compare_spectra, fd_eigenvalues, CountDiscrepancy, NumericsError};
use specbound_core::parametric::Branch;
use specbound_core::potentials::{closed_form_energy, oracle_grid, spectrum, Family};
use specbound_core::{Grid, Oracle};

use crate::config::RunConfig;
use crate::error::CliError;

/// Closed form and residual root must agree to this relative tolerance.
pub const CLOSED_FORM_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Serialize)]
pub struct FamilyDescriptor {
    pub case: usize,
    pub family: &'static str,
    pub branch: Branch,
    pub c3: &'static str,
    pub params: Vec<ParamDescriptor>,
    pub radial: bool,
    pub supported_l: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParamDescriptor {
    pub name: &'static str,
    pub unit: &'static str,
}

pub fn list() -> Vec<FamilyDescriptor> {
    Family::ALL
        .iter()
        .enumerate()
        .map(|(i, f)| FamilyDescriptor {
            case: i + 1,
            family: f.name(),
            branch: f.branch(),
            c3: match f.branch() {
                Branch::Laguerre => "c3 = 0",
                Branch::Jacobi => "nonzero c3",
            },
            params: f.params().iter().map(|p| ParamDescriptor { name: p.name, unit: p.unit }).collect(),
            radial: f.is_radial(),
            supported_l: if f.supports_l() { "any" } else { "0" },
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumRow {
    pub family: &'static str,
    pub n: usize,
    pub l: usize,
    pub energy: f64,
    pub residual: f64,
    pub branch: Branch,
    pub p: f64,
    pub q: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub config: RunConfig,
    pub levels: Vec<SpectrumRow>,
}

pub fn run_spectrum(cfg: &RunConfig) -> Result<SpectrumReport, CliError> {
    cfg.validate()?;
    let states = spectrum(&cfg.potential, cfg.l, &cfg.units, cfg.n_max)?;
    let family = cfg.potential.family().name();
    let levels = states
        .iter()
        .map(|s| {
            let (p, q) = s.branch_constants.p_q();
            SpectrumRow {
                family,
                n: s.n,
                l: s.l,
                energy: s.energy,
                residual: s.residual,
                branch: s.branch_constants.branch(),
                p,
                q,
            }
        })
        .collect();
    Ok(SpectrumReport { config: cfg.clone(), levels })
}

#[derive(Debug, Clone, Serialize)]
pub struct WavefunctionRow {
    pub x: f64,
    pub psi: f64,
    pub psi_squared_weighted: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct WavefunctionReport {
    pub config: RunConfig,
    pub n: usize,
    pub energy: f64,
    pub norm_constant: f64,
    pub samples: Vec<WavefunctionRow>,
}

fn resolved_grid(cfg: &RunConfig, n_max: usize) -> Result<Grid, CliError> {
    match cfg.grid {
        Some(g) => Ok(g),
        None => Ok(oracle_grid(&cfg.potential, cfg.l, &cfg.units, n_max)?),
    }
}

/// Normalized `ψ` of level `n` on `samples` uniform points of the grid.
/// Radial families report `R(r)`; the weighted density is `R² r²`.
pub fn run_wavefunction(cfg: &RunConfig, n: usize, samples: usize) -> Result<WavefunctionReport, CliError> {
    cfg.validate()?;
    if samples < 3 {
        return Err(CliError::Invalid(format!("--samples must be at least 3, got {samples}")));
    }
    let states = spectrum(&cfg.potential, cfg.l, &cfg.units, n)?;
    let Some(state) = states.get(n) else {
        return Err(CliError::NoBoundState(format!(
            "{} has no bound state with n = {n}, l = {} ({} level(s) exist)",
            cfg.potential.family(),
            cfg.l,
            states.len()
        )));
    };
    let grid = resolved_grid(cfg, n)?;
    let h = (grid.x_max - grid.x_min) / (samples - 1) as f64;
    let rows = (0..samples)
        .map(|i| {
            let x = if i + 1 == samples { grid.x_max } else { grid.x_min + h * i as f64 };
            let psi = state.wavefunction(x)?;
            Ok(WavefunctionRow { x, psi, psi_squared_weighted: state.density(x)? })
        })
        .collect::<Result<Vec<_>, specbound_core::potentials::PotentialError>>()?;
    let mut config = cfg.clone();
    config.grid = Some(grid);
    Ok(WavefunctionReport { config, n, energy: state.energy, norm_constant: state.norm_constant, samples: rows })
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub family: &'static str,
    pub n: usize,
    pub l: usize,
    pub residual_root: f64,
    pub closed_form: Option<f64>,
    pub oracle: Option<f64>,
    pub rel_closed_form: Option<f64>,
    pub rel_oracle: Option<f64>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub config: RunConfig,
    pub levels: Vec<VerifyRow>,
    pub analytic_levels: usize,
    pub oracle_levels: usize,
    pub worst_rel_oracle: f64,
    pub worst_rel_closed_form: f64,
    pub closed_form_tol: f64,
    pub count_discrepancy: Option<CountDiscrepancy>,
    pub grid_adequate: bool,
    pub richardson_shift: f64,
    pub pass: bool,
}

impl VerifyReport {
    pub fn exit_code(&self) -> i32 {
        if self.analytic_levels == 0 {
            3
        } else if self.pass {
            0
        } else {
            4
        }
    }
}

/// Three-way table: residual root, closed form, finite-difference oracle.
pub fn run_verify(cfg: &RunConfig) -> Result<VerifyReport, CliError> {
    cfg.validate()?;
    let spec = &cfg.potential;
    let states = spectrum(spec, cfg.l, &cfg.units, cfg.n_max)?;
    let grid = resolved_grid(cfg, cfg.n_max)?;
    let oracle: Oracle = match fd_eigenvalues(spec, cfg.l, &cfg.units, &grid, cfg.n_max + 1) {
        Ok(o) => o,
        Err(NumericsError::GridTooCoarse { spectrum, .. }) => *spectrum,
        Err(e) => return Err(CliError::Invalid(e.to_string())),
    };
    let mut cmp = compare_spectra(&states, &oracle, cfg.rel_tol);
    if states.len() < cfg.n_max + 1 {
        cmp.flag_count(bound_count_discrepancy(states.len(), &oracle));
    }
    let family = spec.family().name();
    let mut worst_cf = 0.0f64;
    let mut all_cf = true;
    let levels: Vec<VerifyRow> = states
        .iter()
        .zip(&cmp.levels)
        .map(|(s, lc)| {
            let cf = closed_form_energy(spec, cfg.l, &cfg.units, s.n).ok();
            let rel_cf = cf.map(|c| (c - s.energy).abs() / s.energy.abs().max(f64::MIN_POSITIVE));
            let cf_ok = rel_cf.is_some_and(|r| r < CLOSED_FORM_TOL);
            if let Some(r) = rel_cf {
                worst_cf = worst_cf.max(r);
            }
            all_cf &= cf_ok;
            VerifyRow {
                family,
                n: s.n,
                l: s.l,
                residual_root: s.energy,
                closed_form: cf,
                oracle: lc.oracle,
                rel_closed_form: rel_cf,
                rel_oracle: lc.rel_diff,
                pass: lc.pass && cf_ok,
            }
        })
        .collect();
    let mut config = cfg.clone();
    config.grid = Some(grid);
    Ok(VerifyReport {
        config,
        analytic_levels: states.len(),
        oracle_levels: oracle.eigenvalues.len(),
        worst_rel_oracle: cmp.worst_rel_diff,
        worst_rel_closed_form: worst_cf,
        closed_form_tol: CLOSED_FORM_TOL,
        count_discrepancy: cmp.count_discrepancy,
        grid_adequate: cmp.grid_adequate,
        richardson_shift: cmp.richardson_shift,
        pass: cmp.pass && all_cf && !levels.is_empty(),
        levels,
    })
}

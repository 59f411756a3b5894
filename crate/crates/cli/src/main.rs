use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use specbound::commands::{self, VerifyReport};
use specbound::config::{self, OutputFormat, RunConfig};
use specbound::output::{write_csv, write_json, write_list_text};
use specbound::CliError;
use specbound_core::potentials::UnitsConfig;

#[derive(Parser)]
#[command(name = "specbound", version, about = "Closed-form bound-state spectra of exactly solvable potentials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Catalogue of supported potential families.
    List {
        #[arg(long, value_enum)]
        format: Option<ListFormat>,
    },
    /// Bound-state energies n = 0..=n_max.
    Spectrum(RunArgs),
    /// Normalized wavefunction of one level on a uniform grid.
    Wavefunction {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long = "n", default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = config::DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Compare residual roots, closed forms and a finite-difference oracle.
    Verify(RunArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct RunArgs {
    /// Family name, e.g. Coulomb, GeneralizedMorse, WoodsSaxon.
    #[arg(long)]
    potential: Option<String>,
    /// Parameter as key=value; repeat for each parameter.
    #[arg(long = "param", allow_hyphen_values = true)]
    params: Vec<String>,
    #[arg(long = "l")]
    l: Option<usize>,
    #[arg(long = "n-max")]
    n_max: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    hbar: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    mass: Option<f64>,
    /// Oracle grid as xmin,xmax,npts.
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    #[arg(long = "rel-tol")]
    rel_tol: Option<f64>,
    /// JSON file with one run or an array of runs.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl RunArgs {
    fn resolve(&self) -> Result<(Vec<RunConfig>, OutputFormat), CliError> {
        let mut runs = match (&self.config, &self.potential) {
            (Some(_), Some(_)) => return Err(CliError::Invalid("give either --config or --potential, not both".into())),
            (Some(path), None) => {
                if !self.params.is_empty() {
                    return Err(CliError::Invalid("--param needs --potential".into()));
                }
                config::load_config(path)?
            }
            (None, Some(name)) => vec![RunConfig::new(config::spec_from_params(name, &self.params)?)],
            (None, None) => return Err(CliError::Invalid("one of --potential or --config is required".into())),
        };
        if runs.is_empty() {
            return Err(CliError::Invalid("config file holds no runs".into()));
        }
        let grid = self.grid.as_deref().map(config::parse_grid).transpose()?;
        let format = config::resolve_format(self.format, runs[0].output_format)?;
        for run in &mut runs {
            if let Some(l) = self.l {
                run.l = l;
            }
            if let Some(n) = self.n_max {
                run.n_max = n;
            }
            if self.hbar.is_some() || self.mass.is_some() {
                run.units = UnitsConfig::new(self.hbar.unwrap_or(run.units.hbar), self.mass.unwrap_or(run.units.mass))
                    .map_err(|e| CliError::Invalid(e.to_string()))?;
            }
            if grid.is_some() {
                run.grid = grid;
            }
            if let Some(t) = self.rel_tol {
                run.rel_tol = t;
            }
            run.output_format = Some(format);
            run.validate()?;
        }
        Ok((runs, format))
    }
}

fn echo_config(cfg: &RunConfig) {
    if let Ok(text) = serde_json::to_string(cfg) {
        eprintln!("# config: {text}");
    }
}

/// Runs each config; the worst outcome decides the exit code (2 > 4 > 3 > 0).
fn sweep<R, F>(runs: &[RunConfig], f: F) -> (Vec<R>, i32)
where
    F: Fn(&RunConfig) -> Result<(R, i32), CliError>,
{
    let rank = |c: i32| match c {
        2 => 3,
        4 => 2,
        3 => 1,
        _ => 0,
    };
    let mut out = Vec::new();
    let mut code = 0;
    for run in runs {
        let c = match f(run) {
            Ok((r, c)) => {
                out.push(r);
                c
            }
            Err(e) => {
                eprintln!("error: {} (l = {}): {e}", run.potential.family(), run.l);
                e.exit_code()
            }
        };
        if rank(c) > rank(code) {
            code = c;
        }
    }
    (out, code)
}

fn emit_json<T: serde::Serialize>(reports: &[T]) -> Result<(), CliError> {
    let stdout = std::io::stdout().lock();
    if reports.len() == 1 {
        write_json(stdout, &reports[0])
    } else {
        write_json(stdout, reports)
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::List { format } => {
            let rows = commands::list();
            let out = std::io::stdout().lock();
            match format.unwrap_or(ListFormat::Text) {
                ListFormat::Text => write_list_text(out, &rows)?,
                ListFormat::Json => write_json(out, &rows)?,
                ListFormat::Csv => write_csv(out, &rows)?,
            }
            Ok(0)
        }
        Command::Spectrum(args) => {
            let (runs, format) = args.resolve()?;
            let (reports, code) = sweep(&runs, |c| {
                let r = commands::run_spectrum(c)?;
                let code = if r.levels.is_empty() { 3 } else { 0 };
                Ok((r, code))
            });
            match format {
                OutputFormat::Json => emit_json(&reports)?,
                OutputFormat::Csv => {
                    reports.iter().for_each(|r| echo_config(&r.config));
                    let rows: Vec<_> = reports.into_iter().flat_map(|r| r.levels).collect();
                    write_csv(std::io::stdout().lock(), &rows)?;
                }
            }
            Ok(code)
        }
        Command::Wavefunction { run, n, samples } => {
            let (runs, format) = run.resolve()?;
            let (reports, code) = sweep(&runs, |c| Ok((commands::run_wavefunction(c, n, samples)?, 0)));
            match format {
                OutputFormat::Json => {
                    if !reports.is_empty() {
                        emit_json(&reports)?
                    }
                }
                OutputFormat::Csv => {
                    reports.iter().for_each(|r| echo_config(&r.config));
                    let rows: Vec<_> = reports.into_iter().flat_map(|r| r.samples).collect();
                    write_csv(std::io::stdout().lock(), &rows)?;
                }
            }
            Ok(code)
        }
        Command::Verify(args) => {
            let (runs, format) = args.resolve()?;
            let (reports, code) = sweep(&runs, |c| {
                let r = commands::run_verify(c)?;
                let code = r.exit_code();
                Ok((r, code))
            });
            match format {
                OutputFormat::Json => emit_json(&reports)?,
                OutputFormat::Csv => {
                    reports.iter().for_each(|r: &VerifyReport| {
                        echo_config(&r.config);
                        eprintln!(
                            "# {}: worst rel diff {:.3e} (tol {:.1e}), richardson shift {:.3e}, grid adequate {}, pass {}",
                            r.config.potential.family(),
                            r.worst_rel_oracle,
                            r.config.rel_tol,
                            r.richardson_shift,
                            r.grid_adequate,
                            r.pass
                        );
                    });
                    let rows: Vec<_> = reports.into_iter().flat_map(|r| r.levels).collect();
                    write_csv(std::io::stdout().lock(), &rows)?;
                }
            }
            Ok(code)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}

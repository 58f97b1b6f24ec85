//! Command-line front end for the `quadspin` library.
//!
//! [`run`] parses arguments, loads an optional config file, validates every
//! input and only then computes. Results go to standard output or to
//! `--output`; diagnostics go to the error stream.

mod args;
pub mod config;
pub mod format;

use std::f64::consts::PI;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use quadspin::analysis::{
    critical_beta, evaluate_point, fit_witness, maximize_concurrence_in_theta_range, run_sweep,
    witness_grid, Axis, Parameter, SweepGrid, DEFAULT_ONSET_THRESHOLD,
};
use quadspin::hamiltonian::{builtin_presets, find_preset, temperature_for_beta};
use quadspin::{Error, HamiltonianParams, QuadrupoleModel, Spin, TemperatureConvention};
use serde_json::json;
use thiserror::Error as ThisError;

use args::{Angles, Common, CriticalTempArgs, FitWitnessArgs, MaxAnglesArgs, PointArgs, SweepArgs};
pub use args::{Cli, Command, Format};
use config::Config;
use format::{g12, sweep_csv, witness_csv};

pub const THREADS_ENV: &str = "QUADSPIN_THREADS";

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    InsufficientData(String),
    #[error("{0}")]
    Computation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Computation(_) => 1,
            Self::Validation(_) => 2,
            Self::Io(_) => 3,
            Self::InsufficientData(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let base = match &e {
            Error::PointFailed { source, .. } => source.as_ref(),
            other => other,
        };
        match base {
            Error::InsufficientPoints { .. } => Self::InsufficientData(e.to_string()),
            Error::OutOfRange { .. }
            | Error::InvalidGrid(_)
            | Error::UnknownPreset(_)
            | Error::InvalidSpin(_)
            | Error::NonPositiveTemperature(_) => Self::Validation(e.to_string()),
            _ => Self::Computation(e.to_string()),
        }
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return e.exit_code().clamp(0, 255) as u8;
        }
    };
    match execute(cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    let threads = match std::env::var(THREADS_ENV) {
        Err(_) => 0,
        Ok(v) => v.trim().parse::<usize>().map_err(|_| {
            CliError::Validation(format!(
                "{THREADS_ENV} must be a non-negative integer, got `{v}`"
            ))
        })?,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Computation(format!("cannot start worker threads: {e}")))?;
    let job = resolve(cli.command)?;
    let output = pool.install(|| job.compute())?;
    emit(&output.text, output.path.as_deref(), stdout)?;
    if let Some(summary) = output.summary {
        stdout
            .write_all(summary.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write to standard output: {e}")))?;
    }
    Ok(())
}

fn emit(text: &str, path: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write to standard output: {e}"))),
    }
}

/// Fully validated parameters of one subcommand.
#[derive(Debug, Clone, PartialEq)]
pub enum RunConfig {
    Point {
        params: HamiltonianParams,
        format: Format,
        output: Option<PathBuf>,
    },
    Sweep {
        grid: SweepGrid,
        format: Format,
        output: Option<PathBuf>,
    },
    MaxAngles {
        alpha: f64,
        beta: f64,
        eta: f64,
        theta_window: (f64, f64),
        format: Format,
        output: Option<PathBuf>,
    },
    CriticalTemp {
        preset: quadspin::MaterialPreset,
        ratio: f64,
        eta: f64,
        theta: f64,
        phi: f64,
        threshold: f64,
        convention: TemperatureConvention,
        format: Format,
        output: Option<PathBuf>,
    },
    FitWitness {
        beta: f64,
        eta: f64,
        theta: f64,
        phi: f64,
        alpha_max: f64,
        points: usize,
        format: Format,
        output: Option<PathBuf>,
    },
}

struct Output {
    text: String,
    path: Option<PathBuf>,
    /// Printed to standard output after `text` went to a file.
    summary: Option<String>,
}

/// Merges flags over the config file and validates the result.
struct Resolver {
    config: Config,
    degrees: bool,
    format: Format,
    output: Option<PathBuf>,
}

impl Resolver {
    fn new(common: Common) -> Result<Self, CliError> {
        let mut config = match &common.config {
            Some(path) => Config::load(path)?,
            None => Config::default(),
        };
        let degrees = common.degrees || config.take_bool("degrees")?.unwrap_or(false);
        let config_format = match config.take_string("format")? {
            None => None,
            Some(s) => Some(Format::from_str(&s, false).map_err(|_| {
                CliError::Validation(format!(
                    "config key `format`: expected csv or json, got `{s}`"
                ))
            })?),
        };
        let config_output = config.take_string("output")?.map(PathBuf::from);
        Ok(Self {
            config,
            degrees,
            format: common.format.or(config_format).unwrap_or(Format::Csv),
            output: common.output.or(config_output),
        })
    }

    fn number(&mut self, flag: &str, cli: Option<f64>) -> Result<Option<f64>, CliError> {
        let from_config = self.config.take::<f64>(flag)?;
        Ok(cli.or(from_config))
    }

    fn required(&mut self, flag: &str, cli: Option<f64>) -> Result<f64, CliError> {
        self.number(flag, cli)?.ok_or_else(|| {
            CliError::Validation(format!("missing --{flag} (flag or config key `{flag}`)"))
        })
    }

    fn angle(&mut self, flag: &str, cli: Option<f64>) -> Result<Option<f64>, CliError> {
        let degrees = self.degrees;
        Ok(self
            .number(flag, cli)?
            .map(|v| if degrees { v.to_radians() } else { v }))
    }

    fn checked(&self, flag: &str, parameter: Parameter, value: f64) -> Result<f64, CliError> {
        parameter.check(value).map_err(|_| {
            let unit = if self.degrees && matches!(parameter, Parameter::Theta | Parameter::Phi) {
                " rad after degree conversion"
            } else {
                ""
            };
            CliError::Validation(format!(
                "invalid --{flag}: {value}{unit} is outside {}",
                parameter.range_description()
            ))
        })?;
        Ok(value)
    }

    fn param(
        &mut self,
        flag: &str,
        parameter: Parameter,
        cli: Option<f64>,
    ) -> Result<f64, CliError> {
        let v = self.required(flag, cli)?;
        self.checked(flag, parameter, v)
    }

    fn angles(&mut self, angles: Angles) -> Result<(f64, f64), CliError> {
        let theta = self.angle("theta", angles.theta)?.ok_or_else(|| {
            CliError::Validation("missing --theta (flag or config key `theta`)".into())
        })?;
        let phi = self.angle("phi", angles.phi)?.unwrap_or(0.0);
        Ok((
            self.checked("theta", Parameter::Theta, theta)?,
            self.checked("phi", Parameter::Phi, phi)?,
        ))
    }

    fn positive(
        &mut self,
        flag: &str,
        cli: Option<f64>,
        default: Option<f64>,
    ) -> Result<f64, CliError> {
        let v = match default {
            Some(d) => self.number(flag, cli)?.unwrap_or(d),
            None => self.required(flag, cli)?,
        };
        if !(v > 0.0 && v.is_finite()) {
            return Err(CliError::Validation(format!(
                "invalid --{flag}: {v} is outside (0, inf)"
            )));
        }
        Ok(v)
    }

    fn finish(self) -> Result<(Format, Option<PathBuf>), CliError> {
        self.config.finish()?;
        Ok((self.format, self.output))
    }
}

fn parse_axis(spec: &str, degrees: bool) -> Result<Axis, CliError> {
    let bad = || {
        CliError::Validation(format!(
            "invalid --axis `{spec}`: expected name:start:stop:count"
        ))
    };
    let parts: Vec<&str> = spec.split(':').collect();
    let [name, start, stop, count] = parts.as_slice() else {
        return Err(bad());
    };
    let parameter: Parameter = name.parse().map_err(|_| {
        CliError::Validation(format!(
            "invalid --axis `{spec}`: unknown parameter `{name}`"
        ))
    })?;
    let mut start: f64 = start.parse().map_err(|_| bad())?;
    let mut stop: f64 = stop.parse().map_err(|_| bad())?;
    let count: usize = count.parse().map_err(|_| bad())?;
    if degrees && matches!(parameter, Parameter::Theta | Parameter::Phi) {
        start = start.to_radians();
        stop = stop.to_radians();
    }
    Axis::new(parameter, start, stop, count)
        .map_err(|e| CliError::Validation(format!("invalid --axis `{spec}`: {e}")))
}

/// Turns parsed arguments plus config into a validated [`RunConfig`].
pub fn resolve(command: Command) -> Result<RunConfig, CliError> {
    match command {
        Command::Point(a) => resolve_point(a),
        Command::Sweep(a) => resolve_sweep(a),
        Command::MaxAngles(a) => resolve_max_angles(a),
        Command::CriticalTemp(a) => resolve_critical_temp(a),
        Command::FitWitness(a) => resolve_fit_witness(a),
    }
}

fn resolve_point(a: PointArgs) -> Result<RunConfig, CliError> {
    let mut r = Resolver::new(a.common)?;
    let alpha = r.param("alpha", Parameter::Alpha, a.alpha)?;
    let beta = r.param("beta", Parameter::Beta, a.beta)?;
    let eta = r.param("eta", Parameter::Eta, a.eta)?;
    let (theta, phi) = r.angles(a.angles)?;
    let (format, output) = r.finish()?;
    Ok(RunConfig::Point {
        params: HamiltonianParams::from_values(alpha, beta, eta, theta, phi)?,
        format,
        output,
    })
}

fn resolve_sweep(a: SweepArgs) -> Result<RunConfig, CliError> {
    let mut r = Resolver::new(a.common)?;
    let config_axes = r.config.take_all("axis");
    let specs = if a.axes.is_empty() {
        config_axes
    } else {
        a.axes
    };
    let axes = specs
        .iter()
        .map(|s| parse_axis(s, r.degrees))
        .collect::<Result<Vec<_>, _>>()?;
    let swept = |p: Parameter| axes.iter().any(|x| x.parameter == p);
    let ratio = r.number("ratio-alpha-beta", a.ratio_alpha_beta)?;
    if let Some(v) = ratio {
        if !(v >= 0.0 && v.is_finite()) {
            return Err(CliError::Validation(format!(
                "invalid --ratio-alpha-beta: {v} is outside [0, inf)"
            )));
        }
    }
    let mut fixed = std::collections::BTreeMap::new();
    let values = [
        (Parameter::Alpha, r.number("alpha", a.alpha)?),
        (Parameter::Beta, r.number("beta", a.beta)?),
        (Parameter::Eta, r.number("eta", a.eta)?),
        (Parameter::Theta, r.angle("theta", a.angles.theta)?),
        (Parameter::Phi, r.angle("phi", a.angles.phi)?),
    ];
    for (p, v) in values {
        match v {
            Some(v) if swept(p) => {
                return Err(CliError::Validation(format!(
                    "--{p} = {v} conflicts with the {p} axis"
                )))
            }
            Some(v) => {
                fixed.insert(p, r.checked(p.name(), p, v)?);
            }
            None if p == Parameter::Phi && !swept(p) => {
                fixed.insert(p, 0.0);
            }
            None => {}
        }
    }
    for p in Parameter::ALL {
        let tied = p == Parameter::Alpha && ratio.is_some();
        if !tied && !swept(p) && !fixed.contains_key(&p) {
            return Err(CliError::Validation(format!(
                "missing --{p}: give a value or an --axis for it"
            )));
        }
    }
    let (format, output) = r.finish()?;
    Ok(RunConfig::Sweep {
        grid: SweepGrid::new(axes, fixed, ratio)?,
        format,
        output,
    })
}

fn resolve_max_angles(a: MaxAnglesArgs) -> Result<RunConfig, CliError> {
    let mut r = Resolver::new(a.common)?;
    let alpha = r.param("alpha", Parameter::Alpha, a.alpha)?;
    let beta = r.param("beta", Parameter::Beta, a.beta)?;
    let eta = r.param("eta", Parameter::Eta, a.eta)?;
    let lo = r.angle("theta-min", a.theta_min)?.unwrap_or(0.0);
    let hi = r.angle("theta-max", a.theta_max)?.unwrap_or(PI);
    let lo = r.checked("theta-min", Parameter::Theta, lo)?;
    let hi = r.checked("theta-max", Parameter::Theta, hi)?;
    if lo > hi {
        return Err(CliError::Validation(format!(
            "--theta-min {lo} exceeds --theta-max {hi}"
        )));
    }
    let (format, output) = r.finish()?;
    Ok(RunConfig::MaxAngles {
        alpha,
        beta,
        eta,
        theta_window: (lo, hi),
        format,
        output,
    })
}

fn resolve_critical_temp(a: CriticalTempArgs) -> Result<RunConfig, CliError> {
    let mut r = Resolver::new(a.common)?;
    let name = match a.preset {
        Some(p) => {
            r.config.take_string("preset")?;
            p
        }
        None => r.config.take_string("preset")?.ok_or_else(|| {
            CliError::Validation("missing --preset (flag or config key `preset`)".into())
        })?,
    };
    let mut presets = builtin_presets();
    presets.extend(r.config.presets().iter().cloned());
    let preset = find_preset(&presets, &name)
        .map_err(|_| {
            let known: Vec<&str> = presets.iter().map(|p| p.name.as_str()).collect();
            CliError::Validation(format!(
                "invalid --preset: unknown preset `{name}` (known: {})",
                known.join(", ")
            ))
        })?
        .clone();
    let ratio = r.positive("ratio", a.ratio, None)?;
    let eta = r.number("eta", a.eta)?.unwrap_or(preset.eta);
    let eta = r.checked("eta", Parameter::Eta, eta)?;
    let (theta, phi) = r.angles(a.angles)?;
    let threshold = r
        .number("threshold", a.threshold)?
        .unwrap_or(DEFAULT_ONSET_THRESHOLD);
    if !(threshold >= 0.0 && threshold.is_finite()) {
        return Err(CliError::Validation(format!(
            "invalid --threshold: {threshold} is outside [0, inf)"
        )));
    }
    let convention = match a.convention {
        Some(c) => {
            r.config.take_string("convention")?;
            Some(c)
        }
        None => r.config.take_string("convention")?,
    };
    let convention = match convention {
        None => TemperatureConvention::Eq7,
        Some(c) => c
            .parse()
            .map_err(|e: String| CliError::Validation(format!("invalid --convention: {e}")))?,
    };
    let (format, output) = r.finish()?;
    Ok(RunConfig::CriticalTemp {
        preset,
        ratio,
        eta,
        theta,
        phi,
        threshold,
        convention,
        format,
        output,
    })
}

fn resolve_fit_witness(a: FitWitnessArgs) -> Result<RunConfig, CliError> {
    let mut r = Resolver::new(a.common)?;
    let beta = r.param("beta", Parameter::Beta, a.beta)?;
    let eta = r.param("eta", Parameter::Eta, a.eta)?;
    let (theta, phi) = r.angles(a.angles)?;
    let alpha_max = r.positive("alpha-max", a.alpha_max, Some(1.0))?;
    let from_config = r.config.take::<usize>("points")?;
    let points = a.points.or(from_config).unwrap_or(50);
    let (format, output) = r.finish()?;
    Ok(RunConfig::FitWitness {
        beta,
        eta,
        theta,
        phi,
        alpha_max,
        points,
        format,
        output,
    })
}

fn list(values: &[f64]) -> String {
    values.iter().map(|&v| g12(v)).collect::<Vec<_>>().join(" ")
}

fn key_values(pairs: &[(&str, String)]) -> String {
    pairs.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
}

fn to_json(value: &impl serde::Serialize) -> Result<String, CliError> {
    let mut s =
        serde_json::to_string_pretty(value).map_err(|e| CliError::Computation(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

impl RunConfig {
    fn compute(&self) -> Result<Output, CliError> {
        match self {
            Self::Point {
                params,
                format,
                output,
            } => {
                let model = QuadrupoleModel::new(Spin::THREE_HALVES);
                let e = evaluate_point(&model, params)?;
                let o = params.orientation();
                let text = match format {
                    Format::Csv => key_values(&[
                        ("alpha", g12(params.alpha())),
                        ("beta", g12(params.beta())),
                        ("eta", g12(params.eta())),
                        ("theta", g12(o.theta())),
                        ("phi", g12(o.phi())),
                        ("concurrence", g12(e.concurrence.concurrence)),
                        ("magnetization", g12(e.magnetization)),
                        ("lambda", list(&e.concurrence.lambda)),
                        ("energies", list(&e.energies)),
                    ]),
                    Format::Json => to_json(&json!({
                        "alpha": params.alpha(),
                        "beta": params.beta(),
                        "eta": params.eta(),
                        "theta": o.theta(),
                        "phi": o.phi(),
                        "concurrence": e.concurrence.concurrence,
                        "magnetization": e.magnetization,
                        "lambda": e.concurrence.lambda,
                        "energies": e.energies,
                        "entangled": e.concurrence.entangled,
                    }))?,
                };
                Ok(Output {
                    text,
                    path: output.clone(),
                    summary: None,
                })
            }
            Self::Sweep {
                grid,
                format,
                output,
            } => {
                let result = run_sweep(grid, Spin::THREE_HALVES)?;
                let text = match format {
                    Format::Csv => sweep_csv(&result.records),
                    Format::Json => to_json(&result)?,
                };
                Ok(Output {
                    text,
                    path: output.clone(),
                    summary: None,
                })
            }
            Self::MaxAngles {
                alpha,
                beta,
                eta,
                theta_window,
                format,
                output,
            } => {
                let m = maximize_concurrence_in_theta_range(
                    *alpha,
                    *beta,
                    *eta,
                    theta_window.0,
                    theta_window.1,
                )?;
                let text = match format {
                    Format::Csv => key_values(&[
                        ("theta", g12(m.theta)),
                        ("phi", g12(m.phi)),
                        ("concurrence", g12(m.concurrence)),
                    ]),
                    Format::Json => to_json(&m)?,
                };
                Ok(Output {
                    text,
                    path: output.clone(),
                    summary: None,
                })
            }
            Self::CriticalTemp {
                preset,
                ratio,
                eta,
                theta,
                phi,
                threshold,
                convention,
                format,
                output,
            } => {
                let beta_c = critical_beta(*ratio, *eta, *theta, *phi, *threshold)?;
                let mk = |c: TemperatureConvention| -> Result<f64, CliError> {
                    Ok(1e3
                        * temperature_for_beta(
                            beta_c,
                            preset.quadrupole_coupling_mhz,
                            Spin::THREE_HALVES,
                            c,
                        )?)
                };
                let (eq7, paper) = (
                    mk(TemperatureConvention::Eq7)?,
                    mk(TemperatureConvention::PaperMk)?,
                );
                let selected = mk(*convention)?;
                let text = match format {
                    Format::Csv => key_values(&[
                        ("preset", preset.name.clone()),
                        ("beta_c", g12(beta_c)),
                        ("alpha_c", g12(ratio * beta_c)),
                        ("T_c[eq7]", format!("{} mK", g12(eq7))),
                        ("T_c[paper-mk]", format!("{} mK", g12(paper))),
                        ("convention", convention.to_string()),
                        ("T_c", format!("{} mK", g12(selected))),
                    ]),
                    Format::Json => to_json(&json!({
                        "preset": preset,
                        "beta_c": beta_c,
                        "alpha_c": ratio * beta_c,
                        "temperature_mk": { "eq7": eq7, "paper-mk": paper },
                        "convention": convention.as_str(),
                        "selected_temperature_mk": selected,
                    }))?,
                };
                Ok(Output {
                    text,
                    path: output.clone(),
                    summary: None,
                })
            }
            Self::FitWitness {
                beta,
                eta,
                theta,
                phi,
                alpha_max,
                points,
                format,
                output,
            } => {
                let grid = witness_grid(*beta, *eta, *theta, *phi, *alpha_max, *points)?;
                let sweep = run_sweep(&grid, Spin::THREE_HALVES)?;
                let fit = fit_witness(&sweep, *alpha_max)?;
                let summary = key_values(&[
                    ("slope", g12(fit.slope)),
                    ("intercept", g12(fit.intercept)),
                    ("max_abs_residual", g12(fit.max_abs_residual)),
                    ("witness_constant", g12(fit.witness_constant())),
                    (
                        "alpha_range",
                        format!("{} {}", g12(fit.valid_range.0), g12(fit.valid_range.1)),
                    ),
                    ("points", fit.points.to_string()),
                ]);
                let used: Vec<_> = sweep
                    .records
                    .iter()
                    .filter(|r| r.alpha > 0.0 && r.alpha <= *alpha_max)
                    .cloned()
                    .collect();
                let data = match format {
                    Format::Csv => witness_csv(&used, &fit),
                    Format::Json => to_json(&json!({ "fit": fit, "records": used }))?,
                };
                Ok(match (output, format) {
                    (Some(path), _) => Output {
                        text: data,
                        path: Some(path.clone()),
                        summary: Some(summary),
                    },
                    (None, Format::Csv) => {
                        let commented: String =
                            summary.lines().map(|l| format!("# {l}\n")).collect();
                        Output {
                            text: commented + &data,
                            path: None,
                            summary: None,
                        }
                    }
                    (None, Format::Json) => Output {
                        text: data,
                        path: None,
                        summary: None,
                    },
                })
            }
        }
    }
}

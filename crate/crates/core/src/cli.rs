//! Batch command-line front end.
//!
//! Every command writes its reports into the output directory (`--output`,
//! else `$LSILAB_OUTPUT_DIR`, else the working directory) and exits with
//!
//! - `0` on success,
//! - `1` on I/O or validation errors,
//! - `2` when a proven inequality is observed violated beyond tolerance,
//! - `3` when the conjecture probe finds a candidate counterexample.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::LabError;
use crate::experiments::{
    diaz_probe_with, eigenvalue_check, extrapolate_constant, minimize_deficit_with,
    sharpness_sweep, wang_ode_residual, DiazProbeReport, OptimizerConfig, ProbeSettings,
    SweepRecord,
};
use crate::formats::{
    read_grid_csv, series_from_json, to_json_string, write_grid_csv, DomainHint, FormatError,
};
use crate::function_space::{
    from_fourier, sample_family, to_fourier, Domain, Family, GridFunction,
};
use crate::functionals::{
    l2_mass, lsi_deficit_circle, lsi_deficit_density_form_scaled, lsi_deficit_general,
    lsi_deficit_interval, mean, normalized_entropy, root_mean_square, weissler_bound,
    wirtinger_deficit, BoundPower, FunctionalReport,
};
use crate::tolerances::{
    DEFAULT_CIRCLE_N, DEFAULT_INTERVAL_N, DEFAULT_N_MAX, DEFICIT, DIAZ_FLAG, EIGENVALUE,
    MAX_SAMPLES, MIN_SAMPLES, OPTIMIZER_DEFICIT, POSITIVITY_FLOOR, WANG_RESIDUAL, ZERO_MASS,
};
use crate::transforms::{affine_normalize, reflect_to_circle, sqrt_lift, TransformCertificate};

/// Environment variable naming the default output directory.
pub const OUTPUT_DIR_ENV: &str = "LSILAB_OUTPUT_DIR";

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_VIOLATION: u8 = 2;
pub const EXIT_COUNTEREXAMPLE: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lsilab",
    version,
    about = "Sharp log-Sobolev inequality laboratory"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,

    /// Directory for reports (default: $LSILAB_OUTPUT_DIR, then `.`).
    #[arg(long, global = true, value_name = "DIR")]
    output: Option<PathBuf>,

    /// Tolerance override, e.g. `--tol deficit=1e-9`. Keys: deficit,
    /// optimizer, wang, diaz, eigen.
    #[arg(long = "tol", global = true, value_name = "KEY=VALUE")]
    tol: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Mass, entropy, energy and the sharp deficit of one function.
    Functional(SourceArgs),
    /// Check every proven inequality that applies to one function.
    Verify(SourceArgs),
    /// Even reflection of a function on [0, 1] onto the unit circle.
    Reflect(SourceArgs),
    /// Affine map of an interval function onto [0, 1] with unit mass.
    Normalize(SourceArgs),
    /// Pointwise square root of a positive function.
    SqrtLift(SourceArgs),
    /// Energy/entropy ratio along the sharpness family.
    Sweep(SweepArgs),
    /// Residual of the perturbed-density ODE.
    Wang(WangArgs),
    /// Minimize the sharp deficit over trigonometric trial functions.
    Optimize(OptimizeArgs),
    /// Random search for counterexamples to the isoperimetric conjecture.
    Diaz(DiazArgs),
    /// First nonzero Laplacian eigenvalue on the unit circle.
    Eigen(EigenArgs),
    /// Fourier-coefficient bounds on the circle entropy.
    Weissler(SourceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainKind {
    Interval,
    Circle,
}

#[derive(Debug, Clone, Args)]
struct SourceArgs {
    /// Grid CSV (`x,value`); `weissler` also takes a Fourier series JSON.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Synthesize the input from a named family instead of a file.
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    /// Family parameters, comma separated.
    #[arg(long = "param", value_delimiter = ',', allow_hyphen_values = true)]
    params: Vec<f64>,
    #[arg(long, value_enum, default_value = "interval")]
    domain: DomainKind,
    /// Interval endpoints `A,B` for synthesized inputs.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    bounds: Option<Vec<f64>>,
    #[arg(long)]
    circumference: Option<f64>,
    #[arg(long = "N")]
    n: Option<usize>,
    #[arg(long = "n-max", default_value_t = DEFAULT_N_MAX)]
    n_max: usize,
}

#[derive(Debug, Clone, Args)]
struct SweepArgs {
    #[arg(long, value_delimiter = ',', default_value = "0.1,0.05,0.025")]
    eps: Vec<f64>,
    #[arg(long = "N", default_value_t = DEFAULT_INTERVAL_N)]
    n: usize,
    /// Also extrapolate the ratio to ε = 0.
    #[arg(long)]
    extrapolate: bool,
}

#[derive(Debug, Clone, Args)]
struct WangArgs {
    #[arg(long, value_delimiter = ',', default_value = "0.2")]
    eps: Vec<f64>,
    #[arg(long = "N", default_value_t = DEFAULT_INTERVAL_N)]
    n: usize,
}

#[derive(Debug, Clone, Args)]
struct OptimizeArgs {
    #[arg(long, value_enum, default_value = "interval")]
    domain: DomainKind,
    #[arg(long = "n-modes", default_value_t = 16)]
    n_modes: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "max-iters", default_value_t = 5000)]
    max_iters: usize,
    /// Grid size (default 1025 on [0, 1], 1024 on the circle).
    #[arg(long = "N")]
    n: Option<usize>,
}

#[derive(Debug, Clone, Args)]
struct DiazArgs {
    #[arg(long, value_delimiter = ',', default_value = "1.25,1.5,2")]
    q: Vec<f64>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Grid size on [0, 1] (default 2049).
    #[arg(long = "N")]
    n: Option<usize>,
}

#[derive(Debug, Clone, Args)]
struct EigenArgs {
    #[arg(long = "N", default_value_t = DEFAULT_CIRCLE_N)]
    n: usize,
    #[arg(long = "n-max", default_value_t = DEFAULT_N_MAX)]
    n_max: usize,
}

/// Where a command's input function comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    File(PathBuf),
    Family(Family),
}

#[derive(Debug, Clone, PartialEq)]
pub struct InputSpec {
    pub source: Source,
    pub domain: DomainKind,
    /// Endpoints for synthesized interval inputs.
    pub bounds: (f64, f64),
    pub circumference: Option<f64>,
    pub n: Option<usize>,
    pub n_max: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Functional(InputSpec),
    Verify(InputSpec),
    Reflect(InputSpec),
    Normalize(InputSpec),
    SqrtLift(InputSpec),
    Weissler(InputSpec),
    Sweep {
        eps: Vec<f64>,
        n: usize,
        extrapolate: bool,
    },
    Wang {
        eps: Vec<f64>,
        n: usize,
    },
    Optimize {
        domain: DomainKind,
        n_modes: usize,
        seed: u64,
        max_iters: usize,
        n: Option<usize>,
    },
    Diaz {
        q: Vec<f64>,
        trials: usize,
        seed: u64,
        n: Option<usize>,
    },
    Eigen {
        n: usize,
        n_max: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Deficits of proven inequalities may dip this far below zero.
    pub deficit: f64,
    pub optimizer: f64,
    /// Largest accepted ODE residual.
    pub wang: f64,
    /// Conjecture deficits below `-diaz` are flagged.
    pub diaz: f64,
    /// Largest accepted deviation of the eigenvalue from 4π².
    pub eigen: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            deficit: DEFICIT,
            optimizer: OPTIMIZER_DEFICIT,
            wang: WANG_RESIDUAL,
            diaz: DIAZ_FLAG,
            eigen: EIGENVALUE,
        }
    }
}

impl Tolerances {
    fn set(&mut self, key: &str, value: f64) -> Result<(), CliError> {
        // A negative conjecture threshold flags every trial; useful for
        // exercising witness output.
        if !(value.is_finite() && (value >= 0.0 || key == "diaz")) {
            return Err(CliError::Usage(format!(
                "tolerance {key} must be a nonnegative number"
            )));
        }
        let slot = match key {
            "deficit" => &mut self.deficit,
            "optimizer" => &mut self.optimizer,
            "wang" => &mut self.wang,
            "diaz" => &mut self.diaz,
            "eigen" => &mut self.eigen,
            _ => return Err(CliError::Usage(format!("unknown tolerance key `{key}`"))),
        };
        *slot = value;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub output_dir: PathBuf,
    pub tolerances: Tolerances,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: FormatError },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Lab(#[from] LabError),
}

fn check_n(n: usize) -> Result<usize, CliError> {
    if (MIN_SAMPLES..=MAX_SAMPLES).contains(&n) {
        Ok(n)
    } else {
        Err(CliError::Usage(format!(
            "N must lie in [{MIN_SAMPLES}, {MAX_SAMPLES}], got {n}"
        )))
    }
}

impl InputSpec {
    fn from_args(a: SourceArgs) -> Result<Self, CliError> {
        let source = match (a.input, a.family) {
            (Some(path), None) => {
                if !a.params.is_empty() {
                    return Err(CliError::Usage("--param needs --family".into()));
                }
                Source::File(path)
            }
            (None, Some(id)) => Source::Family(Family::parse(&id, &a.params)?),
            _ => {
                return Err(CliError::Usage(
                    "give exactly one of --input or --family".into(),
                ))
            }
        };
        let bounds = match a.bounds.as_deref() {
            None => (0.0, 1.0),
            Some(&[lo, hi]) => (lo, hi),
            Some(_) => return Err(CliError::Usage("--bounds takes two values".into())),
        };
        if let Some(n) = a.n {
            check_n(n)?;
        }
        Ok(Self {
            source,
            domain: a.domain,
            bounds,
            circumference: a.circumference,
            n: a.n,
            n_max: a.n_max,
        })
    }

    fn load(&self) -> Result<GridFunction, CliError> {
        match &self.source {
            Source::File(path) => {
                let hint = match self.domain {
                    DomainKind::Interval => DomainHint::Interval,
                    DomainKind::Circle => DomainHint::Circle {
                        circumference: self.circumference,
                    },
                };
                let file = fs::File::open(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                let f = read_grid_csv(std::io::BufReader::new(file), hint).map_err(|source| {
                    CliError::Input {
                        path: path.clone(),
                        source,
                    }
                })?;
                if let Some(n) = self.n.filter(|&n| n != f.len()) {
                    eprintln!(
                        "note: {} has {} samples; ignoring --N {n}",
                        path.display(),
                        f.len()
                    );
                }
                Ok(f)
            }
            Source::Family(family) => {
                let (domain, default_n) = match self.domain {
                    DomainKind::Interval => (
                        Domain::interval(self.bounds.0, self.bounds.1)?,
                        DEFAULT_INTERVAL_N,
                    ),
                    DomainKind::Circle => (
                        Domain::circle(self.circumference.unwrap_or(1.0))?,
                        DEFAULT_CIRCLE_N,
                    ),
                };
                Ok(sample_family(family, &domain, self.n.unwrap_or(default_n))?)
            }
        }
    }
}

impl RunConfig {
    /// Builds a configuration from command-line arguments (program name
    /// first). The output directory falls back to [`OUTPUT_DIR_ENV`].
    pub fn from_args<I, T>(args: I) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        Self::from_cli(cli).map_err(|e| {
            clap::Error::raw(clap::error::ErrorKind::ValueValidation, format!("{e}\n"))
        })
    }

    fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let mut tolerances = Tolerances::default();
        for item in &cli.tol {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("--tol expects KEY=VALUE, got `{item}`")))?;
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("--tol {key}: `{value}` is not a number")))?;
            tolerances.set(key.trim(), value)?;
        }
        let output_dir = cli
            .output
            .or_else(|| std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("."));
        let command = match cli.command {
            CommandArgs::Functional(a) => Command::Functional(InputSpec::from_args(a)?),
            CommandArgs::Verify(a) => Command::Verify(InputSpec::from_args(a)?),
            CommandArgs::Reflect(a) => Command::Reflect(InputSpec::from_args(a)?),
            CommandArgs::Normalize(a) => Command::Normalize(InputSpec::from_args(a)?),
            CommandArgs::SqrtLift(a) => Command::SqrtLift(InputSpec::from_args(a)?),
            CommandArgs::Weissler(a) => Command::Weissler(InputSpec::from_args(a)?),
            CommandArgs::Sweep(a) => Command::Sweep {
                eps: a.eps,
                n: check_n(a.n)?,
                extrapolate: a.extrapolate,
            },
            CommandArgs::Wang(a) => Command::Wang {
                eps: a.eps,
                n: check_n(a.n)?,
            },
            CommandArgs::Optimize(a) => Command::Optimize {
                domain: a.domain,
                n_modes: a.n_modes,
                seed: a.seed,
                max_iters: a.max_iters,
                n: a.n.map(check_n).transpose()?,
            },
            CommandArgs::Diaz(a) => Command::Diaz {
                q: a.q,
                trials: a.trials,
                seed: a.seed,
                n: a.n.map(check_n).transpose()?,
            },
            CommandArgs::Eigen(a) => Command::Eigen {
                n: check_n(a.n)?,
                n_max: a.n_max,
            },
        };
        Ok(Self {
            command,
            output_dir,
            tolerances,
        })
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::from_args(args) {
        Ok(cfg) => run(&cfg),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

pub fn run(cfg: &RunConfig) -> u8 {
    match execute(cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

struct Output<'a> {
    dir: &'a Path,
}

impl Output<'_> {
    fn prepare(&self) -> Result<(), CliError> {
        fs::create_dir_all(self.dir).map_err(|source| CliError::Io {
            path: self.dir.to_path_buf(),
            source,
        })
    }

    fn write(&self, name: &str, contents: &[u8]) -> Result<(), CliError> {
        let path = self.dir.join(name);
        fs::write(&path, contents).map_err(|source| CliError::Io { path, source })
    }

    fn json<T: Serialize + ?Sized>(&self, name: &str, value: &T) -> Result<(), CliError> {
        self.write(name, to_json_string(value).as_bytes())
    }

    fn grid(&self, name: &str, f: &GridFunction) -> Result<(), CliError> {
        let mut buf = Vec::new();
        write_grid_csv(f, &mut buf).expect("writing to memory");
        self.write(name, &buf)
    }
}

fn execute(cfg: &RunConfig) -> Result<u8, CliError> {
    let out = Output {
        dir: &cfg.output_dir,
    };
    let tol = &cfg.tolerances;
    match &cfg.command {
        Command::Functional(spec) => {
            let f = spec.load()?;
            out.prepare()?;
            functional(&f, &out)
        }
        Command::Verify(spec) => {
            let f = spec.load()?;
            out.prepare()?;
            verify(&f, spec.n_max, tol, &out)
        }
        Command::Reflect(spec) => {
            let f = spec.load()?;
            let (g, cert) = reflect_to_circle(&f)?;
            out.prepare()?;
            out.grid("reflected.csv", &g)?;
            out.json("reflect.json", &cert)?;
            print_certificate(&cert);
            Ok(EXIT_OK)
        }
        Command::Normalize(spec) => {
            let f = spec.load()?;
            let (g, m, cert) = affine_normalize(&f)?;
            out.prepare()?;
            out.grid("normalized.csv", &g)?;
            out.json(
                "normalize.json",
                &NormalizeReport {
                    m,
                    certificate: &cert,
                },
            )?;
            println!("m = {m}");
            print_certificate(&cert);
            Ok(EXIT_OK)
        }
        Command::SqrtLift(spec) => {
            let f = spec.load()?;
            let (g, cert) = sqrt_lift(&f)?;
            out.prepare()?;
            out.grid("lifted.csv", &g)?;
            out.json("sqrt_lift.json", &cert)?;
            print_certificate(&cert);
            Ok(EXIT_OK)
        }
        Command::Weissler(spec) => weissler(spec, tol, &out),
        Command::Sweep {
            eps,
            n,
            extrapolate,
        } => {
            let records = sharpness_sweep(eps, *n)?;
            let extrapolated = if *extrapolate {
                Some(extrapolate_constant(&records)?)
            } else {
                None
            };
            out.prepare()?;
            let mut csv = String::from(SweepRecord::CSV_HEADER);
            csv.push('\n');
            for r in &records {
                csv.push_str(&r.csv_row());
                csv.push('\n');
            }
            out.write("sweep.csv", csv.as_bytes())?;
            out.json(
                "sweep.json",
                &SweepReport {
                    n: *n,
                    records: &records,
                    extrapolated,
                },
            )?;
            for r in &records {
                println!("epsilon = {}: ratio = {}", r.epsilon, r.ratio);
            }
            if let Some(c) = extrapolated {
                println!("extrapolated constant = {c}");
            }
            let violated = records.iter().any(|r| r.deficit < -tol.deficit);
            Ok(if violated { EXIT_VIOLATION } else { EXIT_OK })
        }
        Command::Wang { eps, n } => {
            let rows = eps
                .iter()
                .map(|&e| {
                    let residual = wang_ode_residual(e, *n)?;
                    Ok(WangRow {
                        epsilon: e,
                        residual,
                        passed: residual <= tol.wang,
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            out.prepare()?;
            out.json(
                "wang.json",
                &WangReport {
                    n: *n,
                    tolerance: tol.wang,
                    rows: &rows,
                },
            )?;
            for r in &rows {
                println!("epsilon = {}: residual = {:?}", r.epsilon, r.residual);
            }
            Ok(if rows.iter().all(|r| r.passed) {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Command::Optimize {
            domain,
            n_modes,
            seed,
            max_iters,
            n,
        } => {
            let domain = match domain {
                DomainKind::Interval => Domain::unit_interval(),
                DomainKind::Circle => Domain::unit_circle(),
            };
            let mut config = OptimizerConfig::new(&domain, *seed, *max_iters);
            if let Some(n) = n {
                config.n = *n;
            }
            let result = minimize_deficit_with(&domain, *n_modes, &config)?;
            out.prepare()?;
            out.json("optimize.json", &result)?;
            if let Some(f) = &result.best_function {
                out.grid("optimum.csv", f)?;
            }
            println!("best deficit = {:?}", result.best_deficit);
            if let Some(r) = result.best_ratio {
                println!("best ratio = {r}");
            }
            let violated = result.best_deficit < -tol.optimizer;
            Ok(if violated { EXIT_VIOLATION } else { EXIT_OK })
        }
        Command::Diaz { q, trials, seed, n } => {
            let mut settings = ProbeSettings {
                flag_below: tol.diaz,
                ..ProbeSettings::default()
            };
            if let Some(n) = n {
                settings.n = *n;
            }
            let report = diaz_probe_with(q, *trials, *seed, &settings)?;
            out.prepare()?;
            write_diaz(&report, &out)?;
            for s in &report.per_q {
                println!("q = {}: min deficit = {:?}", s.q, s.min_deficit);
            }
            Ok(if report.any_flagged() {
                EXIT_COUNTEREXAMPLE
            } else {
                EXIT_OK
            })
        }
        Command::Eigen { n, n_max } => {
            let check = eigenvalue_check(*n, *n_max)?;
            let deviation = (check.eigenvalue - 4.0 * PI * PI).abs();
            out.prepare()?;
            out.json(
                "eigen.json",
                &EigenReport {
                    n: *n,
                    expected: 4.0 * PI * PI,
                    deviation,
                    tolerance: tol.eigen,
                    check: &check,
                },
            )?;
            println!("eigenvalue = {} (mode {})", check.eigenvalue, check.mode);
            Ok(if deviation <= tol.eigen {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
    }
}

fn print_certificate(cert: &TransformCertificate) {
    for (name, r) in &cert.residuals {
        println!("{name} residual = {r:?}");
    }
}

#[derive(Serialize)]
struct NormalizeReport<'a> {
    m: f64,
    certificate: &'a TransformCertificate,
}

#[derive(Serialize)]
struct SweepReport<'a> {
    n: usize,
    records: &'a [SweepRecord],
    #[serde(skip_serializing_if = "Option::is_none")]
    extrapolated: Option<f64>,
}

#[derive(Serialize)]
struct WangRow {
    epsilon: f64,
    residual: f64,
    passed: bool,
}

#[derive(Serialize)]
struct WangReport<'a> {
    n: usize,
    tolerance: f64,
    rows: &'a [WangRow],
}

#[derive(Serialize)]
struct EigenReport<'a> {
    n: usize,
    expected: f64,
    deviation: f64,
    tolerance: f64,
    check: &'a crate::experiments::EigenCheck,
}

#[derive(Serialize)]
struct FunctionalSummary {
    domain: Domain,
    samples: usize,
    mass: f64,
    mean: f64,
    /// Sharp deficit: the arbitrary-interval form on intervals, the circle
    /// form of the unit-mass rescaling on circles.
    report: FunctionalReport,
}

/// Unit-mass copy of a circle function moved to the circle of length 1.
fn unit_circle_copy(f: &GridFunction) -> Result<GridFunction, CliError> {
    let m = root_mean_square(f);
    if m <= ZERO_MASS {
        return Err(LabError::ZeroMass(m).into());
    }
    Ok(f.scale(m.recip())?.with_domain(Domain::unit_circle())?)
}

fn sharp_report(f: &GridFunction) -> Result<FunctionalReport, CliError> {
    Ok(if f.domain().is_circle() {
        lsi_deficit_circle(&unit_circle_copy(f)?)?
    } else {
        lsi_deficit_general(f)?
    })
}

fn functional(f: &GridFunction, out: &Output) -> Result<u8, CliError> {
    let report = sharp_report(f)?;
    let summary = FunctionalSummary {
        domain: *f.domain(),
        samples: f.len(),
        mass: l2_mass(f),
        mean: mean(f),
        report,
    };
    out.json("functional.json", &summary)?;
    println!("entropy = {}", summary.report.entropy);
    println!("energy = {}", summary.report.energy);
    println!("deficit = {:?}", summary.report.deficit);
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    deficit: f64,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    domain: Domain,
    samples: usize,
    tolerance: f64,
    checks: Vec<Check>,
    passed: bool,
}

fn verify(f: &GridFunction, n_max: usize, tol: &Tolerances, out: &Output) -> Result<u8, CliError> {
    let mut deficits: Vec<(&'static str, f64)> = Vec::new();
    match *f.domain() {
        Domain::Interval { .. } => {
            deficits.push(("lsi_general", lsi_deficit_general(f)?.deficit));
            if f.domain().is_unit_interval() {
                let unit = f.scale(root_mean_square(f).recip())?;
                deficits.push(("lsi_interval", lsi_deficit_interval(&unit)?.deficit));
            }
            if f.min_value().1 >= POSITIVITY_FLOOR {
                deficits.push(("lsi_density", lsi_deficit_density_form_scaled(f)?.deficit));
            }
            deficits.push(("wirtinger", wirtinger_deficit(f)?));
        }
        Domain::Circle { .. } => {
            deficits.push((
                "lsi_circle",
                lsi_deficit_circle(&unit_circle_copy(f)?)?.deficit,
            ));
            let (abs_n, n_sq, entropy) = weissler_bounds(f, n_max)?;
            deficits.push(("weissler_abs_n", abs_n - entropy));
            deficits.push(("weissler_n_squared", n_sq - abs_n));
        }
    }
    let checks: Vec<Check> = deficits
        .into_iter()
        .map(|(name, deficit)| Check {
            name,
            deficit,
            passed: deficit >= -tol.deficit,
        })
        .collect();
    let passed = checks.iter().all(|c| c.passed);
    for c in &checks {
        println!(
            "{}: deficit = {:?} [{}]",
            c.name,
            c.deficit,
            if c.passed { "ok" } else { "VIOLATED" }
        );
    }
    out.json(
        "verify.json",
        &VerifyReport {
            domain: *f.domain(),
            samples: f.len(),
            tolerance: tol.deficit,
            checks,
            passed,
        },
    )?;
    Ok(if passed { EXIT_OK } else { EXIT_VIOLATION })
}

/// `(ABS_N bound, N_SQUARED bound, normalized entropy)` with coefficients up
/// to `n_max`, clamped to the grid's band.
fn weissler_bounds(f: &GridFunction, n_max: usize) -> Result<(f64, f64, f64), CliError> {
    let s = to_fourier(f, n_max.min((f.len() - 1) / 2))?;
    Ok((
        weissler_bound(&s, BoundPower::AbsN)?,
        weissler_bound(&s, BoundPower::NSquared)?,
        normalized_entropy(f)?,
    ))
}

#[derive(Serialize)]
struct WeisslerReport {
    circumference: f64,
    samples: usize,
    n_max: usize,
    entropy: f64,
    abs_n_bound: f64,
    n_squared_bound: f64,
    tolerance: f64,
    passed: bool,
}

fn weissler(spec: &InputSpec, tol: &Tolerances, out: &Output) -> Result<u8, CliError> {
    let is_json = matches!(&spec.source, Source::File(p)
        if p.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")));
    let (f, n_max) = if is_json {
        let Source::File(path) = &spec.source else {
            unreachable!()
        };
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        let s = series_from_json(&text).map_err(|source| CliError::Input {
            path: path.clone(),
            source,
        })?;
        let n = spec.n.unwrap_or(DEFAULT_CIRCLE_N);
        (from_fourier(&s, n)?, s.n_max())
    } else {
        if spec.domain != DomainKind::Circle {
            return Err(CliError::Usage(
                "weissler runs on a circle (--domain circle)".into(),
            ));
        }
        (spec.load()?, spec.n_max)
    };
    let (abs_n, n_sq, entropy) = weissler_bounds(&f, n_max)?;
    let passed = entropy <= abs_n + tol.deficit && abs_n <= n_sq + tol.deficit;
    out.prepare()?;
    out.json(
        "weissler.json",
        &WeisslerReport {
            circumference: f.domain().length(),
            samples: f.len(),
            n_max: n_max.min((f.len() - 1) / 2),
            entropy,
            abs_n_bound: abs_n,
            n_squared_bound: n_sq,
            tolerance: tol.deficit,
            passed,
        },
    )?;
    println!("entropy = {entropy}");
    println!("abs_n bound = {abs_n}");
    println!("n_squared bound = {n_sq}");
    Ok(if passed { EXIT_OK } else { EXIT_VIOLATION })
}

fn write_diaz(report: &DiazProbeReport, out: &Output) -> Result<(), CliError> {
    let mut csv = String::from(DiazProbeReport::CSV_HEADER);
    csv.push('\n');
    let mut witnesses = BTreeMap::new();
    for s in &report.per_q {
        csv.push_str(&format!("{:?},{:?},{}\n", s.q, s.min_deficit, s.flag));
        if let Some(w) = &s.witness {
            witnesses.insert(format!("diaz_witness_q{}.csv", s.q), w);
        }
    }
    out.write("diaz.csv", csv.as_bytes())?;
    out.json("diaz.json", report)?;
    for (name, w) in witnesses {
        out.grid(&name, w)?;
    }
    Ok(())
}

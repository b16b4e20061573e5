//! Flag parsing and layered configuration (flags > config file > defaults).

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gravdiss::lindblad::DensityMatrix2;
use serde::Deserialize;

use crate::error::CliError;

pub const DEFAULT_SWEEP_PHI: f64 = -0.05;
pub const DEFAULT_X_MIN: f64 = 1e-2;
pub const DEFAULT_X_MAX: f64 = 1e2;
pub const DEFAULT_POINTS: usize = 200;
pub const DEFAULT_T_MAX: f64 = 5.0;
pub const DEFAULT_STEPS: usize = 500;

#[derive(Debug, Parser)]
#[command(
    name = "gravdiss",
    version,
    about = "Gravitationally modified dissipation of a two-level atom"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the rate set for one configuration as JSON.
    Rates(Flags),
    /// Tabulate γ_g/γ against x = RΩ.
    Sweep(Flags),
    /// Evolve a density matrix under the master equation.
    Evolve(Flags),
    /// Run the verification report.
    Verify(Flags),
}

impl Command {
    pub fn parts(&self) -> (Mode, &Flags) {
        match self {
            Command::Rates(f) => (Mode::Rates, f),
            Command::Sweep(f) => (Mode::Sweep, f),
            Command::Evolve(f) => (Mode::Evolve, f),
            Command::Verify(f) => (Mode::Verify, f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Rates,
    Sweep,
    Evolve,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Svg,
}

/// Initial state of an evolution run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialState {
    Excited,
    Ground,
    /// Diagonal state with excited population p.
    Mixed(f64),
    /// Pure state √p|e⟩ + √(1−p)|g⟩.
    Coherent(f64),
}

impl InitialState {
    pub fn density_matrix(&self) -> gravdiss::Result<DensityMatrix2> {
        match *self {
            InitialState::Excited => Ok(DensityMatrix2::excited()),
            InitialState::Ground => Ok(DensityMatrix2::ground()),
            InitialState::Mixed(p) => DensityMatrix2::mixed(p),
            InitialState::Coherent(p) => DensityMatrix2::coherent(p),
        }
    }
}

impl FromStr for InitialState {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let population = |p: &str| -> Result<f64, String> {
            let v: f64 = p.parse().map_err(|_| format!("invalid population '{p}'"))?;
            if (0.0..=1.0).contains(&v) {
                Ok(v)
            } else {
                Err(format!("population {v} must lie in [0, 1]"))
            }
        };
        match s.split_once(':') {
            None if s == "excited" => Ok(InitialState::Excited),
            None if s == "ground" => Ok(InitialState::Ground),
            Some(("mixed", p)) => Ok(InitialState::Mixed(population(p)?)),
            Some(("coherent", p)) => Ok(InitialState::Coherent(population(p)?)),
            _ => Err(format!(
                "unknown initial state '{s}' (expected excited, ground, mixed:p or coherent:p)"
            )),
        }
    }
}

impl fmt::Display for InitialState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitialState::Excited => write!(f, "excited"),
            InitialState::Ground => write!(f, "ground"),
            InitialState::Mixed(p) => write!(f, "mixed:{p}"),
            InitialState::Coherent(p) => write!(f, "coherent:{p}"),
        }
    }
}

impl<'de> Deserialize<'de> for InitialState {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Flags shared by every subcommand; all optional so the config file can fill gaps.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Newtonian potential Φ at the atom (≤ 0).
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<f64>,
    /// Source mass; Φ = −G M / R.
    #[arg(long)]
    pub mass: Option<f64>,
    /// Distance R from the source.
    #[arg(long)]
    pub distance: Option<f64>,
    /// Newton's constant used with --mass.
    #[arg(long)]
    pub newton_g: Option<f64>,
    /// Level splitting Ω.
    #[arg(long)]
    pub omega: Option<f64>,
    /// Dipole magnitude |d|.
    #[arg(long)]
    pub dipole: Option<f64>,
    /// Angle ψ between dipole and radial direction, radians.
    #[arg(long, allow_hyphen_values = true)]
    pub angle: Option<f64>,
    /// Bath temperature seen by a distant observer.
    #[arg(long)]
    pub temperature: Option<f64>,
    #[arg(long)]
    pub x_min: Option<f64>,
    #[arg(long)]
    pub x_max: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    /// Logarithmic sweep grid (default).
    #[arg(long, conflicts_with = "linear")]
    pub log: bool,
    /// Linear sweep grid.
    #[arg(long)]
    pub linear: bool,
    /// Evolution time in units of 1/Γ.
    #[arg(long)]
    pub t_max: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    /// excited | ground | mixed:p | coherent:p
    #[arg(long)]
    pub initial: Option<InitialState>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Flat JSON file whose keys mirror the flag names.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, hide = true, allow_hyphen_values = true)]
    pub inject_f1_offset: Option<f64>,
}

/// Contents of a `--config` file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct FileConfig {
    pub phi: Option<f64>,
    pub mass: Option<f64>,
    pub distance: Option<f64>,
    pub newton_g: Option<f64>,
    pub omega: Option<f64>,
    pub dipole: Option<f64>,
    pub angle: Option<f64>,
    pub temperature: Option<f64>,
    pub x_min: Option<f64>,
    pub x_max: Option<f64>,
    pub points: Option<usize>,
    pub log: Option<bool>,
    pub linear: Option<bool>,
    pub t_max: Option<f64>,
    pub steps: Option<usize>,
    pub initial: Option<InitialState>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("config file {}: {e}", path.display())))
    }
}

/// Fully resolved settings for one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub phi: Option<f64>,
    pub mass: Option<f64>,
    pub distance: Option<f64>,
    pub newton_g: f64,
    pub omega: Option<f64>,
    pub dipole: f64,
    pub angle: Option<f64>,
    pub temperature: f64,
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
    pub log_grid: bool,
    pub t_max: f64,
    pub steps: usize,
    pub initial: InitialState,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub f1_offset: f64,
}

impl RunConfig {
    pub fn resolve(mode: Mode, flags: &Flags) -> Result<Self, CliError> {
        let file = match &flags.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let log_grid = if flags.linear {
            false
        } else if flags.log {
            true
        } else {
            match (file.log, file.linear) {
                (Some(true), Some(true)) => {
                    return Err(CliError::Usage("config sets both log and linear".into()))
                }
                (_, Some(true)) | (Some(false), _) => false,
                _ => true,
            }
        };
        let default_format = match mode {
            Mode::Rates | Mode::Verify => Format::Json,
            Mode::Sweep | Mode::Evolve => Format::Csv,
        };
        let config = Self {
            mode,
            phi: flags.phi.or(file.phi),
            mass: flags.mass.or(file.mass),
            distance: flags.distance.or(file.distance),
            newton_g: flags
                .newton_g
                .or(file.newton_g)
                .unwrap_or(gravdiss::model::NEWTON_G),
            omega: flags.omega.or(file.omega),
            dipole: flags.dipole.or(file.dipole).unwrap_or(1.0),
            angle: flags.angle.or(file.angle),
            temperature: flags.temperature.or(file.temperature).unwrap_or(0.0),
            x_min: flags.x_min.or(file.x_min).unwrap_or(DEFAULT_X_MIN),
            x_max: flags.x_max.or(file.x_max).unwrap_or(DEFAULT_X_MAX),
            points: flags.points.or(file.points).unwrap_or(DEFAULT_POINTS),
            log_grid,
            t_max: flags.t_max.or(file.t_max).unwrap_or(DEFAULT_T_MAX),
            steps: flags.steps.or(file.steps).unwrap_or(DEFAULT_STEPS),
            initial: flags
                .initial
                .or(file.initial)
                .unwrap_or(InitialState::Excited),
            format: flags.format.or(file.format).unwrap_or(default_format),
            out: flags.out.clone().or(file.out),
            f1_offset: flags.inject_f1_offset.unwrap_or(0.0),
        };
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<(), CliError> {
        let usage = |m: String| Err(CliError::Usage(m));
        if self.phi.is_some() && self.mass.is_some() {
            return usage("give either phi or mass, not both".into());
        }
        match self.mode {
            Mode::Sweep => {
                if self.points < 2 {
                    return usage(format!("points must be >= 2 (got {})", self.points));
                }
                if !(self.x_max > self.x_min) || !self.x_max.is_finite() {
                    return usage(format!(
                        "x-max must exceed x-min (got {}, {})",
                        self.x_min, self.x_max
                    ));
                }
                if self.log_grid && !(self.x_min > 0.0) {
                    return usage(format!(
                        "x-min must be > 0 for a log grid (got {})",
                        self.x_min
                    ));
                }
                if !(self.x_min >= 0.0) {
                    return usage(format!("x-min must be >= 0 (got {})", self.x_min));
                }
            }
            Mode::Rates | Mode::Evolve => {
                if self.omega.is_none() {
                    return usage("omega required".into());
                }
                if self.mode == Mode::Evolve {
                    if self.steps == 0 {
                        return usage("steps must be >= 1".into());
                    }
                    if !(self.t_max > 0.0) || !self.t_max.is_finite() {
                        return usage(format!("t-max must be > 0 (got {})", self.t_max));
                    }
                }
                if self.mode == Mode::Rates && self.format != Format::Json {
                    return usage("rates writes JSON only".into());
                }
            }
            Mode::Verify => {
                if self.format != Format::Json {
                    return usage("verify writes JSON only".into());
                }
            }
        }
        Ok(())
    }
}

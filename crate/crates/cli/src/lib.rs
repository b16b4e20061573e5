//! Command-line front end for [`gravdiss`]: rate sets, ratio sweeps, state
//! evolution and the verification report.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` deliberately rejects NaN

pub mod config;
pub mod error;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use gravdiss::lindblad::{analytic_state, evolve_numeric, Generator};
use gravdiss::model::{AtomSpec, DimensionlessPoint, GravityEnv, ThermalSpec};
use gravdiss::rates::emission_ratio;
use gravdiss::verify::{self, VerifyOptions};
use gravdiss::RateSet;
use serde::Serialize;

use crate::config::{Cli, Format, Mode, RunConfig, DEFAULT_SWEEP_PHI};
use crate::error::{exit, CliError};
use crate::output::{csv, svg, Plot, Series};

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                exit::USAGE
            } else {
                exit::SUCCESS
            };
        }
    };
    let (mode, flags) = cli.command.parts();
    let outcome = RunConfig::resolve(mode, flags).and_then(|cfg| execute(&cfg));
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a resolved configuration; returns the exit code on success.
pub fn execute(cfg: &RunConfig) -> Result<i32, CliError> {
    match cfg.mode {
        Mode::Rates => {
            let text = rates_json(cfg)?;
            emit(cfg, &text)?;
            Ok(exit::SUCCESS)
        }
        Mode::Sweep => {
            let text = sweep(cfg)?;
            emit(cfg, &text)?;
            Ok(exit::SUCCESS)
        }
        Mode::Evolve => {
            let text = evolve(cfg)?;
            emit(cfg, &text)?;
            Ok(exit::SUCCESS)
        }
        Mode::Verify => verify_report(cfg),
    }
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

/// Potential from `--phi` or from `--mass` with `--distance`.
fn potential(cfg: &RunConfig, default_phi: f64) -> Result<f64, CliError> {
    match (cfg.phi, cfg.mass) {
        (_, Some(mass)) => {
            let distance = cfg
                .distance
                .ok_or_else(|| CliError::Usage("distance required with mass".into()))?;
            Ok(GravityEnv::from_source(mass, distance, cfg.newton_g)?.phi())
        }
        (Some(phi), None) => Ok(phi),
        (None, None) => Ok(default_phi),
    }
}

/// Atom and environment for the single-configuration commands.
pub fn physical_setup(cfg: &RunConfig) -> Result<(AtomSpec, GravityEnv), CliError> {
    let omega = cfg
        .omega
        .ok_or_else(|| CliError::Usage("omega required".into()))?;
    let atom = AtomSpec::new(omega, cfg.dipole, cfg.angle.unwrap_or(0.0))?;
    let env = match cfg.mass {
        Some(mass) => {
            let distance = cfg
                .distance
                .ok_or_else(|| CliError::Usage("distance required with mass".into()))?;
            GravityEnv::from_source(mass, distance, cfg.newton_g)?
        }
        None => {
            let phi = cfg.phi.unwrap_or(0.0);
            // the distance only enters through Φ·f(RΩ), so it is irrelevant in flat space
            let distance = match cfg.distance {
                Some(d) => d,
                None if phi == 0.0 => 1.0,
                None => return Err(CliError::Usage("distance required".into())),
            };
            GravityEnv::new(phi, distance)?
        }
    };
    Ok((atom, env))
}

#[derive(Serialize)]
struct RatesOutput {
    #[serde(flatten)]
    rates: RateSet,
    ratio: f64,
}

pub fn rates_json(cfg: &RunConfig) -> Result<String, CliError> {
    let (atom, env) = physical_setup(cfg)?;
    let rates = RateSet::compute(&atom, &env, &ThermalSpec::distant(cfg.temperature)?)?;
    let out = RatesOutput {
        ratio: rates.ratio(),
        rates,
    };
    Ok(serde_json::to_string_pretty(&out)? + "\n")
}

/// Sweep abscissae, log or linear, with exact end points.
pub fn grid(x_min: f64, x_max: f64, points: usize, log: bool) -> Vec<f64> {
    let last = (points - 1) as f64;
    (0..points)
        .map(|i| match i {
            0 => x_min,
            _ if i == points - 1 => x_max,
            _ if log => x_min * (x_max / x_min).powf(i as f64 / last),
            _ => x_min + (x_max - x_min) * i as f64 / last,
        })
        .collect()
}

#[derive(Serialize)]
struct SweepOutput<'a> {
    phi: f64,
    slices: Vec<SweepSlice<'a>>,
    x: &'a [f64],
}

#[derive(Serialize)]
struct SweepSlice<'a> {
    label: &'a str,
    sin2psi: f64,
    ratio: Vec<f64>,
}

pub fn sweep(cfg: &RunConfig) -> Result<String, CliError> {
    let phi = potential(cfg, DEFAULT_SWEEP_PHI)?;
    let xs = grid(cfg.x_min, cfg.x_max, cfg.points, cfg.log_grid);
    let slices: Vec<(&str, f64)> = match cfg.angle {
        None => vec![("ratio_parallel", 0.0), ("ratio_perpendicular", 1.0)],
        Some(psi) => vec![("ratio", psi.sin().powi(2))],
    };
    let mut columns = Vec::with_capacity(slices.len());
    for &(_, s2) in &slices {
        let col = xs
            .iter()
            .map(|&x| emission_ratio(&DimensionlessPoint::new(x, phi, s2)?))
            .collect::<gravdiss::Result<Vec<f64>>>()?;
        columns.push(col);
    }
    Ok(match cfg.format {
        Format::Csv => {
            let mut header = vec!["x"];
            header.extend(slices.iter().map(|s| s.0));
            let rows: Vec<Vec<f64>> = xs
                .iter()
                .enumerate()
                .map(|(i, &x)| {
                    std::iter::once(x)
                        .chain(columns.iter().map(|c| c[i]))
                        .collect()
                })
                .collect();
            csv(&header, &rows)
        }
        Format::Json => {
            let out = SweepOutput {
                phi,
                x: &xs,
                slices: slices
                    .iter()
                    .zip(columns)
                    .map(|(&(label, sin2psi), ratio)| SweepSlice {
                        label,
                        sin2psi,
                        ratio,
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&out)? + "\n"
        }
        Format::Svg => svg(&Plot {
            title: format!("γ_g/γ at Φ = {phi}"),
            x_label: "x = RΩ",
            y_label: "γ_g/γ",
            log_x: cfg.log_grid,
            series: slices
                .iter()
                .zip(columns)
                .map(|(&(label, _), col)| Series {
                    label: label
                        .trim_start_matches("ratio_")
                        .trim_start_matches("ratio"),
                    points: xs.iter().copied().zip(col).collect(),
                })
                .collect(),
        }),
    })
}

#[derive(Serialize)]
struct EvolveOutput<'a> {
    phi: f64,
    initial: String,
    rates: &'a RateSet,
    columns: [&'static str; 6],
    rows: Vec<[f64; 6]>,
}

pub const EVOLVE_HEADER: [&str; 6] = [
    "t",
    "rho_ee",
    "rho_gg",
    "abs_rho_eg",
    "trace_error",
    "analytic_rho_ee",
];

pub fn evolve(cfg: &RunConfig) -> Result<String, CliError> {
    let (atom, env) = physical_setup(cfg)?;
    let rates = RateSet::compute(&atom, &env, &ThermalSpec::distant(cfg.temperature)?)?;
    let generator = Generator::from(&rates);
    let gamma = generator.total();
    if !(gamma > 0.0) {
        return Err(gravdiss::Error::Degenerate.into());
    }
    let rho0 = cfg.initial.density_matrix()?;
    let traj = evolve_numeric(&rho0, &generator, cfg.t_max / gamma, cfg.steps)?;
    let rows = traj
        .times
        .iter()
        .zip(&traj.states)
        .map(|(&t, s)| {
            let exact = analytic_state(&rho0, &generator, t)?;
            Ok([t, s.ee, s.gg, s.eg.norm(), s.trace() - 1.0, exact.ee])
        })
        .collect::<gravdiss::Result<Vec<[f64; 6]>>>()?;
    Ok(match cfg.format {
        Format::Csv => csv(
            &EVOLVE_HEADER,
            &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
        ),
        Format::Json => {
            let out = EvolveOutput {
                phi: env.phi(),
                initial: cfg.initial.to_string(),
                rates: &rates,
                columns: EVOLVE_HEADER,
                rows,
            };
            serde_json::to_string_pretty(&out)? + "\n"
        }
        Format::Svg => svg(&Plot {
            title: format!("ρ_ee, Φ = {}, Γ = {gamma:.4e}", env.phi()),
            x_label: "t",
            y_label: "ρ_ee",
            log_x: false,
            series: vec![
                Series {
                    label: "numeric",
                    points: rows.iter().map(|r| (r[0], r[1])).collect(),
                },
                Series {
                    label: "analytic",
                    points: rows.iter().map(|r| (r[0], r[5])).collect(),
                },
            ],
        }),
    })
}

fn verify_report(cfg: &RunConfig) -> Result<i32, CliError> {
    let options = VerifyOptions {
        phi: potential(cfg, verify::DEFAULT_PHI)?,
        f1_offset: cfg.f1_offset,
        ..VerifyOptions::default()
    };
    let report = verify::run(&options)?;
    emit(cfg, &(serde_json::to_string_pretty(&report)? + "\n"))?;
    let failed: Vec<&str> = report.failures().map(|r| r.name.as_str()).collect();
    eprintln!(
        "verify: {} checks, {} findings, {} failed",
        report.checks().count(),
        report.findings().count(),
        failed.len()
    );
    for name in &failed {
        eprintln!("  FAIL {name}");
    }
    Ok(if failed.is_empty() {
        exit::SUCCESS
    } else {
        exit::VERIFY_FAILED
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_end_points() {
        let g = grid(1e-2, 1e2, 200, true);
        assert_eq!(g.len(), 200);
        assert_eq!(g[0], 1e-2);
        assert_eq!(g[199], 1e2);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
        let l = grid(0.0, 1.0, 5, false);
        assert_eq!(l, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    }
}

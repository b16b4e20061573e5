//! The verification report: every closed form checked against an independent route.
//!
//! Records of kind [`RecordKind::Check`] gate the overall verdict. Records of
//! kind [`RecordKind::Finding`] document how ambiguous formulas were
//! resolved; they carry a `pass` flag for the demonstration but never fail a run.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lindblad::{analytic_state, evolve_numeric, DensityMatrix2, Generator};
use crate::model::{dimensionless_point, AtomSpec, DimensionlessPoint, GravityEnv, ThermalSpec};
use crate::oracle::power::radiation_power;
use crate::oracle::quadrature::{integrate_adaptive, QuadratureSpec};
use crate::oracle::sphere::angular_identities_check;
use crate::oracle::tensor::{b1_numeric, b1_numeric_with, b2_numeric, KernelReading};
use crate::rates::{emission_ratio, RateSet};
use crate::specfun::{
    bose_occupation, f1, f1_closed, f1_series, f2, f2_closed, f2_leading_coefficient, f2_series,
    sine_integral, SMALL_CUT,
};

/// x = RΩ grid (R = 1) on which B1 and B2 are checked.
pub const TENSOR_GRID: [f64; 7] = [0.3, 0.5, 1.0, 2.0, PI, 5.0, 8.0];
/// Arguments at which Si is compared with direct quadrature.
pub const SI_GRID: [f64; 8] = [0.1, 0.5, 1.0, 2.0, PI, 5.0, 10.0, 20.0];

pub const TENSOR_REL_TOL: f64 = 1e-6;
pub const TENSOR_ABS_TOL: f64 = 1e-8;
pub const SI_ABS_TOL: f64 = 1e-10;
pub const CONTINUITY_TOL: f64 = 1e-10;
pub const ANGULAR_TOL: f64 = 1e-8;
pub const BALANCE_TOL: f64 = 1e-12;
pub const PLATEAU_LOW_TOL: f64 = 1e-3;
pub const PLATEAU_HIGH_TOL: f64 = 5e-3;
pub const GKSL_TOL: f64 = 1e-8;
pub const TRACE_TOL: f64 = 1e-12;
pub const THERMAL_TOTAL_TOL: f64 = 1e-14;
pub const DETAILED_BALANCE_TOL: f64 = 1e-12;
pub const TOLMAN_TOL: f64 = 1e-14;

/// Potential used for the plateau and figure checks.
pub const DEFAULT_PHI: f64 = -0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordKind {
    Check,
    Finding,
}

/// One line of the report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    /// The relation being tested.
    pub paper_ref: String,
    pub computed: f64,
    pub reference: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub kind: RecordKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Record {
    fn check(
        name: impl Into<String>,
        relation: impl Into<String>,
        computed: f64,
        reference: f64,
        tolerance: f64,
        pass: bool,
    ) -> Self {
        Self {
            name: name.into(),
            paper_ref: relation.into(),
            computed,
            reference,
            tolerance,
            pass,
            kind: RecordKind::Check,
            note: None,
        }
    }

    fn abs(
        name: impl Into<String>,
        relation: impl Into<String>,
        computed: f64,
        reference: f64,
        tolerance: f64,
    ) -> Self {
        let pass = (computed - reference).abs() <= tolerance;
        Self::check(name, relation, computed, reference, tolerance, pass)
    }

    fn rel(
        name: impl Into<String>,
        relation: impl Into<String>,
        computed: f64,
        reference: f64,
        tolerance: f64,
    ) -> Self {
        let pass = (computed - reference).abs() <= tolerance * reference.abs();
        Self::check(name, relation, computed, reference, tolerance, pass)
    }

    fn finding(mut self, note: impl Into<String>) -> Self {
        self.kind = RecordKind::Finding;
        self.note = Some(note.into());
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Aggregated verification results.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub phi: f64,
    pub quadrature: QuadratureSpec,
    pub records: Vec<Record>,
}

impl Report {
    pub fn checks(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.kind == RecordKind::Check)
    }

    pub fn findings(&self) -> impl Iterator<Item = &Record> {
        self.records
            .iter()
            .filter(|r| r.kind == RecordKind::Finding)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.checks().filter(|r| !r.pass)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn find(&self, name: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.name == name)
    }
}

/// Knobs for [`run`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub quadrature: QuadratureSpec,
    /// Potential used by the plateau checks.
    pub phi: f64,
    /// Seed for the randomized parameter draws.
    pub seed: u64,
    /// Fault injection: added to f1 on the closed-form side of the B1 checks.
    pub f1_offset: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            quadrature: QuadratureSpec::default(),
            phi: DEFAULT_PHI,
            seed: 0x5eed_2024,
            f1_offset: 0.0,
        }
    }
}

/// Runs every check and finding.
pub fn run(options: &VerifyOptions) -> Result<Report> {
    options.quadrature.validate()?;
    let mut records = Vec::new();
    records.extend(special_functions(&options.quadrature)?);
    records.extend(tensor_checks(options)?);
    records.extend(angular_checks(&options.quadrature)?);
    records.extend(energy_balance(options.seed)?);
    records.extend(plateau_checks(options.phi)?);
    records.extend(thermal_checks(options.seed)?);
    records.extend(gksl_checks(options.seed)?);
    records.extend(findings(&options.quadrature)?);
    Ok(Report {
        phi: options.phi,
        quadrature: options.quadrature,
        records,
    })
}

pub fn special_functions(spec: &QuadratureSpec) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let sinc = |y: f64| if y == 0.0 { 1.0 } else { y.sin() / y };
    for x in SI_GRID {
        let oracle = integrate_adaptive(sinc, 0.0, x, spec)?.value;
        out.push(Record::abs(
            format!("si_quadrature[x={x:.6}]"),
            "Si(x) = int_0^x sin(y)/y dy",
            sine_integral(x)?,
            oracle,
            SI_ABS_TOL,
        ));
    }
    for (label, series, closed) in [
        ("f1", f1_series(SMALL_CUT), f1_closed(SMALL_CUT)),
        ("f2", f2_series(SMALL_CUT), f2_closed(SMALL_CUT)),
    ] {
        out.push(
            Record::rel(
                format!("{label}_series_closed_continuity"),
                "small-x series equals closed form at the branch switch",
                series,
                closed,
                CONTINUITY_TOL,
            )
            .with_note(format!("switch at x = {SMALL_CUT}")),
        );
    }
    Ok(out)
}

fn tensor_record(name: String, relation: &str, computed: f64, reference: f64) -> Record {
    let diff = (computed - reference).abs();
    let pass = diff <= TENSOR_REL_TOL * reference.abs() || diff <= TENSOR_ABS_TOL;
    Record::check(name, relation, computed, reference, TENSOR_REL_TOL, pass).with_note(format!(
        "relative tolerance, or {TENSOR_ABS_TOL:e} absolute near zeros"
    ))
}

pub fn tensor_checks(options: &VerifyOptions) -> Result<Vec<Record>> {
    let spec = options.quadrature;
    let grid: Vec<Result<Vec<Record>>> = TENSOR_GRID
        .par_iter()
        .map(|&x| {
            let (r, omega) = (1.0, x);
            let b1 = b1_numeric(r, omega, &spec)?;
            let b2 = b2_numeric(r, omega, &spec)?;
            let b1_ref = -PI * omega / (3.0 * r) * (f1(x)? + options.f1_offset);
            let b2_ref = -PI * omega / (2.0 * r.powi(3)) * f2(x)?;
            let b1_fine = b1_numeric(r, omega, &spec.halved())?;
            let b2_fine = b2_numeric(r, omega, &spec.halved())?;
            Ok(vec![
                tensor_record(
                    format!("b1_quadrature[x={x:.6}]"),
                    "B1 = -(pi Omega/3R) f1(R Omega)",
                    b1.value,
                    b1_ref,
                ),
                tensor_record(
                    format!("b2_quadrature[x={x:.6}]"),
                    "B2 = -(pi Omega/2R^3) f2(R Omega)",
                    b2.value,
                    b2_ref,
                ),
                Record::check(
                    format!("b1_tolerance_halving[x={x:.6}]"),
                    "halving tolerances moves B1 by less than its error bound",
                    (b1_fine.value - b1.value).abs(),
                    0.0,
                    b1.error,
                    (b1_fine.value - b1.value).abs() <= b1.error,
                ),
                Record::check(
                    format!("b2_tolerance_halving[x={x:.6}]"),
                    "halving tolerances moves B2 by less than its error bound",
                    (b2_fine.value - b2.value).abs(),
                    0.0,
                    b2.error,
                    (b2_fine.value - b2.value).abs() <= b2.error,
                ),
            ])
        })
        .collect();
    let mut out = Vec::new();
    for part in grid {
        out.extend(part?);
    }

    let (r, omega) = (1.0, 1.3);
    let base = b1_numeric(r, omega, &spec)?.value;
    for lambda in [0.5, 2.0] {
        let scaled = b1_numeric(lambda * r, omega / lambda, &spec)?.value;
        out.push(Record::rel(
            format!("b1_scale_invariance[lambda={lambda}]"),
            "B1(lambda R, Omega/lambda) = B1(R, Omega)/lambda^2",
            scaled,
            base / (lambda * lambda),
            TENSOR_REL_TOL,
        ));
    }
    Ok(out)
}

pub fn angular_checks(spec: &QuadratureSpec) -> Result<Vec<Record>> {
    Ok(angular_identities_check(spec, ANGULAR_TOL)?
        .into_iter()
        .map(|c| {
            Record::check(
                c.name,
                "dipole angular identities on the unit sphere",
                c.computed,
                c.reference,
                c.tolerance,
                c.pass,
            )
        })
        .collect())
}

/// Draws a valid atom and environment with γ_g > 0.
fn random_setup(rng: &mut ChaCha8Rng) -> Result<(AtomSpec, GravityEnv)> {
    loop {
        let omega = rng.gen_range(0.1..5.0);
        let atom = AtomSpec::new(omega, rng.gen_range(0.1..3.0), rng.gen_range(0.0..PI))?;
        let x: f64 = 10f64.powf(rng.gen_range(-3.0..2.5));
        let env = GravityEnv::new(rng.gen_range(-crate::model::PHI_WARN..0.0), x / omega)?;
        if emission_ratio(&dimensionless_point(&atom, &env))? > 0.0 {
            return Ok((atom, env));
        }
    }
}

pub fn energy_balance(seed: u64) -> Result<Vec<Record>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let (atom, env) = random_setup(&mut rng)?;
        let rates = RateSet::compute(&atom, &env, &ThermalSpec::zero())?;
        let power = radiation_power(&atom, &env)?;
        worst = worst.max((power.truncated_rate / rates.gamma_g - 0.25).abs());
    }
    let mut out = vec![Record::abs(
        "power_rate_balance[50 random]",
        "(P/Omega_g)/gamma_g = 1/4 after first-order truncation",
        0.25 + worst,
        0.25,
        BALANCE_TOL,
    )
    .with_note("computed = 1/4 + worst deviation over the draws")];

    // Untruncated forms differ by O(Φ²): D(Φ)/Φ² settles to a constant.
    let atom = AtomSpec::new(1.0, 1.0, PI / 3.0)?;
    let ladder = [-1e-2, -5e-3, -2.5e-3];
    let mut scaled = Vec::new();
    for phi in ladder {
        let env = GravityEnv::new(phi, 1.7)?;
        let rates = RateSet::compute(&atom, &env, &ThermalSpec::zero())?;
        let p = radiation_power(&atom, &env)?;
        scaled.push((p.rate() / rates.gamma_g - 0.25) / (phi * phi));
    }
    let c_fit = scaled[2];
    let drift = (scaled[1] - scaled[2]).abs();
    out.push(
        Record::check(
            "power_rate_balance_untruncated[Phi^2 scaling]",
            "(P/Omega_g)/gamma_g - 1/4 = C Phi^2 + O(Phi^3)",
            c_fit,
            scaled[1],
            0.05 * c_fit.abs(),
            drift <= 0.05 * c_fit.abs(),
        )
        .with_note(format!(
            "fitted C = {c_fit:.6}; D/Phi^2 at Phi = {:?} is {:?}",
            ladder, scaled
        )),
    );
    Ok(out)
}

pub fn plateau_checks(phi: f64) -> Result<Vec<Record>> {
    let ratio =
        |x: f64, s: f64| -> Result<f64> { emission_ratio(&DimensionlessPoint::new(x, phi, s)?) };
    let mut out = vec![
        Record::rel(
            "plateau_low[parallel,x=1e-4]",
            "gamma_g/gamma -> 1 + 7 Phi for R Omega << 1",
            ratio(1e-4, 0.0)?,
            1.0 + 7.0 * phi,
            PLATEAU_LOW_TOL,
        ),
        Record::rel(
            "plateau_high[parallel,x=1e3]",
            "gamma_g/gamma -> 1 + Phi for R Omega >> 1",
            ratio(1e3, 0.0)?,
            1.0 + phi,
            PLATEAU_HIGH_TOL,
        ),
        Record::rel(
            "plateau_low[perpendicular,x=1e-4]",
            "gamma_g/gamma -> 1 + 7 Phi for R Omega << 1",
            ratio(1e-4, 1.0)?,
            1.0 + 7.0 * phi,
            PLATEAU_LOW_TOL,
        ),
        Record::rel(
            "plateau_high[perpendicular,x=1e3]",
            "gamma_g/gamma -> 1 + Phi for R Omega >> 1",
            ratio(1e3, 1.0)?,
            1.0 + phi,
            PLATEAU_HIGH_TOL,
        ),
    ];
    let mut best: f64 = f64::MIN;
    for i in 0..=300 {
        best = best.max(ratio(1.5 + 1.5 * i as f64 / 300.0, 0.0)?);
    }
    out.push(Record::check(
        "enhancement_window[parallel,x in [1.5,3]]",
        "parallel ratio exceeds one around R Omega ~ 1",
        best,
        1.0,
        0.0,
        best > 1.0,
    ));
    Ok(out)
}

pub fn thermal_checks(seed: u64) -> Result<Vec<Record>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7e4d);
    let (mut total_dev, mut db_dev, mut tolman_dev): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for _ in 0..200 {
        let (atom, env) = random_setup(&mut rng)?;
        let t = rng.gen_range(0.05..5.0) * atom.omega();
        let rates = RateSet::compute(&atom, &env, &ThermalSpec::distant(t)?)?;
        let n = bose_occupation(rates.omega_g, t)?;
        let want = (2.0 * n + 1.0) * rates.gamma_g;
        total_dev = total_dev.max(((rates.gamma_total - want) / want).abs());
        let db = (-rates.omega_g / t).exp();
        db_dev = db_dev.max(((rates.gamma_plus / rates.gamma_minus - db) / db).abs());
        let tp = ThermalSpec::distant(t)?.temperature_local(env.phi());
        let n_local = bose_occupation(atom.omega(), tp)?;
        tolman_dev = tolman_dev.max(((n - n_local) / n).abs());
    }
    Ok(vec![
        Record::abs(
            "thermal_total_rate[200 random]",
            "Gamma = (2 n_B + 1) gamma_g",
            total_dev,
            0.0,
            THERMAL_TOTAL_TOL,
        )
        .with_note("computed = worst relative deviation"),
        Record::abs(
            "detailed_balance[200 random]",
            "Gamma_+/Gamma_- = exp(-Omega_g/T)",
            db_dev,
            0.0,
            DETAILED_BALANCE_TOL,
        )
        .with_note("computed = worst relative deviation"),
        Record::abs(
            "tolman_invariance[200 random]",
            "n_B(Omega_g; T) = n_B(Omega; T_p), T_p = T/(1+Phi)",
            tolman_dev,
            0.0,
            TOLMAN_TOL,
        )
        .with_note("computed = worst relative deviation"),
    ])
}

/// Number of random generators in the GKSL comparison.
pub const GKSL_SAMPLES: usize = 100;
/// Step rule for the GKSL comparison: h·Γ ≤ this.
pub const GKSL_STEP: f64 = 0.01;
pub const COHERENCE_FIT_TOL: f64 = 1e-6;

/// Worst per-element deviation between RK4 and the closed-form solution,
/// the worst trace error, and the fitted coherence decay rate.
pub fn gksl_deviation(
    rho0: &DensityMatrix2,
    generator: &Generator,
    t_max: f64,
    steps: usize,
) -> Result<(f64, f64, Option<f64>)> {
    let traj = evolve_numeric(rho0, generator, t_max, steps)?;
    let mut worst: f64 = 0.0;
    for (t, s) in traj.times.iter().zip(&traj.states) {
        let exact = analytic_state(rho0, generator, *t)?;
        worst = worst
            .max((s.ee - exact.ee).abs())
            .max((s.gg - exact.gg).abs())
            .max((s.eg - exact.eg).norm());
    }
    Ok((worst, traj.max_trace_error(), traj.coherence_decay_rate()))
}

pub fn gksl_checks(seed: u64) -> Result<Vec<Record>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x91c5);
    let draws: Vec<(Generator, DensityMatrix2, f64)> = (0..GKSL_SAMPLES)
        .map(|_| {
            let gm = rng.gen_range(0.01..3.0);
            let gen = Generator::new(gm * rng.gen_range(0.0..1.0), gm)?
                .with_frequency_offset(rng.gen_range(-2.0..2.0));
            let rho0 = DensityMatrix2::coherent(rng.gen_range(0.05..0.95))?;
            Ok((gen, rho0, rng.gen_range(0.5..8.0)))
        })
        .collect::<Result<_>>()?;
    let results: Vec<Result<(f64, f64, f64)>> = draws
        .par_iter()
        .map(|(gen, rho0, gt)| {
            let t_max = gt / gen.total();
            let steps = (t_max * gen.stiffness() / GKSL_STEP).ceil() as usize;
            let (w, tr, fit) = gksl_deviation(rho0, gen, t_max, steps)?;
            let half = 0.5 * gen.total();
            let fit_dev = fit.map_or(f64::INFINITY, |k| ((k + half) / half).abs());
            Ok((w, tr, fit_dev))
        })
        .collect();
    let (mut worst, mut trace, mut fit): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for r in results {
        let (w, tr, f) = r?;
        worst = worst.max(w);
        trace = trace.max(tr);
        fit = fit.max(f);
    }
    let label = format!("{GKSL_SAMPLES} random");
    Ok(vec![
        Record::abs(
            format!("gksl_numeric_vs_analytic[{label}]"),
            "RK4 solution equals the closed-form GKSL solution",
            worst,
            0.0,
            GKSL_TOL,
        )
        .with_note(format!(
            "computed = worst element deviation; step rule h max(Gamma, |delta|) <= {GKSL_STEP}"
        )),
        Record::abs(
            format!("gksl_trace_error[{label}]"),
            "trace preserved along trajectories",
            trace,
            0.0,
            TRACE_TOL,
        ),
        Record::abs(
            format!("coherence_decay_fit[{label}]"),
            "ln|rho_eg| has slope -Gamma/2",
            fit,
            0.0,
            COHERENCE_FIT_TOL,
        )
        .with_note("computed = worst relative deviation of the fitted rate"),
    ])
}

pub fn findings(spec: &QuadratureSpec) -> Result<Vec<Record>> {
    let mut out = Vec::new();

    // Richardson extrapolation of f2(x)/x² from the closed form alone.
    let q = |x: f64| f2_closed(x) / (x * x);
    let coef = (4.0 * q(0.05) - q(0.1)) / 3.0;
    out.push(
        Record::abs("finding_f2_small_x_coefficient", "f2(x) ~ c x^2 for x << 1", coef, 2.0 / 3.0, 1e-6).finding(format!(
            "closed form gives c = {coef:.9} (series coefficient {:.12}); a coefficient of 4/3 would be off by a factor 2",
            f2_leading_coefficient()
        )),
    );

    // Which square root in the angular kernel reproduces B1?
    let (r, omega) = (2.0, 0.5);
    let closed = -PI * omega / (3.0 * r) * f1(r * omega)?;
    let distance = b1_numeric_with(r, omega, KernelReading::Distance, spec)?.value;
    let missing = b1_numeric_with(r, omega, KernelReading::MissingY, spec)?.value;
    let distance_ok = ((distance - closed) / closed).abs() <= TENSOR_REL_TOL;
    let missing_off = ((missing - closed) / closed).abs();
    let mut rec = Record::rel("finding_b1_kernel_reading", "B1 = -(pi Omega/3R) f1(R Omega)", distance, closed, TENSOR_REL_TOL)
        .finding(format!(
            "|y+R| = sqrt(y^2 + 2yR cos + R^2) reproduces the closed form; sqrt(y^2 + 2R cos + R^2) gives {missing:.9} \
             (relative deviation {missing_off:.3e}) at R = {r}, Omega = {omega}"
        ));
    rec.pass = distance_ok && missing_off > 1e-3;
    out.push(rec);

    // Ω versus Ω_g inside f1/f2 at the largest admissible |Φ|.
    let phi = -0.29;
    let (x, s) = (1.0, 0.5);
    let with_omega = 1.0 + phi * (7.0 - 2.0 * f1(x)? + 3.0 * s * f2(x)?);
    let xg = x * (1.0 + phi);
    let with_omega_g = 1.0 + phi * (7.0 - 2.0 * f1(xg)? + 3.0 * s * f2(xg)?);
    let mut rec = Record::abs("finding_frequency_in_f1_f2", "gamma_g/gamma with f(R Omega) vs f(R Omega_g)", with_omega_g, with_omega, phi * phi * 10.0)
        .finding(format!(
            "at Phi = {phi}, x = {x}, sin^2 psi = {s}: ratio differs by {:.3e}; formally O(Phi^2) but not negligible this close to the gate; the library uses R Omega",
            (with_omega_g - with_omega).abs()
        ));
    rec.pass = (with_omega_g - with_omega).abs() <= phi * phi * 10.0;
    out.push(rec);

    // Large-x envelope of f2: it decays rather than growing like x sin(2x).
    let x = 50.0;
    let rec = Record::abs(
        "finding_f2_large_x",
        "f2(x) decays like -sin(2x)/x for x >> 1",
        f2(x)?,
        -(2.0 * x).sin() / x,
        1.0 / (x * x),
    )
    .finding(format!(
        "x sin(2x) would be {:.6}; the definition decays instead",
        x * (2.0 * x).sin()
    ));
    out.push(rec);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_helpers() {
        let report = Report {
            phi: -0.05,
            quadrature: QuadratureSpec::default(),
            records: vec![
                Record::abs("a", "rel", 1.0, 1.0, 0.1),
                Record::abs("b", "rel", 1.0, 2.0, 0.1).finding("informational"),
            ],
        };
        assert!(report.all_passed());
        assert_eq!(report.findings().count(), 1);
        assert!(report.find("b").is_some());
    }

    #[test]
    fn findings_demonstrate_resolutions() {
        let f = findings(&QuadratureSpec::default()).unwrap();
        for r in &f {
            assert_eq!(r.kind, RecordKind::Finding);
            assert!(r.pass, "{r:?}");
        }
    }
}

//! Two-level GKSL dynamics in the interaction picture.
//!
//! The generator is D₋[ρ] + D₊[ρ] with jump rates Γ₋ (σ₋, emission) and
//! Γ₊ (σ₊, absorption). In matrix elements:
//!
//! ```text
//! d ρ_ee/dt = −Γ₋ ρ_ee + Γ₊ ρ_gg
//! d ρ_gg/dt = +Γ₋ ρ_ee − Γ₊ ρ_gg
//! d ρ_eg/dt = −(Γ/2 + iδ) ρ_eg
//! ```
//!
//! δ is an optional real frequency offset (a Lamb-shift hook, zero by default).
//! Coherences carry no free e^{−iΩ_g t} rotation; apply it yourself when
//! comparing with Schrödinger-picture results.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::rates::RateSet;

/// Largest allowed h·Γ for the fixed-step integrator.
pub const STABILITY_LIMIT: f64 = 0.1;

const TRACE_TOL: f64 = 1e-12;
const POSITIVITY_SLACK: f64 = 1e-12;

/// 2×2 density matrix stored as (ρ_ee, ρ_gg, ρ_eg); ρ_ge = conj(ρ_eg).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityMatrix2 {
    pub ee: f64,
    pub gg: f64,
    pub eg: Complex64,
}

impl DensityMatrix2 {
    pub fn new(ee: f64, gg: f64, eg: Complex64) -> Result<Self> {
        let rho = Self { ee, gg, eg };
        rho.validate()?;
        Ok(rho)
    }

    pub fn excited() -> Self {
        Self {
            ee: 1.0,
            gg: 0.0,
            eg: Complex64::new(0.0, 0.0),
        }
    }

    pub fn ground() -> Self {
        Self {
            ee: 0.0,
            gg: 1.0,
            eg: Complex64::new(0.0, 0.0),
        }
    }

    /// Incoherent mixture with excited population `p`.
    pub fn mixed(p: f64) -> Result<Self> {
        Self::new(p, 1.0 - p, Complex64::new(0.0, 0.0))
    }

    /// Pure state √p|e⟩ + √(1−p)|g⟩.
    pub fn coherent(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(domain(format!("excited population {p} must lie in [0, 1]")));
        }
        Self::new(p, 1.0 - p, Complex64::new((p * (1.0 - p)).sqrt(), 0.0))
    }

    pub fn ge(&self) -> Complex64 {
        self.eg.conj()
    }

    pub fn trace(&self) -> f64 {
        self.ee + self.gg
    }

    /// det ρ = ρ_ee ρ_gg − |ρ_eg|², non-negative for physical states.
    pub fn determinant(&self) -> f64 {
        self.ee * self.gg - self.eg.norm_sqr()
    }

    pub fn validate(&self) -> Result<()> {
        let finite = self.ee.is_finite()
            && self.gg.is_finite()
            && self.eg.re.is_finite()
            && self.eg.im.is_finite();
        if !finite {
            return Err(domain("density matrix has non-finite entries"));
        }
        if (self.trace() - 1.0).abs() > TRACE_TOL {
            return Err(domain(format!("trace {} differs from 1", self.trace())));
        }
        let slack = POSITIVITY_SLACK;
        if self.ee < -slack || self.gg < -slack || self.determinant() < -slack {
            return Err(domain("density matrix is not positive semidefinite"));
        }
        Ok(())
    }

    fn axpy(&self, h: f64, k: &Self) -> Self {
        Self {
            ee: self.ee + h * k.ee,
            gg: self.gg + h * k.gg,
            eg: self.eg + k.eg * h,
        }
    }
}

/// Jump rates plus the optional coherence frequency offset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Generator {
    pub gamma_plus: f64,
    pub gamma_minus: f64,
    pub frequency_offset: f64,
}

impl Generator {
    pub fn new(gamma_plus: f64, gamma_minus: f64) -> Result<Self> {
        if !(gamma_plus >= 0.0) || !(gamma_minus >= 0.0) {
            return Err(domain(format!(
                "jump rates must be >= 0 (got {gamma_plus}, {gamma_minus})"
            )));
        }
        Ok(Self {
            gamma_plus,
            gamma_minus,
            frequency_offset: 0.0,
        })
    }

    pub fn with_frequency_offset(mut self, offset: f64) -> Self {
        self.frequency_offset = offset;
        self
    }

    pub fn total(&self) -> f64 {
        self.gamma_plus + self.gamma_minus
    }

    /// Fastest rate in the generator: max(Γ, |δ|). Sets the RK4 step bound.
    pub fn stiffness(&self) -> f64 {
        self.total().max(self.frequency_offset.abs())
    }

    pub fn steady_excited(&self) -> Result<f64> {
        let total = self.total();
        if total == 0.0 {
            return Err(Error::Degenerate);
        }
        Ok(self.gamma_plus / total)
    }

    fn derivative(&self, rho: &DensityMatrix2) -> DensityMatrix2 {
        let flow = self.gamma_minus * rho.ee - self.gamma_plus * rho.gg;
        let decay = Complex64::new(-0.5 * self.total(), -self.frequency_offset);
        DensityMatrix2 {
            ee: -flow,
            gg: flow,
            eg: decay * rho.eg,
        }
    }
}

impl From<&RateSet> for Generator {
    fn from(rates: &RateSet) -> Self {
        Self {
            gamma_plus: rates.gamma_plus,
            gamma_minus: rates.gamma_minus,
            frequency_offset: 0.0,
        }
    }
}

/// Closed-form state at time `t`:
/// ρ_ee(t) = [ρ_ee(0) − a_s]e^{−Γt} + a_s and ρ_eg(t) = ρ_eg(0) e^{−Γt/2}.
pub fn analytic_state(
    rho0: &DensityMatrix2,
    generator: &Generator,
    t: f64,
) -> Result<DensityMatrix2> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(domain(format!("time t = {t} must be >= 0")));
    }
    let a_s = generator.steady_excited()?;
    if t == 0.0 {
        return Ok(*rho0);
    }
    let total = generator.total();
    let decay = (-total * t).exp();
    let ee = (rho0.ee - a_s) * decay + a_s;
    let gg = rho0.gg * decay + (1.0 - a_s) * (-(-total * t).exp_m1());
    let phase = Complex64::new(-0.5 * total * t, -generator.frequency_offset * t).exp();
    Ok(DensityMatrix2 {
        ee,
        gg,
        eg: rho0.eg * phase,
    })
}

/// Sampled solution of the master equation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<DensityMatrix2>,
    pub generator: Generator,
}

impl Trajectory {
    pub fn final_state(&self) -> &DensityMatrix2 {
        self.states
            .last()
            .expect("trajectory always holds the initial state")
    }

    pub fn max_trace_error(&self) -> f64 {
        self.states
            .iter()
            .map(|s| (s.trace() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Most negative ρ_ee ρ_gg − |ρ_eg|² along the trajectory.
    pub fn min_determinant(&self) -> f64 {
        self.states
            .iter()
            .map(DensityMatrix2::determinant)
            .fold(f64::INFINITY, f64::min)
    }

    /// Least-squares slope of ln|ρ_eg| against t; equals −Γ/2 for the exact solution.
    ///
    /// Returns `None` when the initial state has no coherence.
    pub fn coherence_decay_rate(&self) -> Option<f64> {
        let pts: Vec<(f64, f64)> = self
            .times
            .iter()
            .zip(&self.states)
            .filter(|(_, s)| s.eg.norm() > 0.0)
            .map(|(&t, s)| (t, s.eg.norm().ln()))
            .collect();
        if pts.len() < 2 {
            return None;
        }
        let n = pts.len() as f64;
        let mean_t = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let mean_y = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mean_t) * (p.1 - mean_y)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mean_t).powi(2)).sum();
        Some(sxy / sxx)
    }
}

/// Integrates the master equation with classical fixed-step RK4.
///
/// Requires h·max(Γ, |δ|) ≤ [`STABILITY_LIMIT`] with h = t_max/steps. The returned
/// trajectory holds `steps + 1` samples including t = 0.
pub fn evolve_numeric(
    rho0: &DensityMatrix2,
    generator: &Generator,
    t_max: f64,
    steps: usize,
) -> Result<Trajectory> {
    if steps == 0 {
        return Err(domain("steps must be >= 1"));
    }
    if !(t_max > 0.0) || !t_max.is_finite() {
        return Err(domain(format!("t_max = {t_max} must be > 0")));
    }
    rho0.validate()?;
    let h = t_max / steps as f64;
    let h_gamma = h * generator.stiffness();
    if h_gamma > STABILITY_LIMIT {
        let suggested_steps = (t_max * generator.stiffness() / STABILITY_LIMIT).ceil() as usize;
        return Err(Error::StepSize {
            h_gamma,
            limit: STABILITY_LIMIT,
            suggested_steps,
        });
    }

    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    times.push(0.0);
    states.push(*rho0);
    let mut rho = *rho0;
    for i in 1..=steps {
        let k1 = generator.derivative(&rho);
        let k2 = generator.derivative(&rho.axpy(0.5 * h, &k1));
        let k3 = generator.derivative(&rho.axpy(0.5 * h, &k2));
        let k4 = generator.derivative(&rho.axpy(h, &k3));
        rho = DensityMatrix2 {
            ee: rho.ee + h / 6.0 * (k1.ee + 2.0 * k2.ee + 2.0 * k3.ee + k4.ee),
            gg: rho.gg + h / 6.0 * (k1.gg + 2.0 * k2.gg + 2.0 * k3.gg + k4.gg),
            eg: rho.eg + (k1.eg + k2.eg * 2.0 + k3.eg * 2.0 + k4.eg) * (h / 6.0),
        };
        times.push(i as f64 * h);
        states.push(rho);
    }
    Ok(Trajectory {
        times,
        states,
        generator: *generator,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analytic_identity_at_zero() {
        let rho0 = DensityMatrix2::coherent(0.3).unwrap();
        let g = Generator::new(0.2, 0.9).unwrap();
        assert_eq!(analytic_state(&rho0, &g, 0.0).unwrap(), rho0);
        assert!(analytic_state(&rho0, &g, -1.0).is_err());
    }

    #[test]
    fn analytic_long_time_limit() {
        let g = Generator::new(0.25, 0.75).unwrap();
        let a_s = g.steady_excited().unwrap();
        let t = 40.0 / g.total();
        let rho = analytic_state(&DensityMatrix2::excited(), &g, t).unwrap();
        assert!((rho.ee - a_s).abs() < 1e-12);
        assert!((rho.gg - (1.0 - a_s)).abs() < 1e-12);
    }

    #[test]
    fn vacuum_decay_is_exponential() {
        let gamma = 0.37;
        let g = Generator::new(0.0, gamma).unwrap();
        for t in [0.1, 1.0, 5.0] {
            let rho = analytic_state(&DensityMatrix2::excited(), &g, t).unwrap();
            assert!((rho.ee - (-gamma * t).exp()).abs() < 1e-15);
        }
    }

    #[test]
    fn numeric_vacuum_decay() {
        let g = Generator::new(0.0, 1.0).unwrap();
        let traj = evolve_numeric(&DensityMatrix2::excited(), &g, 5.0, 500).unwrap();
        assert!((traj.final_state().ee - (-5f64).exp()).abs() < 1e-8);
        assert!(traj.max_trace_error() <= 1e-12);
        assert_eq!(traj.times.len(), 501);
        assert_eq!(traj.states[0], DensityMatrix2::excited());
    }

    #[test]
    fn nearly_frozen_generator() {
        let rho0 = DensityMatrix2::coherent(0.6).unwrap();
        let g = Generator::new(1e-14, 1e-14).unwrap();
        let traj = evolve_numeric(&rho0, &g, 1.0, 10).unwrap();
        let last = traj.final_state();
        assert!((last.ee - rho0.ee).abs() < 1e-13);
        assert!((last.eg - rho0.eg).norm() < 1e-13);
    }

    #[test]
    fn stability_gate() {
        let g = Generator::new(0.5, 1.5).unwrap();
        match evolve_numeric(&DensityMatrix2::excited(), &g, 10.0, 100) {
            Err(Error::StepSize {
                suggested_steps, ..
            }) => assert_eq!(suggested_steps, 200),
            other => panic!("expected step-size error, got {other:?}"),
        }
        assert!(evolve_numeric(&DensityMatrix2::excited(), &g, 10.0, 200).is_ok());
        assert!(evolve_numeric(&DensityMatrix2::excited(), &g, 10.0, 0).is_err());
    }

    #[test]
    fn degenerate_analytic() {
        let g = Generator::new(0.0, 0.0).unwrap();
        assert_eq!(
            analytic_state(&DensityMatrix2::excited(), &g, 1.0),
            Err(Error::Degenerate)
        );
    }

    #[test]
    fn frequency_offset_rotates_coherence() {
        let rho0 = DensityMatrix2::coherent(0.5).unwrap();
        let g = Generator::new(0.1, 0.3).unwrap().with_frequency_offset(2.0);
        let t = 1.5;
        let traj = evolve_numeric(&rho0, &g, t, 3000).unwrap();
        let exact = analytic_state(&rho0, &g, t).unwrap();
        assert!((traj.final_state().eg - exact.eg).norm() < 1e-10);
        assert!((exact.eg.arg() + 3.0).abs() < 1e-12);
    }

    #[test]
    fn state_validation() {
        assert!(DensityMatrix2::new(0.6, 0.6, Complex64::new(0.0, 0.0)).is_err());
        assert!(DensityMatrix2::new(0.5, 0.5, Complex64::new(0.6, 0.0)).is_err());
        assert!(DensityMatrix2::mixed(1.2).is_err());
        assert!(DensityMatrix2::coherent(0.5).unwrap().determinant().abs() < 1e-16);
    }

    #[test]
    fn coherence_fit() {
        let g = Generator::new(0.3, 0.8).unwrap();
        let rho0 = DensityMatrix2::coherent(0.4).unwrap();
        let traj = evolve_numeric(&rho0, &g, 4.0, 400).unwrap();
        let slope = traj.coherence_decay_rate().unwrap();
        assert!(((slope + 0.55) / 0.55).abs() < 1e-6);
        let none = evolve_numeric(&DensityMatrix2::excited(), &g, 1.0, 20).unwrap();
        assert_eq!(none.coherence_decay_rate(), None);
    }
}

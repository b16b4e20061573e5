//! Closed-form GKSL generator data for the atom in a weak static field.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::model::{
    check_potential, dimensionless_point, AtomSpec, DimensionlessPoint, GravityEnv, ThermalSpec,
};
use crate::specfun::{bose_occupation, f1, f2};

/// Full set of rates entering the two-level master equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateSet {
    pub omega_g: f64,
    pub gamma_flat: f64,
    pub gamma_g: f64,
    pub gamma_plus: f64,
    pub gamma_minus: f64,
    pub gamma_total: f64,
    pub steady_excited: f64,
}

impl RateSet {
    /// Evaluates every rate for the given atom, field and bath.
    ///
    /// The Bose factor uses the distant-observer temperature at Ω_g.
    pub fn compute(atom: &AtomSpec, env: &GravityEnv, thermal: &ThermalSpec) -> Result<Self> {
        let omega_g = redshifted_frequency(atom.omega(), env.phi())?;
        let gamma_flat = flat_rate(atom.dipole_mag(), atom.omega())?;
        let gamma_g = emission_rate(&dimensionless_point(atom, env), gamma_flat)?;
        if gamma_g < 0.0 {
            return Err(Error::NegativeRate(gamma_g));
        }
        Self::from_emission(
            gamma_flat,
            gamma_g,
            omega_g,
            thermal.temperature_distant(env.phi()),
        )
    }

    /// Builds the thermal rates and totals from an already known γ_g.
    pub fn from_emission(
        gamma_flat: f64,
        gamma_g: f64,
        omega_g: f64,
        temperature: f64,
    ) -> Result<Self> {
        let (gamma_plus, gamma_minus) =
            thermal_rates(gamma_g, omega_g, &ThermalSpec::distant(temperature)?, 0.0)?;
        let (gamma_total, steady_excited) = total_and_steady(gamma_plus, gamma_minus)?;
        Ok(Self {
            omega_g,
            gamma_flat,
            gamma_g,
            gamma_plus,
            gamma_minus,
            gamma_total,
            steady_excited,
        })
    }

    /// γ_g/γ, or 1 when the atom does not couple at all.
    pub fn ratio(&self) -> f64 {
        if self.gamma_flat == 0.0 {
            1.0
        } else {
            self.gamma_g / self.gamma_flat
        }
    }
}

/// Ω_g = (1 + Φ)Ω as seen by the distant observer.
pub fn redshifted_frequency(omega: f64, phi: f64) -> Result<f64> {
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(domain(format!("omega = {omega} must be > 0")));
    }
    Ok((1.0 + check_potential(phi)?) * omega)
}

/// Flat-space spontaneous emission rate γ = d²Ω³/(6π).
pub fn flat_rate(dipole_mag: f64, omega: f64) -> Result<f64> {
    if !(dipole_mag >= 0.0) || !dipole_mag.is_finite() {
        return Err(domain(format!(
            "dipole magnitude = {dipole_mag} must be >= 0"
        )));
    }
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(domain(format!("omega = {omega} must be > 0")));
    }
    Ok(dipole_mag * dipole_mag * omega.powi(3) / (6.0 * PI))
}

/// Bracket γ_g/γ = 1 + 7Φ − 2Φ f1(x) + 3Φ sin²ψ f2(x).
pub fn emission_ratio(point: &DimensionlessPoint) -> Result<f64> {
    let phi = check_potential(point.phi)?;
    if phi == 0.0 {
        return Ok(1.0);
    }
    let correction = 7.0 - 2.0 * f1(point.x)? + 3.0 * point.sin2psi * f2(point.x)?;
    Ok(1.0 + phi * correction)
}

/// Gravity-corrected spontaneous emission rate γ_g.
pub fn emission_rate(point: &DimensionlessPoint, gamma_flat: f64) -> Result<f64> {
    if !(gamma_flat >= 0.0) || !gamma_flat.is_finite() {
        return Err(domain(format!("flat rate = {gamma_flat} must be >= 0")));
    }
    Ok(gamma_flat * emission_ratio(point)?)
}

/// Absorption and emission rates (Γ₊, Γ₋) = (n_B γ_g, (n_B + 1) γ_g).
///
/// `phi` is only used to convert a local temperature to the distant frame;
/// it is ignored for [`ThermalSpec::Distant`].
pub fn thermal_rates(
    gamma_g: f64,
    omega_g: f64,
    thermal: &ThermalSpec,
    phi: f64,
) -> Result<(f64, f64)> {
    if !(gamma_g >= 0.0) || !gamma_g.is_finite() {
        return Err(domain(format!("gamma_g = {gamma_g} must be >= 0")));
    }
    let n = bose_occupation(omega_g, thermal.temperature_distant(phi))?;
    Ok((n * gamma_g, (n + 1.0) * gamma_g))
}

/// Total rate Γ = Γ₊ + Γ₋ and steady excited population a_s = Γ₊/Γ.
pub fn total_and_steady(gamma_plus: f64, gamma_minus: f64) -> Result<(f64, f64)> {
    if !(gamma_plus >= 0.0) || !(gamma_minus >= 0.0) {
        return Err(domain(format!(
            "rates must be >= 0 (got {gamma_plus}, {gamma_minus})"
        )));
    }
    let total = gamma_plus + gamma_minus;
    if total == 0.0 {
        return Err(Error::Degenerate);
    }
    Ok((total, gamma_plus / total))
}

/// Local (Tolman–Ehrenfest) temperature T_p = T/(1 + Φ).
pub fn tolman_local_temperature(temperature: f64, phi: f64) -> Result<f64> {
    let thermal = ThermalSpec::distant(temperature)?;
    Ok(thermal.temperature_local(check_potential(phi)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn redshift_examples() {
        assert_eq!(redshifted_frequency(1.0, 0.0).unwrap(), 1.0);
        assert!((redshifted_frequency(1.0, -0.01).unwrap() - 0.99).abs() < 1e-15);
        assert!((redshifted_frequency(2.0, -0.05).unwrap() - 1.9).abs() < 1e-15);
        assert!(redshifted_frequency(0.0, 0.0).is_err());
        assert!(redshifted_frequency(1.0, -0.4).is_err());
    }

    #[test]
    fn flat_rate_examples() {
        assert!(rel(flat_rate(1.0, 1.0).unwrap(), 0.0530516476972984) < 1e-14);
        assert!(rel(flat_rate(1.0, 2.0).unwrap(), 8.0 / (6.0 * PI)) < 1e-15);
        assert_eq!(flat_rate(0.0, 5.0).unwrap(), 0.0);
    }

    #[test]
    fn emission_examples() {
        let g = 0.37;
        let p = DimensionlessPoint::new(3.3, 0.0, 0.4).unwrap();
        assert_eq!(emission_rate(&p, g).unwrap(), g);

        let low = DimensionlessPoint::new(1e-4, -0.05, 0.0).unwrap();
        assert!(rel(emission_rate(&low, g).unwrap() / g, 0.65) < 1e-3);

        let high = DimensionlessPoint::new(50.0, -0.05, 0.0).unwrap();
        assert!(rel(emission_rate(&high, g).unwrap() / g, 0.95) < 5e-3);

        // 1 − 0.05·(7 − 2·f1(2)) with f1(2) = 4.0742297727708173892
        let mid = DimensionlessPoint::new(2.0, -0.05, 0.0).unwrap();
        assert!(rel(emission_rate(&mid, 1.0).unwrap(), 1.0574229772770817) < 1e-13);
    }

    #[test]
    fn thermal_examples() {
        let g = 0.2;
        let (p, m) = thermal_rates(g, 1.3, &ThermalSpec::zero(), 0.0).unwrap();
        assert_eq!((p, m), (0.0, g));

        let omega_g = 0.8;
        let t = omega_g / 2f64.ln();
        let (p, m) = thermal_rates(g, omega_g, &ThermalSpec::Distant(t), 0.0).unwrap();
        assert!(rel(p, g) < 1e-14 && rel(m, 2.0 * g) < 1e-14);
    }

    #[test]
    fn total_examples() {
        assert_eq!(total_and_steady(0.0, 0.3).unwrap(), (0.3, 0.0));
        let (t, a) = total_and_steady(0.3, 0.6).unwrap();
        assert!(rel(t, 0.9) < 1e-15 && rel(a, 1.0 / 3.0) < 1e-15);
        assert_eq!(total_and_steady(0.0, 0.0), Err(Error::Degenerate));
    }

    #[test]
    fn tolman_examples() {
        assert_eq!(tolman_local_temperature(1.0, 0.0).unwrap(), 1.0);
        assert!(rel(tolman_local_temperature(1.0, -0.1).unwrap(), 1.0 / 0.9) < 1e-15);
    }

    #[test]
    fn local_temperature_input_is_converted() {
        let phi = -0.08;
        let tp = 1.7;
        let (a, b) = thermal_rates(1.0, 0.9, &ThermalSpec::Local(tp), phi).unwrap();
        let (c, d) = thermal_rates(1.0, 0.9, &ThermalSpec::Distant(tp * (1.0 + phi)), 0.0).unwrap();
        assert_eq!((a, b), (c, d));
    }

    #[test]
    fn negative_first_order_rate_is_rejected() {
        let atom = AtomSpec::new(1.0, 1.0, 0.0).unwrap();
        let env = GravityEnv::new(-0.2, 1e-3).unwrap();
        assert!(matches!(
            RateSet::compute(&atom, &env, &ThermalSpec::zero()),
            Err(Error::NegativeRate(_))
        ));
    }

    #[test]
    fn enhancement_window() {
        let best = (0..=300)
            .map(|i| 1.5 + 1.5 * i as f64 / 300.0)
            .map(|x| emission_ratio(&DimensionlessPoint::new(x, -0.05, 0.0).unwrap()).unwrap())
            .fold(f64::MIN, f64::max);
        assert!(best > 1.0);
    }

    proptest! {
        #[test]
        fn affine_in_phi(phi in -0.1f64..-1e-4, x in 1e-3f64..100.0, s in 0.0f64..=1.0) {
            let g = 1.0;
            let a = emission_rate(&DimensionlessPoint::new(x, phi, s).unwrap(), g).unwrap() - g;
            let b = emission_rate(&DimensionlessPoint::new(x, 2.0 * phi, s).unwrap(), g).unwrap() - g;
            // skip points where the correction itself vanishes
            prop_assume!(a.abs() > 1e-9);
            prop_assert!(((b / a) - 2.0).abs() <= 1e-12 * 2.0 + 1e-16 / a.abs());
        }

        #[test]
        fn psi_symmetry(psi in 0.0f64..std::f64::consts::PI, phi in -0.29f64..0.0, x in 1e-3f64..50.0) {
            let a = AtomSpec::new(1.0, 1.0, psi).unwrap();
            let b = AtomSpec::new(1.0, 1.0, std::f64::consts::PI - psi).unwrap();
            let env = GravityEnv::new(phi, x).unwrap();
            let ga = emission_rate(&dimensionless_point(&a, &env), 1.0).unwrap();
            let gb = emission_rate(&dimensionless_point(&b, &env), 1.0).unwrap();
            prop_assert!((ga - gb).abs() <= 1e-14);
        }

        #[test]
        fn rate_set_invariants(phi in -0.14f64..0.0, x in 1e-3f64..100.0, t in 0.0f64..10.0,
                               psi in 0.0f64..std::f64::consts::PI, omega in 0.1f64..5.0) {
            let atom = AtomSpec::new(omega, 1.0, psi).unwrap();
            let env = GravityEnv::new(phi, x / omega).unwrap();
            let r = RateSet::compute(&atom, &env, &ThermalSpec::Distant(t)).unwrap();
            prop_assert!(r.gamma_minus >= r.gamma_plus && r.gamma_plus >= 0.0);
            prop_assert_eq!(r.gamma_total, r.gamma_plus + r.gamma_minus);
            prop_assert!((0.0..0.5).contains(&r.steady_excited));
            if t > 0.0 {
                let db = (-r.omega_g / t).exp();
                prop_assert!(((r.gamma_plus / r.gamma_minus) - db).abs() <= 1e-12 * db);
            }
        }
    }
}

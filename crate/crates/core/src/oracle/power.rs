//! Scalar radiation power of the time-averaged oscillating dipole.
//!
//! The field of a dipole d cos(Ω_g t) near a point mass has a direct part and a
//! part scattered off the potential. After time-averaging:
//!
//! ```text
//! P = Ω_g⁴/(32π²) (1 + 4Φ) ∫d²r̂ (r̂·d)²  +  Ω_g³ R Φ/(4π²) d_k d_l F_kl(R; Ω_g)
//! ```
//!
//! Expanding Ω_g = (1 + Φ)Ω to first order gives the truncated P/Ω_g.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::tensor::TensorF;
use crate::error::Result;
use crate::model::{check_potential, AtomSpec, GravityEnv};
use crate::rates::redshifted_frequency;

/// Radiation power before and after the first-order truncation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiationPower {
    pub omega_g: f64,
    /// Power with Ω_g kept exact inside every factor.
    pub power: f64,
    /// P/Ω_g expanded to first order in Φ.
    pub truncated_rate: f64,
}

impl RadiationPower {
    pub fn rate(&self) -> f64 {
        self.power / self.omega_g
    }
}

/// Dipole and radial vectors realising the atom's angle, with R along ẑ.
fn geometry(atom: &AtomSpec, env: &GravityEnv) -> ([f64; 3], [f64; 3]) {
    let psi = atom.dipole_angle();
    let d = atom.dipole_mag();
    (
        [d * psi.sin(), 0.0, d * psi.cos()],
        [0.0, 0.0, env.distance()],
    )
}

pub fn radiation_power(atom: &AtomSpec, env: &GravityEnv) -> Result<RadiationPower> {
    let phi = check_potential(env.phi())?;
    let omega = atom.omega();
    let omega_g = redshifted_frequency(omega, phi)?;
    let (d, r) = geometry(atom, env);
    let d2 = atom.dipole_mag().powi(2);
    let radius = env.distance();
    // ∫d²r̂ (r̂·d)² = 4πd²/3
    let angular = 4.0 * PI * d2 / 3.0;

    let direct = omega_g.powi(4) / (32.0 * PI * PI) * (1.0 + 4.0 * phi) * angular;
    let scattered = omega_g.powi(3) * radius * phi / (4.0 * PI * PI)
        * TensorF::closed_form(r, omega_g)?.contract(d);

    // first order: Ω_g³(1 + 4Φ) → Ω³(1 + 7Φ); Ω_g → Ω inside the O(Φ) term
    let direct_rate = omega.powi(3) / (32.0 * PI * PI) * (1.0 + 7.0 * phi) * angular;
    let scattered_rate = omega.powi(2) * radius * phi / (4.0 * PI * PI)
        * TensorF::closed_form(r, omega)?.contract(d);

    Ok(RadiationPower {
        omega_g,
        power: direct + scattered,
        truncated_rate: direct_rate + scattered_rate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{dimensionless_point, ThermalSpec};
    use crate::rates::{emission_rate, flat_rate, RateSet};

    #[test]
    fn flat_space_power() {
        let atom = AtomSpec::new(1.3, 0.7, 0.4).unwrap();
        let env = GravityEnv::new(0.0, 2.0).unwrap();
        let p = radiation_power(&atom, &env).unwrap();
        let want = 0.49 * 1.3f64.powi(4) / (24.0 * PI);
        assert!(((p.power - want) / want).abs() < 1e-14);
    }

    #[test]
    fn quarter_rate_balance() {
        let atom = AtomSpec::new(0.9, 1.1, 1.0).unwrap();
        let env = GravityEnv::new(-0.07, 2.2).unwrap();
        let p = radiation_power(&atom, &env).unwrap();
        let gamma = flat_rate(1.1, 0.9).unwrap();
        let gamma_g = emission_rate(&dimensionless_point(&atom, &env), gamma).unwrap();
        assert!((p.truncated_rate / gamma_g - 0.25).abs() < 1e-12);
        let rates = RateSet::compute(&atom, &env, &ThermalSpec::zero()).unwrap();
        assert_eq!(rates.gamma_g, gamma_g);
    }

    #[test]
    fn quadratic_in_dipole() {
        let env = GravityEnv::new(-0.03, 1.5).unwrap();
        let a = radiation_power(&AtomSpec::new(1.0, 0.5, 0.3).unwrap(), &env).unwrap();
        let b = radiation_power(&AtomSpec::new(1.0, 1.0, 0.3).unwrap(), &env).unwrap();
        assert!((b.power / a.power - 4.0).abs() < 1e-13);
    }
}

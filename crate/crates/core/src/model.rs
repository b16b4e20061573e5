//! Physical inputs: the atom, its gravitational environment and the thermal bath.
//!
//! Natural units throughout (ħ = c = 1). Newton's constant defaults to 1 but
//! can be passed explicitly to [`potential_from_source`].

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Potentials with |Φ| at or above this value are rejected.
pub const PHI_LIMIT: f64 = 0.3;
/// Potentials with |Φ| above this value are accepted with a warning.
pub const PHI_WARN: f64 = 0.1;
/// Default Newton constant in natural units.
pub const NEWTON_G: f64 = 1.0;

/// Checks the weak-field gate for a potential value and returns it unchanged.
pub fn check_potential(phi: f64) -> Result<f64> {
    if !phi.is_finite() {
        return Err(domain(format!("potential phi = {phi} must be finite")));
    }
    if phi > 0.0 {
        return Err(domain(format!(
            "potential phi = {phi} must be <= 0 (attractive source)"
        )));
    }
    if phi.abs() >= PHI_LIMIT {
        return Err(Error::Regime {
            phi: phi.abs(),
            limit: PHI_LIMIT,
        });
    }
    if phi.abs() > PHI_WARN {
        log::warn!(
            "|phi| = {} exceeds {PHI_WARN}; first-order corrections become unreliable",
            phi.abs()
        );
    }
    Ok(phi)
}

/// Two-level atom: proper splitting Ω and effective dipole (magnitude, angle ψ to R).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AtomSpec {
    omega: f64,
    dipole_mag: f64,
    dipole_angle: f64,
}

impl AtomSpec {
    pub fn new(omega: f64, dipole_mag: f64, dipole_angle: f64) -> Result<Self> {
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(domain(format!("omega = {omega} must be > 0")));
        }
        if !(dipole_mag >= 0.0) || !dipole_mag.is_finite() {
            return Err(domain(format!(
                "dipole magnitude = {dipole_mag} must be >= 0"
            )));
        }
        if !(0.0..=PI).contains(&dipole_angle) {
            return Err(domain(format!(
                "dipole angle = {dipole_angle} must lie in [0, pi]"
            )));
        }
        Ok(Self {
            omega,
            dipole_mag,
            dipole_angle,
        })
    }

    /// Builds the atom from a dipole 3-vector and the radial direction, keeping
    /// only |d| and the angle between them.
    pub fn from_vectors(omega: f64, dipole: [f64; 3], radial: [f64; 3]) -> Result<Self> {
        let d = norm(dipole);
        let r = norm(radial);
        if !(r > 0.0) {
            return Err(domain("radial direction must be non-zero"));
        }
        let angle = if d == 0.0 {
            0.0
        } else {
            (dot(dipole, radial) / (d * r)).clamp(-1.0, 1.0).acos()
        };
        Self::new(omega, d, angle)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn dipole_mag(&self) -> f64 {
        self.dipole_mag
    }

    pub fn dipole_angle(&self) -> f64 {
        self.dipole_angle
    }

    pub fn sin2psi(&self) -> f64 {
        self.dipole_angle.sin().powi(2)
    }
}

/// How the potential of a [`GravityEnv`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialSource {
    Direct,
    PointMass { mass: f64, newton_g: f64 },
}

/// Newtonian potential Φ at the atom and the distance R to the source.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GravityEnv {
    phi: f64,
    distance: f64,
    source: PotentialSource,
}

impl GravityEnv {
    pub fn new(phi: f64, distance: f64) -> Result<Self> {
        check_distance(distance)?;
        Ok(Self {
            phi: check_potential(phi)?,
            distance,
            source: PotentialSource::Direct,
        })
    }

    pub fn from_source(mass: f64, distance: f64, newton_g: f64) -> Result<Self> {
        let phi = potential_from_source(mass, distance, newton_g)?;
        Ok(Self {
            phi,
            distance,
            source: PotentialSource::PointMass { mass, newton_g },
        })
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn distance(&self) -> f64 {
        self.distance
    }

    pub fn source(&self) -> PotentialSource {
        self.source
    }
}

fn check_distance(distance: f64) -> Result<()> {
    if distance > 0.0 && distance.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("distance = {distance} must be > 0")))
    }
}

/// Φ = −G·M/R for a point source, gated by the weak-field limit.
pub fn potential_from_source(mass: f64, distance: f64, newton_g: f64) -> Result<f64> {
    check_distance(distance)?;
    if !(mass >= 0.0) || !mass.is_finite() {
        return Err(domain(format!("mass = {mass} must be >= 0")));
    }
    if !(newton_g > 0.0) || !newton_g.is_finite() {
        return Err(domain(format!("Newton constant = {newton_g} must be > 0")));
    }
    check_potential(-newton_g * mass / distance)
}

/// Bath temperature, stored in whichever frame it was specified.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "frame", content = "value", rename_all = "snake_case")]
pub enum ThermalSpec {
    /// Temperature T assigned by the distant observer.
    Distant(f64),
    /// Temperature T_p measured locally at the atom.
    Local(f64),
}

impl ThermalSpec {
    pub fn distant(temperature: f64) -> Result<Self> {
        check_temperature(temperature)?;
        Ok(Self::Distant(temperature))
    }

    pub fn local(temperature: f64) -> Result<Self> {
        check_temperature(temperature)?;
        Ok(Self::Local(temperature))
    }

    pub fn zero() -> Self {
        Self::Distant(0.0)
    }

    /// T, deriving it via T = T_p·(1 + Φ) when the local value is authoritative.
    pub fn temperature_distant(&self, phi: f64) -> f64 {
        match *self {
            Self::Distant(t) => t,
            Self::Local(tp) => tp * (1.0 + phi),
        }
    }

    /// T_p, deriving it via T_p = T/(1 + Φ) when the distant value is authoritative.
    pub fn temperature_local(&self, phi: f64) -> f64 {
        match *self {
            Self::Distant(t) => t / (1.0 + phi),
            Self::Local(tp) => tp,
        }
    }
}

fn check_temperature(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("temperature = {t} must be finite and >= 0")))
    }
}

/// The (x = RΩ, Φ, sin²ψ) triple on which the emission rate depends.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionlessPoint {
    pub x: f64,
    pub phi: f64,
    pub sin2psi: f64,
}

impl DimensionlessPoint {
    pub fn new(x: f64, phi: f64, sin2psi: f64) -> Result<Self> {
        if !(x >= 0.0) || !x.is_finite() {
            return Err(domain(format!("x = R*Omega = {x} must be finite and >= 0")));
        }
        if !(0.0..=1.0).contains(&sin2psi) {
            return Err(domain(format!("sin^2(psi) = {sin2psi} must lie in [0, 1]")));
        }
        Ok(Self {
            x,
            phi: check_potential(phi)?,
            sin2psi,
        })
    }
}

pub fn dimensionless_point(atom: &AtomSpec, env: &GravityEnv) -> DimensionlessPoint {
    DimensionlessPoint {
        x: env.distance() * atom.omega(),
        phi: env.phi(),
        sin2psi: atom.sin2psi(),
    }
}

pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

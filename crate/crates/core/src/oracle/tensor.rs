//! Brute-force evaluation of the scalar coefficients B1, B2 of
//!
//! ```text
//! F_kl(R) = ∫ d³y  y_k y_l / |y + R| · g(y),
//! g(y)    = [Ωy cos Ωy − sin Ωy]/y³ · [cos Ωy + Ωy sin Ωy]/y³,
//! F_kl    = B1 δ_kl + B2 (R_k R_l − R² δ_kl).
//! ```
//!
//! The angular integrals are done in closed form. Expanding 1/|y + R| in
//! Legendre polynomials of u = cos θ, only P0 and P2 survive against the
//! weights u² = P0/3 + 2P2/3 and u² − 1/3 = 2P2/3, so with r< = min(y, R) and
//! r> = max(y, R):
//!
//! ```text
//! 2π ∫ u² /|y+R| du          = 2π [ (2/3)/r> + (4/15) r<²/r>³ ]
//! 2π ∫ (u² − 1/3)/|y+R| du   = 2π (4/15) r<²/r>³
//! ```
//!
//! The radial integrand is smooth on each side of y = R and decays like
//! sin(2Ωy)/y beyond, so [0, R] goes to adaptive quadrature and [R, ∞) to the
//! accelerated oscillatory tail.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::quadrature::{integrate_adaptive, oscillatory_tail, Estimate, QuadratureSpec};
use crate::error::{domain, Result};
use crate::specfun::{f1, f2};

/// Which square root is used for the distance factor of the angular kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelReading {
    /// √(y² + 2yR cos θ + R²) = |y + R|.
    Distance,
    /// √(y² + 2R cos θ + R²), dimensionally inconsistent; real only for R ≥ 2.
    MissingY,
}

/// The tensor F_kl through its two scalar coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TensorF {
    pub b1: f64,
    pub b2: f64,
    pub r: [f64; 3],
}

impl TensorF {
    /// Coefficients from the f1/f2 closed forms at frequency `omega`.
    pub fn closed_form(r: [f64; 3], omega: f64) -> Result<Self> {
        let radius = crate::model::norm(r);
        Ok(Self {
            b1: b1_closed(radius, omega)?,
            b2: b2_closed(radius, omega)?,
            r,
        })
    }

    /// Coefficients from radial quadrature.
    pub fn numeric(r: [f64; 3], omega: f64, spec: &QuadratureSpec) -> Result<Self> {
        let radius = crate::model::norm(r);
        Ok(Self {
            b1: b1_numeric(radius, omega, spec)?.value,
            b2: b2_numeric(radius, omega, spec)?.value,
            r,
        })
    }

    pub fn component(&self, k: usize, l: usize) -> f64 {
        let r2 = crate::model::dot(self.r, self.r);
        let delta = if k == l { 1.0 } else { 0.0 };
        self.b1 * delta + self.b2 * (self.r[k] * self.r[l] - r2 * delta)
    }

    pub fn matrix(&self) -> [[f64; 3]; 3] {
        let mut m = [[0.0; 3]; 3];
        for (k, row) in m.iter_mut().enumerate() {
            for (l, v) in row.iter_mut().enumerate() {
                *v = self.component(k, l);
            }
        }
        m
    }

    pub fn trace(&self) -> f64 {
        (0..3).map(|k| self.component(k, k)).sum()
    }

    /// d_k d_l F_kl.
    pub fn contract(&self, d: [f64; 3]) -> f64 {
        let m = self.matrix();
        (0..3)
            .flat_map(|k| (0..3).map(move |l| (k, l)))
            .map(|(k, l)| d[k] * d[l] * m[k][l])
            .sum()
    }
}

fn check_inputs(r: f64, omega: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() || !(omega > 0.0) || !omega.is_finite() {
        return Err(domain(format!(
            "R = {r} and Omega = {omega} must both be > 0"
        )));
    }
    Ok(())
}

/// B1 = −(πΩ/3R) f1(RΩ).
pub fn b1_closed(r: f64, omega: f64) -> Result<f64> {
    check_inputs(r, omega)?;
    Ok(-PI * omega / (3.0 * r) * f1(r * omega)?)
}

/// B2 = −(πΩ/2R³) f2(RΩ).
pub fn b2_closed(r: f64, omega: f64) -> Result<f64> {
    check_inputs(r, omega)?;
    Ok(-PI * omega / (2.0 * r.powi(3)) * f2(r * omega)?)
}

/// z cos z − sin z, by series near the origin.
fn zcos_minus_sin(z: f64) -> f64 {
    if z < 0.5 {
        let z2 = z * z;
        // Σ_{k≥1} (−1)^k 2k z^{2k+1}/(2k+1)!
        let mut term = z; // (−1)^k z^{2k+1}/(2k+1)! at k = 0
        let mut sum = 0.0;
        for k in 1..20 {
            let kf = k as f64;
            term *= -z2 / ((2.0 * kf) * (2.0 * kf + 1.0));
            sum += 2.0 * kf * term;
            if (2.0 * kf * term).abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        sum
    } else {
        z * z.cos() - z.sin()
    }
}

/// y⁴ g(y) written in z = Ωy as Ω² (z cos z − sin z)(cos z + z sin z)/z².
pub fn radial_factor(y: f64, omega: f64) -> f64 {
    let z = omega * y;
    if z == 0.0 {
        return 0.0;
    }
    let (s, c) = z.sin_cos();
    omega * omega * zcos_minus_sin(z) * (c + z * s) / (z * z)
}

/// 2π ∫ u²/|y + R| du over u ∈ [−1, 1].
pub fn kernel_cos2(y: f64, r: f64) -> f64 {
    let (lo, hi) = if y < r { (y, r) } else { (r, y) };
    2.0 * PI * (2.0 / (3.0 * hi) + 4.0 / 15.0 * lo * lo / hi.powi(3))
}

/// 2π ∫ (u² − 1/3)/|y + R| du over u ∈ [−1, 1].
pub fn kernel_quadrupole(y: f64, r: f64) -> f64 {
    let (lo, hi) = if y < r { (y, r) } else { (r, y) };
    2.0 * PI * 4.0 / 15.0 * lo * lo / hi.powi(3)
}

/// ∫_{−1}^{1} u² (a + b u)^{−1/2} du for a ≥ |b|.
///
/// Uses the elementary antiderivative (1/b³)[(2/5)s^{5/2} − (4a/3)s^{3/2} + 2a²s^{1/2}]
/// with s = a + bu, or its binomial expansion when |b|/a is small.
pub fn cos2_moment(a: f64, b: f64) -> f64 {
    if b.abs() < 0.25 * a {
        let q = b / a;
        let q2 = q * q;
        // binom(−1/2, n) for even n, times 2/(n + 3)
        let mut coef = 1.0;
        let mut qn = 1.0;
        let mut sum = 0.0;
        for n in (0..80).step_by(2) {
            let term = coef * qn * 2.0 / (n as f64 + 3.0);
            sum += term;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
            let nf = n as f64;
            // binom(−1/2, n+2)/binom(−1/2, n)
            coef *= (-0.5 - nf) * (-0.5 - nf - 1.0) / ((nf + 1.0) * (nf + 2.0));
            qn *= q2;
        }
        sum / a.sqrt()
    } else {
        let anti = |s: f64| {
            let rs = s.max(0.0).sqrt();
            0.4 * s * s * rs - 4.0 * a / 3.0 * s * rs + 2.0 * a * a * rs
        };
        (anti(a + b) - anti(a - b)) / b.powi(3)
    }
}

fn kernel_for(reading: KernelReading, y: f64, r: f64) -> f64 {
    match reading {
        KernelReading::Distance => kernel_cos2(y, r),
        KernelReading::MissingY => 2.0 * PI * cos2_moment(y * y + r * r, 2.0 * r),
    }
}

fn radial_integral<K: Fn(f64) -> f64>(
    r: f64,
    omega: f64,
    kernel: K,
    spec: &QuadratureSpec,
) -> Result<Estimate> {
    let integrand = |y: f64| radial_factor(y, omega) * kernel(y);
    let inner = integrate_adaptive(integrand, 0.0, r, spec)?;
    let outer = oscillatory_tail(integrand, r, PI / omega, spec)?;
    Ok(inner + outer)
}

/// B1 by radial quadrature of the closed-form angular kernel.
pub fn b1_numeric(r: f64, omega: f64, spec: &QuadratureSpec) -> Result<Estimate> {
    b1_numeric_with(r, omega, KernelReading::Distance, spec)
}

/// B1 under a chosen reading of the distance factor.
pub fn b1_numeric_with(
    r: f64,
    omega: f64,
    reading: KernelReading,
    spec: &QuadratureSpec,
) -> Result<Estimate> {
    check_inputs(r, omega)?;
    if reading == KernelReading::MissingY && r < 2.0 {
        return Err(domain(format!(
            "y^2 + 2R cos(theta) + R^2 turns negative for R = {r} < 2"
        )));
    }
    radial_integral(r, omega, |y| kernel_for(reading, y, r), spec)
}

/// B2 = (3/2R²) ∫ y⁴ g(y) · 2π∫(u² − 1/3)/|y+R| du dy.
pub fn b2_numeric(r: f64, omega: f64, spec: &QuadratureSpec) -> Result<Estimate> {
    check_inputs(r, omega)?;
    let scale = 1.5 / (r * r);
    let est = radial_integral(r, omega, |y| kernel_quadrupole(y, r), spec)?;
    Ok(Estimate {
        value: scale * est.value,
        error: scale * est.error,
    })
}

/// δ_kl F_kl by quadrature: the isotropic weight gives 2π·2/r>.
pub fn trace_numeric(r: f64, omega: f64, spec: &QuadratureSpec) -> Result<Estimate> {
    check_inputs(r, omega)?;
    radial_integral(r, omega, |y| 4.0 * PI / y.max(r), spec)
}

//! Product quadrature on the unit sphere and the dipole angular identities.
//!
//! Nodes are Gauss–Legendre in cos θ and equally spaced in φ, which is
//! spectrally accurate for smooth integrands on the sphere.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::quadrature::QuadratureSpec;
use crate::error::{domain, Result};
use crate::model::{dot, norm};

/// Gauss–Legendre nodes and weights on [−1, 1] via Newton iteration.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// P_n(x) and P_n'(x).
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// ∫ d²r̂ f(r̂) with `n_theta` Gauss–Legendre nodes in cos θ and `n_phi` in φ.
pub fn sphere_integrate<F: Fn([f64; 3]) -> f64>(f: F, n_theta: usize, n_phi: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(n_theta);
    let dphi = 2.0 * PI / n_phi as f64;
    let mut total = 0.0;
    for (&u, &w) in nodes.iter().zip(&weights) {
        let s = (1.0 - u * u).sqrt();
        let ring: f64 = (0..n_phi)
            .map(|j| {
                let phi = j as f64 * dphi;
                f([s * phi.cos(), s * phi.sin(), u])
            })
            .sum();
        total += w * ring * dphi;
    }
    total
}

/// Doubles the node counts until two successive results agree to `spec.abs_tol`.
pub fn sphere_integrate_converged<F: Fn([f64; 3]) -> f64>(f: F, spec: &QuadratureSpec) -> f64 {
    let mut n = 16;
    let mut prev = sphere_integrate(&f, n, 2 * n);
    while n < 512 {
        n *= 2;
        let next = sphere_integrate(&f, n, 2 * n);
        if (next - prev).abs() <= spec.abs_tol {
            return next;
        }
        prev = next;
    }
    prev
}

/// One angular identity: left side by sphere quadrature, right side in closed form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub computed: f64,
    pub reference: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// [cos(Ωz) − sin(Ωz)/(Ωz)] shared by both weighted moments.
fn bracket(a: f64) -> f64 {
    a.cos() - a.sin() / a
}

/// ∫d²r̂ (r̂·d) sin[Ω(r̂·z − |z|)] = −4π (z·d)/|z| [cos Ωz − sin Ωz/(Ωz)] cos(Ωz)/(Ωz).
pub fn sin_moment_closed(d: [f64; 3], z: [f64; 3], omega: f64) -> f64 {
    let zn = norm(z);
    let a = omega * zn;
    -4.0 * PI * dot(z, d) / zn * bracket(a) * a.cos() / a
}

/// ∫d²r̂ (r̂·d) cos[Ω(r̂·z − |z|)] = −4π (z·d)/|z| [cos Ωz − sin Ωz/(Ωz)] sin(Ωz)/(Ωz).
pub fn cos_moment_closed(d: [f64; 3], z: [f64; 3], omega: f64) -> f64 {
    let zn = norm(z);
    let a = omega * zn;
    -4.0 * PI * dot(z, d) / zn * bracket(a) * a.sin() / a
}

/// Verifies the three dipole angular identities for a fixed set of d, z, Ω.
pub fn angular_identities_check(
    spec: &QuadratureSpec,
    tolerance: f64,
) -> Result<Vec<IdentityCheck>> {
    spec.validate()?;
    if !(tolerance > 0.0) {
        return Err(domain("tolerance must be > 0"));
    }
    let dipoles: [(&str, [f64; 3]); 3] = [
        ("z", [0.0, 0.0, 1.0]),
        ("oblique", [0.3, -0.5, 0.8]),
        ("long", [1.2, 0.4, -0.9]),
    ];
    let mut out = Vec::new();
    let mut push = |name: String, computed: f64, reference: f64| {
        out.push(IdentityCheck {
            pass: (computed - reference).abs() <= tolerance,
            name,
            computed,
            reference,
            tolerance,
        });
    };

    for (label, d) in dipoles {
        let computed = sphere_integrate_converged(|r| dot(r, d).powi(2), spec);
        push(
            format!("angular: int (r.d)^2 = 4 pi d^2/3 [d={label}]"),
            computed,
            4.0 * PI * dot(d, d) / 3.0,
        );
    }

    let d = [0.3, -0.5, 0.8];
    let dn = norm(d);
    let cases: [(&str, [f64; 3], f64); 5] = [
        ("z||d, Omega z = pi", [d[0] / dn, d[1] / dn, d[2] / dn], PI),
        ("oblique z", [0.7, 0.2, -0.4], 2.3),
        ("large Omega z", [-1.1, 0.9, 0.6], 5.5),
        ("small Omega z", [0.05, 0.02, 0.1], 0.8),
        ("z perp d", [0.5, 0.3, 0.0], 3.0),
    ];
    for (label, z, omega) in cases {
        let zn = norm(z);
        let sin_num =
            sphere_integrate_converged(|r| dot(r, d) * (omega * (dot(r, z) - zn)).sin(), spec);
        push(
            format!("angular: sin-weighted first moment [{label}]"),
            sin_num,
            sin_moment_closed(d, z, omega),
        );
        let cos_num =
            sphere_integrate_converged(|r| dot(r, d) * (omega * (dot(r, z) - zn)).cos(), spec);
        push(
            format!("angular: cos-weighted first moment [{label}]"),
            cos_num,
            cos_moment_closed(d, z, omega),
        );
    }
    Ok(out)
}

//! Special functions: the sine integral, the gravitational correction
//! functions `f1`/`f2`, and the Bose occupation number.
//!
//! `f1` and `f2` are ratios of O(x^3)/O(x^4) differences of O(1) terms, so
//! below [`SMALL_CUT`] they are evaluated from their Taylor series. The
//! series coefficients are generated from the Taylor expansions of the
//! constituent trigonometric terms and the sine integral, coefficient by
//! coefficient, so no numerical cancellation happens on the series path.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{domain, Result};

/// Switch point between the Taylor series and the closed forms of `f1`/`f2`.
///
/// At x = 0.5 the closed forms lose under two digits to cancellation and the
/// truncated series is exact to rounding, so the two agree to ~1e-14.
pub const SMALL_CUT: f64 = 0.5;

/// Beyond this argument `f1` sits on its large-x plateau (within 0.2 of 3).
pub const LARGE_CUT: f64 = 40.0;

/// Power series of Si is used up to this argument, the continued fraction beyond.
const SI_SERIES_MAX: f64 = 4.0;

const SERIES_TERMS: usize = 14;

/// A validated argument for `f1`/`f2` together with the regime thresholds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalDomain {
    pub x: f64,
    pub small_cut: f64,
    pub large_cut: f64,
}

/// Which branch evaluates a given argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Series,
    Closed,
    Asymptotic,
}

impl EvalDomain {
    pub fn new(x: f64) -> Result<Self> {
        Self::with_cuts(x, SMALL_CUT, LARGE_CUT)
    }

    pub fn with_cuts(x: f64, small_cut: f64, large_cut: f64) -> Result<Self> {
        if !(x >= 0.0) || !x.is_finite() {
            return Err(domain(format!("argument x = {x} must be finite and >= 0")));
        }
        if !(small_cut > 0.0) || !(large_cut > small_cut) {
            return Err(domain(format!(
                "cuts must satisfy 0 < small_cut < large_cut (got {small_cut}, {large_cut})"
            )));
        }
        Ok(Self {
            x,
            small_cut,
            large_cut,
        })
    }

    /// Regime of `x`. `Asymptotic` is informational; it is evaluated in closed form.
    pub fn regime(&self) -> Regime {
        if self.x < self.small_cut {
            Regime::Series
        } else if self.x < self.large_cut {
            Regime::Closed
        } else {
            Regime::Asymptotic
        }
    }

    pub fn f1(&self) -> f64 {
        match self.regime() {
            Regime::Series => f1_series(self.x),
            _ => f1_closed(self.x),
        }
    }

    pub fn f2(&self) -> f64 {
        match self.regime() {
            Regime::Series => f2_series(self.x),
            _ => f2_closed(self.x),
        }
    }
}

/// Sine integral Si(x) = ∫₀ˣ sin(y)/y dy for x ≥ 0.
pub fn sine_integral(x: f64) -> Result<f64> {
    check_nonneg(x)?;
    if x <= SI_SERIES_MAX {
        Ok(si_series(x))
    } else {
        Ok(FRAC_PI_2 - si_cf_complement(x))
    }
}

/// π/2 − Si(x), accurate for large x where the subtraction would cancel.
pub fn sine_integral_complement(x: f64) -> Result<f64> {
    check_nonneg(x)?;
    if x <= SI_SERIES_MAX {
        Ok(FRAC_PI_2 - si_series(x))
    } else {
        Ok(si_cf_complement(x))
    }
}

fn check_nonneg(x: f64) -> Result<()> {
    if x >= 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("argument x = {x} must be finite and >= 0")))
    }
}

fn si_series(x: f64) -> f64 {
    let x2 = x * x;
    // term = (-1)^k x^(2k+1) / (2k+1)!
    let mut term = x;
    let mut sum = x;
    for k in 1..60 {
        let kf = k as f64;
        term *= -x2 / ((2.0 * kf) * (2.0 * kf + 1.0));
        let contrib = term / (2.0 * kf + 1.0);
        sum += contrib;
        if contrib.abs() <= f64::EPSILON * 1e-2 * sum.abs() {
            break;
        }
    }
    sum
}

/// Continued fraction for E1(ix) (modified Lentz), giving π/2 − Si(x) = −Im[e^{-ix} CF].
fn si_cf_complement(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = Complex64::new(1.0, x);
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 2..10_000 {
        let a = -((i - 1) as f64).powi(2);
        b += 2.0;
        d = (d * a + b).inv();
        c = b + c.inv() * a;
        let del = c * d;
        h *= del;
        if (del.re - 1.0).abs() + del.im.abs() < 1e-16 {
            break;
        }
    }
    let h = Complex64::new(x.cos(), -x.sin()) * h;
    -h.im
}

/// f1(x) = (1/x²)[1 + x²(πx + 3) − (1+x²)cos 2x − 2x sin 2x − 2x³ Si(2x)].
pub fn f1(x: f64) -> Result<f64> {
    Ok(EvalDomain::new(x)?.f1())
}

/// f2(x) = (1/x²)[1 − x sin 2x − cos 2x].
pub fn f2(x: f64) -> Result<f64> {
    Ok(EvalDomain::new(x)?.f2())
}

/// Closed form of `f1`, rearranged as 3 + 2x(π/2 − Si(2x)) + [1 − (1+x²)cos 2x − 2x sin 2x]/x².
///
/// Accurate for x ≳ 0.1; loses ~eps/x³ relative precision below.
pub fn f1_closed(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let (s, c) = (2.0 * x).sin_cos();
    let x2 = x * x;
    let si_c = if 2.0 * x <= SI_SERIES_MAX {
        FRAC_PI_2 - si_series(2.0 * x)
    } else {
        si_cf_complement(2.0 * x)
    };
    3.0 + 2.0 * x * si_c + (1.0 - (1.0 + x2) * c - 2.0 * x * s) / x2
}

pub fn f2_closed(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let (s, c) = (2.0 * x).sin_cos();
    (1.0 - x * s - c) / (x * x)
}

/// Taylor coefficients a_m of f1(x) − πx = Σ a_m x^{2m} (a_0 = a_1 = 0).
fn f1_coefficients() -> [f64; SERIES_TERMS] {
    let mut out = [0.0; SERIES_TERMS];
    for (i, a) in out.iter_mut().enumerate() {
        let m = (i + 2) as i32;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let pow4 = 4f64.powi(m);
        let cos_part = 4.0 * pow4 / factorial(2 * m + 2) - pow4 / factorial(2 * m);
        let sin_part = -4.0 * pow4 / factorial(2 * m + 1);
        let si_part = pow4 / ((2 * m - 1) as f64 * factorial(2 * m - 1));
        *a = sign * (cos_part + sin_part + si_part);
    }
    out
}

/// Taylor coefficients of f2(x) = Σ b_n x^{2n}, starting at n = 1.
fn f2_coefficients() -> [f64; SERIES_TERMS] {
    let mut out = [0.0; SERIES_TERMS];
    for (i, b) in out.iter_mut().enumerate() {
        let n = (i + 2) as i32;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        *b = sign * 4f64.powi(n) * (n - 1) as f64 / factorial(2 * n);
    }
    out
}

fn factorial(n: i32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Series branch of `f1`: πx − (2/9)x⁴ + (2/75)x⁶ − …
pub fn f1_series(x: f64) -> f64 {
    let x2 = x * x;
    let poly = f1_coefficients()
        .iter()
        .rev()
        .fold(0.0, |acc, &a| acc * x2 + a);
    PI * x + poly * x2 * x2
}

/// Series branch of `f2`: (2/3)x² − (8/45)x⁴ + (2/105)x⁶ − …
pub fn f2_series(x: f64) -> f64 {
    let x2 = x * x;
    let poly = f2_coefficients()
        .iter()
        .rev()
        .fold(0.0, |acc, &b| acc * x2 + b);
    poly * x2
}

/// Leading small-x coefficient c in f2(x) ≈ c·x².
pub fn f2_leading_coefficient() -> f64 {
    f2_coefficients()[0]
}

/// Mean Bose occupation 1/(e^{E/T} − 1).
///
/// Evaluated as e^{−E/T}/(1 − e^{−E/T}), which neither overflows for E ≫ T nor
/// loses precision for E ≪ T. T = 0 gives exactly 0.
pub fn bose_occupation(energy: f64, temperature: f64) -> Result<f64> {
    if !(energy > 0.0) || !energy.is_finite() {
        return Err(domain(format!("energy = {energy} must be > 0")));
    }
    if !(temperature >= 0.0) || temperature.is_nan() {
        return Err(domain(format!("temperature = {temperature} must be >= 0")));
    }
    if temperature == 0.0 {
        return Ok(0.0);
    }
    let r = energy / temperature;
    Ok((-r).exp() / -(-r).exp_m1())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    // Reference values from 30-digit evaluations of the defining integrals.
    const SI_REF: [(f64, f64); 12] = [
        (0.1, 0.099944461108276950161),
        (0.5, 0.49310741804306668916),
        (1.0, 0.94608307036718301494),
        (2.0, 1.6054129768026948486),
        (PI, 1.8519370519824661704),
        (4.0, 1.7582031389490530581),
        (4.5, 1.6541404143792439835),
        (5.0, 1.5499312449446741373),
        (10.0, 1.6583475942188740493),
        (20.0, 1.5482417010434398402),
        (100.0, 1.5622254668890562934),
        (1000.0, 1.5702331219687712181),
    ];

    #[test]
    fn sine_integral_reference_values() {
        assert_eq!(sine_integral(0.0).unwrap(), 0.0);
        for (x, want) in SI_REF {
            let got = sine_integral(x).unwrap();
            assert!((got - want).abs() <= 1e-12, "Si({x}) = {got}, want {want}");
        }
    }

    #[test]
    fn sine_integral_regimes_meet() {
        let below = si_series(SI_SERIES_MAX);
        let above = FRAC_PI_2 - si_cf_complement(SI_SERIES_MAX);
        assert!((below - above).abs() < 1e-14);
    }

    #[test]
    fn sine_integral_limit() {
        let v = sine_integral(1e8).unwrap();
        assert!((v - FRAC_PI_2).abs() < 1e-8);
        assert!(sine_integral_complement(1e8).unwrap().abs() < 1e-8);
    }

    #[test]
    fn sine_integral_rejects_negative() {
        assert!(sine_integral(-1.0).is_err());
        assert!(sine_integral(f64::NAN).is_err());
    }

    const F_REF: [(f64, f64, f64); 11] = [
        (1e-4, 0.00031415926535895710163, 6.6666666488888938803e-9),
        (0.01, 0.031415924313702376666, 0.000066664888907936395062),
        (0.1, 0.31413706978710350683, 0.0066489079252247329862),
        (0.3, 0.94069712932797261681, 0.05857381190901217332),
        (0.5, 1.5573177878554289907, 0.15584880691164811709),
        (1.0, 2.9444655194273249245, 0.5068494097214606916),
        (2.0, 4.0742297727708173892, 0.79181215286986710435),
        (5.0, 3.2547301603554841747, 0.18236708334093206077),
        (8.0, 3.09212867526752358, 0.066576343963186046878),
        (50.0, 3.015076816391823932, 0.010182385273280102299),
        (1000.0, 2.9986064912346221198, -0.00092867204486703617659),
    ];

    #[test]
    fn f1_f2_reference_values() {
        for (x, w1, w2) in F_REF {
            let g1 = f1(x).unwrap();
            let g2 = f2(x).unwrap();
            assert!(rel(g1, w1) < 1e-12, "f1({x}) = {g1}, want {w1}");
            assert!(rel(g2, w2) < 1e-11, "f2({x}) = {g2}, want {w2}");
        }
    }

    #[test]
    fn f2_vanishes_at_pi() {
        assert!(f2(PI).unwrap().abs() < 1e-15);
    }

    #[test]
    fn zero_argument() {
        assert_eq!(f1(0.0).unwrap(), 0.0);
        assert_eq!(f2(0.0).unwrap(), 0.0);
        assert!(f1(-0.1).is_err());
        assert!(f2(-1e-9).is_err());
    }

    #[test]
    fn series_coefficients_match_exact_rationals() {
        let a = f1_coefficients();
        let exact = [-2.0 / 9.0, 2.0 / 75.0, -2.0 / 1225.0, 8.0 / 127575.0];
        for (got, want) in a.iter().zip(exact) {
            assert!(rel(*got, want) < 1e-13, "{got} vs {want}");
        }
        let b = f2_coefficients();
        let exact = [2.0 / 3.0, -8.0 / 45.0, 2.0 / 105.0, -16.0 / 14175.0];
        for (got, want) in b.iter().zip(exact) {
            assert!(rel(*got, want) < 1e-13, "{got} vs {want}");
        }
        assert_eq!(f2_leading_coefficient(), b[0]);
    }

    #[test]
    fn branches_agree_at_cut() {
        for eps in [-1e-6, 0.0, 1e-6] {
            let x = SMALL_CUT * (1.0 + eps);
            assert!(rel(f1_series(x), f1_closed(x)) <= 1e-10);
            assert!(rel(f2_series(x), f2_closed(x)) <= 1e-10);
        }
    }

    #[test]
    fn eval_domain_validation() {
        assert!(EvalDomain::with_cuts(1.0, 0.0, 10.0).is_err());
        assert!(EvalDomain::with_cuts(1.0, 0.5, 0.1).is_err());
        assert_eq!(EvalDomain::new(0.1).unwrap().regime(), Regime::Series);
        assert_eq!(EvalDomain::new(1.0).unwrap().regime(), Regime::Closed);
        assert_eq!(EvalDomain::new(100.0).unwrap().regime(), Regime::Asymptotic);
    }

    #[test]
    fn bose_examples() {
        let t = 0.7;
        assert!(rel(bose_occupation(t * 2f64.ln(), t).unwrap(), 1.0) < 1e-14);
        assert_eq!(bose_occupation(3.0, 0.0).unwrap(), 0.0);
        let e_minus_1 = 1.0 / (std::f64::consts::E - 1.0);
        assert!(rel(bose_occupation(2.5, 2.5).unwrap(), e_minus_1) < 1e-15);
        assert!(bose_occupation(0.0, 1.0).is_err());
        assert!(bose_occupation(1.0, -1.0).is_err());
        // deep Boltzmann tail: no overflow, tends to e^{-E/T}
        let n = bose_occupation(700.0, 1.0).unwrap();
        assert!(rel(n, (-700f64).exp()) < 1e-14);
        assert_eq!(bose_occupation(1e6, 1.0).unwrap(), 0.0);
    }
}

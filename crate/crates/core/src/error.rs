use thiserror::Error;

/// Errors raised by the physics and quadrature routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The Newtonian potential is too strong for the first-order expansion.
    #[error("regime error: |phi| = {phi} exceeds {limit} (weak-field expansion invalid)")]
    Regime { phi: f64, limit: f64 },

    /// The first-order emission rate came out negative (|Φ| too large for this x).
    #[error("first-order emission rate gamma_g = {0:.6e} is negative; |phi| too large for the weak-field expansion at this x")]
    NegativeRate(f64),

    /// Both jump rates vanish, so there is no dissipation and no steady state.
    #[error("degenerate generator: total rate is zero (no dissipation)")]
    Degenerate,

    /// Fixed-step integration was requested with a step that is too coarse.
    #[error("step-size error: h*Gamma = {h_gamma:.3e} exceeds {limit}; use at least {suggested_steps} steps")]
    StepSize {
        h_gamma: f64,
        limit: f64,
        suggested_steps: usize,
    },

    /// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
    #[error("quadrature did not converge: estimate {estimate:.15e} with error bound {error:.3e}")]
    Convergence { estimate: f64, error: f64 },

    /// The per-period contributions of an oscillatory tail do not shrink.
    #[error("oscillatory tail diverges: period contributions are not decreasing ({last:.3e} vs {first:.3e})")]
    Divergence { first: f64, last: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

//! Independent numerical checks of the closed forms.

pub mod power;
pub mod quadrature;
pub mod sphere;
pub mod tensor;

pub use power::{radiation_power, RadiationPower};
pub use quadrature::{
    integrate_adaptive, oscillatory_tail, wynn_epsilon, Estimate, QuadratureSpec,
};
pub use sphere::{angular_identities_check, IdentityCheck};
pub use tensor::{b1_numeric, b1_numeric_with, b2_numeric, KernelReading, TensorF};

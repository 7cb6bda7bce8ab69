//! Numeric side: enclosures, nested sums and reconstruction.

pub mod bigfloat;
pub mod config;
pub mod nested;
pub mod reconstruct;
pub mod zeta;

pub use bigfloat::{pi, BigFloat};
pub use config::EvalConfig;
pub use reconstruct::{pi_power_coefficient, rational_reconstruct};
pub use zeta::{ez_mzv, generator_value, phi2, riemann_zeta, sharp_mzv, MzvIndex, SharpIndex};

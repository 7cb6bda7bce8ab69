//! Exact arithmetic: rationals, Bernoulli numbers, small linear algebra and
//! the ring of zeta-value expressions.

pub mod bernoulli;
pub mod expr;
pub mod linalg;
pub mod rational;

pub use bernoulli::{bernoulli, bernoulli_poly};
pub use expr::{phi_even, zeta_even, ZetaExpression, ZetaGenerator, ZetaMonomial};
pub use rational::Rational;

//! Exact and high-precision numeric engine for Euler-Zagier multiple zeta
//! values and their B-type analogues.
//!
//! * [`algebra`]: rationals, Bernoulli numbers, and the ring of zeta-value
//!   expressions in which closed forms live.
//! * [`numeric`]: arbitrary-precision floats with tracked error, nested-sum
//!   evaluators, and rational reconstruction.
//! * [`roots`]: root data of types B and C, bases and their lattices, and the
//!   exact Bernoulli-type generating functions attached to a root set.
//! * [`identities`]: volume formulas, parity reductions, triple relations and
//!   restricted sum formulas, each checkable against the numeric side.
//! * [`verify`]: the batch suites used by the CLI `verify` verb.

pub mod algebra;
pub mod error;
pub mod identities;
pub mod numeric;
pub mod parallel;
pub mod roots;
pub mod verify;

pub use algebra::expr::{ZetaExpression, ZetaGenerator, ZetaMonomial};
pub use algebra::rational::Rational;
pub use error::{Error, Result};
pub use numeric::bigfloat::BigFloat;
pub use numeric::config::EvalConfig;

/// Drops the memoized series values, generating-function components and
/// recursion coefficients. Used to time cold evaluations.
pub fn clear_caches() {
    numeric::zeta::clear_memo();
    roots::genfun::clear_caches();
    identities::volume::clear_memo();
}

//! Root systems of types B and C and their Bernoulli-type generating
//! functions.

pub mod basis;
pub mod datum;
pub mod genfun;
pub mod series;

pub use basis::{enumerate_bases, filter_bases_for_a, fractional_shift, BasisV};
pub use datum::{build_root_datum, Family, RootDatum, RootSet};
pub use genfun::{
    generating_function_fstar, homogeneous_component, p_coefficient,
    p_coefficient_numeric_fallback,
};
pub use series::{LinearForm, MultiSeries, Poly};

//! Closed-form identities: volume formulas, parity relations, triple
//! relations, restricted sums, and the folding lemma behind the parity
//! proofs. Every relation can be checked against the numeric evaluators
//! through [`report::RelationReport`].

pub mod lemma;
pub mod parity;
pub mod report;
pub mod sums;
pub mod triple;
pub mod volume;

pub use lemma::{lemma_fold, lemma_fold_exact, Complex};
pub use parity::{b2_parity_rhs, b2_relation, double_parity_rhs, double_relation, reduce_double, reduce_sharp_double};
pub use report::{numeric_value, RelationReport, Status};
pub use sums::{compositions, gkz_odd_sum, restricted_sum, restricted_tuples};
pub use triple::{b3_relation, b3_theorem, b3_theorem_weighted, B3Weight, harmonic_triple, reduce_triple, triple_relation, triple_theorem};
pub use volume::{c_coefficient, equal_arg_mzv, p_from_c_recursion, symmetric_sum, volume_formula};

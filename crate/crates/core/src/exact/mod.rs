//! Exact scalars (rationals and odd prime fields) and dense linear algebra over them.

mod field;
mod matrix;

pub use field::{FieldSpec, Scalar};
pub use matrix::{is_j_independent, Matrix, Rref, Vector};

pub(crate) use field::is_prime;

//! Exact tools for maps that send restricted families of lines onto lines.

pub mod combinatorics;
pub mod constraints;
pub mod error;
pub mod exact;
pub mod lab;
pub mod multiaffine;
pub mod projective;
pub mod scalar_props;

pub use error::{Error, Result};
pub use exact::{is_j_independent, FieldSpec, Matrix, Rref, Scalar, Vector};
pub use lab::{FiniteMapTable, Grid, LineFamily};
pub use multiaffine::{AffineMap, MultiAffineMap, UnivariateCurve};

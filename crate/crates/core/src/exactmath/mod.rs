//! Exact scalars (rationals and prime fields) and dense linear algebra over them.

mod matrix;
mod scalar;

pub use matrix::{Echelon, Matrix, Rref};
pub use scalar::{FieldCtx, Scalar, MAX_MODULUS};

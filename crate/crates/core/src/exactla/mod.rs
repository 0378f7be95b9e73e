//! Exact scalar arithmetic and linear algebra over the rationals and prime
//! fields.

mod scalar;
mod subspace;
mod vector;

pub use scalar::{parse_rational, Field, FieldSpec, Scalar};
pub use subspace::{rref, solve, Subspace};
pub use vector::Vector;

//! Exact computation of lengths of generating sets, characteristic
//! sequences and irreducible-word bases for finite-dimensional, not
//! necessarily associative algebras given by structure constants, together
//! with polynomial-identity checks and sliding/mixing certificates that turn
//! into provable length bounds.
//!
//! ```
//! use alglen::families::vinberg_r4;
//! use alglen::filtration::{characteristic_sequence, length_of_set, GenSet};
//!
//! let r4 = vinberg_r4();
//! let set = GenSet::parse(&r4, "@e1")?;
//! assert_eq!(characteristic_sequence(&r4, &set)?.0, [1, 2, 3, 5]);
//! assert_eq!(length_of_set(&r4, &set)?, 5);
//! # Ok::<(), alglen::Error>(())
//! ```

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod error;
pub mod exactla;
pub mod families;
pub mod filtration;
pub mod identities;
pub mod search;

pub use algebra::{Algebra, Word};
pub use error::{Error, Result};
pub use exactla::{Field, Scalar, Subspace, Vector};

/// Seed used by randomized commands when none is given.
pub const DEFAULT_SEED: u64 = 20240601;

//! Exact spinor representations of real Clifford algebras `Cl_{p,q}`.
//!
//! Every signature gets a primitive idempotent `F` built from commuting
//! involutions, a spinor space `Cl·F` with an identified division ring, and
//! generator matrices extracted exactly by left multiplication. All arithmetic
//! is over the dyadic rationals, so every check is an equality test.

pub mod batch;
pub mod blade;
pub mod dyadic;
pub mod error;
pub mod export;
pub mod fixtures;
pub mod group;
pub mod idempotent;
pub mod involutions;
pub mod multivector;
pub mod octonion;
pub mod random;
pub mod real_matrix;
pub mod representation;
pub mod scalars;
pub mod signature;
pub mod spinor;
pub mod verify;

pub use blade::{blade_product, canonical_basis, Blade};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use multivector::{geometric_product, grade_project, Multivector};
pub use signature::Signature;

/// The spelled-out name of [`Dyadic`].
pub type DyadicRational = Dyadic;

//! Exact computer algebra for the semisimple Hopf algebras H_{2n²}, 𝒜_{4m}, ℬ_{4m}:
//! representation catalogs, fusion rings, inner-faithful actions on
//! Artin–Schelter regular algebras, and the invariant subrings of those actions.

pub mod cyclotomic;
pub mod error;
pub mod hopf;
pub mod rep;
pub mod fusion;
pub mod module_algebra;
pub mod invariants;
pub mod reports;

/// Tag carried by every JSON document this crate emits.
pub const SCHEMA: &str = "hopf-reflections/1";

pub use cyclotomic::{root_of_unity, CycMatrix, CycNum};
pub use error::{HopfError, Result};

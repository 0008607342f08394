//! Exact arithmetic in cyclotomic fields ℚ(ζ_L) and linear algebra over them.

mod field;
mod matrix;
mod number;
pub mod sparse;

pub use field::{cyclotomic_polynomial, CycField};
pub use matrix::CycMatrix;
pub use number::{lift_to_common_conductor, CycNum};

/// ζ_L^k reduced mod Φ_L.
pub fn root_of_unity(l: u32, k: i64) -> CycNum {
    CycNum::root_of_unity(l, k)
}

#[cfg(test)]
mod tests;

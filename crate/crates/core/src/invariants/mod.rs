//! Fixed rings of graded actions: fixed subspaces, minimal generators,
//! Hilbert series and regularity certificates, plus subalgebra membership.

mod fixed;
mod membership;
mod report;

pub use fixed::{character_space, fixed_in, fixed_subspace, hom_dimension};
pub use membership::{display_witness, subalgebra_membership, Membership, Ring, SupportedRing};
pub use report::{
    algebra_hilbert_prefix, default_degree_bound, display_element, element_from_words, faithfulness_check,
    free_hilbert_prefix, invariant_hilbert_prefix, minimal_generators, ore_invariants_check,
    verify_claimed_generators, words, Certificate, ClaimCheck, InvariantGenerator, InvariantReport,
};

#[cfg(test)]
mod tests;

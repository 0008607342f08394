//! Finite-dimensional Hopf algebras by generators and relations.

mod families;
mod presentation;
mod rewrite;
mod word;

pub use families::{
    build_a4m, build_b4m, build_h2n2, build_kac_palyutkin, Family, Shape,
};
pub(crate) use families::zeta;
#[cfg(test)]
pub(crate) use families::{alternating, A, SP};
pub use presentation::{HopfPresentation, Tensor};
pub use rewrite::{RewriteSystem, Rule};
pub use word::{concat, power, LinComb, Word};

//! Grothendieck rings: structure constants, generation closure and
//! ring isomorphisms.

mod closed_form;
mod criterion;
mod table;

pub use closed_form::{expected_fusion, expected_table};
pub use criterion::inner_faithful_criterion;
pub use table::{
    build_fusion_table, cached_fusion_table, closure_is_complete, compare_fusion_isomorphism, find_fusion_isomorphism,
    generation_closure, identity_bijection, FusionTable,
};

//! Representation catalogs, tensor products and decomposition.

mod catalog;
mod label;
mod module;

pub use catalog::{catalog_labels, decompose, irreducible_catalog, rep_from_label, Decomposition};
pub use label::RepLabel;
pub use module::{invert, Representation};

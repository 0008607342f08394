//! Quadratic algebras T(W)/(R) carrying an H-action, and their Ore extensions.

mod engine;
mod spec;
mod standard;

pub use engine::{degree_basis, graded_action, DegreeBasis, EngineKind, GradedEngine, TENSOR_DEGREE_CAP};
pub use spec::{cyc_json, ActionParams, BasisTag, GradedAlgebraSpec, OreLayer, T, U, V};
pub use standard::{default_params, ore_extend, ore_sigma, ore_spec, standard_action, standard_actions, standard_names};

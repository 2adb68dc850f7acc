//! Finite-group engine: Cayley-table groups of order ≤ 200, configuration
//! enumeration up to equivalence, and the obstruction predicates.

mod catalog;
mod config;
mod group;
mod obstruction;
mod words;

pub use catalog::{catalog, catalog_names, CatalogGroup};
pub use config::{config_quotient, enumerate_configs, TameConfig};
pub use group::{
    perm_compose, perm_from_cycles, perm_identity, perm_to_cycles, FiniteGroup, GroupRef, Perm,
    Subgroup, MAX_DEGREE, MAX_ORDER,
};
pub use obstruction::{config_sign_matrix, known_obstruction, Verdict};
pub use words::{resolve_word, resolve_words};

//! Exact decomposition engine for abelian fields of squarefree odd
//! conductor, the realization searches, and the reciprocity check.

mod field;
mod realize;
mod reciprocity;

pub use field::{
    composite, coords_to_index, index_to_coords, product_of_cyclics, CyclotomicField,
    DecompositionData, RealizationWitness,
};
pub use realize::{
    composite_of_prime_fields, realize_abelian_general, realize_matrix_odd, realize_split,
    ConfigDescription, DecompMatrix, FieldDescription, MatchedTarget, PrimeDecomposition,
    RealizationCertificate, SearchOutcome,
};
pub use reciprocity::{reciprocity_check, ReciprocityInstance};

//! The narrative guide, compiled chapter by chapter as doc-tests.
//!
//! The book sources live in `book/` at the repository root (rendered
//! with `mdbook build book`); including them here makes
//! `cargo test --doc` execute every code listing, so the guide can
//! never drift from the crate.  One module per chapter keeps test
//! failures attributable to a chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/sign-matrices.md")]
pub mod sign_matrices {}

#[doc = include_str!("../../../book/src/groups-and-configurations.md")]
pub mod groups_and_configurations {}

#[doc = include_str!("../../../book/src/cyclotomic-engine.md")]
pub mod cyclotomic_engine {}

#[doc = include_str!("../../../book/src/reciprocity.md")]
pub mod reciprocity {}

#[doc = include_str!("../../../book/src/realization-searches.md")]
pub mod realization_searches {}

#[doc = include_str!("../../../book/src/polynomial-verification.md")]
pub mod polynomial_verification {}

#[doc = include_str!("../../../book/src/corpus-and-cli.md")]
pub mod corpus_and_cli {}

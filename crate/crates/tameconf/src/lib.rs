//! Minimal tame ramification and decomposition configurations over Q.
//!
//! A *tame decomposition configuration* for a finite group `G` of rank `s`
//! is a choice of cyclic inertia subgroups `T_1, ..., T_s` that normally
//! generate `G`, together with decomposition groups `Z_i ⊇ T_i` with
//! `Z_i/T_i` cyclic.  This crate decides, constructs and verifies such
//! configurations:
//!
//! * [`arith`] — exact modular arithmetic: primality, primitive roots,
//!   discrete logarithms, Legendre symbols, power-residue indices, and the
//!   unit-scaling solver.
//! * [`signmatrix`] — sign matrices and the quadratic-residue matrix
//!   criterion, prime searches realizing a sign matrix, and the census of
//!   permutation classes.
//! * [`smallgroup`] — a finite-group engine for groups of order ≤ 200:
//!   closure from permutation generators, rank, automorphisms, enumeration
//!   of configurations up to equivalence, and obstruction predicates.
//! * [`cycabelian`] — exact decomposition data of abelian fields presented
//!   inside cyclotomic fields of squarefree conductor, plus the realization
//!   searches and the reciprocity check.
//! * [`polyfield`] — number-field verification from defining polynomials:
//!   factorization over prime fields, discriminants, the Dedekind index
//!   criterion, splitting patterns, and ramified-prime sets.
//! * [`corpus`] — the bundled machine-readable table corpus consumed by the
//!   `tameconf` CLI and the test suite.
//!
//! The narrative guide lives in `book/`; its code listings are compiled as
//! doc-tests through the [`guide`] module.

pub mod arith;
pub mod corpus;
pub mod cycabelian;
pub mod error;
pub mod guide;
pub mod polyfield;
pub mod signmatrix;
pub mod smallgroup;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

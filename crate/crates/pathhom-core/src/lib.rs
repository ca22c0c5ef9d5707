//! Exact-arithmetic engine for the generalized path homology of finite
//! digraphs.
//!
//! The chain groups are spans of allowed paths whose image under a fixed
//! odd-degree operator of the differential algebra on the vertex set is
//! again a span of allowed paths; the boundary is that operator, and the
//! degree-n chain group sits at path length `n*(2t+1) + p` for an operator
//! of degree `2t+1` and an integer parameter `p`. Even-degree elements act
//! as chain maps between complexes whose parameters differ by their degree,
//! and induce homomorphisms on homology.
//!
//! All coefficients are exact: arbitrary-precision rationals by default, or
//! a prime field GF(p) with p odd. All enumerations, bases, and reduced
//! forms are canonical and deterministic, so repeated runs produce
//! identical output. The crate is `no_std` (alloc only); IO, file formats,
//! and the CLI live in the companion `pathhom` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod chain;
pub mod complexes;
pub mod diff;
pub mod digraph;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod scalar;

pub use chain::PathChain;
pub use complexes::{
    build_full_complex, chain_map_matrices, omega_basis, ChainMapDegree, ComplexDegree,
    DegreeIndex, FullComplex, OmegaComplex, PathSpace,
};
pub use diff::{normalize_monomial, partial, DiffElement, WedgeMonomial};
pub use digraph::{elementary_paths, regular_paths, Digraph, Path};
pub use error::{Error, Result};
pub use homology::{
    boundary_space, classical_path_homology, cycle_space, euler_characteristic, homology,
    homology_of_complex, induced_map, DegreeHomology, HomologyResult, InducedDegree, InducedMap,
};
pub use linalg::{quotient_rank, rank_of_restriction, Matrix, Subspace};
pub use scalar::{Field, K};

/// Default bound on enumerated paths per degree; cyclic digraphs have
/// allowed paths of every length, so enumeration must be capped.
pub const DEFAULT_PATH_CAP: usize = 1_000_000;

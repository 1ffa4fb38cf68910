//! Exact computational toolkit for finite-dimensional Lie algebras over
//! finite fields.
//!
//! Algebras are given by structure constants over GF(p^k), validated against
//! the alternating and Jacobi conditions. On top of that the crate computes
//! exact commutativity degrees (as reduced big rationals), breadth, canonical
//! structural subobjects (center, derived subalgebra, lower central series),
//! quotients, direct sums and stem decompositions, checks the degree bounds
//! and inequalities these invariants satisfy, and verifies or searches for
//! isoclinism witnesses between algebras.

pub mod analysis;
pub mod catalog;
pub mod corpus;
pub mod error;
pub mod gfq;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod rational;

pub use error::{Error, Result};
pub use gfq::{Field, FieldElement};
pub use lie::{LieAlgebra, SeriesResult, StemDecomposition};
pub use linalg::{Matrix, Subspace, DEFAULT_ENUMERATION_CAP};

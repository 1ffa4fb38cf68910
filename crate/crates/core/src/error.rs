//! Error type shared by every module of the crate.

use thiserror::Error;

/// All failure modes of the toolkit. Indices reported in bracket-related
/// variants are 1-based, matching the algebra file format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{p} is not prime")]
    NonPrimeModulus { p: u64 },
    #[error("modulus polynomial is reducible (a monic factor of degree {factor_degree} divides it)")]
    ReducibleModulus { factor_degree: usize },
    #[error("no built-in modulus for GF({p}^{k}); built-ins cover q <= 512, supply one explicitly")]
    NoBuiltinModulus { p: u64, k: u32 },
    #[error("malformed modulus: expected a monic polynomial of degree {expected_degree} with coefficients below p")]
    InvalidModulus { expected_degree: u32 },
    #[error("division by zero in GF({q})")]
    DivisionByZero { q: u64 },
    #[error("operands belong to different fields (GF({left}) vs GF({right}))")]
    FieldMismatch { left: u64, right: u64 },
    #[error("ambient dimensions differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("subspace is not contained in the given ambient subspace")]
    NotContained,
    #[error("enumeration of {requested} items exceeds the cap of {cap}")]
    EnumerationCapExceeded { requested: u128, cap: u64 },
    #[error("Jacobi identity fails at basis triple ({i}, {j}, {k}), coordinate {l}")]
    JacobiViolation { i: usize, j: usize, k: usize, l: usize },
    #[error("alternating condition fails at basis pair ({i}, {j}), coordinate {k}")]
    AlternatingViolation { i: usize, j: usize, k: usize },
    #[error("bracket index ({i}, {j}, {k}) out of range for dimension {dim} (need 1 <= i < j <= dim, 1 <= k <= dim)")]
    IndexOutOfRange { i: usize, j: usize, k: usize, dim: usize },
    #[error("duplicate bracket entry at (i, j, k) = ({i}, {j}, {k})")]
    DuplicateEntry { i: usize, j: usize, k: usize },
    #[error("vector or matrix size {got} does not match dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,
    #[error("ideals are not nested")]
    NotNested,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("witness maps must be invertible")]
    SingularWitness,
    #[error("operation is stated for non-abelian algebras only")]
    AbelianInput,
    #[error("isoclinism search space of {candidates} witness pairs exceeds the budget of {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

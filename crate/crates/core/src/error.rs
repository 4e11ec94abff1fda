use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures raised by the engine. Every variant is a user-facing condition;
/// none of them is used for control flow inside the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime in [2, 65536]")]
    NonPrimeModulus(u64),
    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),
    #[error("residue {value} is not reduced modulo {modulus}")]
    UnreducedResidue { value: u64, modulus: u32 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live over different algebras or fields")]
    AlgebraMismatch,
    #[error("algebra dimension must be at least 1")]
    EmptyAlgebra,
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("unit axiom fails on basis vector {0}")]
    UnitAxiomViolated(usize),
    #[error("{side} module axiom fails on basis triple ({i}, {j}, {k})")]
    ModuleAxiomViolated { side: &'static str, i: usize, j: usize, k: usize },
    #[error("{side} unit action fails on basis vector {index}")]
    UnitActionViolated { side: &'static str, index: usize },
    #[error("enumeration of {p}^{dim} elements exceeds cap {cap}")]
    EnumerationCapExceeded { p: u32, dim: usize, cap: u64 },
    #[error("subspace lattice of size {count} exceeds cap {cap}")]
    LatticeCapExceeded { count: u128, cap: u64 },
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("idempotent must be nonzero")]
    ZeroIdempotent,
    #[error("idempotent must be different from 0 and 1")]
    NontrivialRequired,
    #[error("idempotent is not left semicentral")]
    NotLeftSemicentral,
    #[error("map is not left-ideal-preserving")]
    NotLip,
    #[error("LIP map leaves the {block} block (block form contradicted)")]
    BlockStructureViolated { block: &'static str },
    #[error("idempotents are not left triangulating: {0}")]
    NotTriangulating(String),
    #[error("block shape must be a nonempty list of positive sizes")]
    InvalidBlockShape,
    #[error("witness failed re-verification: {0}")]
    WitnessRejected(&'static str),
}

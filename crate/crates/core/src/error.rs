use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero form has no content")]
    ZeroForm,
    #[error("form is degenerate (discriminant 0)")]
    Degenerate,
    #[error("form is not positive definite")]
    NotPositiveDefinite,
    #[error("form is not primitive")]
    NotPrimitive,
    #[error("{0} is not a discriminant (must be nonzero and 0 or 1 mod 4)")]
    InvalidDiscriminant(BigInt),
    #[error("matrix determinant is {0}, expected 1")]
    NotUnimodular(BigInt),
    #[error("pairing is not normed with respect to the form")]
    NotNormed,
    #[error("partial determinant is not +f or -f")]
    DeterminantMismatch,
    #[error("pairing is not commutative and traceless")]
    NotCommutativeTraceless,
    #[error("anchor vector has value 0")]
    ZeroAnchor,
    #[error("inexact division: {0} is not divisible by {1}")]
    InexactDivision(BigInt, BigInt),
    #[error("sublattice generators are dependent")]
    RankDeficient,
    #[error("sublattice is null (determinant vanishes identically)")]
    NullSublattice,
    #[error("sublattice contains no nonzero scalar matrix")]
    NoScalar,
    #[error("sublattice or lattice is not stable under the product")]
    NotStable,
    #[error("lattices live in different contexts")]
    ContextMismatch,
    #[error("lattice is not integer-normed")]
    NotIntegerNormed,
    #[error("lattice scalar generator {0} is not an integer")]
    NonIntegralScalar(num_rational::BigRational),
    #[error("principality is only decided for negative discriminants")]
    IndefiniteUnsupported,
    #[error("curve parameterization requires m*n != 0")]
    ZeroOuterCoefficient,
    #[error("embedding matrix is singular")]
    SingularEmbedding,
    #[error("no pairing parameters reproduce the expanded pairing")]
    ParameterRecovery,
}

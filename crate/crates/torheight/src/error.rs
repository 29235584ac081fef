//! Crate-wide error type.

use thiserror::Error;

/// Domain errors raised by the algebra and height kernels.
///
/// Parse errors of the textual interfaces live in [`crate::json`]; everything
/// here is a mathematical precondition violation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    ZeroPolynomialDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not squarefree")]
    NonSquarefree,
    #[error("defining polynomial is reducible over Q")]
    ReducibleDefiningPolynomial,
    #[error("defining polynomial must be monic with integer coefficients")]
    BadDefiningPolynomial,
    #[error("elements belong to different number fields")]
    FieldMismatch,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("all projective coordinates are zero")]
    AllCoordinatesZero,
    #[error("field does not carry the monogenic maximal-order promise")]
    NotMonogenic,
    #[error("coordinate of a torus point is zero")]
    ZeroCoordinate,
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("torsion cosets live in tori of different rank")]
    RankMismatch,
    #[error("element is not a root of unity")]
    NotRootOfUnity,
    #[error("matrix sizes differ")]
    SizeMismatch,
    #[error("characteristic polynomial does not split over the working field")]
    DoesNotSplit,
    #[error("splitting field supplied for a matrix with irrational entries")]
    SplittingFieldUnsupported,
    #[error("root isolation failed: {0}")]
    RootIsolation(String),
    #[error("{0}")]
    Precondition(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

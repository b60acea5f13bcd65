use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand {0} exceeds the supported bound")]
    RadicandOverflow(String),
    #[error("square root of a negative number {0}")]
    NegativeRadicand(String),
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("polynomial mixes Fourier degrees {0} and {1}")]
    MixedFourierDegree(i64, i64),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("matrix is not unitary")]
    NotUnitary,
    #[error("point is not on the unit sphere")]
    NotOnSphere,
    #[error("point is a pole of the map")]
    Pole,
    #[error("the origin is not allowed here")]
    ZeroPoint,
    #[error("subspace does not fit: {0}")]
    Subspace(String),
    #[error("internal identity check failed: {0}")]
    IdentityFailure(String),
    #[error("operation requires a polynomial map")]
    NotPolynomial,
    #[error("map is holomorphically degenerate")]
    Degenerate,
    #[error("vector is not an infinitesimal deformation of the map")]
    NotMember,
    #[error("no witness point found within the search budget: {0}")]
    Certification(String),
    #[error("infeasible system: {0}")]
    Infeasible(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

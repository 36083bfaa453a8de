use thiserror::Error;

use crate::scalar::MAX_DIM;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("ambient dimension {0} outside 1..={max}", max = MAX_DIM)]
    DimensionOutOfRange(usize),
    #[error("form is not closed")]
    NotClosed,
    #[error("form has a degree-0 component")]
    HasDegreeZero,
    #[error("form has an even-degree component")]
    EvenDegree,
    #[error("form has an odd-degree component")]
    OddDegree,
    #[error("form contains dt")]
    HasDt,
    #[error("operation requires a form on the cylinder [0,1] x M")]
    NotCylinder,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("degree-0 component is not the constant 1")]
    NotOmegaPlus,
    #[error("matrix entry ({0},{1}) is not a homogeneous 1-form")]
    NotOneForm(usize, usize),
    #[error("matrix entry ({0},{1}) is not a function")]
    NotFunction(usize, usize),
    #[error("polynomial `{0}` has no inverse in the multiplicative group of forms")]
    NotInvertible(String),
    #[error("determinant is not a nonzero constant")]
    NotUnimodular,
    #[error("path endpoints do not match the given connections")]
    EndpointMismatch,
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("generator `{0}` out of range for dimension {1}")]
    GeneratorOutOfRange(String, usize),
    #[error("invalid document: {0}")]
    Document(String),
    #[error("unknown invariant polynomial `{0}`")]
    UnknownPolynomial(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::lp::LpError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree {degree} out of range (top dimension {top})")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error("cell `{id}` has non-positive weight {weight}")]
    NonPositiveWeight { id: String, weight: String },
    #[error("boundary composite d{0} o d{1} is not zero")]
    BoundaryNotNilpotent(usize, usize),
    #[error("malformed complex: {0}")]
    Malformed(String),
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(String),
    #[error("chain has {got} coefficients but degree {degree} has {expected} cells")]
    ChainLength { degree: usize, got: usize, expected: usize },
    #[error("chain of degree {0} is not a cycle")]
    NotACycle(usize),
    #[error("class has {got} coordinates, expected {expected}")]
    CoordinateLength { got: usize, expected: usize },
    #[error("stable {0}-systole is trivial")]
    TrivialSystole(usize),
    #[error("operation requires a simplicial complex")]
    NotSimplicial,
    #[error("complex has no factor tags; build it with `product`")]
    MissingFactorTags,
    #[error("simplex {0:?} maps to a degenerate or missing simplex")]
    DegenerateMap(Vec<usize>),
    #[error("map does not induce a monomorphism on degree-{0} rational homology")]
    NotMonomorphism(usize),
    #[error("no fundamental class: {0}")]
    NoFundamentalClass(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("invalid sample ladder: {0}")]
    InvalidSamples(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

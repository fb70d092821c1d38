use thiserror::Error;

use crate::rootsys::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported algebra {series}{rank}")]
    UnsupportedAlgebra { series: char, rank: usize },
    #[error("cannot parse algebra `{0}`")]
    ParseAlgebra(String),
    #[error("cannot parse weight `{0}`")]
    ParseWeight(String),
    #[error("weight has {got} coordinates but the rank is {rank}")]
    Arity { got: usize, rank: usize },
    #[error("simple-root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {0} is not strictly dominant")]
    NotStrictlyDominant(Weight),
    #[error("orbit of {order} points exceeds the enumeration cap {cap}")]
    OrbitCap { order: u64, cap: u64 },
    #[error("polynomial arity mismatch: {0} vs {1} variables")]
    PolyArity(usize, usize),
    #[error("cannot parse polynomial `{input}`: {reason}")]
    ParsePoly { input: String, reason: String },
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("weight list is not closed under lower multiplicities: missing {0}")]
    NotDominanceClosed(Weight),
    #[error("weight {0} is listed before the lower weight {1}")]
    WeightOrder(Weight, Weight),
    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

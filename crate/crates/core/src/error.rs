use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live in different ambient groups")]
    AmbientMismatch,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("table does not define a unital associative ring: {0}")]
    NotARing(String),
    #[error("table does not define a group: {0}")]
    NotAGroup(String),
    #[error("{what} needs {needed} elements but the cap is {cap}")]
    CapExceeded { what: String, needed: String, cap: u64 },
    #[error("subset is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{0} is not invertible in the coefficient ring")]
    NotInvertible(String),
    #[error("map is not a derivation: {0}")]
    NotADerivation(String),
    #[error("derivation does not vanish on the coefficient ring")]
    NotAnRDerivation,
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("map is not a solder: {0}")]
    NotASolder(String),
    #[error("linear map is not well defined on its domain")]
    IllDefinedMap,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn cap_exceeded(what: impl Into<String>, needed: impl ToString, cap: u64) -> Error {
    Error::CapExceeded { what: what.into(), needed: needed.to_string(), cap }
}

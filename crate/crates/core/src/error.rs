use thiserror::Error;

use crate::kernel::{Arc, Endpoint, Model};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("model mismatch: expected {expected}, found {found}")]
    ModelMismatch { expected: Model, found: String },

    #[error("endpoint {0} does not belong to model {1}")]
    ForeignEndpoint(Endpoint, Model),

    #[error("endpoints out of order: {0} is not below {1}")]
    OrderViolation(Endpoint, Endpoint),

    #[error("invalid arc {0}: no endpoint strictly between its ends, or excluded by the model")]
    InvalidArc(Arc),

    #[error("arc {0} is not in the set")]
    NotInSet(Arc),

    #[error("arc {0} belongs to family `{1}`; materialize it into the explicit part before flipping")]
    NotExplicit(Arc, String),

    #[error("map `{map}` is not order preserving at {lo} < {hi}")]
    NotOrderPreserving { map: String, lo: Endpoint, hi: Endpoint },

    #[error("map `{0}` is not defined at {1}")]
    OutsideDomain(String, Endpoint),

    #[error("family `{family}`: {reason}")]
    Unresolved { family: String, reason: String },

    #[error("parameters out of range: {0}")]
    Parameters(String),

    #[error("`{name}` is out of scope: {reason}")]
    OutOfScope { name: String, reason: String },

    #[error("unknown name `{0}`")]
    Unknown(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

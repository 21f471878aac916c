use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}` in universe")]
    DuplicateVertex(String),
    #[error("facet {0} is empty")]
    EmptyFacet(usize),
    #[error("operation undefined on the empty complex")]
    EmptyComplex,
    #[error("face is not a facet of the complex")]
    NotAFacet,
    #[error("facet index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("empty facet selection")]
    EmptySelection,
    #[error("universe has {size} vertices, limit is {limit}")]
    UniverseTooLarge { size: usize, limit: usize },
    #[error("complex has {size} facets, limit is {limit}")]
    TooManyFacets { size: usize, limit: usize },
    #[error("complex is not a tree")]
    NotATree,
    #[error("complex is not grafted")]
    NotGrafted,
    #[error("intersections with leaf {leaf} do not form a chain")]
    ChainViolation { leaf: usize },
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("grafted output failed verification: {0}")]
    GraftVerificationFailed(String),
    #[error("generator bounds too large: {0}")]
    BoundsTooLarge(String),
    #[error("characteristic {0} is neither 0 nor a prime")]
    InvalidCharacteristic(u64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

use thiserror::Error;

/// Errors produced by parsers, constructors and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A text input (graph, word or map file) failed to parse.
    /// Line numbers are 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A vertex name was looked up in a graph that does not declare it.
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    /// A generator constructor argument was out of its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A cancellation pairing was requested for a word that does not
    /// represent the identity.
    #[error("word does not represent the identity")]
    NotTrivial,

    /// The base of an outside-pair query does not occur in the word.
    #[error("generator `{0}` does not occur in the word")]
    BaseAbsent(String),

    /// A generator map failed the relator check, so an operation requiring
    /// a homomorphism cannot run.
    #[error("generator map is not a homomorphism (relator [{x},{y}] has non-trivial image)")]
    NotAHomomorphism { x: String, y: String },

    /// A vertex mapping handed to `embedding_to_homomorphism` does not
    /// preserve edges and non-edges.
    #[error("mapping is not an induced embedding: {0}")]
    NotInduced(String),

    /// Ball construction exceeded the configured vertex cap.
    #[error("extension ball exceeds the vertex cap of {cap} vertices")]
    CapacityExceeded { cap: usize },

    /// An operation requiring a nonempty set received an empty one.
    #[error("{0} must be nonempty")]
    EmptyInput(&'static str),

    /// A builtin object name was not recognised.
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
}

pub type Result<T> = std::result::Result<T, Error>;

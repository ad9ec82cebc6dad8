use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),

    #[error("vertex `{vertex}` has negative genus {genus}")]
    NegativeGenus { vertex: String, genus: i64 },

    #[error("edge references unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("self-loop on vertex `{0}` is not allowed")]
    SelfLoop(String),

    #[error("more than one edge record between `{0}` and `{1}`")]
    DuplicateEdge(String, String),

    #[error("edge `{a}`-`{b}` has non-positive multiplicity {multiplicity}")]
    BadMultiplicity {
        a: String,
        b: String,
        multiplicity: i64,
    },

    #[error("graph is disconnected: {components} components")]
    Disconnected { components: usize },

    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,

    #[error("cycle belongs to a different graph")]
    GraphMismatch,

    /// A precondition of a combinatorial operation does not hold.
    #[error("{0}")]
    Domain(String),

    /// User-supplied analytic data (q, p_g, ...) contradicts what the graph forces.
    #[error("inconsistent analytic input: {0}")]
    InconsistentInput(String),

    /// A bounded brute-force search ran out of room.
    #[error("oracle bound {multiplier} too small: {what}")]
    OracleBound { multiplier: u32, what: String },

    #[error("invalid graph JSON: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::InconsistentInput(msg.into())
    }

    /// True for errors raised while loading or validating a graph.
    pub fn is_graph_validation(&self) -> bool {
        matches!(
            self,
            Error::EmptyGraph
                | Error::DuplicateVertex(_)
                | Error::NegativeGenus { .. }
                | Error::UnknownVertex(_)
                | Error::SelfLoop(_)
                | Error::DuplicateEdge(..)
                | Error::BadMultiplicity { .. }
                | Error::Disconnected { .. }
        )
    }
}

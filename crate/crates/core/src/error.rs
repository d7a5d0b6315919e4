use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring axiom `{axiom}` violated at {witness}")]
    AxiomViolation { axiom: String, witness: String },

    #[error("malformed ring spec: {0}")]
    BadRingSpec(String),

    #[error("exhaustive search needs {needed} states, cap is {cap}")]
    SearchCapExceeded { needed: u128, cap: u64 },

    #[error("malformed graph: {0}")]
    BadGraph(String),

    #[error("vertices {0:?} are not regular in the graph")]
    XNotRegular(Vec<String>),

    #[error("primed name `{0}` collides with an existing name")]
    PrimedNameCollision(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("elements belong to different algebras")]
    SpecMismatch,

    #[error("element is not homogeneous of degree zero")]
    NotDegreeZero,

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("element does not lie in D_{0}")]
    NotInDn(usize),

    #[error("operation requires a Leavitt path algebra (X = Reg(E))")]
    NotLeavitt,

    #[error("element is zero")]
    ZeroElement,

    #[error("coefficient ring is not von Neumann regular: no witness for {0}")]
    CoefficientRingNotVnr(String),

    #[error("internal verification failed: {0}")]
    InternalVerificationFailure(String),

    #[error("assertion failed: {0}")]
    AssertionFailure(String),

    #[error("relation {relation} violated: {detail}")]
    RelationViolation { relation: String, detail: String },

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("{0} is not idempotent")]
    NotIdempotent(String),

    #[error("not a corner isomorphism: {0}")]
    NotCornerIso(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use crate::axioms::OrthomatroidReport;
use crate::lattice::PropSysReport;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("self-orthogonal pair ({0}, {0}): orthogonality is anti-reflexive")]
    SelfOrthogonal(usize),

    #[error("element index {index} out of range for ground set of size {n}")]
    OutOfRange { index: usize, n: usize },

    #[error("not an orthomatroid: {} fails", .0.first_failure())]
    NotOrthomatroid(Box<OrthomatroidReport>),

    #[error("set {0:?} is not orthoindependent")]
    NotOrthoindependent(Vec<usize>),

    #[error("start set {start:?} is not contained in the closure {closure:?} of the span set")]
    NotInClosure { start: Vec<usize>, closure: Vec<usize> },

    #[error("orthoset is not simple: closure of {{{element}}} has {closure_size} elements")]
    NotSimple { element: usize, closure_size: usize },

    #[error("similarity is not transitive: {x} ~ {y} and {y} ~ {z} but not {x} ~ {z}")]
    NotTransitive { x: usize, y: usize, z: usize },

    #[error("not a propositional system: {} fails", .0.first_failure())]
    NotPropositionalSystem(Box<PropSysReport>),

    #[error("closed-set budget exceeded: more than {budget} nodes")]
    ResourceLimit { budget: usize },

    #[error("enumeration bound exceeded: n = {n} > {bound}")]
    EnumerationBound { n: usize, bound: usize },

    #[error("zero vector at position {0}")]
    ZeroVector(usize),

    #[error("vector at position {index} has dimension {got}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },

    #[error("isotropic ray {0}: its inner product with itself is zero")]
    IsotropicRay(String),

    #[error("invalid lattice input: {0}")]
    InvalidLattice(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

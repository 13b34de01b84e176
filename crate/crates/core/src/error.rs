use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bad table shape: {0}")]
    BadShape(String),

    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NonAssociative(usize, usize, usize),

    #[error("index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("unknown element label {0:?}")]
    UnknownLabel(String),

    #[error("generator set is empty")]
    EmptyGeneratorSet,

    #[error("subset is not an ideal")]
    NotAnIdeal,

    #[error("ideal is not completely 0-simple: {0}")]
    NotCompletelyZeroSimple(String),

    #[error("Rees coordinates do not reproduce the multiplication")]
    ReconstructionMismatch,

    #[error("Rees matrix sandwich is not regular")]
    NotRegular,

    #[error("not a group")]
    NotAGroup,

    #[error("gamma/psi ill-defined at element {element}, point {point}")]
    IllDefined { element: usize, point: usize },

    #[error("transformation is not injective off its theta-preimage")]
    NotInjectiveOffTheta,

    #[error("psi cocycle identity fails for ({0}, {1}) at point {2}")]
    CocycleViolation(usize, usize, usize),

    #[error("gamma is not a homomorphism on ({0}, {1})")]
    GammaNotHomomorphism(usize, usize),

    #[error("psi support differs from gamma support at element {0}")]
    SupportMismatch(usize),

    #[error("glued multiplication is not associative: {0:?}")]
    NonAssociativeResult((usize, usize, usize)),

    #[error("semigroup has no zero element")]
    MissingZero,

    #[error("order {order} exceeds cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("no completely 0-simple inverse ideal with nilpotent maximal subgroup found")]
    NoInverseIdeal,

    #[error("type invariant violated: {0}")]
    TypeInvariantViolation(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable tag, used in the CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::BadShape(_) => "BadShape",
            Error::NonAssociative(..) => "NonAssociative",
            Error::IndexOutOfRange(_) => "IndexOutOfRange",
            Error::UnknownLabel(_) => "UnknownLabel",
            Error::EmptyGeneratorSet => "EmptyGeneratorSet",
            Error::NotAnIdeal => "NotAnIdeal",
            Error::NotCompletelyZeroSimple(_) => "NotCompletelyZeroSimple",
            Error::ReconstructionMismatch => "ReconstructionMismatch",
            Error::NotRegular => "NotRegular",
            Error::NotAGroup => "NotAGroup",
            Error::IllDefined { .. } => "IllDefined",
            Error::NotInjectiveOffTheta => "NotInjectiveOffTheta",
            Error::CocycleViolation(..) => "CocycleViolation",
            Error::GammaNotHomomorphism(..) => "GammaNotHomomorphism",
            Error::SupportMismatch(_) => "SupportMismatch",
            Error::NonAssociativeResult(_) => "NonAssociativeResult",
            Error::MissingZero => "MissingZero",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::NoInverseIdeal => "NoInverseIdeal",
            Error::TypeInvariantViolation(_) => "TypeInvariantViolation",
            Error::BadParameter(_) => "BadParameter",
            Error::Parse(_) => "Parse",
        }
    }

    /// Errors caused by malformed input rather than by the analysis itself.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::BadShape(_)
                | Error::NonAssociative(..)
                | Error::Parse(_)
                | Error::UnknownLabel(_)
                | Error::IndexOutOfRange(_)
        )
    }
}

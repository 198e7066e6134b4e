use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different variable sets")]
    RingMismatch,

    #[error("no leading term: the polynomial is zero")]
    NoLeadingTerm,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),

    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),

    #[error("a variable set needs at least one variable")]
    EmptyVariableSet,

    #[error("precedence must be a permutation of the variable names")]
    BadPrecedence,

    #[error("weight system mismatch: {0}")]
    WeightMismatch(String),

    #[error("graded piece is infinite: {0}")]
    InfiniteGradedPiece(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("missing image or coordinate for `{0}`")]
    MissingImage(String),

    #[error("derivation is not weight-homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("`{variable}` not certified locally nilpotent within bound {bound}")]
    NotCertified { variable: String, bound: usize },

    #[error("derivation has not been certified locally nilpotent")]
    Uncertified,

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("no prefixed factorization of leading monomial {monomial}")]
    Stuck { monomial: String },

    #[error("point is not in the plinth locus")]
    NotInPlinthLocus,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

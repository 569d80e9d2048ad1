use thiserror::Error;

/// Errors raised by frame construction, checking, and the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate point name `{0}`")]
    DuplicatePoint(String),
    #[error("unknown point name `{0}`")]
    UnknownPoint(String),
    #[error("frame has no points")]
    EmptyFrame,
    #[error("frame has {0} points; at most {max} are supported", max = crate::pointset::MAX_POINTS)]
    TooManyPoints(usize),
    #[error("R is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("R is not transitive: {x} R {y} and {y} R {z} but not {x} R {z}")]
    NotTransitive { x: String, y: String, z: String },
    #[error("malformed partition: {0}")]
    BadPartition(String),
    #[error("RE is not contained in ER: {x} E {y} and {y} R {y2}, but no R-successor of {x} is E-related to {y2}")]
    NotCommuting { x: String, y: String, y2: String },
    #[error("partition is not correct: {0}")]
    IncorrectPartition(String),
    #[error("point set has width {found}, expected {expected}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("size cap exceeded: {what} is {size}, cap is {cap}")]
    CapExceeded {
        what: String,
        size: usize,
        cap: usize,
    },
    #[error("valuation budget exceeded: {vars} variable(s) over {points} point(s) need 2^{exponent} valuations, budget is {budget}")]
    BudgetExceeded {
        vars: usize,
        points: usize,
        exponent: usize,
        budget: u64,
    },
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("formula mixes the MS4 and S5_2 languages")]
    MixedLanguage,
    #[error("language mismatch: {0}")]
    LanguageMismatch(String),
    #[error("valuation does not cover variable `{0}`")]
    MissingVariable(String),
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
    #[error("axiom `{name}` needs a parameter k >= 1")]
    BadAxiomParameter { name: String },
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("bad parameter for `{name}`: {msg}")]
    BadParameter { name: String, msg: String },
    #[error("operator `{0}` is not available on this structure")]
    UnsupportedOperator(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("missing layer tags")]
    MissingLayers,
    #[error("JSON document error: {0}")]
    Document(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

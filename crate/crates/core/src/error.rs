//! The single error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets differ: {{{0}}} vs {{{1}}}")]
    VarMismatch(String, String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable set: {0}")]
    InvalidVarSet(String),
    #[error("half-integer exponent: {0}")]
    HalfExponent(String),
    #[error("evaluation error: {0}")]
    EvalDomain(String),
    #[error("not divisible")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("exact division needs a single effective variable")]
    MultivariateDivision,
    #[error("zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),
    #[error("not a unit multiple of a symmetric polynomial: {0}")]
    NotSymmetrizable(String),
    #[error("ambiguous leading term: {0}")]
    AmbiguousTop(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("braid closure has {0} components, expected a knot")]
    LinkClosure(usize),
    #[error("not a symmetrized knot Alexander polynomial: {0}")]
    NotSymmetrized(String),
    #[error("polynomial is not monic: {0}")]
    NonMonic(String),
    #[error("Seiberg-Witten symmetry violated: {0}")]
    SymmetryViolation(String),
    #[error("invalid manifold data: {0}")]
    InvalidMeta(String),
    #[error("degree {degree} exceeds genus {genus}")]
    DegreeExceedsGenus { degree: String, genus: i64 },
    #[error("unsupported torus-knot family: {0}")]
    UnsupportedFamily(String),
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableCount { expected: usize, found: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("wire format: {0}")]
    Wire(String),
    #[error("internal error: {0}")]
    Internal(String),
}

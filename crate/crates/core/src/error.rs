use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Variants that name an index triple always name the first failing triple in
/// lexicographic order, so diagnostics are reproducible.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty table: a semigroup needs at least one element")]
    EmptyTable,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({0}, {1}) is out of range")]
    OutOfRange(usize, usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} is not a two-sided identity")]
    NotIdentity(usize),
    #[error("semigroup has no identity element")]
    NoIdentity,
    #[error("element index {0} is out of range for a carrier of size {1}")]
    BadElement(usize, usize),
    #[error("subset is not closed under the product: {0}*{1} escapes it")]
    NotClosed(usize, usize),
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("subsets belong to different carriers")]
    CarrierMismatch,
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("semigroup is not simple")]
    NotSimple,
    #[error("rees decomposition failed: {0}")]
    DecompositionFailure(String),
    #[error("malformed rees data: {0}")]
    BadRees(String),
    #[error("action table {table} has the wrong shape")]
    ActionShape { table: &'static str },
    #[error("unit law fails for element {element} ({side} action)")]
    UnitLawViolation { side: &'static str, element: usize },
    #[error("action law fails ({side} action) at {triple:?}")]
    ActionLawViolation { side: &'static str, triple: (usize, usize, usize) },
    #[error("actions do not commute at (a, x, b) = {0:?}")]
    CommutationViolation((usize, usize, usize)),
    #[error("monoids on either side of the tensor do not match")]
    MonoidMismatch,
    #[error("induced action is not well defined on tensor class {class}")]
    IllDefinedAction { class: usize },
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("monoid is a group; use the groupoid construction instead")]
    IsAGroup,
    #[error("endomorphism monoid of the second object is not a group")]
    GSideNotGroup,
    #[error("endomorphism monoid of the first object is a group")]
    AIsGroup,
    #[error("hom-set {0} is empty")]
    EmptyBimodule(&'static str),
    #[error("invalid category: {0}")]
    InvalidCategory(String),
    #[error("middle monoids of the composed categories differ")]
    MiddleMonoidMismatch,
    #[error("composition {pattern} is not well defined on tensor classes ({left}, {right})")]
    IllDefinedComposition { pattern: &'static str, left: usize, right: usize },
    #[error("group of order {0} exceeds the isomorphism search bound {1}")]
    GroupTooLarge(usize, usize),
    #[error("corpus parameters exceed bounds: {0}")]
    BoundsExceeded(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("postcondition failed: {0}")]
    Postcondition(String),
    #[error("json error: {0}")]
    Json(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

use thiserror::Error;

/// Every failure the engine can report. Variants carry cell names, never indices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown {kind} `{name}`")]
    DanglingReference { kind: &'static str, name: String },
    #[error("identifier `{0}` declared twice")]
    Duplicate(String),
    #[error("composition is not associative on ({}, {}, {})", .0[0], .0[1], .0[2])]
    NonAssociative([String; 3]),
    #[error("no composite declared for `{first}` followed by `{second}`")]
    MissingComposite { first: String, second: String },
    #[error("identity law fails at `{0}`")]
    BadIdentity(String),
    #[error("cell `{cell}` has an inconsistent boundary: {detail}")]
    BadBoundary { cell: String, detail: String },
    #[error("interchange fails on ({}, {}, {}, {})", .0[0], .0[1], .0[2], .0[3])]
    Interchange([String; 4]),
    #[error("boundary mismatch at {0}")]
    BoundaryMismatch(String),
    #[error("not an equivalence: {0}")]
    NotAnEquivalence(String),
    #[error("square `{0}` is not weakly horizontally invertible")]
    NotWhi(String),
    #[error("equivalence data on `{0}` fails a triangle identity")]
    NotAdjoint(String),
    #[error("not a functor: {0}")]
    NotAFunctor(String),
    #[error("enumeration budget of {0} candidates exceeded")]
    BudgetExceeded(u64),
    #[error("outside the supported range: {0}")]
    RangeExceeded(String),
    #[error("internal disagreement: {0}")]
    DisagreementBug(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the combinatorial engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Parse(String),

    #[error("rows are not weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("partition {partition} does not fit under the line y = x - {n}")]
    DoesNotFit { partition: String, n: usize },

    #[error("invalid diagonal ({0},{1})")]
    InvalidDiagonal(usize, usize),

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("diagonal ({0},{1}) is not part of the triangulation")]
    DiagonalNotPresent(usize, usize),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("no exact Laurent quotient exists")]
    NotDivisible,

    #[error("zero substituted into a negative power of {0}")]
    ZeroDivision(String),

    #[error("no value assigned to variable {0}")]
    MissingVariable(String),

    #[error("vertex {vertex} is not mutable (mutable vertices are 1..={mutable})")]
    NotMutable { vertex: usize, mutable: usize },

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("unknown export format {0:?}")]
    UnknownFormat(String),

    #[error("unknown arc family {0:?}")]
    UnknownFamily(String),

    #[error("explicit arc collections cannot be classified")]
    NotClassifiable,

    #[error("invalid arc ({0},{1})")]
    InvalidArc(i64, i64),

    #[error("arc ({0},{1}) is not in the collection")]
    ArcNotPresent(i64, i64),

    #[error("arc ({0},{1}) is a frozen boundary arc")]
    FrozenArc(i64, i64),

    #[error("flip of ({0},{1}) is not determined inside the window")]
    NoUniqueReplacement(i64, i64),
}

impl Error {
    /// Stable variant name, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse(_) => "Parse",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::DoesNotFit { .. } => "DoesNotFit",
            Error::InvalidDiagonal(..) => "InvalidDiagonal",
            Error::InvalidTriangulation(_) => "InvalidTriangulation",
            Error::DiagonalNotPresent(..) => "DiagonalNotPresent",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::NotDivisible => "NotDivisible",
            Error::ZeroDivision(_) => "ZeroDivision",
            Error::MissingVariable(_) => "MissingVariable",
            Error::NotMutable { .. } => "NotMutable",
            Error::InvalidQuiver(_) => "InvalidQuiver",
            Error::UnknownFormat(_) => "UnknownFormat",
            Error::UnknownFamily(_) => "UnknownFamily",
            Error::NotClassifiable => "NotClassifiable",
            Error::InvalidArc(..) => "InvalidArc",
            Error::ArcNotPresent(..) => "ArcNotPresent",
            Error::FrozenArc(..) => "FrozenArc",
            Error::NoUniqueReplacement(..) => "NoUniqueReplacement",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

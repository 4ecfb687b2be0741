use thiserror::Error;

use crate::coeff::CoeffError;
use crate::engine::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("inadmissible presentation: {}", fmt_violations(.0))]
    Inadmissible(Vec<Violation>),
    #[error("rewrite budget of {0} steps exceeded")]
    BudgetExceeded(u64),
    #[error("resource limit: {what} is {actual}, cap is {limit}")]
    ResourceLimit { what: &'static str, actual: usize, limit: usize },
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),
    #[error("bad argument: {0}")]
    BadArgument(String),
}

fn fmt_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse { line: 1, column, message: message.into() }
    }

    /// Process exit code for this failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::UnknownAlgebra(_) | Error::BadParameter(_) => 2,
            Error::UnknownLemma(_) | Error::BadArgument(_) => 2,
            Error::Coeff(_) => 2,
            Error::Inadmissible(_) => 3,
            Error::BudgetExceeded(_) | Error::ResourceLimit { .. } => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

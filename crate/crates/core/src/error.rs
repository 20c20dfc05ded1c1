use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at c = 1, expression has no expansion at x = 0")]
    DenominatorVanishesAtOrigin,
    #[error("expression is not a finite polynomial in t = (c-1)/(2-c)")]
    NotFineStructure,
    #[error("path does not end at height zero")]
    UnbalancedPath,
    #[error("path goes below height zero at step {0}")]
    NegativePath(usize),
    #[error("word has duplicate entries")]
    DuplicateEntries,
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("budget exceeded: {what} needs {requested}, budget is {budget}")]
    BudgetExceeded {
        what: String,
        requested: u128,
        budget: u128,
    },

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("cannot parse group label {label:?}: {reason}")]
    Parse { label: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn budget(what: impl Into<String>, requested: u128, budget: u128) -> Self {
        Error::BudgetExceeded {
            what: what.into(),
            requested,
            budget,
        }
    }

    pub(crate) fn hypothesis(msg: impl Into<String>) -> Self {
        Error::HypothesisViolation(msg.into())
    }
}

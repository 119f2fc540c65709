use thiserror::Error;

/// Every failure the workbench can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ill-typed: {0}")]
    Type(String),
    #[error("duplicate element {0} in set {1}")]
    Duplicate(String, String),
    #[error("element {atom} is not in {set}")]
    NotMember { atom: String, set: String },
    #[error("grade {need} exceeds the configured bound {bound}")]
    GradeBound { need: usize, bound: usize },
    #[error("law {law} fails at {witness}")]
    Law { law: String, witness: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not {what}: {why}")]
    NotA { what: String, why: String },
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unresolved reference: {0}")]
    Unresolved(String),
    #[error("{0}")]
    Input(String),
}

impl Error {
    pub fn ty(msg: impl Into<String>) -> Self {
        Error::Type(msg.into())
    }

    pub fn law(law: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::Law { law: law.into(), witness: witness.into() }
    }

    pub fn not_a(what: impl Into<String>, why: impl Into<String>) -> Self {
        Error::NotA { what: what.into(), why: why.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

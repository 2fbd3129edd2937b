use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid reduction map: {0}")]
    InvalidReduction(String),
    #[error("product leaves the icosian group: {0}")]
    NotInGroup(String),
    #[error("non-integral value: {0}")]
    NonIntegral(String),
    #[error("lattice rank is {rank}, expected {expected}")]
    Rank { rank: usize, expected: usize },
    #[error("lattice is not unimodular: det = {0}")]
    NotUnimodular(i128),
    #[error("lattice is not even: basis vector {0} has odd norm")]
    NotEven(usize),
    #[error("expected {expected} vectors of norm {norm}, found {found}")]
    ShellCount {
        norm: i64,
        expected: usize,
        found: usize,
    },
    #[error("invariant `{what}` failed: {detail}")]
    Invariant { what: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invariant(what: &'static str, detail: impl Into<String>) -> Error {
    Error::Invariant {
        what,
        detail: detail.into(),
    }
}

/// Fail with [`Error::Invariant`] unless `cond` holds.
pub(crate) fn ensure(
    cond: bool,
    what: &'static str,
    detail: impl FnOnce() -> String,
) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invariant(what, detail()))
    }
}

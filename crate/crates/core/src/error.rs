use thiserror::Error;

use crate::report::Report;

pub type Result<T> = std::result::Result<T, Error>;

/// Construction failures. Axiom failures found by verifiers are report
/// entries, not errors; an error means a construction's precondition failed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("not a Leibniz algebra: {0}")]
    NotLeibniz(Box<Report>),
    #[error("invalid Leibniz action: {0}")]
    ActionInvalid(Box<Report>),
    #[error("not a Lie action: {0}")]
    NotLieAction(Box<Report>),
    #[error("not a crossed module of Lie algebras: {0}")]
    NotLieXMod(Box<Report>),
    #[error("not a Lie braiding: {0}")]
    NotLieBraiding(Box<Report>),
    #[error("invalid crossed module: {0}")]
    InvalidXMod(Box<Report>),
    #[error("invalid braided crossed module: {0}")]
    InvalidBraidedXMod(Box<Report>),
    #[error("invalid categorical algebra: {0}")]
    InvalidCatAlgebra(Box<Report>),
    #[error("invalid braided categorical algebra: {0}")]
    InvalidBraidedCat(Box<Report>),
    #[error("not a Lie categorical braiding: {0}")]
    NotLieCatBraiding(Box<Report>),
    #[error("invalid Lie object: {0}")]
    InvalidLieObject(Box<Report>),
    #[error("invalid crossed module of Lie objects: {0}")]
    InvalidXLieLM(Box<Report>),
    #[error("invalid braiding triple: {0}")]
    InvalidTriple(Box<Report>),
    #[error("invalid categorical Lie object: {0}")]
    InvalidCatLieObjectLM(Box<Report>),
    #[error("invalid categorical braiding triple: {0}")]
    InvalidCatLMBraiding(Box<Report>),
    #[error("induced map is not well defined on the quotient: {0}")]
    NotWellDefined(String),
    #[error("bracket is not well defined on the tensor quotient: {0}")]
    BracketNotWellDefined(String),
    #[error("action does not descend to the tensor quotient: {0}")]
    ActionNotDescending(String),
}

/// Turns a failed report into the given error variant.
pub(crate) fn gate(report: Report, err: fn(Box<Report>) -> Error) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(err(Box::new(report)))
    }
}

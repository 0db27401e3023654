use thiserror::Error;

use crate::arith::PiVerdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("chain size parameter must be at least 1, got {0}")]
    InvalidChain(u32),
    #[error("{k}/{n} is not an element of the chain")]
    NotInChain { k: u32, n: u32 },
    #[error("set must contain 0 and 1 and be closed under ¬ and *")]
    NotClosed,
    #[error("element must not be 0 or 1")]
    BoundaryElement,
    #[error("element must be positive")]
    NotPositive,
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: u32, bound: u32 },
    #[error("Ł_{} and Ł*_{} are not term-equivalent (n = {})", .0.n + 1, .0.n + 1, .0.n)]
    NotTermEquivalent(PiVerdict),
    #[error("pair must satisfy a > b")]
    NotOrdered,
    #[error("pair is not separated")]
    NotSeparated,
    #[error("chain is not strictly simple")]
    NotStrictlySimple,
    #[error("no term found: {0}")]
    NoTerm(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Macro(String),
    #[error("valuation space of {0} points exceeds the budget")]
    BudgetExceeded(u128),
    #[error("malformed sk-sequence: {0}")]
    MalformedSequence(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("invalid star table: {0}")]
    InvalidTable(String),
    #[error("chain fails the IG-star equations: {0}")]
    NotValidated(String),
}

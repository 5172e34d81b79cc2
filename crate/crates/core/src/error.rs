use thiserror::Error;

use crate::diagram::Label;

/// Errors reported by diagram construction, queries and the bracket/certificate
/// pipelines. Parse errors name the violated grammar rule; shape errors name
/// the structural precondition that failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("label {label} occurs {count} time(s); every crossing label must occur exactly twice")]
    LabelCount { label: Label, count: usize },

    #[error("unknown crossing label {0}")]
    UnknownLabel(Label),

    #[error("chords {0} and {1} do not both lie on one common component")]
    ChordsNotOnOneComponent(Label, Label),

    #[error("diagram flags do not match")]
    FlagMismatch,

    #[error("component index {0} out of range")]
    ComponentIndex(usize),

    #[error("move site is stale for this diagram: {0}")]
    StaleMove(String),

    #[error("{0}")]
    Shape(String),
}

pub type Result<T> = std::result::Result<T, Error>;

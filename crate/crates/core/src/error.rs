use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum KnotError {
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown crossing {0}")]
    UnknownCrossing(usize),
    #[error("unknown component {0}")]
    UnknownComponent(usize),
    #[error("unknown arc {0}")]
    UnknownArc(u32),
    #[error("over/under roles are ambiguous: {0}")]
    AmbiguousRoles(String),
    #[error("move not applicable: {0}")]
    Inapplicable(String),
    #[error("operation requires a knot diagram (one component), got {0}")]
    NotAKnot(usize),
    #[error("unresolved oracle: {0}")]
    Unresolved(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("step {index}: {source}")]
    Step {
        index: usize,
        #[source]
        source: Box<KnotError>,
    },
}

impl KnotError {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        KnotError::Parse { line, msg: msg.into() }
    }
}

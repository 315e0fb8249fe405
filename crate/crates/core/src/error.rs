use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("invalid transversal: {0}")]
    InvalidTransversal(String),
    #[error("diagram {0} is not proper")]
    NotProper(String),
    #[error("cell (row {row}, col {col}) lies outside the diagram")]
    CellOutside { row: usize, col: usize },
    #[error("grid point ({x}, {y}) is not a critical point")]
    NotCritical { x: usize, y: usize },
    #[error("unknown subboard kind `{0}`")]
    UnknownSubboard(String),
    #[error("constraint needs at least {needed} rows and columns, diagram has {actual}")]
    ConstraintTooLarge { needed: usize, actual: usize },
    #[error("boundary patterns do not match: {left:?} vs {right:?}")]
    InvalidGlue { left: Vec<usize>, right: Vec<usize> },
    #[error("occurrence {0:?} is not a landing instance of the move's source pattern")]
    BadOccurrence(Vec<usize>),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;

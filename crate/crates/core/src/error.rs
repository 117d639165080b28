use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// One offending record in a claims data file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadIssue {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for LoadIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("family parameter n = {0} is too small (need n >= 3)")]
    InvalidN(u32),

    #[error("vertex {vertex} out of range for a graph with {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("colouring covers {got} vertices but the graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("colouring is not proper; violating edges: {0:?}")]
    Improper(Vec<(usize, usize)>),

    #[error("invalid colouring: {0}")]
    InvalidColoring(String),

    #[error("no proper colouring with exactly {k} colours (chromatic number is {chi})")]
    Infeasible { k: u32, chi: u32 },

    #[error("desk-scale budget exceeded: {vertices} vertices, limit {limit}")]
    BudgetExceeded { vertices: usize, limit: usize },

    #[error("no witness defined for {0}")]
    NoWitness(String),

    #[error("permutation search over {0} colour classes refused (limit 8)")]
    TooManyClasses(usize),

    #[error("condition `{condition}` does not hold for n = {n}")]
    ConditionMismatch { condition: String, n: u32 },

    #[error("malformed claims data:\n{}", format_issues(.0))]
    ClaimsLoad(Vec<LoadIssue>),

    #[error("cannot parse expression `{input}`: {reason}")]
    Expression { input: String, reason: String },

    #[error("unknown {what} `{value}`")]
    Unknown { what: &'static str, value: String },

    #[error("{0}")]
    Io(String),

    #[error("empty selection: {0}")]
    EmptySelection(String),
}

fn format_issues(issues: &[LoadIssue]) -> String {
    issues
        .iter()
        .map(|i| format!("  {i}"))
        .collect::<Vec<_>>()
        .join("\n")
}

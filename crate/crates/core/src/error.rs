use thiserror::Error;

use crate::diagram::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("inconsistent arc usage: {0}")]
    ArcUsage(String),

    #[error("inconsistent incidence: {0}")]
    Incidence(String),

    #[error("native format: {0}")]
    Native(String),

    #[error("diagram is not connected")]
    Disconnected,

    #[error("crossing {crossing} joins Seifert circle {circle} to itself")]
    SelfLoop { crossing: usize, circle: usize },

    #[error("circles {0} and {1} are joined by crossings of both signs")]
    SignConflict(usize, usize),

    #[error("block has mixed edge signs")]
    MixedBlock,

    #[error("block has {0} vertices; exact cycle search is limited to 64")]
    BlockTooLarge(usize),

    #[error("graph: {0}")]
    Graph(String),

    #[error("vertex set {0:?} does not separate the graph")]
    NotSeparating(Vec<usize>),

    #[error("invalid flip: {0}")]
    InvalidFlip(String),

    #[error("diagram failed validation: {}", .0.failures.join("; "))]
    Invalid(Box<ValidationReport>),

    #[error("invalid fraction {p}/{q}: {reason}")]
    Fraction { p: u64, q: u64, reason: String },

    #[error("invalid continued fraction: {0}")]
    ContinuedFraction(String),

    #[error("{p}/{q} is not a two-component link (q is odd)")]
    NotTwoComponent { p: u64, q: u64 },

    #[error("corpus line {line}: {message}")]
    Corpus { line: usize, message: String },
}

use std::time::Duration;

use thiserror::Error;

use crate::construct_l::Certificate;
use crate::digraph::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid order {0}: need at least 2 vertices")]
    InvalidOrder(usize),
    #[error("invalid connection set element {d} for modulus {m}")]
    InvalidConnectionSet { m: u32, d: u32 },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("loop at {0}")]
    Loop(Vertex),
    #[error("empty walk")]
    EmptyWalk,
    #[error("endpoint mismatch: path starting at {next} cannot follow a path ending at {prev}")]
    EndpointMismatch { prev: Vertex, next: Vertex },
    #[error("not a path: vertex {0} repeats")]
    NotAPath(Vertex),
    #[error("unsupported order m={m}: {reason}")]
    Unsupported { m: u32, reason: String },
    #[error("no factorization exists for m={m}: {reason}")]
    NonExistent { m: u32, reason: String },
    #[error("L factorization impossible for m={}: no factor can carry a difference-3 arc", .0.m)]
    LNonExistence(Box<Certificate>),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("search exhausted: {0}")]
    NotFound(String),
    #[error("time budget of {0:?} exhausted")]
    Timeout(Duration),
    #[error("basic set check failed: {}", .0.join("; "))]
    BasicSet(Vec<String>),
    #[error("construction check failed: {0}")]
    Construction(String),
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

use thiserror::Error;

use crate::ffree::Pattern;
use crate::verdict::Certificate;

/// Errors produced by graph construction, the recognition routines and the
/// brute-force oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("vertex order is not a permutation of 0..{n}")]
    BadOrder { n: usize },

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not diamond-free: vertices {witness:?} induce a diamond")]
    NotDiamondFree { witness: [usize; 4] },

    #[error("vertex set is not stable: {u} and {v} are adjacent")]
    NotStable { u: usize, v: usize },

    #[error("vertex set is not a clique: {u} and {v} are not adjacent")]
    NotAClique { u: usize, v: usize },

    #[error("brute-force search size {size} exceeds the oracle cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("bad partition: {0}")]
    BadPartition(String),

    #[error("graph contains an induced {pattern} on vertices {witness:?}")]
    NotFFree { pattern: Pattern, witness: Vec<usize> },

    #[error("graph is not in the reduction source class: {0}")]
    NotInClassG(Certificate),

    #[error("equivalence violated: {0}")]
    EquivalenceViolation(String),

    #[error("bad generator parameters: {0}")]
    BadParams(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

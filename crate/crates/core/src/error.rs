//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A group axiom failed while validating a table. The message names the
    /// first violated law and the witness elements (1-based ids).
    #[error("axiom violation: {0}")]
    Axiom(String),

    #[error("element id {id} out of range 1..={order}")]
    IdOutOfRange { id: u64, order: usize },

    #[error("subgroup of order {sub} is not normal: witness g={witness}")]
    NotNormal { sub: usize, witness: u64 },

    #[error("quotient of order {quotient} is not cyclic")]
    QuotientNotCyclic { quotient: usize },

    #[error("{p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: usize, order: usize },

    #[error("group of order {order} is not nonabelian simple: {why}")]
    NotNonabelianSimple { order: usize, why: String },

    /// The bounded subgroup search exhausted its budget. Carries the best
    /// indices seen in the candidate pool for diagnosis.
    #[error(
        "no subgroup chain within bounds for group of order {order} \
         (best seen: |H2|={best_h2}, [H:H1]={best_idx1}, [H1:H2]={best_idx2})"
    )]
    ChainNotFound {
        order: usize,
        best_h2: usize,
        best_idx1: usize,
        best_idx2: usize,
    },

    #[error("child structure multiplies a group of order {child}, expected subgroup order {sub}")]
    ChildMismatch { child: usize, sub: usize },

    #[error("unsupported container version: {0:?}")]
    Version(String),

    #[error("corrupt structure file: {0}")]
    Corrupt(String),

    #[error("generated group would have order {order}, above the {max} guard")]
    SizeGuard { order: u64, max: u64 },

    #[error("permutation parse error on line {line}: {msg}")]
    PermParse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

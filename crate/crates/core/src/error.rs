use thiserror::Error;

/// Errors raised by constructions, verifiers and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} out of range for order {v}")]
    PointOutOfRange { point: u32, v: u32 },

    #[error("block {index} does not have three distinct points")]
    DegenerateBlock { index: usize },

    #[error("intersection size {0} is outside 0..=3")]
    IntersectionSize(u8),

    #[error("certificate has length {got}, design has {expected} blocks")]
    CertificateLength { got: usize, expected: usize },

    #[error("certificate repeats block index {0}")]
    DuplicateIndex(usize),

    #[error("certificate references block index {0}, which does not exist")]
    IndexOutOfRange(usize),

    #[error("certificate does not verify: {0}")]
    InvalidCertificate(String),

    #[error("order {0} is not admissible (must be 0 or 1 modulo 3)")]
    NotAdmissible(u32),

    #[error("no twofold triple system of order {0} has a Hamiltonian 2-BIG")]
    NotConstructible(u32),

    #[error("order {v} is outside the range of this construction: {reason}")]
    OrderOutOfRange { v: u32, reason: &'static str },

    #[error("graph is not 3-regular")]
    NotCubic,

    #[error("{0} is not an edge of the graph")]
    NotAnEdge(String),

    #[error("search budget exhausted")]
    BudgetExhausted,

    #[error("requested {target} disjoint blocks but at most {max} fit on {v} points")]
    TargetTooLarge { target: usize, max: usize, v: u32 },

    #[error("attach schedule failed validation: {0}")]
    Schedule(String),

    #[error("internal construction failure: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

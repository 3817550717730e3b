//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition is not self-conjugate")]
    NotSelfConjugate,

    #[error("core modulus must be positive")]
    ZeroModulus,

    #[error("invalid odd hook set: {0}")]
    InvalidHookSet(String),

    #[error("element {element} is not in the poset P({s},{k})")]
    NotInPoset { s: u32, k: u32, element: u64 },

    #[error("point ({a2_halved}, {b}) is not in the poset P'({s},{k})")]
    NotInPlanarPoset { s: u32, k: u32, a2_halved: String, b: i64 },

    #[error("element set is not an order ideal (not down-closed)")]
    NotDownClosed,

    #[error("ideal is not admissible: contains ({a}, 0) and ({a_prime}, -1) within reach")]
    NotAdmissible { a: String, a_prime: String },

    #[error("invalid path word: {0}")]
    InvalidWord(String),

    #[error("word does not match the required family: {0}")]
    FamilyMismatch(String),

    #[error("{what} enumeration exceeded cap {cap}")]
    Overflow { what: &'static str, cap: u64 },

    #[error("time budget exceeded")]
    BudgetExceeded,

    #[error("oracle cap escalation failed: caps {cap} and {next} disagree and the cap may not exceed s = {s}")]
    CapUnstable { s: u32, cap: u32, next: u32 },

    #[error("{s} and {t} are not coprime")]
    NotCoprime { s: u64, t: u64 },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

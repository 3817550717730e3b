//! Self-conjugate simultaneous core partitions, the posets their diagonal
//! hook sets live in, symmetric Dyck paths, and machine-checked bijections
//! between all three — plus an independent brute-force oracle so every count
//! can be verified two ways at desk scale.
//!
//! The crate is organized around one chain of objects:
//!
//! 1. [`partitions`] — partitions, hooks, cores, and the diagonal-hook set
//!    MD(λ) of a self-conjugate partition.
//! 2. [`posets`] — the finite posets P(s,k) and P′(s,k), the isomorphism χ,
//!    and their (nice / admissible) order ideals.
//! 3. [`paths`] — ballot/Dyck/free path words and the symmetric families.
//! 4. [`bijections`] — the maps φ, ψ, α, β, δ, γ, η, ξ and the end-to-end
//!    `core_to_path` / `path_to_core` composites.
//! 5. [`oracle`] — brute-force enumeration of self-conjugate
//!    (s, s+1, …, s+k)-cores that never touches the posets or bijections,
//!    plus closed-form cross-check counts.
//! 6. [`harness`] — verification suites, sweep tables, and DOT/CSV/JSON
//!    emitters behind the `corelab` command-line tool.

pub mod bijections;
pub mod error;
pub mod harness;
pub mod limits;
pub mod oracle;
pub mod partitions;
pub mod paths;
pub mod posets;

pub use error::{Error, Result};
pub use limits::SearchLimit;

//! Symbolic rewriting for positive braid words.
//!
//! Positive braid words are rewritten with five rules: commuting distant
//! generators, the braid relation between neighbouring generators,
//! conjugation, Markov destabilization, and the crossing change (deleting an
//! adjacent pair `σ_i σ_i`). Every rule except the crossing change keeps the
//! closure's isotopy class, and a crossing change lowers the unknotting number
//! `(ℓ - n + 1) / 2` of a positive braid knot by exactly one. Sequences of
//! rules are recorded as [`RewriteTrace`]s, which double as machine-checkable
//! certificates for unknotting sequences and Gordian adjacencies.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod adjacency;
pub mod alexander;
mod derive;
pub mod enumerate;
mod error;
pub mod isotopy;
pub mod rewrite;
pub mod search;
pub mod unknot;
pub mod word;

pub use crate::adjacency::{
    AdjacencyCertificate, CatalogBasis, CatalogVerdict, KnotLabel, Verification,
};
pub use crate::alexander::{
    alexander, closures_equivalent_evidence, torus_alexander, Evidence, LaurentPoly,
};
pub use crate::error::{Error, Result};
pub use crate::rewrite::{replay, Direction, RewriteStep, RewriteTrace, RuleKind, TraceEntry};
pub use crate::word::{
    closure_info, torus_braid, torus_unknotting_number, unknotting_number, BraidWord, ClosureInfo,
    Generator, TorusParams,
};

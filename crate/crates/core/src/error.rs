use alloc::string::String;

use crate::rewrite::RuleKind;
use crate::word::Generator;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("generator {letter} is out of range for {strands} strands (expected 1..={max})", max = .strands - 1)]
    LetterOutOfRange { letter: Generator, strands: u32 },
    #[error("malformed braid word text: {0}")]
    Parse(String),
    #[error("closure has {components} components, expected a knot")]
    NotAKnot { components: usize },
    #[error("ℓ - n + 1 is odd, the word cannot close to a knot")]
    OddUnknottingParity,
    #[error("T({p},{q}) is not a knot: gcd({p},{q}) != 1")]
    NotCoprime { p: u32, q: u32 },
    #[error("illegal {kind:?} step: {reason}")]
    IllegalStep {
        kind: RuleKind,
        reason: &'static str,
    },
    #[error("trace corrupt at step {index}: {reason}")]
    TraceCorrupt { index: usize, reason: String },
    #[error("every used generator occurs at least twice")]
    NoSingleGenerator,
    #[error("words are not equal as positive braids")]
    NotEquivalent,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("work budget of {budget} steps exceeded")]
    WorkBudgetExceeded { budget: usize },
    #[error("no path found within budget ({explored} states explored)")]
    NotFoundWithinBudget { explored: usize },
    #[error("construction drifted from the expected word at {line}")]
    Drift { line: &'static str },
}

impl Error {
    pub(crate) fn illegal(kind: RuleKind, reason: &'static str) -> Self {
        Error::IllegalStep { kind, reason }
    }
}

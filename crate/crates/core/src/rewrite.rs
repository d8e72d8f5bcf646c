//! The five rewrite rules and replayable traces.
//!
//! Positions always refer to the word as it stands immediately before the
//! step, so a trace is only meaningful when replayed in order.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::word::BraidWord;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum RuleKind {
    DistantSwap,
    NeighborBraid,
    Conjugate,
    Destabilize,
    CrossingChange,
}

/// Orientation of a braid relation `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Direction {
    /// `(i, i+1, i) -> (i+1, i, i+1)`
    Up,
    /// `(i+1, i, i+1) -> (i, i+1, i)`
    Down,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RewriteStep {
    DistantSwap {
        pos: usize,
    },
    NeighborBraid {
        pos: usize,
        direction: Direction,
    },
    /// Rotate the letters left by `amount` (taken modulo the length).
    Conjugate {
        amount: usize,
    },
    /// Delete the unique occurrence of the largest generator and drop a strand.
    Destabilize,
    /// Delete the equal pair at `pos, pos + 1`.
    CrossingChange {
        pos: usize,
    },
}

impl RewriteStep {
    pub fn kind(&self) -> RuleKind {
        match self {
            RewriteStep::DistantSwap { .. } => RuleKind::DistantSwap,
            RewriteStep::NeighborBraid { .. } => RuleKind::NeighborBraid,
            RewriteStep::Conjugate { .. } => RuleKind::Conjugate,
            RewriteStep::Destabilize => RuleKind::Destabilize,
            RewriteStep::CrossingChange { .. } => RuleKind::CrossingChange,
        }
    }

    pub fn apply(&self, w: &BraidWord) -> Result<BraidWord> {
        match *self {
            RewriteStep::DistantSwap { pos } => apply_distant_swap(w, pos),
            RewriteStep::NeighborBraid { pos, direction } => {
                let (out, found) = neighbor_braid(w, pos)?;
                if found != direction {
                    return Err(Error::illegal(
                        RuleKind::NeighborBraid,
                        "triple has the opposite orientation",
                    ));
                }
                Ok(out)
            }
            RewriteStep::Conjugate { amount } => Ok(rotate(w, amount)),
            RewriteStep::Destabilize => apply_destabilize(w),
            RewriteStep::CrossingChange { pos } => apply_crossing_change(w, pos),
        }
    }

    /// The step undoing `self` when applied to `before`, if the rule is reversible.
    pub fn inverse(&self, before: &BraidWord) -> Option<RewriteStep> {
        match *self {
            RewriteStep::DistantSwap { pos } => Some(RewriteStep::DistantSwap { pos }),
            RewriteStep::NeighborBraid { pos, direction } => Some(RewriteStep::NeighborBraid {
                pos,
                direction: direction.reversed(),
            }),
            RewriteStep::Conjugate { amount } => {
                let len = before.len();
                let amount = if len == 0 {
                    0
                } else {
                    (len - amount % len) % len
                };
                Some(RewriteStep::Conjugate { amount })
            }
            RewriteStep::Destabilize | RewriteStep::CrossingChange { .. } => None,
        }
    }
}

/// `σ_i σ_j = σ_j σ_i` for `|i - j| ≥ 2`, at `pos, pos + 1`.
pub fn apply_distant_swap(w: &BraidWord, pos: usize) -> Result<BraidWord> {
    let l = w.letters();
    if pos + 1 >= l.len() {
        return Err(Error::illegal(
            RuleKind::DistantSwap,
            "position out of range",
        ));
    }
    if l[pos].abs_diff(l[pos + 1]) < 2 {
        return Err(Error::illegal(
            RuleKind::DistantSwap,
            "generators are not distant",
        ));
    }
    let mut letters = l.to_vec();
    letters.swap(pos, pos + 1);
    Ok(BraidWord::from_parts(w.strands(), letters))
}

fn neighbor_braid(w: &BraidWord, pos: usize) -> Result<(BraidWord, Direction)> {
    let l = w.letters();
    if pos + 2 >= l.len() {
        return Err(Error::illegal(
            RuleKind::NeighborBraid,
            "position out of range",
        ));
    }
    let (a, b, c) = (l[pos], l[pos + 1], l[pos + 2]);
    let direction = if a != c {
        return Err(Error::illegal(
            RuleKind::NeighborBraid,
            "not a braid relation triple",
        ));
    } else if b == a + 1 {
        Direction::Up
    } else if a == b + 1 {
        Direction::Down
    } else {
        return Err(Error::illegal(
            RuleKind::NeighborBraid,
            "not a braid relation triple",
        ));
    };
    let mut letters = l.to_vec();
    letters[pos] = b;
    letters[pos + 1] = a;
    letters[pos + 2] = b;
    Ok((BraidWord::from_parts(w.strands(), letters), direction))
}

/// `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}` in whichever direction matches.
pub fn apply_neighbor_braid(w: &BraidWord, pos: usize) -> Result<BraidWord> {
    neighbor_braid(w, pos).map(|(out, _)| out)
}

/// Orientation of the braid triple at `pos`, if there is one.
pub fn neighbor_direction(w: &BraidWord, pos: usize) -> Option<Direction> {
    neighbor_braid(w, pos).ok().map(|(_, d)| d)
}

fn rotate(w: &BraidWord, amount: usize) -> BraidWord {
    let mut letters = w.letters().to_vec();
    if !letters.is_empty() {
        let len = letters.len();
        letters.rotate_left(amount % len);
    }
    BraidWord::from_parts(w.strands(), letters)
}

/// Cyclic rotation to the left by `amount` (negative rotates right).
pub fn apply_conjugate(w: &BraidWord, amount: i64) -> BraidWord {
    let len = w.len().max(1) as i64;
    rotate(w, amount.rem_euclid(len) as usize)
}

/// Deletes the unique occurrence of the largest generator `σ_m` and drops
/// one strand.
///
/// When `m + 1` equals the strand count this is Markov destabilization. When
/// the word lives on more strands, the strands above `m + 1` are split
/// trivial components and the same deletion is still a destabilization of
/// the non-trivial part.
pub fn apply_destabilize(w: &BraidWord) -> Result<BraidWord> {
    let Some(top) = w.max_generator() else {
        return Err(Error::illegal(
            RuleKind::Destabilize,
            "word has no generator to delete",
        ));
    };
    let mut occurrences = w.letters().iter().enumerate().filter(|(_, &l)| l == top);
    let (pos, _) = occurrences.next().expect("max generator occurs");
    if occurrences.next().is_some() {
        return Err(Error::illegal(
            RuleKind::Destabilize,
            "top generator occurs more than once",
        ));
    }
    let mut letters = w.letters().to_vec();
    letters.remove(pos);
    Ok(BraidWord::from_parts(w.strands() - 1, letters))
}

/// Deletes the equal pair `σ_i σ_i` at `pos, pos + 1`.
pub fn apply_crossing_change(w: &BraidWord, pos: usize) -> Result<BraidWord> {
    let l = w.letters();
    if pos + 1 >= l.len() {
        return Err(Error::illegal(
            RuleKind::CrossingChange,
            "position out of range",
        ));
    }
    if l[pos] != l[pos + 1] {
        return Err(Error::illegal(RuleKind::CrossingChange, "letters differ"));
    }
    let mut letters = l.to_vec();
    letters.drain(pos..pos + 2);
    Ok(BraidWord::from_parts(w.strands(), letters))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceEntry {
    pub step: RewriteStep,
    pub word: BraidWord,
}

/// An ordered list of rule applications with every intermediate word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RewriteTrace {
    initial: BraidWord,
    steps: Vec<TraceEntry>,
    crossing_changes: usize,
}

impl RewriteTrace {
    pub fn new(initial: BraidWord) -> Self {
        RewriteTrace {
            initial,
            steps: Vec::new(),
            crossing_changes: 0,
        }
    }

    /// Builds a trace without checking it; [`replay`] is the validator.
    pub fn from_parts(initial: BraidWord, steps: Vec<TraceEntry>, crossing_changes: usize) -> Self {
        RewriteTrace {
            initial,
            steps,
            crossing_changes,
        }
    }

    pub fn initial(&self) -> &BraidWord {
        &self.initial
    }

    pub fn steps(&self) -> &[TraceEntry] {
        &self.steps
    }

    pub fn crossing_changes(&self) -> usize {
        self.crossing_changes
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn final_word(&self) -> &BraidWord {
        self.steps.last().map_or(&self.initial, |e| &e.word)
    }

    /// Every word of the trace, starting with the initial one.
    pub fn words(&self) -> impl Iterator<Item = &BraidWord> {
        core::iter::once(&self.initial).chain(self.steps.iter().map(|e| &e.word))
    }

    pub fn count(&self, kind: RuleKind) -> usize {
        self.steps.iter().filter(|e| e.step.kind() == kind).count()
    }

    /// Applies `step` to the current final word and records it.
    pub fn push(&mut self, step: RewriteStep) -> Result<&BraidWord> {
        let next = step.apply(self.final_word())?;
        if step.kind() == RuleKind::CrossingChange {
            self.crossing_changes += 1;
        }
        self.steps.push(TraceEntry { step, word: next });
        Ok(self.final_word())
    }

    /// Appends a trace that starts where this one ends.
    pub fn extend(&mut self, other: RewriteTrace) -> Result<()> {
        if other.initial != *self.final_word() {
            return Err(Error::Precondition(format!(
                "appended trace starts at {} but this trace ends at {}",
                other.initial,
                self.final_word()
            )));
        }
        self.crossing_changes += other.crossing_changes;
        self.steps.extend(other.steps);
        Ok(())
    }

    /// The reverse trace, if every step is reversible.
    pub fn reversed(&self) -> Option<RewriteTrace> {
        let mut out = RewriteTrace::new(self.final_word().clone());
        let words: Vec<&BraidWord> = self.words().collect();
        for (i, entry) in self.steps.iter().enumerate().rev() {
            let inverse = entry.step.inverse(words[i])?;
            out.steps.push(TraceEntry {
                step: inverse,
                word: words[i].clone(),
            });
        }
        Some(out)
    }
}

/// Replays a trace from its initial word, checking every recorded
/// intermediate word and the crossing-change tally.
pub fn replay(trace: &RewriteTrace) -> Result<BraidWord> {
    let mut current = trace.initial.clone();
    let mut crossing_changes = 0;
    for (index, entry) in trace.steps.iter().enumerate() {
        let next = entry
            .step
            .apply(&current)
            .map_err(|e| Error::TraceCorrupt {
                index,
                reason: format!("{e}"),
            })?;
        if next != entry.word {
            return Err(Error::TraceCorrupt {
                index,
                reason: format!("recorded word {} but replay gives {}", entry.word, next),
            });
        }
        if entry.step.kind() == RuleKind::CrossingChange {
            crossing_changes += 1;
        }
        current = next;
    }
    if crossing_changes != trace.crossing_changes {
        return Err(Error::TraceCorrupt {
            index: trace.steps.len(),
            reason: format!(
                "trace claims {} crossing changes but contains {}",
                trace.crossing_changes, crossing_changes
            ),
        });
    }
    Ok(current)
}

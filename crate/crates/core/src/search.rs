//! Bounded breadth-first search for positive paths, and their checker.
//!
//! A positive path is a trace whose every intermediate closure is a
//! positive braid knot, with each crossing change lowering the unknotting
//! number by exactly one. No rule introduces inverse letters or changes the
//! closure permutation's cycle count (`σ_i σ_i` permutes nothing), so paths
//! found here are positive by construction; the checker re-derives that from
//! the recorded words.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rewrite::{RewriteStep, RewriteTrace, TraceEntry};
use crate::word::{closure_info, unknotting_number, BraidWord, Generator};

/// Search limits. `depth` caps the number of moves (a rotation followed by
/// a rule counts as one), `nodes` the number of
/// distinct states expanded.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchLimits {
    pub depth: usize,
    pub nodes: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            depth: 64,
            nodes: 200_000,
        }
    }
}

fn least_rotation(letters: &[Generator]) -> Vec<Generator> {
    (0..letters.len().max(1))
        .map(|r| {
            letters[r.min(letters.len())..]
                .iter()
                .chain(&letters[..r.min(letters.len())])
                .copied()
                .collect()
        })
        .min()
        .unwrap_or_default()
}

fn state_key(w: &BraidWord) -> (u32, Vec<Generator>) {
    (w.strands(), least_rotation(w.letters()))
}

/// Legal moves from `w` in fixed order: distant swaps, braid relations,
/// rotation by one, destabilization, crossing changes; positions ascending.
pub fn legal_moves(w: &BraidWord) -> Vec<RewriteStep> {
    let l = w.letters();
    let mut out = Vec::new();
    for pos in 0..l.len().saturating_sub(1) {
        if l[pos].abs_diff(l[pos + 1]) >= 2 {
            out.push(RewriteStep::DistantSwap { pos });
        }
    }
    for pos in 0..l.len().saturating_sub(2) {
        if let Some(direction) = crate::rewrite::neighbor_direction(w, pos) {
            out.push(RewriteStep::NeighborBraid { pos, direction });
        }
    }
    if l.len() > 1 {
        out.push(RewriteStep::Conjugate { amount: 1 });
    }
    if RewriteStep::Destabilize.apply(w).is_ok() {
        out.push(RewriteStep::Destabilize);
    }
    for pos in 0..l.len().saturating_sub(1) {
        if l[pos] == l[pos + 1] {
            out.push(RewriteStep::CrossingChange { pos });
        }
    }
    out
}

/// Breadth-first search for a positive path from `source` to exactly
/// `target`. States are identified up to rotation and expanded from every
/// rotation; a state whose closure has a smaller unknotting number than the
/// target is never expanded.
///
/// Failing within the limits is not evidence that no path exists.
pub fn positive_path_search(
    source: &BraidWord,
    target: &BraidWord,
    limits: SearchLimits,
) -> Result<RewriteTrace> {
    let (us, ut) = (unknotting_number(source)?, unknotting_number(target)?);
    if us < ut {
        return Err(Error::Precondition(format!(
            "u(source) = {us} is below u(target) = {ut}; unknotting numbers only decrease along paths"
        )));
    }
    let goal = state_key(target);

    // (parent, steps from parent, word, depth, u)
    let mut nodes: Vec<(usize, Vec<RewriteStep>, BraidWord, usize, u64)> =
        alloc::vec![(0, Vec::new(), source.clone(), 0, us)];
    let mut seen = BTreeSet::new();
    seen.insert(state_key(source));
    let mut head = 0;
    let found = loop {
        if head >= nodes.len() || head >= limits.nodes {
            return Err(Error::NotFoundWithinBudget { explored: head });
        }
        let (word, depth, u) = (nodes[head].2.clone(), nodes[head].3, nodes[head].4);
        if state_key(&word) == goal {
            break head;
        }
        if depth < limits.depth {
            // Rotations share a state, so moves are generated from each one.
            for r in 0..word.len().max(1) {
                let rotated = RewriteStep::Conjugate { amount: r }.apply(&word)?;
                for step in legal_moves(&rotated) {
                    if matches!(step, RewriteStep::Conjugate { .. }) {
                        continue;
                    }
                    let next_u = if matches!(step, RewriteStep::CrossingChange { .. }) {
                        u - 1
                    } else {
                        u
                    };
                    if next_u < ut {
                        continue;
                    }
                    let next = step.apply(&rotated)?;
                    if seen.insert(state_key(&next)) {
                        let steps = if r == 0 {
                            alloc::vec![step]
                        } else {
                            alloc::vec![RewriteStep::Conjugate { amount: r }, step]
                        };
                        nodes.push((head, steps, next, depth + 1, next_u));
                    }
                }
            }
        }
        head += 1;
    };

    let mut steps = Vec::new();
    let mut at = found;
    while at != 0 {
        steps.extend(nodes[at].1.iter().rev().copied());
        at = nodes[at].0;
    }
    let mut trace = RewriteTrace::new(source.clone());
    for step in steps.into_iter().rev() {
        trace.push(step)?;
    }
    // Same state up to rotation: finish with the rotation that lands on `target`.
    let end = trace.final_word().letters().to_vec();
    if end != target.letters() {
        let amount = (1..end.len())
            .find(|&r| end[r..].iter().chain(&end[..r]).eq(target.letters()))
            .expect("state keys agree up to rotation");
        trace.push(RewriteStep::Conjugate { amount })?;
    }
    Ok(trace)
}

/// First violation found by [`verify_positive_path`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathViolation {
    /// Index into the trace's words (0 is the initial word).
    pub index: usize,
    pub reason: String,
}

/// Checks that every recorded word closes to a knot, that the steps replay
/// to the recorded words, and that `u` drops by one exactly at crossing
/// changes and stays put otherwise.
pub fn verify_positive_path(trace: &RewriteTrace) -> core::result::Result<(), PathViolation> {
    fn violation<T>(index: usize, reason: String) -> core::result::Result<T, PathViolation> {
        Err(PathViolation { index, reason })
    }
    let knot_u = |index: usize, w: &BraidWord| match unknotting_number(w) {
        Ok(u) => Ok(u),
        Err(_) => violation(
            index,
            format!(
                "closure of {w} has {} components",
                closure_info(w).components
            ),
        ),
    };
    let mut u = knot_u(0, trace.initial())?;
    let mut current = trace.initial().clone();
    for (i, TraceEntry { step, word }) in trace.steps().iter().enumerate() {
        let index = i + 1;
        let next_u = knot_u(index, word)?;
        match step.apply(&current) {
            Ok(next) if next == *word => {}
            Ok(next) => {
                return violation(index, format!("recorded {word} but the step gives {next}"))
            }
            Err(e) => return violation(index, format!("{e}")),
        }
        let expected = if matches!(step, RewriteStep::CrossingChange { .. }) {
            u.wrapping_sub(1)
        } else {
            u
        };
        if next_u != expected {
            return violation(
                index,
                format!("unknotting number went from {u} to {next_u}"),
            );
        }
        u = next_u;
        current = word.clone();
    }
    Ok(())
}

pub fn is_positive_path(trace: &RewriteTrace) -> bool {
    verify_positive_path(trace).is_ok()
}

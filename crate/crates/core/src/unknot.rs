//! Constructive unknotting of positive braid words.
//!
//! [`reduce_subword`] brings any region whose generators are at most `σ_n`
//! down to at most one `σ_n` without conjugation or destabilization, so it
//! can run inside a larger word. [`unknot`] alternates it with
//! destabilization from the top generator downwards until the word is empty.

use alloc::format;
use alloc::vec::Vec;
use core::ops::Range;

use crate::derive::Workspace;
use crate::error::{Error, Result};
use crate::rewrite::{RewriteTrace, RuleKind};
use crate::word::{closure_info, BraidWord, Generator};

pub use crate::word::generator_support_check;

/// Reduces `ws[start..end]` (generators `≤ n`) to at most one `σ_n`.
/// Returns the new end of the region.
///
/// Peel the first letter, reduce the rest; if both the first letter and the
/// reduced rest carry `σ_n`, reduce the word `γ` between them with `n - 1`
/// and then either cancel the two `σ_n` (no `σ_{n-1}` in `γ`) or fold them
/// around the single `σ_{n-1}` with a braid relation.
pub(crate) fn reduce_region(
    ws: &mut Workspace,
    start: usize,
    end: usize,
    n: Generator,
) -> Result<usize> {
    if start >= end {
        return Ok(end);
    }
    let end = reduce_region(ws, start + 1, end, n)?;
    if n == 0 || ws.letters()[start] != n {
        return Ok(end);
    }
    let Some(second) = (start + 1..end).find(|&p| ws.letters()[p] == n) else {
        return Ok(end);
    };
    let gamma_end = reduce_region(ws, start + 1, second, n - 1)?;
    let end = end - (second - gamma_end);
    let second = gamma_end;
    match (start + 1..second).find(|&p| ws.letters()[p] == n - 1) {
        None => {
            ws.slide(second, start + 1)?;
            ws.crossing_change(start)?;
            Ok(end - 2)
        }
        Some(pivot) => {
            ws.slide(start, pivot - 1)?;
            ws.slide(second, pivot + 1)?;
            ws.braid(pivot - 1)?;
            Ok(end)
        }
    }
}

fn check_region(w: &BraidWord, range: &Range<usize>, n: Generator) -> Result<()> {
    if range.start > range.end || range.end > w.len() {
        return Err(Error::Precondition(format!(
            "range {range:?} outside word of length {}",
            w.len()
        )));
    }
    if let Some(&l) = w.letters()[range.clone()].iter().find(|&&l| l > n) {
        return Err(Error::Precondition(format!(
            "σ{l} inside the region exceeds σ{n}"
        )));
    }
    Ok(())
}

/// Rewrites the region `range` of `w` to contain at most one `σ_n`, using
/// only distant swaps, braid relations and crossing changes. The rewritten
/// region is never longer than the original and has no generator above `n`.
pub fn reduce_subword(w: &BraidWord, range: Range<usize>, n: Generator) -> Result<RewriteTrace> {
    check_region(w, &range, n)?;
    let mut ws = Workspace::with_budget(w.clone(), work_budget(range.len()));
    reduce_region(&mut ws, range.start, range.end, n)?;
    Ok(ws.into_trace())
}

/// Step budget for unknotting a word of length `len`.
///
/// Every letter of the region is peeled once per level and each peel costs
/// at most one slide across the region, a crossing change and a braid move.
pub fn work_budget(len: usize) -> usize {
    let l = len + 2;
    l.saturating_mul(l)
        .saturating_mul(l)
        .saturating_mul(4)
        .max(64)
}

/// Turns `w` into the empty word: reduce to one top generator, destabilize,
/// repeat with the next top generator.
///
/// The final word is empty on as many strands as the closure has components;
/// for a knot the number of crossing changes is `(ℓ - n + 1) / 2`.
pub fn unknot(w: &BraidWord) -> Result<RewriteTrace> {
    let mut ws = Workspace::with_budget(w.clone(), work_budget(w.len()));
    while let Some(top) = ws.word().max_generator() {
        let len = ws.len();
        reduce_region(&mut ws, 0, len, top)?;
        match ws.word().count(top) {
            0 => {}
            1 => ws.destabilize()?,
            _ => unreachable!("region reduction leaves at most one top generator"),
        }
    }
    Ok(ws.into_trace())
}

/// The initial word followed by the word right after each crossing change.
pub fn unknotting_sequence(trace: &RewriteTrace) -> Result<Vec<BraidWord>> {
    let info = closure_info(trace.initial());
    if !info.is_knot {
        return Err(Error::NotAKnot {
            components: info.components,
        });
    }
    let mut out = alloc::vec![trace.initial().clone()];
    out.extend(
        trace
            .steps()
            .iter()
            .filter(|e| e.step.kind() == RuleKind::CrossingChange)
            .map(|e| e.word.clone()),
    );
    Ok(out)
}

/// Removes a generator that occurs exactly once and drops a strand.
///
/// With `σ_i` the smallest such generator, the rest of the word read
/// cyclically from just after `σ_i` splits into letters below `i` and letters
/// above `i` (which commute with each other). The result is the low letters
/// followed by the high letters shifted down by one, on one strand fewer.
pub fn reduce_single_generator(w: &BraidWord) -> Result<BraidWord> {
    let counts = w.generator_counts();
    let Some(index) = counts.iter().position(|&c| c == 1) else {
        return Err(Error::NoSingleGenerator);
    };
    let generator = index as Generator + 1;
    let pos = w.letters().iter().position(|&l| l == generator).unwrap();
    let letters = w.letters();
    let rest = letters[pos + 1..].iter().chain(&letters[..pos]);
    let mut out: Vec<Generator> = rest.clone().copied().filter(|&l| l < generator).collect();
    out.extend(rest.copied().filter(|&l| l > generator).map(|l| l - 1));
    Ok(BraidWord::from_parts(w.strands() - 1, out))
}

//! Braid-relation rewriting between equal positive braids.
//!
//! Two positive words represent the same positive braid exactly when one can
//! be turned into the other with distant swaps and braid relations alone. The
//! rewriter here builds such a sequence by repeatedly pulling the next target
//! letter to the front of the remaining source, using left divisibility in
//! the positive braid monoid:
//!
//! * `σ_i ≼ σ_j x` with `|i - j| ≥ 2` iff `σ_i ≼ x`;
//! * `σ_i ≼ σ_j x` with `|i - j| = 1` iff `σ_i σ_j ≼ x`.
//!
//! Because the monoid is cancellative, pulling the letters of the target one
//! after the other succeeds iff the two words are equal as braids.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rewrite::{Direction, RewriteStep};
use crate::word::Generator;

/// Moves letter `target` to position `start` of `word[start..end]` if it is a
/// left divisor of that segment, recording the moves. On failure `word` may
/// have been rearranged (but still spells the same braid).
fn pull(
    word: &mut [Generator],
    start: usize,
    end: usize,
    target: Generator,
    moves: &mut Vec<RewriteStep>,
) -> bool {
    if start >= end {
        return false;
    }
    let head = word[start];
    if head == target {
        return true;
    }
    if head.abs_diff(target) >= 2 {
        if !pull(word, start + 1, end, target, moves) {
            return false;
        }
        word.swap(start, start + 1);
        moves.push(RewriteStep::DistantSwap { pos: start });
        true
    } else {
        if !pull(word, start + 1, end, target, moves) {
            return false;
        }
        if !pull(word, start + 2, end, head, moves) {
            return false;
        }
        // head target head -> target head target
        let direction = if target == head + 1 {
            Direction::Up
        } else {
            Direction::Down
        };
        word[start] = target;
        word[start + 1] = head;
        word[start + 2] = target;
        moves.push(RewriteStep::NeighborBraid {
            pos: start,
            direction,
        });
        true
    }
}

/// Moves that turn `word[offset..offset + target.len()]` into `target`, with
/// positions relative to the full word. `word` is left unchanged.
pub fn rewrite_moves(
    word: &[Generator],
    offset: usize,
    target: &[Generator],
) -> Result<Vec<RewriteStep>> {
    let end = offset + target.len();
    if end > word.len() {
        return Err(Error::NotEquivalent);
    }
    let mut scratch = word.to_vec();
    let mut moves = Vec::new();
    for (i, &letter) in target.iter().enumerate() {
        if !pull(&mut scratch, offset + i, end, letter, &mut moves) {
            return Err(Error::NotEquivalent);
        }
    }
    debug_assert_eq!(&scratch[offset..end], target);
    Ok(moves)
}

/// True iff the two words are equal as positive braids.
pub fn braid_equal(a: &[Generator], b: &[Generator]) -> bool {
    a.len() == b.len() && rewrite_moves(a, 0, b).is_ok()
}

/// True iff `σ_generator` is a left divisor of the positive braid `word`.
pub fn left_divides(generator: Generator, word: &[Generator]) -> bool {
    let mut scratch = word.to_vec();
    pull(&mut scratch, 0, word.len(), generator, &mut Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::RewriteTrace;
    use crate::word::BraidWord;

    fn apply_all(strands: u32, word: &[u32], moves: &[RewriteStep]) -> Vec<u32> {
        let mut trace = RewriteTrace::new(BraidWord::new(strands, word.to_vec()).unwrap());
        for &m in moves {
            trace.push(m).unwrap();
        }
        trace.final_word().letters().to_vec()
    }

    #[test]
    fn braid_relation_and_commutation() {
        assert!(braid_equal(&[1, 2, 1], &[2, 1, 2]));
        assert!(braid_equal(&[1, 3], &[3, 1]));
        assert!(!braid_equal(&[1, 2], &[2, 1]));
        assert!(!braid_equal(&[1, 1, 2], &[1, 2, 1]));
    }

    #[test]
    fn full_twist_is_central() {
        let twist = [2, 1, 2, 1, 2, 1];
        let mut a = twist.to_vec();
        a.push(1);
        let mut b = alloc::vec![1];
        b.extend_from_slice(&twist);
        assert!(braid_equal(&a, &b));
        let moves = rewrite_moves(&a, 0, &b).unwrap();
        assert_eq!(apply_all(3, &a, &moves), b);
    }

    #[test]
    fn segment_rewrite_keeps_context() {
        // prefix 3 | (σ1σ2σ1) | suffix 3, rewrite the middle to σ2σ1σ2
        let word = [3, 1, 2, 1, 3];
        let moves = rewrite_moves(&word, 1, &[2, 1, 2]).unwrap();
        assert_eq!(apply_all(4, &word, &moves), alloc::vec![3, 2, 1, 2, 3]);
    }

    #[test]
    fn divisibility() {
        assert!(left_divides(2, &[1, 2, 1]));
        assert!(!left_divides(2, &[1, 2]));
        assert!(left_divides(3, &[1, 3]));
    }
}

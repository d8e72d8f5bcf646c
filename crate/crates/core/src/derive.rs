//! Trace-building workspace shared by the constructive algorithms.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::isotopy;
use crate::rewrite::{RewriteStep, RewriteTrace};
use crate::word::{BraidWord, Generator};

pub(crate) struct Workspace {
    trace: RewriteTrace,
    budget: Option<usize>,
}

impl Workspace {
    pub fn new(initial: BraidWord) -> Self {
        Workspace {
            trace: RewriteTrace::new(initial),
            budget: None,
        }
    }

    pub fn with_budget(initial: BraidWord, budget: usize) -> Self {
        Workspace {
            trace: RewriteTrace::new(initial),
            budget: Some(budget),
        }
    }

    pub fn word(&self) -> &BraidWord {
        self.trace.final_word()
    }

    pub fn letters(&self) -> &[Generator] {
        self.word().letters()
    }

    pub fn len(&self) -> usize {
        self.word().len()
    }

    pub fn into_trace(self) -> RewriteTrace {
        self.trace
    }

    pub fn step(&mut self, step: RewriteStep) -> Result<()> {
        if let Some(budget) = self.budget {
            if self.trace.len() >= budget {
                return Err(Error::WorkBudgetExceeded { budget });
            }
        }
        self.trace.push(step)?;
        Ok(())
    }

    pub fn swap(&mut self, pos: usize) -> Result<()> {
        self.step(RewriteStep::DistantSwap { pos })
    }

    pub fn braid(&mut self, pos: usize) -> Result<()> {
        let direction =
            crate::rewrite::neighbor_direction(self.word(), pos).ok_or(Error::illegal(
                crate::rewrite::RuleKind::NeighborBraid,
                "not a braid relation triple",
            ))?;
        self.step(RewriteStep::NeighborBraid { pos, direction })
    }

    pub fn crossing_change(&mut self, pos: usize) -> Result<()> {
        self.step(RewriteStep::CrossingChange { pos })
    }

    pub fn destabilize(&mut self) -> Result<()> {
        self.step(RewriteStep::Destabilize)
    }

    /// Rotates left by `amount` (negative rotates right).
    pub fn rotate(&mut self, amount: i64) -> Result<()> {
        let len = self.len().max(1) as i64;
        let amount = amount.rem_euclid(len) as usize;
        if amount == 0 {
            return Ok(());
        }
        self.step(RewriteStep::Conjugate { amount })
    }

    /// Moves the letter at `from` to `to` by distant swaps.
    pub fn slide(&mut self, from: usize, to: usize) -> Result<()> {
        if from < to {
            for p in from..to {
                self.swap(p)?;
            }
        } else {
            for p in (to..from).rev() {
                self.swap(p)?;
            }
        }
        Ok(())
    }

    /// Rewrites `word[offset..offset + target.len()]` into `target` by braid
    /// relations only.
    pub fn isotopy_segment(&mut self, offset: usize, target: &[Generator]) -> Result<()> {
        let moves = isotopy::rewrite_moves(self.letters(), offset, target)?;
        for m in moves {
            self.step(m)?;
        }
        Ok(())
    }

    /// Rewrites the whole word into `target` by braid relations, touching
    /// only the window where the two differ.
    pub fn isotopy_to(&mut self, target: &[Generator]) -> Result<()> {
        let current = self.letters();
        if current.len() != target.len() {
            return Err(Error::NotEquivalent);
        }
        let Some(first) = current.iter().zip(target).position(|(a, b)| a != b) else {
            return Ok(());
        };
        let last = current
            .iter()
            .zip(target)
            .rposition(|(a, b)| a != b)
            .unwrap();
        self.isotopy_segment(first, &target[first..=last])
    }

    /// Deletes `count` adjacent pairs `σ_g σ_g`, leftmost first, at or after `from`.
    pub fn cancel_pairs(&mut self, generator: Generator, from: usize, count: usize) -> Result<()> {
        for _ in 0..count {
            let l = self.letters();
            let pos = (from..l.len().saturating_sub(1))
                .find(|&p| l[p] == generator && l[p + 1] == generator)
                .ok_or(Error::Precondition(alloc::format!(
                    "no σ{generator} pair left to cancel"
                )))?;
            self.crossing_change(pos)?;
        }
        Ok(())
    }

    /// Asserts that the current word spells `expected`.
    pub fn expect(&self, expected: &[Generator], line: &'static str) -> Result<()> {
        if self.letters() == expected {
            Ok(())
        } else {
            Err(Error::Drift { line })
        }
    }
}

/// Small word builders used by the constructions. Generators are 1-based.
pub(crate) mod words {
    use super::*;

    /// `σ_n σ_{n-1} ⋯ σ_1`
    pub fn desc(n: Generator) -> Vec<Generator> {
        (1..=n).rev().collect()
    }

    /// `σ_1 σ_2 ⋯ σ_n`
    pub fn asc(n: Generator) -> Vec<Generator> {
        (1..=n).collect()
    }

    /// `σ_n ⋯ σ_1 σ_1 ⋯ σ_n`, the last strand wrapped once around the others.
    pub fn wrap(n: Generator) -> Vec<Generator> {
        let mut w = desc(n);
        w.extend(asc(n));
        w
    }

    /// `Δ²_n = (σ_{n-1} ⋯ σ_1)^n`
    pub fn twist(n: Generator) -> Vec<Generator> {
        pow(&desc(n.saturating_sub(1)), n as usize)
    }

    pub fn pow(block: &[Generator], k: usize) -> Vec<Generator> {
        let mut out = Vec::with_capacity(block.len() * k);
        for _ in 0..k {
            out.extend_from_slice(block);
        }
        out
    }

    pub fn cat(parts: &[&[Generator]]) -> Vec<Generator> {
        parts.iter().flat_map(|p| p.iter().copied()).collect()
    }
}

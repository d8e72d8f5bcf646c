//! Exhaustive enumeration of positive braid knots with unknotting number `m`.
//!
//! A positive braid knot with `u = m` on `n` strands has length
//! `ℓ = 2m + n - 1`, and after removing generators that occur once it lives
//! on at most `2m + 1` strands. So it suffices to walk every word of length
//! `2m + n - 1` over `σ_1 .. σ_{n-1}` for `1 ≤ n ≤ 2m + 1`.
//!
//! Candidates are numbered globally (strand count ascending, then
//! lexicographically), which lets callers split the space into index ranges,
//! scan them independently and merge the partial results in any order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::ops::Range;

use crate::alexander::{alexander, LaurentPoly};
use crate::unknot::reduce_single_generator;
use crate::word::{closure_info, generator_support_check, unknotting_number, BraidWord, Generator};

/// Default cap on the number of candidate words examined.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// One knot type as far as the invariants can tell.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KnotClass {
    /// Fewest strands, then lexicographically least, among the canonical
    /// forms sharing this invariant key.
    pub representative: BraidWord,
    pub unknotting_number: u64,
    pub alexander: LaurentPoly,
    /// Other canonical forms with the same invariant key. Non-empty means
    /// the invariants could not tell them apart and they were merged.
    pub merged: Vec<BraidWord>,
}

impl KnotClass {
    pub fn strands(&self) -> u32 {
        self.representative.strands()
    }

    pub fn is_merged(&self) -> bool {
        !self.merged.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Enumeration {
    pub m: u64,
    pub classes: Vec<KnotClass>,
    /// Candidate words looked at.
    pub examined: u64,
    /// Candidate words whose closure is a knot.
    pub knots: u64,
    /// Size of the whole candidate space.
    pub total: u64,
}

impl Enumeration {
    pub fn is_complete(&self) -> bool {
        self.examined == self.total
    }
}

/// The budget ran out before the candidate space did.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("enumeration budget of {budget} words exhausted after {} of {} candidates", .partial.examined, .partial.total)]
pub struct BudgetExhausted {
    pub budget: u64,
    pub partial: Enumeration,
}

impl From<BudgetExhausted> for crate::Error {
    fn from(e: BudgetExhausted) -> Self {
        crate::Error::WorkBudgetExceeded {
            budget: e.budget as usize,
        }
    }
}

/// Words of one strand count: all of length `len` over `1..strands`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Stratum {
    strands: u32,
    len: usize,
    count: u64,
}

fn strata(m: u64) -> Vec<Stratum> {
    (1..=2 * m + 1)
        .map(|n| {
            let len = (2 * m + n - 1) as usize;
            let count = (n - 1).checked_pow(len as u32).unwrap_or(u64::MAX);
            Stratum {
                strands: n as u32,
                len,
                count,
            }
        })
        .collect()
}

/// Number of candidate words for `m` (saturating).
pub fn candidate_count(m: u64) -> u64 {
    strata(m)
        .iter()
        .fold(0u64, |acc, s| acc.saturating_add(s.count))
}

/// `(2m)^{4m}`, the a priori bound on the number of classes (`None` on overflow).
pub fn class_bound(m: u64) -> Option<u128> {
    let m32 = u32::try_from(4 * m).ok()?;
    (2 * m as u128).checked_pow(m32)
}

/// Canonical forms found so far; merging is set union.
#[derive(Clone, Default, Debug)]
pub struct Scan {
    forms: BTreeSet<BraidWord>,
    examined: u64,
    knots: u64,
}

impl Scan {
    pub fn merge(&mut self, other: Scan) {
        self.forms.extend(other.forms);
        self.examined += other.examined;
        self.knots += other.knots;
    }

    pub fn examined(&self) -> u64 {
        self.examined
    }
}

/// Examines the candidates with global indices in `range`.
pub fn scan(m: u64, range: Range<u64>) -> Scan {
    let mut out = Scan::default();
    let mut canon = Canonicalizer::default();
    let mut base = 0u64;
    for s in strata(m) {
        let lo = range.start.max(base);
        let hi = range.end.min(base.saturating_add(s.count));
        for index in lo..hi {
            let w = BraidWord::from_parts(s.strands, word_at(s, index - base));
            out.examined += 1;
            if !generator_support_check(&w) || !closure_info(&w).is_knot {
                continue;
            }
            out.knots += 1;
            out.forms.insert(canon.canonical(w));
        }
        base = base.saturating_add(s.count);
    }
    out
}

fn word_at(s: Stratum, mut index: u64) -> Vec<Generator> {
    let radix = (s.strands - 1) as u64;
    let mut letters = alloc::vec![1; s.len];
    for slot in letters.iter_mut().rev() {
        *slot = (index % radix) as Generator + 1;
        index /= radix;
    }
    letters
}

/// Groups canonical forms by invariant key.
pub fn finish(m: u64, scan: Scan) -> Enumeration {
    let mut groups: BTreeMap<(u64, u32, LaurentPoly), Vec<BraidWord>> = BTreeMap::new();
    for form in scan.forms {
        let u = unknotting_number(&form).expect("canonical forms are knots");
        let poly = alexander(&form).expect("canonical forms are knots");
        groups
            .entry((u, form.strands(), poly))
            .or_default()
            .push(form);
    }
    let mut classes: Vec<KnotClass> = groups
        .into_iter()
        .map(|((u, _, poly), mut forms)| {
            forms.sort();
            let representative = forms.remove(0);
            KnotClass {
                representative,
                unknotting_number: u,
                alexander: poly,
                merged: forms,
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.strands(), a.representative.letters()).cmp(&(b.strands(), b.representative.letters()))
    });
    Enumeration {
        m,
        classes,
        examined: scan.examined,
        knots: scan.knots,
        total: candidate_count(m),
    }
}

/// All positive braid knots with unknotting number `m`, up to the
/// canonicalization below and the invariant key.
pub fn enumerate_positive_knots(m: u64, budget: u64) -> Result<Enumeration, BudgetExhausted> {
    let total = candidate_count(m);
    let result = finish(m, scan(m, 0..total.min(budget)));
    if result.is_complete() {
        Ok(result)
    } else {
        Err(BudgetExhausted {
            budget,
            partial: result,
        })
    }
}

/// Canonical form of a knot word: drop strands while some generator occurs
/// once, anywhere in the orbit under rotation by one, distant swaps and
/// braid relations; then take the least word of the final orbit.
#[derive(Default)]
struct Canonicalizer {
    cache: BTreeMap<BraidWord, BraidWord>,
}

impl Canonicalizer {
    fn canonical(&mut self, w: BraidWord) -> BraidWord {
        if let Some(c) = self.cache.get(&w) {
            return c.clone();
        }
        let (members, reducible) = orbit(&w);
        let result = match reducible {
            Some(x) => self.canonical(x),
            None => members
                .iter()
                .next()
                .expect("orbit contains the word")
                .clone(),
        };
        for member in members {
            self.cache.insert(member, result.clone());
        }
        result
    }
}

/// Explores the orbit of `w`, stopping early at the first member that loses
/// a strand; returns the members seen and that member's reduction.
fn orbit(w: &BraidWord) -> (BTreeSet<BraidWord>, Option<BraidWord>) {
    let mut seen = BTreeSet::new();
    let mut queue = alloc::vec![w.clone()];
    seen.insert(w.clone());
    while let Some(cur) = queue.pop() {
        if let Ok(smaller) = reduce_single_generator(&cur) {
            return (seen, Some(smaller));
        }
        for next in neighbours(&cur) {
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    (seen, None)
}

fn neighbours(w: &BraidWord) -> Vec<BraidWord> {
    let l = w.letters();
    let mut out = Vec::new();
    if l.len() > 1 {
        let mut r = l[1..].to_vec();
        r.push(l[0]);
        out.push(BraidWord::from_parts(w.strands(), r));
    }
    for p in 0..l.len().saturating_sub(1) {
        if l[p].abs_diff(l[p + 1]) >= 2 {
            let mut x = l.to_vec();
            x.swap(p, p + 1);
            out.push(BraidWord::from_parts(w.strands(), x));
        }
    }
    for p in 0..l.len().saturating_sub(2) {
        if l[p] == l[p + 2] && l[p].abs_diff(l[p + 1]) == 1 {
            let mut x = l.to_vec();
            x[p] = l[p + 1];
            x[p + 1] = l[p];
            x[p + 2] = l[p + 1];
            out.push(BraidWord::from_parts(w.strands(), x));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{torus_braid, TorusParams};

    #[test]
    fn small_cases() {
        let e = enumerate_positive_knots(0, DEFAULT_BUDGET).unwrap();
        assert_eq!(e.classes.len(), 1);
        assert_eq!(e.classes[0].representative, BraidWord::unknot());

        let e = enumerate_positive_knots(1, DEFAULT_BUDGET).unwrap();
        assert_eq!(e.classes.len(), 1);
        assert_eq!(
            e.classes[0].representative,
            torus_braid(TorusParams::new(2, 3))
        );
        assert_eq!(e.total, 1 + 16);
    }

    #[test]
    fn budget_is_enforced() {
        let err = enumerate_positive_knots(2, 100).unwrap_err();
        assert_eq!(err.partial.examined, 100);
        assert!(!err.partial.is_complete());
    }

    #[test]
    fn partitions_merge() {
        let total = candidate_count(2);
        let whole = finish(2, scan(2, 0..total));
        let mut parts = scan(2, 40_000..total);
        parts.merge(scan(2, 0..40_000));
        assert_eq!(finish(2, parts), whole);
    }

    #[test]
    fn bounds() {
        assert_eq!(class_bound(1), Some(16));
        assert_eq!(class_bound(0), Some(1));
        assert_eq!(candidate_count(2), 1 + 64 + 2187 + 65536);
        assert_eq!(candidate_count(0), 1);
    }
}

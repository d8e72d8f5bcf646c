//! Positive braid words, their closures, and torus braids.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// 1-based generator index: `i` stands for `σ_i`.
pub type Generator = u32;

/// A positive braid word on an explicit number of strands.
///
/// The strand count is stored because the letters alone do not determine it:
/// a word may live on more strands than it uses.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BraidWord {
    letters: Vec<Generator>,
    strands: u32,
}

impl BraidWord {
    pub fn new(strands: u32, letters: Vec<Generator>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l >= strands) {
            return Err(Error::LetterOutOfRange { letter, strands });
        }
        Ok(BraidWord { letters, strands })
    }

    /// The empty word on one strand.
    pub fn unknot() -> Self {
        BraidWord {
            letters: Vec::new(),
            strands: 1,
        }
    }

    pub fn empty(strands: u32) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub(crate) fn from_parts(strands: u32, letters: Vec<Generator>) -> Self {
        debug_assert!(strands >= 1 && letters.iter().all(|&l| l >= 1 && l < strands));
        BraidWord { letters, strands }
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Generator> {
        self.letters
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index that occurs in the word.
    pub fn max_generator(&self) -> Option<Generator> {
        self.letters.iter().copied().max()
    }

    pub fn count(&self, generator: Generator) -> usize {
        self.letters.iter().filter(|&&l| l == generator).count()
    }

    /// Occurrence count of every generator `1..strands`, indexed by `i - 1`.
    pub fn generator_counts(&self) -> Vec<usize> {
        let mut counts = alloc::vec![0; self.strands as usize - 1];
        for &l in &self.letters {
            counts[l as usize - 1] += 1;
        }
        counts
    }

    /// Concatenation on the larger of the two strand counts.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord::from_parts(self.strands.max(other.strands), letters)
    }

    /// `(ℓ - n + 1)`, the doubled unknotting number of a positive braid knot.
    pub fn excess(&self) -> i64 {
        self.letters.len() as i64 - self.strands as i64 + 1
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses `"n: i1 i2 ..."`; `"1:"` is the unknot.
    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse("expected \"<strands>: <letters>\"".to_string()))?;
        let strands = head
            .trim()
            .parse::<u32>()
            .map_err(|_| Error::Parse(alloc::format!("bad strand count {:?}", head.trim())))?;
        let letters = tail
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Generator>()
                    .map_err(|_| Error::Parse(alloc::format!("bad generator {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }
}

/// Permutation and component data of a braid closure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosureInfo {
    /// `permutation[s]` is the bottom position (0-based) of the strand that
    /// starts at top position `s`.
    pub permutation: Vec<usize>,
    pub components: usize,
    pub is_knot: bool,
}

impl ClosureInfo {
    /// Cycles of the permutation, 1-based, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.permutation.len()];
        let mut out = Vec::new();
        for start in 0..self.permutation.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                cycle.push(s + 1);
                s = self.permutation[s];
            }
            out.push(cycle);
        }
        out
    }
}

/// Permutation induced by the letters, read top to bottom.
pub fn permutation(w: &BraidWord) -> Vec<usize> {
    let n = w.strands() as usize;
    // at[p] = strand currently at position p
    let mut at: Vec<usize> = (0..n).collect();
    for &l in w.letters() {
        at.swap(l as usize - 1, l as usize);
    }
    let mut perm = alloc::vec![0; n];
    for (pos, &strand) in at.iter().enumerate() {
        perm[strand] = pos;
    }
    perm
}

pub fn closure_info(w: &BraidWord) -> ClosureInfo {
    let permutation = permutation(w);
    let mut seen = alloc::vec![false; permutation.len()];
    let mut components = 0;
    for start in 0..permutation.len() {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut s = start;
        while !seen[s] {
            seen[s] = true;
            s = permutation[s];
        }
    }
    ClosureInfo {
        permutation,
        components,
        is_knot: components == 1,
    }
}

pub fn is_knot(w: &BraidWord) -> bool {
    closure_info(w).is_knot
}

/// `u = (ℓ - n + 1) / 2` for a positive braid whose closure is a knot.
pub fn unknotting_number(w: &BraidWord) -> Result<u64> {
    let info = closure_info(w);
    if !info.is_knot {
        return Err(Error::NotAKnot {
            components: info.components,
        });
    }
    let excess = w.excess();
    if excess < 0 || excess % 2 != 0 {
        return Err(Error::OddUnknottingParity);
    }
    Ok(excess as u64 / 2)
}

/// Torus knot or link parameters `T(p, q)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TorusParams {
    pub p: u32,
    pub q: u32,
}

impl TorusParams {
    pub fn new(p: u32, q: u32) -> Self {
        TorusParams { p, q }
    }

    pub fn is_knot(&self) -> bool {
        self.p >= 1 && self.q >= 1 && self.p.gcd(&self.q) == 1
    }

    pub(crate) fn require_knot(&self) -> Result<()> {
        if self.is_knot() {
            Ok(())
        } else {
            Err(Error::NotCoprime {
                p: self.p,
                q: self.q,
            })
        }
    }

    /// `T(p, q)` and `T(q, p)` are the same knot; this orders the pair.
    pub fn canonical(&self) -> Self {
        TorusParams {
            p: self.p.min(self.q),
            q: self.p.max(self.q),
        }
    }
}

impl fmt::Display for TorusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

/// `(σ_{p-1} ⋯ σ_1)^q` on `p` strands.
pub fn torus_braid(params: TorusParams) -> BraidWord {
    let p = params.p.max(1);
    let letters = (0..params.q).flat_map(|_| (1..p).rev()).collect();
    BraidWord::from_parts(p, letters)
}

/// `(p - 1)(q - 1) / 2`.
pub fn torus_unknotting_number(params: TorusParams) -> Result<u64> {
    params.require_knot()?;
    Ok((params.p as u64 - 1) * (params.q as u64 - 1) / 2)
}

/// True iff every generator `σ_1 .. σ_{n-1}` occurs at least once.
///
/// A positive braid missing some generator splits into two sub-braids, so a
/// `false` answer means the closure is a link.
pub fn generator_support_check(w: &BraidWord) -> bool {
    w.generator_counts().iter().all(|&c| c > 0)
}

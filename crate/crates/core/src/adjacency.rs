//! Certified Gordian adjacencies between torus knots.
//!
//! Every construction is a script over a trace-building workspace. Each
//! displayed line of the derivation is either a literal restatement (checked
//! with `expect`), a braid-relation rewrite to that exact line (which fails
//! if the line is not equal to the previous one as a braid), a whole-word
//! rotation, or a counted batch of crossing changes. A wrong line surfaces as
//! [`Error::Drift`] naming it.
//!
//! Word notation used below, all on 1-based generators:
//! `D_a = σ_a ⋯ σ_1`, `W_a = σ_a ⋯ σ_1 σ_1 ⋯ σ_a` (the strand `a + 1`
//! wrapped around the strands below it), and `Δ²_a = D_{a-1}^a`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::alexander::alexander;
use crate::derive::words::{asc, cat, desc, pow, twist, wrap};
use crate::derive::Workspace;
use crate::error::{Error, Result};
use crate::rewrite::{replay, RewriteTrace, RuleKind};
use crate::unknot::{reduce_region, unknot};
use crate::word::{
    closure_info, torus_braid, unknotting_number, BraidWord, Generator, TorusParams,
};

/// A braid word, optionally tagged with the torus knot it spells.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KnotLabel {
    pub word: BraidWord,
    pub torus: Option<TorusParams>,
}

impl KnotLabel {
    pub fn torus(params: TorusParams) -> Self {
        KnotLabel {
            word: torus_braid(params),
            torus: Some(params),
        }
    }

    pub fn word(word: BraidWord) -> Self {
        KnotLabel { word, torus: None }
    }
}

impl fmt::Display for KnotLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.torus {
            Some(t) => write!(f, "{t}"),
            None => write!(f, "{}", self.word),
        }
    }
}

/// A rewrite trace from `source` to `target` claiming that the target's
/// closure is Gordian adjacent to the source's.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdjacencyCertificate {
    pub source: KnotLabel,
    pub target: KnotLabel,
    pub trace: RewriteTrace,
    pub claimed_cc: u64,
}

/// Outcome of [`AdjacencyCertificate::verify`]. The first three fields
/// compare the trace's final word with the target word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Verification {
    pub strands: bool,
    pub length: bool,
    pub alexander: bool,
    /// `trace.crossing_changes = claimed_cc = u(source) - u(target)`.
    pub crossing_changes: bool,
}

impl Verification {
    pub fn all(&self) -> bool {
        self.strands && self.length && self.alexander && self.crossing_changes
    }
}

impl AdjacencyCertificate {
    /// Replays the trace and compares its end with the target.
    ///
    /// Fails outright if the trace does not replay or does not start at the
    /// source word; otherwise reports each check separately.
    pub fn verify(&self) -> Result<Verification> {
        if self.trace.initial() != &self.source.word {
            return Err(Error::TraceCorrupt {
                index: 0,
                reason: "trace does not start at the source word".into(),
            });
        }
        let end = replay(&self.trace)?;
        let target = &self.target.word;
        let alexander_match = match (alexander(&end), alexander(target)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        };
        let gap = match (
            unknotting_number(&self.source.word),
            unknotting_number(target),
        ) {
            (Ok(us), Ok(ut)) => us.checked_sub(ut),
            _ => None,
        };
        Ok(Verification {
            strands: end.strands() == target.strands(),
            length: end.len() == target.len(),
            alexander: alexander_match,
            crossing_changes: self.trace.crossing_changes() as u64 == self.claimed_cc
                && gap == Some(self.claimed_cc),
        })
    }

    /// True iff the trace ends on the target word letter for letter.
    pub fn ends_on_target(&self) -> bool {
        self.trace.final_word() == &self.target.word
    }
}

fn certificate(
    source: KnotLabel,
    target: KnotLabel,
    trace: RewriteTrace,
    claimed_cc: u64,
) -> AdjacencyCertificate {
    AdjacencyCertificate {
        source,
        target,
        trace,
        claimed_cc,
    }
}

// ---------------------------------------------------------------------------
// script helpers

/// Braid-relation rewrite of the whole word to `line`.
fn iso(ws: &mut Workspace, line: &[Generator], label: &'static str) -> Result<()> {
    ws.isotopy_to(line).map_err(|e| match e {
        Error::NotEquivalent => Error::Drift { line: label },
        other => other,
    })
}

/// Rewrites `count` consecutive blocks of `Δ²_{n}` starting at `offset`.
/// `twist_first` picks `Δ²_{n-1} W_{n-1}` over `W_{n-1} Δ²_{n-1}`.
fn peel_blocks(
    ws: &mut Workspace,
    offset: usize,
    count: usize,
    n: Generator,
    twist_first: bool,
) -> Result<()> {
    let block = peeled(n, twist_first);
    for b in 0..count {
        ws.isotopy_segment(offset + b * block.len(), &block)?;
    }
    Ok(())
}

fn peeled(n: Generator, twist_first: bool) -> Vec<Generator> {
    if twist_first {
        cat(&[&twist(n - 1), &wrap(n - 1)])
    } else {
        cat(&[&wrap(n - 1), &twist(n - 1)])
    }
}

fn ones(count: usize) -> Vec<Generator> {
    alloc::vec![1; count]
}

/// `W_{n-1}^k σ_{n-1} W_{n-2}^k σ_{n-2} ⋯ W_{a+1}^k σ_{a+1}`: the finished
/// levels above `a` of the twist decomposition.
fn ladder(n: Generator, k: usize, a: Generator) -> Vec<Generator> {
    let mut out = Vec::new();
    for j in (a + 1..n).rev() {
        out.extend(pow(&wrap(j), k));
        out.push(j);
    }
    out
}

// ---------------------------------------------------------------------------
// elementary constructions

/// Moves the `block_len` letters just before a wrap word `W_n` at `pos`
/// across it: `β W_n → W_n β`. Each letter `σ_i` (`i < n`) crosses with
/// distant swaps and two braid relations.
pub fn wrap_commute(
    w: &BraidWord,
    pos: usize,
    n: Generator,
    block_len: usize,
) -> Result<RewriteTrace> {
    let pattern = wrap(n);
    if n == 0 || w.letters().get(pos..pos + pattern.len()) != Some(&pattern[..]) {
        return Err(Error::illegal(
            RuleKind::DistantSwap,
            "wrap word not found at position",
        ));
    }
    if block_len > pos {
        return Err(Error::Precondition(format!(
            "block of {block_len} letters does not fit before position {pos}"
        )));
    }
    if w.letters()[pos - block_len..pos].contains(&n) {
        return Err(Error::illegal(
            RuleKind::NeighborBraid,
            "block contains the wrapped generator",
        ));
    }
    let mut ws = Workspace::new(w.clone());
    let n = n as usize;
    for q in (pos - block_len + 1..=pos).rev() {
        // σ_i sits at q - 1 and W_n starts at q.
        let i = ws.letters()[q - 1] as usize;
        let p1 = q + n - i - 2;
        ws.slide(q - 1, p1)?;
        ws.braid(p1)?;
        let p2 = p1 + 2 * i;
        ws.slide(p1 + 2, p2)?;
        ws.braid(p2)?;
        ws.slide(p2 + 2, p2 + 2 + (n - i - 1))?;
    }
    Ok(ws.into_trace())
}

/// `Δ²_n = (σ_{n-1} ⋯ σ_1)^n` on `n` strands.
pub fn full_twist(n: u32) -> Result<BraidWord> {
    BraidWord::new(n, twist(n))
}

/// Rewrites the `Δ²_n` starting at `pos` into `W_{n-1} Δ²_{n-1}` using braid
/// relations only.
pub fn peel_full_twist(w: &BraidWord, pos: usize, n: Generator) -> Result<RewriteTrace> {
    let pattern = twist(n);
    if n == 0 || w.letters().get(pos..pos + pattern.len()) != Some(&pattern[..]) {
        return Err(Error::illegal(
            RuleKind::NeighborBraid,
            "full twist not found at position",
        ));
    }
    let mut ws = Workspace::new(w.clone());
    if n >= 2 {
        ws.isotopy_segment(pos, &peeled(n, false))?;
    }
    Ok(ws.into_trace())
}

/// `(σ_{n-1} ⋯ σ_1)^{nk+1} → W_{n-1}^k σ_{n-1} ⋯ W_2^k σ_2 W_1^k σ_1` by
/// braid relations and one whole-word rotation per level.
pub fn decompose_twists(n: u32, k: usize) -> Result<RewriteTrace> {
    if n < 2 || k < 1 {
        return Err(Error::Precondition(format!(
            "decomposition needs n >= 2 and k >= 1, got n={n}, k={k}"
        )));
    }
    let mut ws = Workspace::new(torus_braid(TorusParams::new(n, n * k as u32 + 1)));
    for a in (2..n).rev() {
        let pre = ladder(n, k, a);
        let p = pow(&twist(a), k);
        let wk = pow(&wrap(a), k);
        ws.expect(
            &cat(&[&pre, &pow(&desc(a), (a as usize + 1) * k + 1)]),
            "level start",
        )?;
        iso(
            &mut ws,
            &cat(&[&pre, &pow(&peeled(a + 1, false), k), &desc(a)]),
            "peel level twists",
        )?;
        iso(&mut ws, &cat(&[&pre, &p, &wk, &desc(a)]), "gather twists")?;
        iso(
            &mut ws,
            &cat(&[&p, &pre, &wk, &desc(a)]),
            "twists to the front",
        )?;
        ws.rotate(p.len() as i64)?;
        ws.expect(&cat(&[&pre, &wk, &desc(a), &p]), "twists to the end")?;
        iso(
            &mut ws,
            &cat(&[&pre, &wk, &[a], &p, &desc(a - 1)]),
            "twists past the top letter",
        )?;
    }
    ws.expect(&ladder(n, k, 0), "decomposed")?;
    Ok(ws.into_trace())
}

/// Inverse of [`decompose_twists`] for a word `q · L` where `q` is the first
/// `q_len` letters and commutes with everything on `n` strands.
fn assemble_twists(ws: &mut Workspace, q_len: usize, n: Generator, k: usize) -> Result<()> {
    let q: Vec<Generator> = ws.letters()[..q_len].to_vec();
    ws.expect(&cat(&[&q, &ladder(n, k, 0)]), "decomposed")?;
    for a in 2..n {
        let pre = ladder(n, k, a);
        let p = pow(&twist(a), k);
        let wk = pow(&wrap(a), k);
        iso(
            ws,
            &cat(&[&q, &pre, &wk, &desc(a), &p]),
            "twists to the end",
        )?;
        ws.rotate(-(p.len() as i64))?;
        ws.expect(&cat(&[&p, &q, &pre, &wk, &desc(a)]), "twists to the front")?;
        iso(
            ws,
            &cat(&[&q, &pre, &p, &wk, &desc(a)]),
            "twists behind the ladder",
        )?;
        iso(
            ws,
            &cat(&[&q, &pre, &pow(&peeled(a + 1, false), k), &desc(a)]),
            "interleave twists",
        )?;
        iso(
            ws,
            &cat(&[&q, &pre, &pow(&desc(a), (a as usize + 1) * k + 1)]),
            "fold level",
        )?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// torus families

/// `T(a, b)` down to a braid on `a - 1` strands with `⌊b/a⌋` crossing
/// changes (all on the top generator) and one destabilization.
pub fn strip_top_strand(params: TorusParams) -> Result<AdjacencyCertificate> {
    params.require_knot()?;
    let TorusParams { p: a, q: b } = params;
    if a < 2 {
        return Err(Error::Precondition(format!(
            "{params} has no strand to strip"
        )));
    }
    let n = a - 1;
    let (m, r) = ((b / a) as usize, b % a);
    let mut ws = Workspace::new(torus_braid(params));
    let q = pow(&twist(n), m);
    let wm = pow(&wrap(n), m);
    let x: Vec<Generator> = (n - r + 1..n).collect();
    let y = pow(&desc(n - 1), r as usize);

    ws.expect(
        &cat(&[&pow(&twist(a), m), &pow(&desc(n), r as usize)]),
        "twists and remainder",
    )?;
    peel_blocks(&mut ws, 0, m, a, false)?;
    iso(
        &mut ws,
        &cat(&[&q, &wm, &pow(&desc(n), r as usize)]),
        "gather wraps",
    )?;
    iso(&mut ws, &cat(&[&q, &wm, &x, &[n], &y]), "unfurl remainder")?;
    iso(
        &mut ws,
        &cat(&[&q, &x, &wm, &[n], &y]),
        "wraps next to the top letter",
    )?;
    ws.cancel_pairs(n, q.len() + x.len(), m)?;
    ws.expect(
        &cat(&[&q, &x, &[n], &pow(&wrap(n - 1), m), &y]),
        "top pairs removed",
    )?;
    ws.destabilize()?;
    ws.expect(&cat(&[&q, &x, &pow(&wrap(n - 1), m), &y]), "destabilized")?;

    let end = ws.word().clone();
    Ok(certificate(
        KnotLabel::torus(params),
        KnotLabel::word(end),
        ws.into_trace(),
        m as u64,
    ))
}

/// From `q · W_n^M D_n` on `n + 1` strands to `T(n, ·)`: remove the top
/// generator, cascade the crossing changes down the levels, reassemble.
fn finish_from_wraps(
    ws: &mut Workspace,
    q: &[Generator],
    n: Generator,
    k: usize,
    m: usize,
) -> Result<()> {
    ws.cancel_pairs(n, q.len(), m)?;
    ws.expect(
        &cat(&[q, &[n], &pow(&wrap(n - 1), m), &desc(n - 1)]),
        "top pairs removed",
    )?;
    ws.destabilize()?;
    ws.expect(
        &cat(&[q, &pow(&wrap(n - 1), m), &desc(n - 1)]),
        "destabilized",
    )?;
    for j in (2..n).rev() {
        let pre = ladder(n, k, j);
        let count = (j as usize - 1) * k;
        ws.cancel_pairs(j, q.len() + pre.len() + k * wrap(j).len(), count)?;
        ws.expect(
            &cat(&[
                q,
                &pre,
                &pow(&wrap(j), k),
                &[j],
                &pow(&wrap(j - 1), count),
                &desc(j - 1),
            ]),
            "cascade level",
        )?;
    }
    assemble_twists(ws, q.len(), n, k)
}

fn family_domain(n: u32, k: usize) -> Result<()> {
    if n < 2 || k < 1 {
        return Err(Error::Precondition(format!(
            "family needs n >= 2 and k >= 1, got n={n}, k={k}"
        )));
    }
    Ok(())
}

/// `T(n, n²k + 1) ≤_g T(n + 1, (n² - 1)k + 1)` with `n(n-1)k/2` crossing changes.
pub fn adjacency_ci(n: u32, k: usize) -> Result<AdjacencyCertificate> {
    family_domain(n, k)?;
    let m = (n as usize - 1) * k;
    let source = TorusParams::new(n + 1, ((n * n - 1) as usize * k + 1) as u32);
    let target = TorusParams::new(n, (n as usize * n as usize * k + 1) as u32);
    let mut ws = Workspace::new(torus_braid(source));
    let q = pow(&twist(n), m);

    ws.expect(&cat(&[&pow(&twist(n + 1), m), &desc(n)]), "twists")?;
    peel_blocks(&mut ws, 0, m, n + 1, false)?;
    ws.expect(&cat(&[&pow(&peeled(n + 1, false), m), &desc(n)]), "peeled")?;
    iso(
        &mut ws,
        &cat(&[&q, &pow(&wrap(n), m), &desc(n)]),
        "gather wraps",
    )?;
    finish_from_wraps(&mut ws, &q, n, k, m)?;
    ws.expect(torus_braid(target).letters(), "target")?;

    let cc = (n * (n - 1)) as u64 / 2 * k as u64;
    Ok(certificate(
        KnotLabel::torus(source),
        KnotLabel::torus(target),
        ws.into_trace(),
        cc,
    ))
}

/// `T(n, n²k + n + 1) ≤_g T(n + 1, (n² - 1)k + n)` with `n(n-1)k/2` crossing changes.
pub fn adjacency_cin(n: u32, k: usize) -> Result<AdjacencyCertificate> {
    family_domain(n, k)?;
    let m = (n as usize - 1) * k;
    let source = TorusParams::new(n + 1, ((n * n - 1) as usize * k + n as usize) as u32);
    let target = TorusParams::new(n, (n as usize * n as usize * k + n as usize + 1) as u32);
    let mut ws = Workspace::new(torus_braid(source));
    let tw = twist(n);

    ws.expect(
        &cat(&[&pow(&twist(n + 1), m), &pow(&desc(n), n as usize)]),
        "twists",
    )?;
    // D_n^n is σ_1⋯σ_n Δ²_n as a braid; D_n Δ²_n is only conjugate to it.
    let p = pow(&twist(n + 1), m);
    iso(&mut ws, &cat(&[&asc(n), &tw, &p]), "split off a twist")?;
    for j in 1..n {
        let (low, high) = (desc(j), (j + 1..=n).collect::<Vec<_>>());
        ws.rotate(j as i64)?;
        ws.expect(&cat(&[&high, &tw, &p, &low]), "rotate the low run")?;
        let (low, high) = (desc(j + 1), (j + 2..=n).collect::<Vec<_>>());
        iso(&mut ws, &cat(&[&low, &high, &tw, &p]), "absorb the low run")?;
    }
    iso(
        &mut ws,
        &cat(&[&p, &desc(n), &tw]),
        "twists back to the front",
    )?;
    peel_blocks(&mut ws, 0, m, n + 1, false)?;
    iso(
        &mut ws,
        &cat(&[&pow(&tw, m), &pow(&wrap(n), m), &desc(n), &tw]),
        "gather wraps",
    )?;
    ws.rotate(-(tw.len() as i64))?;
    let q = pow(&tw, m + 1);
    ws.expect(
        &cat(&[&q, &pow(&wrap(n), m), &desc(n)]),
        "extra twist to the front",
    )?;
    finish_from_wraps(&mut ws, &q, n, k, m)?;
    ws.expect(torus_braid(target).letters(), "target")?;

    let cc = (n * (n - 1)) as u64 / 2 * k as u64;
    Ok(certificate(
        KnotLabel::torus(source),
        KnotLabel::torus(target),
        ws.into_trace(),
        cc,
    ))
}

/// `T(3, ⌊(9b+5)/8⌋) ≤_g T(4, b)`, or `T(3, 9k+5)` when `b = 8k+5`.
pub fn adjacency_3_from_4(b: u32) -> Result<AdjacencyCertificate> {
    TorusParams::new(4, b).require_knot()?;
    let k = (b / 8) as usize;
    if k == 0 {
        return Err(Error::Precondition(format!(
            "T(4,{b}) is below the smallest case (b >= 9)"
        )));
    }
    match b % 8 {
        1 => adjacency_ci(3, k),
        3 => adjacency_cin(3, k),
        5 => three_from_four_5(k),
        _ => three_from_four_7(k),
    }
}

/// `T(3, 9k+5) ≤_g T(4, 8k+5)` with `3k + 2` crossing changes.
fn three_from_four_5(k: usize) -> Result<AdjacencyCertificate> {
    let source = TorusParams::new(4, 8 * k as u32 + 5);
    let target = TorusParams::new(3, 9 * k as u32 + 5);
    let mut ws = Workspace::new(torus_braid(source));
    let blocks = 2 * k + 1;
    let q = pow(&twist(3), blocks);
    let w2k = pow(&wrap(2), k);

    ws.expect(&cat(&[&pow(&twist(4), blocks), &desc(3)]), "twists")?;
    peel_blocks(&mut ws, 0, blocks, 4, true)?;
    iso(
        &mut ws,
        &cat(&[&q, &pow(&wrap(3), blocks), &desc(3)]),
        "gather wraps",
    )?;
    ws.cancel_pairs(3, q.len(), blocks)?;
    ws.expect(
        &cat(&[&q, &[3], &pow(&wrap(2), blocks), &desc(2)]),
        "top pairs removed",
    )?;
    ws.destabilize()?;
    ws.expect(&cat(&[&q, &w2k, &wrap(2), &w2k, &[2, 1]]), "destabilized")?;
    ws.cancel_pairs(2, q.len() + w2k.len(), k + 1)?;
    ws.expect(
        &cat(&[&q, &w2k, &[2], &ones(2 * k + 3)]),
        "second level pairs removed",
    )?;
    ws.rotate(-(2 * k as i64 + 1))?;
    iso(
        &mut ws,
        &cat(&[&q, &w2k, &ones(2 * k + 1), &[2, 1, 1]]),
        "ones around the end",
    )?;
    iso(
        &mut ws,
        &cat(&[&q, &pow(&[2, 1, 1, 2, 1, 1], k), &[1, 2, 1, 1]]),
        "interleave",
    )?;
    iso(
        &mut ws,
        &cat(&[&q, &pow(&[2, 1, 2, 1, 2, 1], k), &[2, 1, 2, 1]]),
        "twists",
    )?;
    ws.expect(torus_braid(target).letters(), "target")?;

    Ok(certificate(
        KnotLabel::torus(source),
        KnotLabel::torus(target),
        ws.into_trace(),
        3 * k as u64 + 2,
    ))
}

/// `T(3, 9k+8) ≤_g T(4, 8k+7)` with `3k + 2` crossing changes.
fn three_from_four_7(k: usize) -> Result<AdjacencyCertificate> {
    let source = TorusParams::new(4, 8 * k as u32 + 7);
    let target = TorusParams::new(3, 9 * k as u32 + 8);
    let mut ws = Workspace::new(torus_braid(source));
    let blocks = 2 * k + 1;
    let t3 = twist(3);
    let q = pow(&t3, blocks + 1);
    let r = pow(&t3, k);

    ws.expect(
        &cat(&[&pow(&twist(4), blocks), &pow(&desc(3), 3)]),
        "twists",
    )?;
    iso(
        &mut ws,
        &cat(&[&pow(&twist(4), blocks), &[1, 2, 3], &t3]),
        "unfurl tail",
    )?;
    peel_blocks(&mut ws, 0, blocks, 4, true)?;
    ws.rotate(-(t3.len() as i64))?;
    ws.expect(
        &cat(&[&t3, &pow(&peeled(4, true), blocks), &[1, 2, 3]]),
        "tail twist to the front",
    )?;
    iso(
        &mut ws,
        &cat(&[&q, &pow(&wrap(3), blocks), &[1, 2, 3]]),
        "gather wraps",
    )?;
    iso(
        &mut ws,
        &cat(&[&q, &[1, 2], &pow(&wrap(3), blocks), &[3]]),
        "wraps next to the top letter",
    )?;
    ws.cancel_pairs(3, q.len() + 2, blocks)?;
    ws.expect(
        &cat(&[&q, &[1, 2, 3], &pow(&wrap(2), blocks)]),
        "top pairs removed",
    )?;
    ws.destabilize()?;
    ws.expect(&cat(&[&q, &[1, 2], &pow(&wrap(2), blocks)]), "destabilized")?;
    ws.cancel_pairs(2, q.len() + 1, k + 1)?;
    ws.expect(
        &cat(&[&q, &ones(2 * k + 3), &[2], &pow(&wrap(2), k)]),
        "second level pairs removed",
    )?;
    iso(
        &mut ws,
        &cat(&[&ones(2 * k), &q, &[1, 1, 1, 2], &pow(&wrap(2), k)]),
        "ones to the front",
    )?;
    ws.rotate(2 * k as i64)?;
    ws.expect(
        &cat(&[&q, &[1, 1, 1, 2], &pow(&wrap(2), k), &ones(2 * k)]),
        "ones around the end",
    )?;
    iso(
        &mut ws,
        &cat(&[&q, &[1, 1, 1, 2], &pow(&[2, 1, 1, 2, 1, 1], k)]),
        "interleave",
    )?;
    iso(&mut ws, &cat(&[&q, &[1, 1, 1, 2], &r]), "twists")?;
    iso(
        &mut ws,
        &cat(&[&[1, 1], &q, &[1, 2], &r]),
        "pair to the front",
    )?;
    ws.rotate(2)?;
    ws.expect(&cat(&[&q, &[1, 2], &r, &[1, 1]]), "pair around the end")?;
    iso(
        &mut ws,
        &cat(&[&q, &[1, 2, 1, 1], &r]),
        "pair past the twists",
    )?;
    iso(&mut ws, &cat(&[&q, &[2, 1, 2, 1], &r]), "braid relation")?;
    ws.expect(torus_braid(target).letters(), "target")?;

    Ok(certificate(
        KnotLabel::torus(source),
        KnotLabel::torus(target),
        ws.into_trace(),
        3 * k as u64 + 2,
    ))
}

/// `T(2, 6k+3) ≤_g T(4, 4k+1)` (`3k - 1` crossing changes) or
/// `T(2, 6k+5) ≤_g T(4, 4k+3)` (`3k + 1` crossing changes).
pub fn adjacency_2_from_4(b: u32) -> Result<AdjacencyCertificate> {
    TorusParams::new(4, b).require_knot()?;
    let k = (b / 4) as usize;
    if k == 0 {
        return Err(Error::Precondition(format!(
            "T(4,{b}) is below the smallest case (b >= 5)"
        )));
    }
    if b % 4 == 1 {
        two_from_four_1(k)
    } else {
        two_from_four_3(k)
    }
}

fn two_from_four_1(k: usize) -> Result<AdjacencyCertificate> {
    let source = TorusParams::new(4, 4 * k as u32 + 1);
    let target = TorusParams::new(2, 6 * k as u32 + 3);
    let mut ws = Workspace::new(torus_braid(source));
    let q = pow(&twist(3), k);
    let w2 = wrap(2);
    let x: Vec<Generator> = cat(&[&[1, 1], &w2, &[1, 1]]);

    ws.expect(&cat(&[&pow(&twist(4), k), &desc(3)]), "twists")?;
    peel_blocks(&mut ws, 0, k, 4, true)?;
    iso(
        &mut ws,
        &cat(&[&q, &pow(&wrap(3), k), &desc(3)]),
        "gather wraps",
    )?;
    ws.cancel_pairs(3, q.len(), k)?;
    ws.expect(
        &cat(&[&q, &[3], &pow(&w2, k), &[2, 1]]),
        "top pairs removed",
    )?;
    ws.destabilize()?;
    ws.expect(&cat(&[&q, &pow(&w2, k), &[2, 1]]), "destabilized")?;
    peel_blocks(&mut ws, 0, k, 3, false)?;
    ws.expect(
        &cat(&[&pow(&cat(&[&w2, &[1, 1]]), k), &pow(&w2, k), &[2, 1]]),
        "peeled",
    )?;
    iso(
        &mut ws,
        &cat(&[&pow(&cat(&[&w2, &[1, 1], &w2]), k), &[2, 1]]),
        "interleave",
    )?;
    ws.cancel_pairs(2, 0, k - 1)?;
    ws.expect(
        &cat(&[&[2], &pow(&x, k), &[2, 2, 1]]),
        "inner pairs removed",
    )?;
    ws.rotate(1)?;
    iso(
        &mut ws,
        &cat(&[&pow(&x, k), &[1, 2, 1, 1]]),
        "braid relation",
    )?;
    iso(
        &mut ws,
        &cat(&[&ones(2 * k), &pow(&w2, k), &ones(2 * k), &[1, 2, 1, 1]]),
        "separate ones",
    )?;
    iso(
        &mut ws,
        &cat(&[&ones(4 * k + 1), &pow(&w2, k), &[2, 1, 1]]),
        "ones to the front",
    )?;
    ws.rotate(-1)?;
    ws.expect(
        &cat(&[&ones(4 * k + 2), &pow(&w2, k), &[2, 1]]),
        "one around the end",
    )?;
    ws.cancel_pairs(2, 4 * k + 2, k)?;
    ws.expect(
        &cat(&[&ones(4 * k + 2), &[2], &ones(2 * k + 1)]),
        "last pairs removed",
    )?;
    ws.destabilize()?;
    ws.expect(torus_braid(target).letters(), "target")?;

    Ok(certificate(
        KnotLabel::torus(source),
        KnotLabel::torus(target),
        ws.into_trace(),
        3 * k as u64 - 1,
    ))
}

fn two_from_four_3(k: usize) -> Result<AdjacencyCertificate> {
    let source = TorusParams::new(4, 4 * k as u32 + 3);
    let target = TorusParams::new(2, 6 * k as u32 + 5);
    let mut ws = Workspace::new(torus_braid(source));
    let t3 = twist(3);
    let q = pow(&t3, k + 1);
    let w2 = wrap(2);
    let w2k = pow(&w2, k);
    let a = pow(&cat(&[&w2, &[1, 1]]), k);
    let x: Vec<Generator> = cat(&[&[1, 1], &w2, &[1, 1]]);

    ws.expect(&cat(&[&pow(&twist(4), k), &pow(&desc(3), 3)]), "twists")?;
    iso(
        &mut ws,
        &cat(&[&pow(&twist(4), k), &[3, 2, 1, 2, 3, 2, 1, 2, 1]]),
        "tail braid relations",
    )?;
    iso(
        &mut ws,
        &cat(&[&pow(&twist(4), k), &[1, 2, 3], &t3]),
        "unfurl tail",
    )?;
    peel_blocks(&mut ws, 0, k, 4, true)?;
    ws.rotate(-(t3.len() as i64))?;
    ws.expect(
        &cat(&[&t3, &pow(&peeled(4, true), k), &[1, 2, 3]]),
        "tail twist to the front",
    )?;
    iso(
        &mut ws,
        &cat(&[&q, &pow(&wrap(3), k), &[1, 2, 3]]),
        "gather wraps",
    )?;
    iso(
        &mut ws,
        &cat(&[&q, &[1, 2], &pow(&wrap(3), k), &[3]]),
        "wraps next to the top letter",
    )?;
    ws.cancel_pairs(3, q.len() + 2, k)?;
    ws.expect(&cat(&[&q, &[1, 2, 3], &w2k]), "top pairs removed")?;
    ws.destabilize()?;
    ws.expect(&cat(&[&q, &[1, 2], &w2k]), "destabilized")?;
    peel_blocks(&mut ws, 0, k + 1, 3, false)?;
    ws.expect(&cat(&[&a, &[2, 1, 1, 2, 1, 1, 1, 2], &w2k]), "peeled")?;
    iso(
        &mut ws,
        &cat(&[&a, &[1, 1, 1, 2, 1, 1, 2, 2], &w2k]),
        "braid relations",
    )?;
    ws.cancel_pairs(2, a.len(), 1)?;
    ws.expect(
        &cat(&[&a, &[1, 1, 1, 2, 1, 1], &w2k]),
        "middle pair removed",
    )?;
    iso(
        &mut ws,
        &cat(&[&ones(2 * k + 3), &w2k, &[2, 1, 1], &w2k]),
        "ones to the front",
    )?;
    ws.rotate(2 * k as i64 + 3)?;
    ws.expect(
        &cat(&[&w2k, &[2, 1, 1], &w2k, &ones(2 * k + 3)]),
        "ones around the end",
    )?;
    iso(
        &mut ws,
        &cat(&[&pow(&cat(&[&w2, &[1, 1], &w2]), k), &[2], &ones(5)]),
        "interleave",
    )?;
    ws.cancel_pairs(2, 0, k)?;
    ws.expect(&cat(&[&[2], &pow(&x, k), &ones(5)]), "block pairs removed")?;
    iso(
        &mut ws,
        &cat(&[&[2], &w2k, &ones(4 * k + 5)]),
        "separate ones",
    )?;
    ws.cancel_pairs(2, 0, k)?;
    ws.expect(
        &cat(&[&ones(2 * k), &[2], &ones(4 * k + 5)]),
        "last pairs removed",
    )?;
    ws.destabilize()?;
    ws.expect(torus_braid(target).letters(), "target")?;

    Ok(certificate(
        KnotLabel::torus(source),
        KnotLabel::torus(target),
        ws.into_trace(),
        3 * k as u64 + 1,
    ))
}

/// From `β' w` to `β'` when the closure of `w` has as many components as
/// strands: reduce the `w` region one top generator at a time until it is
/// empty. Uses `|w| / 2` crossing changes.
pub fn delete_link_subword(beta_prime: &BraidWord, w: &BraidWord) -> Result<AdjacencyCertificate> {
    if beta_prime.strands() != w.strands() {
        return Err(Error::Precondition(format!(
            "words live on {} and {} strands",
            beta_prime.strands(),
            w.strands()
        )));
    }
    let n = w.strands();
    let info = closure_info(w);
    if info.components != n as usize {
        return Err(Error::Precondition(format!(
            "closure of the deleted word has {} components, expected {n}",
            info.components
        )));
    }
    let full = beta_prime.concat(w);
    for word in [&full, beta_prime] {
        let info = closure_info(word);
        if !info.is_knot {
            return Err(Error::NotAKnot {
                components: info.components,
            });
        }
    }
    let start = beta_prime.len();
    let mut ws = Workspace::new(full.clone());
    let mut end = ws.len();
    for j in (1..n).rev() {
        end = reduce_region(&mut ws, start, end, j)?;
        if ws.letters()[start..end].contains(&j) {
            return Err(Error::Drift {
                line: "top generator left in the deleted region",
            });
        }
    }
    ws.expect(beta_prime.letters(), "deleted region emptied")?;
    let cc = (w.len() / 2) as u64;
    Ok(certificate(
        KnotLabel::word(full),
        KnotLabel::word(beta_prime.clone()),
        ws.into_trace(),
        cc,
    ))
}

/// Ascending run `σ_1 ⋯ σ_n`, exposed for building test words.
pub fn ascending(n: Generator) -> Vec<Generator> {
    asc(n)
}

// ---------------------------------------------------------------------------
// catalog

/// Why a pair is claimed adjacent.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CatalogBasis {
    /// Same knot.
    Identity,
    /// The lower knot is the unknot; any unknotting sequence ends there.
    Unknot,
    /// `T(n, m) ≤_g T(a, b)` when `n ≤ a` and `m ≤ b` (cited, no construction).
    Monotone,
    /// `T(2, n) ≤_g T(3, m)` iff `n ≤ (4m + 1)/3` (cited, no construction).
    TwoFromThree,
    /// `T(3, a) ≤_g T(4, b)` when `a ≤ (9b + 5)/8`.
    ThreeFromFourBound,
    /// `T(2, a) ≤_g T(4, b)` when `a ≤ (3b + 3)/2`.
    TwoFromFourBound,
    /// Exact instance of `T(n, n²k+1) ≤_g T(n+1, (n²-1)k+1)`.
    FamilyCi,
    /// Exact instance of `T(n, n²k+n+1) ≤_g T(n+1, (n²-1)k+n)`.
    FamilyCin,
    /// Exact instance of the `T(3, ·)` from `T(4, ·)` constructions.
    ThreeFromFour,
    /// Exact instance of the `T(2, ·)` from `T(4, ·)` constructions.
    TwoFromFour,
    /// `T(a, c) ≤_g T(a, c + ka)` by deleting `k` full twists.
    DeleteTwists,
}

impl CatalogBasis {
    pub fn name(&self) -> &'static str {
        match self {
            CatalogBasis::Identity => "identity",
            CatalogBasis::Unknot => "unknot",
            CatalogBasis::Monotone => "monotone",
            CatalogBasis::TwoFromThree => "two-from-three",
            CatalogBasis::ThreeFromFourBound => "three-from-four-bound",
            CatalogBasis::TwoFromFourBound => "two-from-four-bound",
            CatalogBasis::FamilyCi => "family-ci",
            CatalogBasis::FamilyCin => "family-cin",
            CatalogBasis::ThreeFromFour => "three-from-four",
            CatalogBasis::TwoFromFour => "two-from-four",
            CatalogBasis::DeleteTwists => "delete-twists",
        }
    }

    /// True for claims that rest only on a cited inequality.
    pub fn is_predicate_only(&self) -> bool {
        matches!(
            self,
            CatalogBasis::Monotone
                | CatalogBasis::TwoFromThree
                | CatalogBasis::ThreeFromFourBound
                | CatalogBasis::TwoFromFourBound
        )
    }
}

impl fmt::Display for CatalogBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Answer to "is `lower ≤_g upper`?": every basis that claims it, and a
/// certificate when the pair is an exact instance of a construction.
#[derive(Clone, Debug)]
pub struct CatalogVerdict {
    pub lower: TorusParams,
    pub upper: TorusParams,
    pub bases: Vec<CatalogBasis>,
    pub certificate: Option<AdjacencyCertificate>,
}

impl CatalogVerdict {
    pub fn is_claimed(&self) -> bool {
        !self.bases.is_empty()
    }

    pub fn verdict_name(&self) -> &'static str {
        if self.is_claimed() {
            "CLAIMED"
        } else {
            "NOT_COVERED"
        }
    }
}

/// Looks up `lower ≤_g upper` among the known constructions and cited
/// inequalities. Both pairs are put in `p ≤ q` order first.
pub fn adjacency_catalog(lower: TorusParams, upper: TorusParams) -> Result<CatalogVerdict> {
    lower.require_knot()?;
    upper.require_knot()?;
    let (lo, up) = (lower.canonical(), upper.canonical());
    let mut bases = Vec::new();
    let mut certificate = None;
    let mut attach =
        |basis: CatalogBasis, cert: Option<Result<AdjacencyCertificate>>| -> Result<()> {
            bases.push(basis);
            if let Some(cert) = cert {
                let cert = cert?;
                if certificate.is_none() {
                    certificate = Some(cert);
                }
            }
            Ok(())
        };
    let (n, m, a, b) = (lo.p as u64, lo.q as u64, up.p as u64, up.q as u64);

    if lo == up || (n == 1 && a == 1) {
        attach(CatalogBasis::Identity, None)?;
    }
    if n == 1 && a > 1 {
        attach(CatalogBasis::Unknot, Some(unknot_certificate(up)))?;
    }
    if n >= 2 && a == n + 1 {
        let nn = n * n;
        if m > 1 && (m - 1) % nn == 0 {
            let k = (m - 1) / nn;
            if k >= 1 && b == (nn - 1) * k + 1 {
                attach(
                    CatalogBasis::FamilyCi,
                    Some(adjacency_ci(n as u32, k as usize)),
                )?;
            }
        }
        if m > n + 1 && (m - n - 1) % nn == 0 {
            let k = (m - n - 1) / nn;
            if k >= 1 && b == (nn - 1) * k + n {
                attach(
                    CatalogBasis::FamilyCin,
                    Some(adjacency_cin(n as u32, k as usize)),
                )?;
            }
        }
    }
    if n == 3 && a == 4 && b >= 9 && three_from_four_target(b) == Some(m) {
        attach(
            CatalogBasis::ThreeFromFour,
            Some(adjacency_3_from_4(b as u32)),
        )?;
    }
    if n == 2 && a == 4 && b >= 5 && two_from_four_target(b) == Some(m) {
        attach(
            CatalogBasis::TwoFromFour,
            Some(adjacency_2_from_4(b as u32)),
        )?;
    }
    if n == a && n >= 2 && b > m && (b - m) % n == 0 {
        let k = ((b - m) / n) as usize;
        let twists = BraidWord::new(n as u32, pow(&twist(n as u32), k))?;
        attach(
            CatalogBasis::DeleteTwists,
            Some(delete_link_subword(&torus_braid(lo), &twists)),
        )?;
    }
    let monotone = |(n1, m1): (u64, u64), (a1, b1): (u64, u64)| n1 <= a1 && m1 <= b1;
    if [(n, m), (m, n)]
        .iter()
        .any(|&x| [(a, b), (b, a)].iter().any(|&y| monotone(x, y)))
    {
        attach(CatalogBasis::Monotone, None)?;
    }
    if n == 2 && a == 3 && m % 2 == 1 && b % 3 != 0 && 3 * m <= 4 * b + 1 {
        attach(CatalogBasis::TwoFromThree, None)?;
    }
    if n == 3 && a == 4 && 8 * m <= 9 * b + 5 {
        attach(CatalogBasis::ThreeFromFourBound, None)?;
    }
    if n == 2 && a == 4 && 2 * m <= 3 * b + 3 {
        attach(CatalogBasis::TwoFromFourBound, None)?;
    }
    Ok(CatalogVerdict {
        lower: lo,
        upper: up,
        bases,
        certificate,
    })
}

fn three_from_four_target(b: u64) -> Option<u64> {
    let k = b / 8;
    match b % 8 {
        1 => Some(9 * k + 1),
        3 => Some(9 * k + 4),
        5 => Some(9 * k + 5),
        7 => Some(9 * k + 8),
        _ => None,
    }
}

fn two_from_four_target(b: u64) -> Option<u64> {
    let k = b / 4;
    match b % 4 {
        1 => Some(6 * k + 3),
        3 => Some(6 * k + 5),
        _ => None,
    }
}

fn unknot_certificate(params: TorusParams) -> Result<AdjacencyCertificate> {
    let source = KnotLabel::torus(params);
    let trace = unknot(&source.word)?;
    let cc = trace.crossing_changes() as u64;
    Ok(certificate(
        source,
        KnotLabel::torus(TorusParams::new(1, 1)),
        trace,
        cc,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(strands: u32, letters: &[u32]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    fn check(cert: &AdjacencyCertificate, cc: u64) {
        let v = cert.verify().unwrap();
        assert!(v.all(), "{v:?}");
        assert_eq!(cert.trace.crossing_changes() as u64, cc);
    }

    #[test]
    fn wrap_commute_examples() {
        let t = wrap_commute(&w(3, &[1, 2, 1, 1, 2]), 1, 2, 1).unwrap();
        assert_eq!(t.final_word(), &w(3, &[2, 1, 1, 2, 1]));
        assert_eq!(t.crossing_changes(), 0);
        let t = wrap_commute(&w(3, &[2, 1, 1, 2]), 0, 2, 0).unwrap();
        assert!(t.is_empty());
        assert!(matches!(
            wrap_commute(&w(3, &[2, 2, 1, 1, 2]), 1, 2, 1),
            Err(Error::IllegalStep { .. })
        ));

        let word = w(5, &cat(&[&[1, 3, 2, 1], &wrap(4)]));
        let t = wrap_commute(&word, 4, 4, 4).unwrap();
        assert_eq!(
            t.final_word().letters(),
            &cat(&[&wrap(4), &[1, 3, 2, 1]])[..]
        );
    }

    #[test]
    fn twists_and_peels() {
        assert_eq!(full_twist(2).unwrap(), w(2, &[1, 1]));
        assert_eq!(full_twist(4).unwrap().len(), 12);
        assert_eq!(closure_info(&full_twist(4).unwrap()).components, 4);

        let t = peel_full_twist(&w(2, &[1, 1]), 0, 2).unwrap();
        assert_eq!(t.final_word(), &w(2, &[1, 1]));
        let t4 = torus_braid(TorusParams::new(4, 4));
        let t = peel_full_twist(&t4, 0, 4).unwrap();
        assert_eq!(
            t.final_word().letters(),
            &[3, 2, 1, 1, 2, 3, 2, 1, 2, 1, 2, 1][..]
        );
        assert_eq!(t.crossing_changes(), 0);
        assert!(peel_full_twist(&w(3, &[1, 2]), 0, 3).is_err());
    }

    #[test]
    fn decomposition() {
        let t = decompose_twists(2, 1).unwrap();
        assert_eq!(t.final_word(), &w(2, &[1, 1, 1]));
        let t = decompose_twists(3, 1).unwrap();
        assert_eq!(t.final_word().letters(), &[2, 1, 1, 2, 2, 1, 1, 1][..]);
        assert_eq!(t.crossing_changes(), 0);
        let t = decompose_twists(4, 2).unwrap();
        assert_eq!(t.final_word().len(), 3 * 9);
        assert_eq!(replay(&t).unwrap(), *t.final_word());
    }

    #[test]
    fn strip_counts() {
        check(&strip_top_strand(TorusParams::new(4, 5)).unwrap(), 1);
        check(&strip_top_strand(TorusParams::new(3, 7)).unwrap(), 2);
        let c = strip_top_strand(TorusParams::new(2, 3)).unwrap();
        check(&c, 1);
        assert_eq!(c.trace.final_word(), &BraidWord::unknot());
        assert!(strip_top_strand(TorusParams::new(4, 6)).is_err());
    }

    #[test]
    fn families() {
        check(&adjacency_ci(2, 1).unwrap(), 1);
        check(&adjacency_ci(3, 1).unwrap(), 3);
        check(&adjacency_cin(2, 1).unwrap(), 1);
        check(&adjacency_cin(3, 1).unwrap(), 3);
        assert!(adjacency_ci(1, 1).is_err());
        assert!(adjacency_cin(2, 0).is_err());
    }

    #[test]
    fn index_four() {
        for (b, cc) in [(9, 3), (11, 3), (13, 5), (15, 5)] {
            let c = adjacency_3_from_4(b).unwrap();
            check(&c, cc);
            assert!(c.ends_on_target());
        }
        for (b, cc) in [(5, 2), (7, 4), (9, 5), (11, 7)] {
            let c = adjacency_2_from_4(b).unwrap();
            check(&c, cc);
            assert!(c.ends_on_target());
        }
        assert!(adjacency_3_from_4(10).is_err());
        assert!(adjacency_3_from_4(5).is_err());
        assert!(adjacency_2_from_4(3).is_err());
    }

    #[test]
    fn delete_subword() {
        let c = delete_link_subword(&w(2, &[1, 1, 1]), &w(2, &[1, 1])).unwrap();
        check(&c, 1);
        let t34 = torus_braid(TorusParams::new(3, 4));
        let c = delete_link_subword(&t34, &full_twist(3).unwrap()).unwrap();
        check(&c, 3);
        assert_eq!(c.trace.final_word(), &t34);
        assert!(delete_link_subword(&w(2, &[1, 1, 1]), &w(2, &[1])).is_err());
    }

    #[test]
    fn catalog() {
        let v = adjacency_catalog(TorusParams::new(3, 10), TorusParams::new(4, 9)).unwrap();
        assert!(v.is_claimed());
        assert!(v.bases.contains(&CatalogBasis::FamilyCi));
        assert!(v.certificate.is_some());

        let v = adjacency_catalog(TorusParams::new(2, 7), TorusParams::new(3, 5)).unwrap();
        assert!(v.bases.contains(&CatalogBasis::TwoFromThree));

        let v = adjacency_catalog(TorusParams::new(3, 100), TorusParams::new(4, 9)).unwrap();
        assert!(!v.is_claimed());
        assert!(v.certificate.is_none());

        assert!(adjacency_catalog(TorusParams::new(2, 4), TorusParams::new(3, 5)).is_err());
    }
}

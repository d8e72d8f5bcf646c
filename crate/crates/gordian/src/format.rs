//! Line-oriented text formats for traces and certificates.
//!
//! ```text
//! trace v1
//! initial 2: 1 1 1
//! step cc 1 => 2: 1
//! step destab => 1:
//! end crossing_changes 1
//! ```
//!
//! Step tokens: `swap <pos>`, `braid up|down <pos>`, `conj <amount>`,
//! `destab`, `cc <pos>`. A certificate is a header followed by a trace:
//!
//! ```text
//! certificate v1
//! source T(3,4) 3: 2 1 2 1 2 1 2 1
//! target T(2,5) 2: 1 1 1 1 1
//! claimed_cc 1
//! verified strands=yes length=yes alexander=yes
//! trace v1
//! ...
//! ```

use std::fmt::Write as _;

use gordian_core::{
    AdjacencyCertificate, BraidWord, Direction, KnotLabel, RewriteStep, RewriteTrace, TorusParams,
    TraceEntry, Verification,
};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
}

fn malformed(line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Malformed {
        line,
        reason: reason.into(),
    }
}

pub fn step_token(step: &RewriteStep) -> String {
    match step {
        RewriteStep::DistantSwap { pos } => format!("swap {pos}"),
        RewriteStep::NeighborBraid {
            pos,
            direction: Direction::Up,
        } => format!("braid up {pos}"),
        RewriteStep::NeighborBraid {
            pos,
            direction: Direction::Down,
        } => format!("braid down {pos}"),
        RewriteStep::Conjugate { amount } => format!("conj {amount}"),
        RewriteStep::Destabilize => "destab".to_string(),
        RewriteStep::CrossingChange { pos } => format!("cc {pos}"),
    }
}

fn parse_step(text: &str, line: usize) -> Result<RewriteStep, FormatError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| malformed(line, format!("bad number {s:?}")))
    };
    Ok(match tokens.as_slice() {
        ["swap", p] => RewriteStep::DistantSwap { pos: num(p)? },
        ["braid", "up", p] => RewriteStep::NeighborBraid {
            pos: num(p)?,
            direction: Direction::Up,
        },
        ["braid", "down", p] => RewriteStep::NeighborBraid {
            pos: num(p)?,
            direction: Direction::Down,
        },
        ["conj", a] => RewriteStep::Conjugate { amount: num(a)? },
        ["destab"] => RewriteStep::Destabilize,
        ["cc", p] => RewriteStep::CrossingChange { pos: num(p)? },
        _ => return Err(malformed(line, format!("unknown step {text:?}"))),
    })
}

fn parse_word(text: &str, line: usize) -> Result<BraidWord, FormatError> {
    text.trim()
        .parse()
        .map_err(|e| malformed(line, format!("{e}")))
}

pub fn write_trace(trace: &RewriteTrace) -> String {
    let mut out = String::from("trace v1\n");
    writeln!(out, "initial {}", trace.initial()).unwrap();
    for TraceEntry { step, word } in trace.steps() {
        writeln!(out, "step {} => {}", step_token(step), word).unwrap();
    }
    writeln!(out, "end crossing_changes {}", trace.crossing_changes()).unwrap();
    out
}

/// Parses a trace starting at `lines[0]`; `first_line` is the 1-based line
/// number of `lines[0]` in the file. The trace is not replayed here.
fn parse_trace_lines(lines: &[&str], first_line: usize) -> Result<RewriteTrace, FormatError> {
    let mut it = lines
        .iter()
        .enumerate()
        .map(|(i, l)| (i + first_line, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    match it.next() {
        Some((_, "trace v1")) => {}
        Some((n, other)) => {
            return Err(malformed(
                n,
                format!("expected \"trace v1\", found {other:?}"),
            ))
        }
        None => return Err(malformed(first_line, "empty trace")),
    }
    let (n, initial) = it
        .next()
        .ok_or_else(|| malformed(first_line, "missing initial line"))?;
    let initial = parse_word(
        initial
            .strip_prefix("initial ")
            .ok_or_else(|| malformed(n, "expected \"initial <word>\""))?,
        n,
    )?;
    let mut steps = Vec::new();
    let mut recorded_cc = None;
    for (n, l) in it.by_ref() {
        if let Some(rest) = l.strip_prefix("step ") {
            let (step, word) = rest
                .split_once("=>")
                .ok_or_else(|| malformed(n, "expected \"step <rule> => <word>\""))?;
            steps.push(TraceEntry {
                step: parse_step(step, n)?,
                word: parse_word(word, n)?,
            });
        } else if let Some(rest) = l.strip_prefix("end crossing_changes ") {
            recorded_cc = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|_| malformed(n, "bad crossing-change count"))?,
            );
            break;
        } else {
            return Err(malformed(n, format!("unexpected line {l:?}")));
        }
    }
    let cc = recorded_cc.ok_or_else(|| {
        malformed(
            first_line + lines.len(),
            "missing \"end crossing_changes\" line",
        )
    })?;
    if let Some((n, l)) = it.next() {
        return Err(malformed(n, format!("trailing content {l:?}")));
    }
    Ok(RewriteTrace::from_parts(initial, steps, cc))
}

pub fn parse_trace(text: &str) -> Result<RewriteTrace, FormatError> {
    let lines: Vec<&str> = text.lines().collect();
    parse_trace_lines(&lines, 1)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verification_line(v: Option<&Verification>) -> String {
    match v {
        Some(v) => format!(
            "strands={} length={} alexander={}",
            yes_no(v.strands),
            yes_no(v.length),
            yes_no(v.alexander)
        ),
        None => "skipped".to_string(),
    }
}

fn label_text(label: &KnotLabel) -> String {
    match label.torus {
        Some(t) => format!("{t} {}", label.word),
        None => format!("- {}", label.word),
    }
}

fn parse_label(text: &str, line: usize) -> Result<KnotLabel, FormatError> {
    let (tag, word) = text
        .trim()
        .split_once(' ')
        .ok_or_else(|| malformed(line, "expected \"<label> <word>\""))?;
    let word = parse_word(word, line)?;
    let torus = if tag == "-" {
        None
    } else {
        let inner = tag
            .strip_prefix("T(")
            .and_then(|s| s.strip_suffix(')'))
            .and_then(|s| s.split_once(','))
            .ok_or_else(|| malformed(line, format!("bad torus label {tag:?}")))?;
        let p = inner
            .0
            .trim()
            .parse()
            .map_err(|_| malformed(line, "bad torus p"))?;
        let q = inner
            .1
            .trim()
            .parse()
            .map_err(|_| malformed(line, "bad torus q"))?;
        Some(TorusParams::new(p, q))
    };
    Ok(KnotLabel { word, torus })
}

/// Certificate text. `verification` is the result recorded in the header,
/// or `None` when verification was skipped.
pub fn write_certificate(
    cert: &AdjacencyCertificate,
    verification: Option<&Verification>,
) -> String {
    let mut out = String::from("certificate v1\n");
    writeln!(out, "source {}", label_text(&cert.source)).unwrap();
    writeln!(out, "target {}", label_text(&cert.target)).unwrap();
    writeln!(out, "claimed_cc {}", cert.claimed_cc).unwrap();
    writeln!(out, "verified {}", verification_line(verification)).unwrap();
    out.push_str(&write_trace(&cert.trace));
    out
}

pub fn parse_certificate(text: &str) -> Result<AdjacencyCertificate, FormatError> {
    let lines: Vec<&str> = text.lines().collect();
    let field = |i: usize, key: &str| -> Result<&str, FormatError> {
        lines
            .get(i)
            .and_then(|l| l.trim().strip_prefix(key))
            .ok_or_else(|| malformed(i + 1, format!("expected \"{}\"", key.trim())))
    };
    if lines.first().map(|l| l.trim()) != Some("certificate v1") {
        return Err(malformed(1, "expected \"certificate v1\""));
    }
    let source = parse_label(field(1, "source ")?, 2)?;
    let target = parse_label(field(2, "target ")?, 3)?;
    let claimed_cc = field(3, "claimed_cc ")?
        .trim()
        .parse()
        .map_err(|_| malformed(4, "bad claimed_cc"))?;
    field(4, "verified ")?;
    let trace = parse_trace_lines(&lines[5..], 6)?;
    Ok(AdjacencyCertificate {
        source,
        target,
        trace,
        claimed_cc,
    })
}

/// What a file holds, decided by its first line.
pub enum Document {
    Trace(RewriteTrace),
    Certificate(AdjacencyCertificate),
}

pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    match text.lines().next().map(str::trim) {
        Some("certificate v1") => parse_certificate(text).map(Document::Certificate),
        Some("trace v1") => parse_trace(text).map(Document::Trace),
        _ => Err(malformed(1, "expected \"trace v1\" or \"certificate v1\"")),
    }
}

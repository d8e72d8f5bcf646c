//! Command-line surface. [`run`] returns the exit code and captured output so
//! it can be driven in-process by tests.
//!
//! Exit codes: 0 success, 1 domain error or failed verification, 2 malformed
//! input, 3 budget exhausted.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use gordian_core::adjacency::{
    adjacency_2_from_4, adjacency_3_from_4, adjacency_catalog, adjacency_ci, adjacency_cin,
    delete_link_subword, strip_top_strand,
};
use gordian_core::enumerate::DEFAULT_BUDGET;
use gordian_core::search::{is_positive_path, positive_path_search, SearchLimits};
use gordian_core::unknot::unknot;
use gordian_core::{
    alexander, closure_info, replay, torus_braid, unknotting_number, AdjacencyCertificate,
    BraidWord, Error, TorusParams,
};

use crate::format::{
    parse_document, verification_line, write_certificate, write_trace, Document, FormatError,
};
use crate::report::{enumerate_parallel, enumeration_report};

#[derive(Parser, Debug)]
#[command(
    name = "gordian",
    version,
    about = "Positive braid rewriting, unknotting and Gordian adjacency certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Strands, length, closure permutation, components and unknotting number.
    Info { word: String },
    /// The braid word (σ_{p-1} ⋯ σ_1)^q.
    Torus { p: u32, q: u32 },
    /// Unknot a positive braid word and count crossing changes.
    Unknot {
        word: String,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Build an adjacency certificate.
    Adjacency {
        #[command(subcommand)]
        family: Family,
        /// Write the certificate to this file.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        /// Skip replay and invariant checks.
        #[arg(long, global = true)]
        no_verify: bool,
    },
    /// Look up whether T(p1,q1) ≤_g T(p2,q2) is claimed.
    Catalog {
        p1: u32,
        q1: u32,
        p2: u32,
        q2: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_verify: bool,
    },
    /// Alexander polynomial of the closure.
    Alexander { word: String },
    /// Positive braid knots with unknotting number m.
    Enumerate {
        m: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Breadth-first search for a positive path between two knot words.
    Search {
        source: String,
        target: String,
        #[arg(long, default_value_t = SearchLimits::default().depth)]
        depth: usize,
        #[arg(long, default_value_t = SearchLimits::default().nodes)]
        nodes: usize,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Replay and check a trace or certificate file.
    Verify { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// T(n+1,(n²-1)k+1) to T(n,n²k+1).
    Ci { n: u32, k: usize },
    /// T(n+1,(n²-1)k+n) to T(n,n²k+n+1).
    Cin { n: u32, k: usize },
    /// T(4,b) to T(3,·).
    T34 { b: u32 },
    /// T(4,b) to T(2,·).
    T24 { b: u32 },
    /// T(p,q) to a braid on p-1 strands.
    Strip { p: u32, q: u32 },
    /// β'w to β' for a pure braid word w.
    DeleteSubword { word: String, w: String },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("malformed file: {0}")]
    Format(#[from] FormatError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Parse(_) | Error::LetterOutOfRange { .. } | Error::NoStrands) => {
                2
            }
            CliError::Core(
                Error::WorkBudgetExceeded { .. } | Error::NotFoundWithinBudget { .. },
            ) => 3,
            CliError::Core(_) | CliError::Invalid(_) => 1,
            CliError::Format(_) | CliError::Io { .. } => 2,
            CliError::Budget(_) => 3,
        }
    }
}

/// Exit code plus everything the command printed.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    ..Outcome::default()
                }
            } else {
                Outcome {
                    code,
                    stderr: text,
                    ..Outcome::default()
                }
            };
        }
    };
    let mut out = String::new();
    match execute(cli.command, &mut out) {
        Ok(()) => Outcome {
            code: 0,
            stdout: out,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: out,
            stderr: format!("error: {e}\n"),
        },
    }
}

fn word(text: &str) -> Result<BraidWord, CliError> {
    Ok(text.parse::<BraidWord>()?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn u_text(w: &BraidWord) -> String {
    unknotting_number(w).map_or("-".to_string(), |u| u.to_string())
}

fn execute(command: Command, out: &mut String) -> Result<(), CliError> {
    match command {
        Command::Info { word: text } => {
            let w = word(&text)?;
            let info = closure_info(&w);
            let cycles: Vec<String> = info
                .cycles()
                .iter()
                .map(|c| {
                    format!(
                        "({})",
                        c.iter()
                            .map(|s| s.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    )
                })
                .collect();
            writeln!(out, "strands {}", w.strands()).unwrap();
            writeln!(out, "length {}", w.len()).unwrap();
            writeln!(out, "cycles {}", cycles.join("")).unwrap();
            writeln!(out, "components {}", info.components).unwrap();
            writeln!(out, "knot {}", if info.is_knot { "yes" } else { "no" }).unwrap();
            writeln!(out, "unknotting_number {}", u_text(&w)).unwrap();
        }
        Command::Torus { p, q } => {
            if p == 0 || q == 0 {
                return Err(
                    Error::Precondition(format!("T({p},{q}) needs positive parameters")).into(),
                );
            }
            writeln!(out, "{}", torus_braid(TorusParams::new(p, q))).unwrap();
        }
        Command::Unknot { word: text, trace } => {
            let w = word(&text)?;
            let t = unknot(&w)?;
            writeln!(out, "crossing_changes {}", t.crossing_changes()).unwrap();
            writeln!(out, "steps {}", t.len()).unwrap();
            writeln!(out, "final {}", t.final_word()).unwrap();
            if let Some(path) = trace {
                write_file(&path, &write_trace(&t))?;
                writeln!(out, "trace written {}", path.display()).unwrap();
            }
        }
        Command::Adjacency {
            family,
            out: path,
            no_verify,
        } => {
            let cert = match family {
                Family::Ci { n, k } => adjacency_ci(n, k)?,
                Family::Cin { n, k } => adjacency_cin(n, k)?,
                Family::T34 { b } => adjacency_3_from_4(b)?,
                Family::T24 { b } => adjacency_2_from_4(b)?,
                Family::Strip { p, q } => strip_top_strand(TorusParams::new(p, q))?,
                Family::DeleteSubword { word: beta, w } => {
                    delete_link_subword(&word(&beta)?, &word(&w)?)?
                }
            };
            emit_certificate(&cert, !no_verify, path.as_deref(), out)?;
        }
        Command::Catalog {
            p1,
            q1,
            p2,
            q2,
            out: path,
            no_verify,
        } => {
            let v = adjacency_catalog(TorusParams::new(p1, q1), TorusParams::new(p2, q2))?;
            writeln!(out, "lower {}", v.lower).unwrap();
            writeln!(out, "upper {}", v.upper).unwrap();
            writeln!(out, "verdict {}", v.verdict_name()).unwrap();
            for b in &v.bases {
                let kind = if b.is_predicate_only() {
                    "cited"
                } else {
                    "constructive"
                };
                writeln!(out, "basis {b} {kind}").unwrap();
            }
            match &v.certificate {
                Some(cert) => emit_certificate(cert, !no_verify, path.as_deref(), out)?,
                None => writeln!(out, "certificate none").unwrap(),
            }
        }
        Command::Alexander { word: text } => {
            writeln!(out, "{}", alexander(&word(&text)?)?).unwrap();
        }
        Command::Enumerate { m, budget, jobs } => match enumerate_parallel(m, budget, jobs) {
            Ok(e) => out.push_str(&enumeration_report(&e)),
            Err(partial) => {
                out.push_str(&enumeration_report(&partial.partial));
                return Err(CliError::Budget(partial.to_string()));
            }
        },
        Command::Search {
            source,
            target,
            depth,
            nodes,
            trace,
        } => {
            let t = positive_path_search(
                &word(&source)?,
                &word(&target)?,
                SearchLimits { depth, nodes },
            )?;
            writeln!(
                out,
                "found crossing_changes {} steps {}",
                t.crossing_changes(),
                t.len()
            )
            .unwrap();
            writeln!(
                out,
                "positive_path {}",
                if is_positive_path(&t) { "yes" } else { "no" }
            )
            .unwrap();
            match trace {
                Some(path) => {
                    write_file(&path, &write_trace(&t))?;
                    writeln!(out, "trace written {}", path.display()).unwrap();
                }
                None => out.push_str(&write_trace(&t)),
            }
        }
        Command::Verify { file } => {
            let text = std::fs::read_to_string(&file).map_err(|source| CliError::Io {
                path: file.clone(),
                source,
            })?;
            match parse_document(&text)? {
                Document::Trace(t) => {
                    let end = replay(&t)?;
                    writeln!(out, "valid trace").unwrap();
                    writeln!(out, "steps {}", t.len()).unwrap();
                    writeln!(out, "crossing_changes {}", t.crossing_changes()).unwrap();
                    writeln!(out, "final {end}").unwrap();
                }
                Document::Certificate(cert) => {
                    let v = cert.verify()?;
                    report_certificate(&cert, Some(&v), out);
                    if !v.all() {
                        return Err(CliError::Invalid("certificate does not verify".to_string()));
                    }
                    writeln!(out, "valid certificate").unwrap();
                }
            }
        }
    }
    Ok(())
}

fn report_certificate(
    cert: &AdjacencyCertificate,
    v: Option<&gordian_core::Verification>,
    out: &mut String,
) {
    writeln!(out, "source {}", cert.source).unwrap();
    writeln!(out, "target {}", cert.target).unwrap();
    let gap = match (
        unknotting_number(&cert.source.word),
        unknotting_number(&cert.target.word),
    ) {
        (Ok(a), Ok(b)) => a.checked_sub(b).map_or("-".to_string(), |g| g.to_string()),
        _ => "-".to_string(),
    };
    writeln!(out, "u_gap {gap}").unwrap();
    writeln!(out, "crossing_changes {}", cert.trace.crossing_changes()).unwrap();
    writeln!(out, "steps {}", cert.trace.len()).unwrap();
    writeln!(out, "verified {}", verification_line(v)).unwrap();
}

fn emit_certificate(
    cert: &AdjacencyCertificate,
    verify: bool,
    path: Option<&Path>,
    out: &mut String,
) -> Result<(), CliError> {
    let v = if verify { Some(cert.verify()?) } else { None };
    report_certificate(cert, v.as_ref(), out);
    if let Some(path) = path {
        write_file(path, &write_certificate(cert, v.as_ref()))?;
        writeln!(out, "certificate written {}", path.display()).unwrap();
    }
    match v {
        Some(v) if !v.all() => Err(CliError::Invalid(format!(
            "certificate failed verification: {v:?}"
        ))),
        _ => Ok(()),
    }
}

//! Enumeration report text and the multi-threaded scan behind `--jobs`.

use std::fmt::Write as _;

use gordian_core::enumerate::{
    candidate_count, class_bound, finish, scan, BudgetExhausted, Enumeration, Scan,
};

/// Splits the first `min(total, budget)` candidates into `jobs` contiguous
/// ranges, scans them on scoped threads and merges. The result does not
/// depend on `jobs`.
pub fn enumerate_parallel(
    m: u64,
    budget: u64,
    jobs: usize,
) -> Result<Enumeration, BudgetExhausted> {
    let limit = candidate_count(m).min(budget);
    let jobs = jobs.max(1) as u64;
    let chunk = limit.div_ceil(jobs).max(1);
    let merged = std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| (j * chunk).min(limit)..((j + 1) * chunk).min(limit))
            .filter(|r| !r.is_empty())
            .map(|r| s.spawn(move || scan(m, r)))
            .collect();
        let mut total = Scan::default();
        for h in handles {
            total.merge(h.join().expect("scan thread panicked"));
        }
        total
    });
    let result = finish(m, merged);
    if result.is_complete() {
        Ok(result)
    } else {
        Err(BudgetExhausted {
            budget,
            partial: result,
        })
    }
}

/// Stable, line-oriented report suitable for golden files.
pub fn enumeration_report(e: &Enumeration) -> String {
    let mut out = String::new();
    writeln!(out, "enumeration m={}", e.m).unwrap();
    writeln!(
        out,
        "status {}",
        if e.is_complete() {
            "complete"
        } else {
            "partial"
        }
    )
    .unwrap();
    writeln!(
        out,
        "candidates {} examined {} knots {}",
        e.total, e.examined, e.knots
    )
    .unwrap();
    let bound = class_bound(e.m).map_or("overflow".to_string(), |b| b.to_string());
    writeln!(out, "classes {} bound {}", e.classes.len(), bound).unwrap();
    for (i, c) in e.classes.iter().enumerate() {
        let merged = if c.merged.is_empty() {
            "-".to_string()
        } else {
            c.merged
                .iter()
                .map(|w| format!("[{w}]"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(
            out,
            "class {} | word {} | u {} | strands {} | alexander {} | merged {}",
            i + 1,
            c.representative,
            c.unknotting_number,
            c.strands(),
            c.alexander,
            merged
        )
        .unwrap();
    }
    out
}

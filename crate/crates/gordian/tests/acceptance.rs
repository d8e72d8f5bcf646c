//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the test
//! fails if any criterion fails. Run with `--nocapture` to see the table.

use std::cell::Cell;
use std::time::{Duration, Instant};

use gordian::report::enumeration_report;
use gordian_core::adjacency::{
    adjacency_2_from_4, adjacency_3_from_4, adjacency_ci, adjacency_cin, delete_link_subword,
    full_twist, strip_top_strand,
};
use gordian_core::enumerate::{class_bound, enumerate_positive_knots};
use gordian_core::search::{legal_moves, verify_positive_path};
use gordian_core::unknot::unknot;
use gordian_core::word::is_knot;
use gordian_core::{
    alexander, closure_info, replay, torus_alexander, torus_braid, AdjacencyCertificate, BraidWord,
    LaurentPoly, RewriteStep, TorusParams,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

const UNKNOT_TIME_LIMIT: Duration = Duration::from_secs(10);
const CI_TIME_LIMIT: Duration = Duration::from_secs(30);
const ORACLE_STEP_COUNT: usize = 1000;
const RULE_CASES: u32 = 10_000;
const ENUMERATION_BUDGET: u64 = 1_000_000;
const GOLDEN_M2: &str = include_str!("golden/enumerate_m2.txt");

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn coprime_pairs(lo: u32, hi: u32) -> impl Iterator<Item = TorusParams> {
    (lo..=hi)
        .flat_map(move |p| (p + 1..=hi).map(move |q| TorusParams::new(p, q)))
        .filter(|t| t.is_knot())
}

/// Replays, checks the verification triple, the crossing-change count and
/// that the claimed count is the unknotting-number gap.
fn check_certificate(cert: &AdjacencyCertificate, expected_cc: u64) -> Result<(), String> {
    let name = format!("{} -> {}", cert.source, cert.target);
    let end = replay(&cert.trace).map_err(|e| format!("{name}: {e}"))?;
    let v = cert.verify().map_err(|e| format!("{name}: {e}"))?;
    ensure(v.all(), || format!("{name}: {v:?}"))?;
    ensure(cert.trace.crossing_changes() as u64 == expected_cc, || {
        format!(
            "{name}: {} crossing changes, expected {expected_cc}",
            cert.trace.crossing_changes()
        )
    })?;
    ensure(
        alexander(&end).ok() == alexander(&cert.target.word).ok(),
        || format!("{name}: Alexander mismatch"),
    )
}

fn word_strategy(max_strands: u32, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        prop::collection::vec(1..n, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for t in coprime_pairs(2, 7) {
        let trace = unknot(&torus_braid(t)).map_err(|e| format!("{t}: {e}"))?;
        let expected = (t.p as usize - 1) * (t.q as usize - 1) / 2;
        ensure(trace.crossing_changes() == expected, || {
            format!(
                "{t}: {} crossing changes, expected {expected}",
                trace.crossing_changes()
            )
        })?;
        ensure(trace.final_word() == &BraidWord::unknot(), || {
            format!("{t}: did not end on the unknot")
        })?;
        count += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < UNKNOT_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("{count} torus knots, {elapsed:.2?}"))
}

fn family_grid(
    build: fn(u32, usize) -> gordian_core::Result<AdjacencyCertificate>,
    cin: bool,
) -> Outcome {
    let start = Instant::now();
    for n in 2..=4u32 {
        for k in 1..=2usize {
            let cert = build(n, k).map_err(|e| format!("n={n} k={k}: {e}"))?;
            let q = n * n * k as u32 + if cin { n + 1 } else { 1 };
            let target = TorusParams::new(n, q);
            ensure(cert.target.torus == Some(target), || {
                format!("n={n} k={k}: target {}", cert.target)
            })?;
            ensure(cert.trace.final_word() == &torus_braid(target), || {
                format!("n={n} k={k}: final word is not {target}")
            })?;
            check_certificate(&cert, (n * (n - 1) / 2) as u64 * k as u64)?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < CI_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("6 certificates, {elapsed:.2?}"))
}

fn criterion_4() -> Outcome {
    for b in [9u32, 11, 13, 15, 17, 19, 21, 23] {
        let k = (b / 8) as u64;
        let (a, cc) = match b % 8 {
            1 => (9 * k + 1, 3 * k),
            3 => (9 * k + 4, 3 * k),
            5 => (9 * k + 5, 3 * k + 2),
            _ => (9 * k + 8, 3 * k + 2),
        };
        let cert = adjacency_3_from_4(b).map_err(|e| format!("b={b}: {e}"))?;
        ensure(
            cert.target.torus == Some(TorusParams::new(3, a as u32)),
            || format!("b={b}: target {}", cert.target),
        )?;
        check_certificate(&cert, cc)?;
    }
    Ok("8 certificates".into())
}

fn criterion_5() -> Outcome {
    for b in [5u32, 7, 9, 11] {
        let k = (b / 4) as u64;
        let (a, cc) = if b % 4 == 1 {
            (6 * k + 3, 3 * k - 1)
        } else {
            (6 * k + 5, 3 * k + 1)
        };
        let cert = adjacency_2_from_4(b).map_err(|e| format!("b={b}: {e}"))?;
        ensure(
            cert.target.torus == Some(TorusParams::new(2, a as u32)),
            || format!("b={b}: target {}", cert.target),
        )?;
        check_certificate(&cert, cc)?;
    }
    Ok("4 certificates".into())
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for t in coprime_pairs(2, 12) {
        let cert = strip_top_strand(t).map_err(|e| format!("{t}: {e}"))?;
        check_certificate(&cert, (t.q / t.p) as u64)?;
        ensure(cert.trace.final_word().strands() == t.p - 1, || {
            format!("{t}: wrong strand count")
        })?;
        count += 1;
    }
    Ok(format!("{count} pairs"))
}

fn criterion_7() -> Outcome {
    let mut count = 0;
    for n in 2..=4u32 {
        for q in (n + 1..=n + 6).filter(|&q| TorusParams::new(n, q).is_knot()) {
            let base = torus_braid(TorusParams::new(n, q));
            let cert = delete_link_subword(&base, &full_twist(n).unwrap())
                .map_err(|e| format!("n={n} q={q}: {e}"))?;
            check_certificate(&cert, (n * (n - 1) / 2) as u64)?;
            let end = cert.trace.final_word();
            ensure(
                end.strands() == base.strands()
                    && end.len() == base.len()
                    && alexander(end).ok() == alexander(&base).ok(),
                || format!("n={n} q={q}: invariants changed"),
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} deletions"))
}

fn criterion_8() -> Outcome {
    for p in 2..=5u32 {
        for q in (1..=9u32).filter(|&q| TorusParams::new(p, q).is_knot()) {
            let t = TorusParams::new(p, q);
            ensure(
                alexander(&torus_braid(t)).ok() == torus_alexander(t).ok(),
                || format!("{t}: Burau != closed form"),
            )?;
        }
    }
    let steps = Cell::new(0usize);
    let strategy = (
        word_strategy(5, 12).prop_filter("knot", is_knot),
        prop::collection::vec(any::<prop::sample::Index>(), 1..=4),
    );
    let mut r = runner((ORACLE_STEP_COUNT / 2) as u32);
    let result = r.run(&strategy, |(w, picks)| {
        let before: LaurentPoly = alexander(&w).unwrap();
        let mut cur = w;
        for pick in picks {
            let moves: Vec<_> = legal_moves(&cur)
                .into_iter()
                .filter(|m| !matches!(m, RewriteStep::CrossingChange { .. }))
                .collect();
            if moves.is_empty() {
                break;
            }
            cur = moves[pick.index(moves.len())].apply(&cur).unwrap();
            steps.set(steps.get() + 1);
            prop_assert_eq!(&alexander(&cur).unwrap(), &before);
        }
        Ok(())
    });
    result.map_err(|e| format!("{e}"))?;
    let steps = steps.get();
    ensure(steps >= ORACLE_STEP_COUNT, || {
        format!("only {steps} random steps taken")
    })?;
    Ok(format!("closed form grid + {steps} random steps"))
}

fn criterion_9() -> Outcome {
    let strategy = (word_strategy(6, 14), any::<prop::sample::Index>());
    let applied = Cell::new(0u32);
    runner(RULE_CASES)
        .run(&strategy, |(w, pick)| {
            let moves = legal_moves(&w);
            if moves.is_empty() {
                return Ok(());
            }
            let step = moves[pick.index(moves.len())];
            let next = step.apply(&w).unwrap();
            applied.set(applied.get() + 1);
            prop_assert_eq!(closure_info(&next).components, closure_info(&w).components);
            let (dl, dn) = match step {
                RewriteStep::Destabilize => (1, 1),
                RewriteStep::CrossingChange { .. } => (2, 0),
                _ => (0, 0),
            };
            prop_assert_eq!(next.len() + dl, w.len(), "length accounting for {:?}", step);
            prop_assert_eq!(
                next.strands() + dn,
                w.strands(),
                "strand accounting for {:?}",
                step
            );
            Ok(())
        })
        .map_err(|e| format!("{e}"))?;
    Ok(format!(
        "{RULE_CASES} cases, {} with a legal step",
        applied.get()
    ))
}

fn criterion_10() -> Outcome {
    let e0 = enumerate_positive_knots(0, ENUMERATION_BUDGET).map_err(|e| e.to_string())?;
    ensure(
        e0.classes.len() == 1 && e0.classes[0].representative == BraidWord::unknot(),
        || "m=0 is not {unknot}".into(),
    )?;

    // Brute force for m = 1: every knot word of length n + 1 on n ≤ 3 strands.
    let trefoil = torus_braid(TorusParams::new(2, 3));
    let trefoil_poly = alexander(&trefoil).unwrap();
    let mut brute = 0;
    for (n, len) in [(2u32, 3usize), (3, 4)] {
        let radix = n as usize - 1;
        for index in 0..radix.pow(len as u32) {
            let letters: Vec<u32> = (0..len)
                .map(|i| (index / radix.pow(i as u32) % radix) as u32 + 1)
                .collect();
            let w = BraidWord::new(n, letters).unwrap();
            if is_knot(&w) {
                brute += 1;
                ensure(alexander(&w).unwrap() == trefoil_poly, || {
                    format!("{w} is a knot but not a trefoil")
                })?;
            }
        }
    }
    let e1 = enumerate_positive_knots(1, ENUMERATION_BUDGET).map_err(|e| e.to_string())?;
    ensure(
        e1.classes.len() == 1 && e1.classes[0].representative == trefoil,
        || "m=1 is not {T(2,3)}".into(),
    )?;

    let e2 = enumerate_positive_knots(2, ENUMERATION_BUDGET).map_err(|e| e.to_string())?;
    ensure(enumeration_report(&e2) == GOLDEN_M2, || {
        "m=2 report differs from the golden file".into()
    })?;
    for e in [&e0, &e1, &e2] {
        let bound = class_bound(e.m).unwrap();
        ensure(e.classes.len() as u128 <= bound, || {
            format!("m={}: {} classes > {bound}", e.m, e.classes.len())
        })?;
    }
    Ok(format!(
        "classes 1/1/{} ({brute} brute-force trefoil words)",
        e2.classes.len()
    ))
}

fn criterion_11() -> Outcome {
    for t in coprime_pairs(2, 7) {
        let trace = unknot(&torus_braid(t)).map_err(|e| e.to_string())?;
        verify_positive_path(&trace).map_err(|v| format!("{t}: step {}: {}", v.index, v.reason))?;
    }
    runner(500)
        .run(&word_strategy(5, 14).prop_filter("knot", is_knot), |w| {
            let trace = unknot(&w).unwrap();
            prop_assert!(verify_positive_path(&trace).is_ok(), "{}", w);
            prop_assert_eq!(
                trace.crossing_changes() as u64,
                gordian_core::unknotting_number(&w).unwrap()
            );
            Ok(())
        })
        .map_err(|e| format!("{e}"))?;
    Ok("torus grid + 500 random knot words".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("unknotting-count exactness", criterion_1),
        ("ci family", || family_grid(adjacency_ci, false)),
        ("cin family", || family_grid(adjacency_cin, true)),
        ("T(3,.) from T(4,.)", criterion_4),
        ("T(2,.) from T(4,.)", criterion_5),
        ("strip top strand", criterion_6),
        ("delete pure subword", criterion_7),
        ("oracle soundness", criterion_8),
        ("rule-calculus properties", criterion_9),
        ("enumeration", criterion_10),
        ("positive paths", criterion_11),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}

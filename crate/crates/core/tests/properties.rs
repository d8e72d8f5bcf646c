use gordian_core::isotopy::{braid_equal, rewrite_moves};
use gordian_core::search::{is_positive_path, legal_moves};
use gordian_core::unknot::{reduce_subword, unknot};
use gordian_core::word::is_knot;
use gordian_core::{
    alexander, closure_info, replay, unknotting_number, BraidWord, LaurentPoly, RewriteStep,
    RewriteTrace,
};
use proptest::prelude::*;

fn word(max_strands: u32, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        prop::collection::vec(1..n, 0..=max_len)
            .prop_map(move |letters| BraidWord::new(n, letters).unwrap())
    })
}

fn knot_word(max_strands: u32, max_len: usize) -> impl Strategy<Value = BraidWord> {
    word(max_strands, max_len).prop_filter("closure is a knot", is_knot)
}

fn shape_change(step: &RewriteStep) -> (usize, u32) {
    match step {
        RewriteStep::Destabilize => (1, 1),
        RewriteStep::CrossingChange { .. } => (2, 0),
        _ => (0, 0),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn legal_steps_keep_components_and_shape(w in word(5, 12), pick in any::<prop::sample::Index>()) {
        let moves = legal_moves(&w);
        prop_assume!(!moves.is_empty());
        let step = moves[pick.index(moves.len())];
        let next = step.apply(&w).unwrap();
        prop_assert_eq!(closure_info(&next).components, closure_info(&w).components);
        let (dl, dn) = shape_change(&step);
        prop_assert_eq!(next.len() + dl, w.len());
        prop_assert_eq!(next.strands() + dn, w.strands());
    }

    #[test]
    fn isotopy_steps_keep_alexander(w in knot_word(4, 10), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..8)) {
        let before = alexander(&w).unwrap();
        let mut cur = w;
        for pick in picks {
            let moves: Vec<_> = legal_moves(&cur).into_iter().filter(|m| !matches!(m, RewriteStep::CrossingChange { .. })).collect();
            if moves.is_empty() { break; }
            cur = moves[pick.index(moves.len())].apply(&cur).unwrap();
        }
        prop_assert_eq!(alexander(&cur).unwrap(), before);
    }

    #[test]
    fn rewrite_moves_reach_equal_words(w in word(4, 10), picks in prop::collection::vec(any::<prop::sample::Index>(), 0..10)) {
        let mut cur = w.clone();
        for pick in picks {
            let moves: Vec<_> = legal_moves(&cur)
                .into_iter()
                .filter(|m| matches!(m, RewriteStep::DistantSwap { .. } | RewriteStep::NeighborBraid { .. }))
                .collect();
            if moves.is_empty() { break; }
            cur = moves[pick.index(moves.len())].apply(&cur).unwrap();
        }
        prop_assert!(braid_equal(w.letters(), cur.letters()));
        let mut trace = RewriteTrace::new(w.clone());
        for m in rewrite_moves(w.letters(), 0, cur.letters()).unwrap() {
            trace.push(m).unwrap();
        }
        prop_assert_eq!(trace.final_word(), &cur);
    }

    #[test]
    fn unknotting_uses_u_crossing_changes(w in knot_word(5, 14)) {
        let trace = unknot(&w).unwrap();
        prop_assert_eq!(trace.crossing_changes() as u64, unknotting_number(&w).unwrap());
        prop_assert_eq!(trace.final_word(), &BraidWord::unknot());
        prop_assert_eq!(replay(&trace).unwrap(), BraidWord::unknot());
        prop_assert!(is_positive_path(&trace));
    }

    #[test]
    fn unknotting_a_link_ends_on_its_components(w in word(5, 12)) {
        let trace = unknot(&w).unwrap();
        let end = trace.final_word();
        prop_assert!(end.is_empty());
        prop_assert_eq!(end.strands() as usize, closure_info(&w).components);
    }

    #[test]
    fn region_reduction_leaves_one_top_letter(w in word(5, 14), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (mut s, mut e) = (a.index(w.len() + 1), b.index(w.len() + 1));
        if s > e { core::mem::swap(&mut s, &mut e); }
        let n = w.letters()[s..e].iter().copied().max().unwrap_or(1);
        let trace = reduce_subword(&w, s..e, n).unwrap();
        let out = trace.final_word();
        prop_assert_eq!(out.strands(), w.strands());
        prop_assert_eq!(&out.letters()[..s], &w.letters()[..s]);
        let new_end = e - 2 * trace.crossing_changes();
        prop_assert_eq!(&out.letters()[new_end..], &w.letters()[e..]);
        prop_assert!(out.letters()[s..new_end].iter().filter(|&&l| l == n).count() <= 1);
    }

    #[test]
    fn isotopy_only_traces_reverse(w in word(4, 10), picks in prop::collection::vec(any::<prop::sample::Index>(), 0..10)) {
        let mut trace = RewriteTrace::new(w.clone());
        for pick in picks {
            let moves: Vec<_> = legal_moves(trace.final_word()).into_iter().filter(|m| !matches!(m, RewriteStep::CrossingChange { .. } | RewriteStep::Destabilize)).collect();
            if moves.is_empty() { break; }
            trace.push(moves[pick.index(moves.len())]).unwrap();
        }
        let back = trace.reversed().unwrap();
        prop_assert_eq!(replay(&back).unwrap(), w);
    }

    #[test]
    fn text_round_trip(w in word(6, 12)) {
        prop_assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
    }

    #[test]
    fn alexander_is_palindromic_and_normalized(w in knot_word(4, 10)) {
        let p = alexander(&w).unwrap();
        prop_assert!(p.is_palindromic());
        prop_assert_eq!(p.min_exponent(), Some(0));
        prop_assert_eq!(p.normalized(), p);
    }

    #[test]
    fn laurent_ring_laws(a in prop::collection::vec(-5i64..5, 0..5), b in prop::collection::vec(-5i64..5, 0..5), c in prop::collection::vec(-5i64..5, 0..5)) {
        let (a, b, c) = (LaurentPoly::from_coefficients(&a), LaurentPoly::from_coefficients(&b), LaurentPoly::from_coefficients(&c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }
}

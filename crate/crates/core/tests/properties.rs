use proptest::prelude::*;

use tspread::betti::corner_sequence;
use tspread::borel::{borel_shadow_contains, is_strongly_stable};
use tspread::enumeration::{card_a, decompose_by_min, enumerate_a, enumerate_m, rank_in_a};
use tspread::solver::{solve, validate_spec};
use tspread::{Ambient, CornerSpec, TIdeal, TMonomial, TMonomialSet, Verdict};

/// A random t-spread strongly stable ideal, given by Borel generators.
/// Generators of higher degree are given smaller offsets, so that a fair
/// share of the ideals has several corners.
fn random_ideal() -> impl Strategy<Value = TIdeal> {
    (1usize..=3, 0usize..=3)
        .prop_flat_map(|(t, extra)| {
            let n = 3 * t + 4 + extra;
            let pick = (any::<prop::sample::Index>(), any::<prop::sample::Index>());
            (Just(Ambient::new(n, t).unwrap()), proptest::collection::vec(pick, 1..=3))
        })
        .prop_map(|(amb, picks)| {
            // One generator in each degree from 2 on; lower degrees get the
            // larger offsets k = max - t(d-1) - 1.
            let mut offsets: Vec<usize> = picks.iter().map(|p| p.0.index(amb.n() - amb.t())).collect();
            offsets.sort_unstable_by(|a, b| b.cmp(a));
            let gens: Vec<TMonomial> = picks
                .into_iter()
                .zip(offsets)
                .enumerate()
                .filter_map(|(j, ((_, idx), k))| {
                    let d = j + 2;
                    let max = k + amb.t() * (d - 1) + 1;
                    if max > amb.n() {
                        return None;
                    }
                    let all: Vec<TMonomial> =
                        enumerate_m(max, d, amb.t()).filter(|u| u.max_index() == max).collect();
                    // Slex-large in the lowest degree, slex-small above it, so
                    // that later generators tend to escape the earlier ones.
                    let near = idx.index(all.len().min(4));
                    Some(all[if j == 0 { near } else { all.len() - 1 - near }].clone())
                })
                .collect();
            TIdeal::from_borel_generators(amb, gens).unwrap()
        })
}

fn spec_of(ideal: &TIdeal) -> CornerSpec {
    let amb = ideal.ambient();
    let data = corner_sequence(ideal);
    CornerSpec::new(
        amb.n(),
        amb.t(),
        data.corners.iter().zip(&data.values).map(|(&(k, l), &a)| (k, l, a)),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn realized_corners_are_solved_and_round_trip(ideal in random_ideal()) {
        let spec = spec_of(&ideal);
        prop_assume!(validate_spec(&spec).is_empty());
        let report = solve(&spec).unwrap();
        prop_assert_eq!(report.verdict, Verdict::Feasible);
        let built = report.ideal.as_ref().unwrap();
        prop_assert_eq!(spec_of(built), spec.clone());

        let amb = *built.ambient();
        for (deg, comp) in built.components(amb.n()) {
            prop_assert!(is_strongly_stable(&comp), "component {} not stable", deg);
        }
        // The generators placed at each corner are the a_i consecutive
        // elements of A^t(k_i,l_i) starting at u_{i,1}, and none of them is
        // in the Borel shadow of the generators placed at earlier corners.
        let mut placed: Vec<(usize, TMonomialSet)> = Vec::new();
        for (c, audit) in spec.corners.iter().zip(&report.corners) {
            let top = amb.corner_max(c.k, c.l);
            let here = built.generators_in_degree(c.l).unwrap().with_max_equal(top);
            prop_assert_eq!(here.len() as u128, c.a);
            let start = rank_in_a(audit.u_first.as_ref().unwrap(), c.k, c.l, &amb).unwrap();
            let expected: Vec<TMonomial> = enumerate_a(c.k, c.l, &amb)
                .unwrap()
                .filter(|u| {
                    let r = rank_in_a(u, c.k, c.l, &amb).unwrap();
                    r >= start && r < start + c.a
                })
                .collect();
            let mut got = here.to_vec();
            got.sort();
            let mut expected = expected;
            expected.sort();
            prop_assert_eq!(got, expected);
            for (_, earlier) in &placed {
                for u in here.iter() {
                    prop_assert!(!borel_shadow_contains(earlier, u, c.k, c.l).unwrap());
                }
            }
            placed.push((c.l, here));
        }
    }

    #[test]
    fn raising_a_failing_value_stays_infeasible(ideal in random_ideal(), bump in 1u128..5) {
        let mut spec = spec_of(&ideal);
        prop_assume!(validate_spec(&spec).is_empty());
        let last = spec.corners.len() - 1;
        let bound = solve(&spec).unwrap().corners[last].n.unwrap();
        spec.corners[last].a = bound + bump;
        let report = solve(&spec).unwrap();
        prop_assert_eq!(report.verdict, Verdict::Infeasible);
        let failing = report.failure.unwrap().corner - 1;
        spec.corners[failing].a += bump;
        prop_assert_eq!(solve(&spec).unwrap().verdict, Verdict::Infeasible);
    }

    #[test]
    fn decomposition_by_minimum_sums_to_card(k in 0usize..=40, l in 2usize..=40) {
        let parts: u128 = decompose_by_min(k, l).unwrap().iter().map(|p| p.1).sum();
        prop_assert_eq!(parts, card_a(k, l).unwrap());
    }

    #[test]
    fn card_a_does_not_depend_on_t(k in 0usize..=6, l in 1usize..=5, t in 1usize..=4) {
        let amb = Ambient::new(k + t * (l - 1) + 1, t).unwrap();
        let count = enumerate_a(k, l, &amb).unwrap().count() as u128;
        prop_assert_eq!(count, card_a(k, l).unwrap());
    }
}

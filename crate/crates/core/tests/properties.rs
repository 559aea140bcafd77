//! Cross-module invariants, each checked against an independent
//! brute-force route where one exists: a full-box verifier for the
//! enumerator, exhaustive coloring scans for the backtracker, and direct
//! substitution for the shift pipeline.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use rado_core::algebra::{
    check_solution, forbidden_ratio_solution, forbidden_ratios, normalize, rado_regular,
    zero_sum_subset, Equation, Rational, SolutionTuple,
};
use rado_core::coloring::{
    enumerate_solutions, permute_colors, rado_radius, search_coloring, search_coloring_opts,
    verify_coloring, Coloring, RadiusOutcome, SearchOpts, VerifyOutcome,
};
use rado_core::linkage::{linkage_search, max_linkage, pigeonhole_walk};
use rado_core::strong::{strong_solve, ClassView, InequalitySystem};

fn nonzero_coeff() -> impl Strategy<Value = i64> {
    (1i64..=5).prop_flat_map(|m| prop_oneof![Just(m), Just(-m)])
}

fn equation(max_arity: usize) -> impl Strategy<Value = Equation> {
    prop::collection::vec(nonzero_coeff(), 2..=max_arity)
        .prop_map(|v| Equation::from_coeffs(v).unwrap())
}

fn coloring(max_n: usize, max_r: u32) -> impl Strategy<Value = Coloring> {
    (1..=max_r).prop_flat_map(move |r| {
        prop::collection::vec(1..=r, 1..=max_n)
            .prop_map(move |colors| Coloring::new(r, colors).unwrap())
    })
}

/// Full n-fold box scan, no solved last variable: the independent route
/// for both the enumerator and the verifier.
fn brute_first_monochromatic(
    eq: &Equation,
    col: &Coloring,
    ineqs: &[Vec<BigInt>],
) -> Option<Vec<usize>> {
    let n = eq.arity();
    let bound = col.n();
    let mut tuple = vec![1usize; n];
    loop {
        let sum: BigInt = eq
            .coeffs()
            .iter()
            .zip(&tuple)
            .map(|(a, &x)| a * BigInt::from(x))
            .sum();
        if sum.is_zero() {
            let ineq_ok = ineqs.iter().all(|row| {
                let dot: BigInt = row
                    .iter()
                    .zip(&tuple)
                    .map(|(a, &x)| a * BigInt::from(x))
                    .sum();
                !dot.is_zero()
            });
            let mono = tuple.iter().all(|&x| col.color(x) == col.color(tuple[0]));
            if ineq_ok && mono {
                return Some(tuple);
            }
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] <= bound {
                break;
            }
            tuple[pos] = 1;
        }
    }
}

/// Exhaustive scan of all r^(N-1) colorings with color(1) = 1; returns the
/// lexicographically least valid one.
fn exhaustive_least_valid(
    eq: &Equation,
    r: u32,
    n: usize,
    ineqs: &[Vec<BigInt>],
) -> Option<Coloring> {
    let mut colors = vec![1u32; n];
    loop {
        let col = Coloring::new(r, colors.clone()).unwrap();
        if verify_coloring(eq, &col, ineqs).is_valid() {
            return Some(col);
        }
        let mut pos = n;
        loop {
            if pos <= 1 {
                return None;
            }
            pos -= 1;
            colors[pos] += 1;
            if colors[pos] <= r {
                break;
            }
            colors[pos] = 1;
        }
    }
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

proptest! {
    #[test]
    fn normalize_idempotent_and_scale_invariant(
        coeffs in prop::collection::vec(nonzero_coeff(), 2..=5),
        num in nonzero_coeff(),
        den in 1i64..=7,
    ) {
        let raw: Vec<Rational> = coeffs
            .iter()
            .map(|&v| Rational::from_integer(BigInt::from(v)))
            .collect();
        let e = normalize(&raw).unwrap();
        let again = normalize(
            &e.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect::<Vec<_>>(),
        )
        .unwrap();
        prop_assert_eq!(&e, &again);

        let q = Rational::new(BigInt::from(num), BigInt::from(den));
        let scaled: Vec<Rational> = raw.iter().map(|v| v * &q).collect();
        let e2 = normalize(&scaled).unwrap();
        prop_assert_eq!(&e, &e2);
        prop_assert_eq!(rado_regular(&e), rado_regular(&e2));
        prop_assert_eq!(forbidden_ratios(&e), forbidden_ratios(&e2));
    }

    #[test]
    fn rado_condition_agrees_with_subset_scan(e in equation(5)) {
        prop_assert_eq!(rado_regular(&e), zero_sum_subset(&e).is_some());
    }

    #[test]
    fn ratio_solutions_solve_the_equation(e in equation(4), k in 1i64..=3) {
        for (idx, s) in forbidden_ratios(&e).iter().enumerate() {
            if !s.is_positive() {
                continue;
            }
            // y = k * denominator makes S_l * y integral.
            let y = s.denom() * BigInt::from(k);
            let t = forbidden_ratio_solution(&e, idx + 1, &y).unwrap();
            prop_assert!(check_solution(&e, &t).unwrap());
        }
    }

    #[test]
    fn dilation_preserves_solutions(e in equation(3), t in 1i64..=4) {
        for sol in enumerate_solutions(&e, 10, &[]) {
            let scaled = sol.scale(&BigInt::from(t)).unwrap();
            prop_assert!(check_solution(&e, &scaled).unwrap());
        }
    }

    #[test]
    fn verifier_matches_full_box_scan(e in equation(3), col in coloring(9, 3)) {
        let brute = brute_first_monochromatic(&e, &col, &[]);
        match verify_coloring(&e, &col, &[]) {
            VerifyOutcome::Valid => prop_assert!(brute.is_none()),
            VerifyOutcome::Counterexample { tuple, color } => {
                let got: Vec<usize> = tuple
                    .values()
                    .iter()
                    .map(|v| v.to_string().parse().unwrap())
                    .collect();
                prop_assert_eq!(Some(got.clone()), brute);
                prop_assert!(got.iter().all(|&x| col.color(x) == color));
            }
        }
    }

    #[test]
    fn verify_invariant_under_color_permutation(
        e in equation(3),
        col in coloring(9, 3),
        seed in any::<u64>(),
    ) {
        // Rotate the palette by a seed-derived shift.
        let r = col.r();
        let shift = (seed % r as u64) as u32;
        let perm: Vec<u32> = (1..=r).map(|c| (c - 1 + shift) % r + 1).collect();
        let permuted = permute_colors(&col, &perm).unwrap();
        prop_assert_eq!(
            verify_coloring(&e, &col, &[]).is_valid(),
            verify_coloring(&e, &permuted, &[]).is_valid()
        );
    }

    #[test]
    fn search_sound_complete_and_least(e in equation(3), r in 1u32..=2, n in 1usize..=8) {
        let expected = exhaustive_least_valid(&e, r, n, &[]);
        let got = search_coloring(&e, r, n, &[]);
        prop_assert_eq!(&got, &expected);
        if let Some(col) = got {
            prop_assert!(verify_coloring(&e, &col, &[]).is_valid());
        }
    }

    #[test]
    fn pruning_only_changes_speed(e in equation(3), r in 1u32..=3, n in 1usize..=10) {
        let pruned = search_coloring_opts(&e, r, n, &[], &SearchOpts { threads: 1, ratio_pruning: true });
        let plain = search_coloring_opts(&e, r, n, &[], &SearchOpts { threads: 1, ratio_pruning: false });
        prop_assert_eq!(pruned, plain);
    }

    #[test]
    fn product_classes_refine_the_coloring(col in coloring(20, 3), window in 1usize..=3) {
        let classes = rado_core::strong::product_coloring(&col, window);
        let domain = classes.domain_len();
        prop_assert_eq!(domain, col.n() / window);
        for a in 1..=domain {
            for b in 1..=domain {
                if classes.same_class(a, b) {
                    for i in 1..=window {
                        prop_assert_eq!(col.color(a * i), col.color(b * i));
                    }
                }
            }
        }
        if window == 1 {
            for a in 1..=domain {
                prop_assert_eq!(classes.class(a), &[col.color(a)]);
            }
        }
    }

    #[test]
    fn monochromatic_aps_reverify(col in coloring(24, 3), len in 1usize..=4) {
        use rado_core::strong::find_monochromatic_ap;
        if let Some((a, d)) = find_monochromatic_ap(&col, len) {
            prop_assert!(d >= 1);
            for t in 0..len {
                prop_assert!(a + t * d <= col.n());
                prop_assert!(col.color(a + t * d) == col.color(a));
            }
        }
    }
}

#[test]
fn radius_boundary_matches_fixed_length_searches() {
    let cases: [&[i64]; 4] = [&[1, 1, -1], &[1, 1, -3], &[1, -2, 1], &[2, -3, 1]];
    for coeffs in cases {
        let e = Equation::from_coeffs(coeffs.iter().copied()).unwrap();
        match rado_radius(&e, 2, 12, &[]) {
            RadiusOutcome::Radius { radius, witness } => {
                assert!(
                    search_coloring(&e, 2, radius, &[]).is_none(),
                    "{e} at {radius}"
                );
                if radius >= 2 {
                    let at_prev = search_coloring(&e, 2, radius - 1, &[]).unwrap();
                    assert_eq!(at_prev, witness, "{e}: witness is the least coloring");
                }
            }
            RadiusOutcome::Unknown { cap, witness } => {
                assert_eq!(witness.n(), cap);
                assert!(verify_coloring(&e, &witness, &[]).is_valid());
            }
        }
    }
}

#[test]
fn strong_solve_sound_and_complete_at_small_scale() {
    let mut state = 0x5eed_0001u64;
    let pool: Vec<Equation> = [&[1i64, 1, -1][..], &[1, -2, 1], &[1, 2, -3], &[2, -3, 1]]
        .iter()
        .map(|c| Equation::from_coeffs(c.iter().copied()).unwrap())
        .collect();
    let systems = [
        InequalitySystem::empty(),
        InequalitySystem::new(vec![vec![
            BigInt::from(1),
            BigInt::from(-1),
            BigInt::from(0),
        ]]),
        InequalitySystem::distinct_pairs(3),
    ];
    for trial in 0..120 {
        let e = &pool[(splitmix(&mut state) % pool.len() as u64) as usize];
        let n = 6 + (splitmix(&mut state) % 25) as usize;
        let r = 1 + (splitmix(&mut state) % 3) as u32;
        let colors: Vec<u32> = (0..n)
            .map(|_| 1 + (splitmix(&mut state) % r as u64) as u32)
            .collect();
        let col = Coloring::new(r, colors).unwrap();
        let sys = &systems[(splitmix(&mut state) % systems.len() as u64) as usize];
        let got = strong_solve(e, sys, &col).unwrap();
        let brute = brute_first_monochromatic(e, &col, sys.rows());
        match got {
            Some(tuple) => {
                assert!(check_solution(e, &tuple).unwrap(), "trial {trial}");
                for row in sys.rows() {
                    let dot: BigInt = row.iter().zip(tuple.values()).map(|(a, x)| a * x).sum();
                    assert!(!dot.is_zero(), "trial {trial}: inequality violated");
                }
                let positions: Vec<usize> = tuple
                    .values()
                    .iter()
                    .map(|v| v.to_string().parse().unwrap())
                    .collect();
                let c = col.color(positions[0]);
                assert!(
                    positions.iter().all(|&p| col.color(p) == c),
                    "trial {trial}"
                );
                assert!(
                    brute.is_some(),
                    "trial {trial}: solver found one, scan must too"
                );
            }
            None => assert!(brute.is_none(), "trial {trial}: solver missed {brute:?}"),
        }
    }
}

#[test]
fn walk_emits_monochromatic_solutions_for_random_colorings() {
    let mut state = 0xabcdef12u64;
    let pool: Vec<Equation> = (2..=5)
        .map(|n| rado_core::algebra::at_family(n).unwrap())
        .chain([Equation::from_coeffs([1, 1, -1]).unwrap()])
        .collect();
    for trial in 0..80 {
        let e = &pool[(splitmix(&mut state) % pool.len() as u64) as usize];
        let best = max_linkage(e, 5).max(1);
        let m = 1 + (splitmix(&mut state) % best as u64) as usize;
        let mat = linkage_search(e, m).expect("pool members have linkage rows");
        let x = mat.integrality_base() * BigInt::from(1 + splitmix(&mut state) % 7);
        let mut colors = std::collections::BTreeMap::new();
        colors.insert(x.clone(), 1 + (splitmix(&mut state) % m as u64) as u32);
        for j in 1..=m {
            let v =
                (&mat.entry(1, j).unwrap().ratio * Rational::from_integer(x.clone())).to_integer();
            colors.insert(v, 1 + (splitmix(&mut state) % m as u64) as u32);
        }
        let res = pigeonhole_walk(e, &mat, &colors, &x).expect("walk must land");
        assert_eq!(colors[&res.pair.0], colors[&res.pair.1], "trial {trial}");
        assert!(check_solution(e, &res.solution).unwrap(), "trial {trial}");
        for v in res.solution.values() {
            assert_eq!(
                colors[v], res.color,
                "trial {trial}: solution not monochromatic"
            );
        }
    }
}

#[test]
fn walk_values_upper_bound_search_scale() {
    // Keep the SolutionTuple type honest: entries from the walk are the
    // colored walk values themselves.
    let e = rado_core::algebra::at_family(3).unwrap();
    let mat = linkage_search(&e, 2).unwrap();
    let x = mat.integrality_base();
    let mut colors = std::collections::BTreeMap::new();
    let values: Vec<BigInt> = std::iter::once(x.clone())
        .chain((1..=2).map(|j| {
            (&mat.entry(1, j).unwrap().ratio * Rational::from_integer(x.clone())).to_integer()
        }))
        .collect();
    for (i, v) in values.iter().enumerate() {
        colors.insert(v.clone(), (i % 2 + 1) as u32);
    }
    let res = pigeonhole_walk(&e, &mat, &colors, &x).unwrap();
    for v in res.solution.values() {
        assert!(values.contains(v));
    }
    let _ = SolutionTuple::new(values).unwrap();
}

//! Property tests for the algebraic invariants: ring axioms on the Laurent
//! layer, degree additivity, mirror duality, backend agreement on random
//! braid words, fit/eval round trips, and monotonicity of the
//! boundary-slope transform.

use std::collections::BTreeMap;

use proptest::prelude::*;

use cabled_jones::bracket::{colored_jones, BraidWord, Diagram, EvalBudget};
use cabled_jones::cabling::{cable_boundary_slopes, CableParams};
use cabled_jones::laurent::{rat, ratio, QLaurent, Rat};
use cabled_jones::quasipoly::{fit, QuasiPoly, ResidueCoeffs, SlopeSet};

/// Whether the crossings of the closed-up word form one connected cluster.
fn crossings_connected(letters: &[i32]) -> bool {
    let mut touched: Vec<usize> = letters.iter().map(|l| l.unsigned_abs() as usize).collect();
    touched.sort_unstable();
    touched.dedup();
    // Generators i and i+1 share a strand; a gap splits the diagram.
    touched.windows(2).all(|w| w[1] - w[0] <= 1)
}

fn small_poly() -> impl Strategy<Value = QLaurent> {
    proptest::collection::vec((-30i64..30, -9i64..9), 0..6)
        .prop_map(QLaurent::from_terms)
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-24i64..24, 1i64..4).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in small_poly(), g in small_poly(), h in small_poly()) {
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.add(&f.negate()), QLaurent::zero());
    }

    #[test]
    fn degrees_add_under_multiplication(f in small_poly(), g in small_poly()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (fmax, fmin) = f.degrees().unwrap();
        let (gmax, gmin) = g.degrees().unwrap();
        let (pmax, pmin) = f.mul(&g).degrees().unwrap();
        prop_assert_eq!(pmax, fmax + gmax);
        prop_assert_eq!(pmin, fmin + gmin);
    }

    #[test]
    fn mirror_is_a_ring_involution(f in small_poly(), g in small_poly()) {
        prop_assert_eq!(f.mirror().mirror(), f.clone());
        prop_assert_eq!(f.add(&g).mirror(), f.mirror().add(&g.mirror()));
        prop_assert_eq!(f.mul(&g).mirror(), f.mirror().mul(&g.mirror()));
    }

    #[test]
    fn fit_recovers_small_models(
        coeffs in proptest::collection::vec((small_rat(), small_rat(), small_rat()), 1..4),
    ) {
        let qp = QuasiPoly::new(
            1,
            coeffs
                .into_iter()
                .map(|(a, b, d)| ResidueCoeffs::new(a, b, d))
                .collect(),
        );
        let hi = 6 * qp.period() as i64 + 2;
        let samples: BTreeMap<i64, Rat> =
            (1..=hi).map(|n| (n, qp.eval(n).unwrap())).collect();
        let fitted = fit(&samples, 4).unwrap();
        prop_assert_eq!(fitted, qp);
    }

    #[test]
    fn boundary_slope_transform_is_monotone(
        xs in proptest::collection::btree_set((-20i64..20, 1i64..5), 0..6),
        ys in proptest::collection::btree_set((-20i64..20, 1i64..5), 0..6),
        p in -9i64..9,
    ) {
        prop_assume!(p % 2 != 0);
        let params = CableParams::new(p, 2).unwrap();
        let to_set = |v: &std::collections::BTreeSet<(i64, i64)>| -> SlopeSet {
            v.iter().map(|&(n, d)| ratio(n, d).into()).collect()
        };
        let a = to_set(&xs);
        let b = to_set(&ys);
        let union: SlopeSet = a.union(&b).cloned().collect();
        let ta = cable_boundary_slopes(&a, params);
        let tb = cable_boundary_slopes(&b, params);
        let tu = cable_boundary_slopes(&union, params);
        // Monotone, and commutes with union.
        if a.is_subset(&b) {
            prop_assert!(ta.is_subset(&tb));
        }
        let joined: SlopeSet = ta.union(&tb).cloned().collect();
        prop_assert_eq!(tu, joined);
    }
}

proptest! {
    // Bracket evaluations are comparatively heavy; keep the case count low.
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn backends_agree_on_random_words(
        letters in proptest::collection::vec(
            prop_oneof![1i32..=3, -3i32..=-1],
            1..7,
        ),
    ) {
        // The planar-code form requires a connected crossing graph; words
        // whose letters touch disjoint strand intervals close up split.
        prop_assume!(crossings_connected(&letters));
        let budget = EvalBudget::default();
        let strands = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap() + 1;
        let braid = BraidWord::new(strands, letters).unwrap();
        let tl = cabled_jones::bracket::bracket_tl(&braid, &budget).unwrap();
        let ss = cabled_jones::bracket::bracket_state_sum(&braid.to_pd(), &budget).unwrap();
        prop_assert_eq!(tl, ss);
    }

    #[test]
    fn mirror_duality_of_colored_jones(
        letters in proptest::collection::vec(
            prop_oneof![1i32..=2, -2i32..=-1],
            1..6,
        ),
    ) {
        let budget = EvalBudget::default();
        let strands = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap() + 1;
        let braid = BraidWord::new(strands, letters).unwrap();
        prop_assume!(braid.is_knot_closure());
        let d = Diagram::Braid(braid.clone());
        for n in [1u32, 2, 3] {
            let j = colored_jones(&d, n, &budget).unwrap();
            let jm = colored_jones(&d.mirror(), n, &budget).unwrap();
            prop_assert_eq!(j.mirror(), jm);
            if n == 1 {
                prop_assert_eq!(j, QLaurent::one());
            }
        }
        // Degrees reflect: d±[J] = -d∓[mirror J].
        let j = colored_jones(&d, 3, &budget).unwrap();
        let jm = colored_jones(&d.mirror(), 3, &budget).unwrap();
        let (hi, lo) = j.degrees().unwrap();
        let (mhi, mlo) = jm.degrees().unwrap();
        prop_assert_eq!((hi, lo), (-mlo, -mhi));
        let _ = rat(0);
    }
}

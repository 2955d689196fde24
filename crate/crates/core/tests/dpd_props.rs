//! Normalization, graded pieces and the embedding oracles on generated pairs.

use cstar_core::embedding::{build_embedding, character_check, parametrization_check, positive_weight_embedding};
use cstar_core::util::{int, rat};
use cstar_core::{DpdPair, QDivisor};
use proptest::prelude::*;

/// Pairs whose `D+` is fractional at one point `p` at most: an integral part
/// spread over points `q_i != p`, and `D-` making `D+ + D- <= 0`.
fn normalizable_pair() -> impl Strategy<Value = DpdPair> {
    (
        -3i64..=3,
        (-9i64..=9, 1i64..=5),
        (0i64..=9, 1i64..=5),
        prop::collection::vec((-3i64..=3, 0i64..=4, 1i64..=3), 0..3),
    )
        .prop_map(|(p, (n1, d1), (slack, d2), others)| {
            let r1 = rat(n1, d1);
            let r2 = -r1.clone() - rat(slack, d2);
            let mut plus = QDivisor::point(int(p), r1);
            let mut minus = QDivisor::point(int(p), r2);
            for (i, (n, m, k)) in others.into_iter().enumerate() {
                let q = int(p + 10 + i as i64);
                plus = plus.add(&QDivisor::point(q.clone(), int(n)));
                minus = minus.add(&QDivisor::point(q, int(-n) - rat(m, k)));
            }
            DpdPair::new(plus, minus)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_replays(pair in normalizable_pair()) {
        prop_assert!(pair.check().is_valid());
        let (nf, transcript) = pair.to_normal_form().unwrap();
        prop_assert_eq!(transcript.replay(&pair).unwrap(), nf.to_pair());
        prop_assert!(nf.q().is_monic());
        prop_assert!(0 < nf.e_plus() && nf.e_plus() <= nf.d());
        prop_assert!(nf.e_plus() + nf.e_minus() >= 0);
    }

    #[test]
    fn interchange_is_equivalent_up_to_orientation(pair in normalizable_pair()) {
        let back = pair.interchange().interchange();
        prop_assert_eq!(&back, &pair);
        prop_assert!(pair.interchange().check().is_valid());
    }

    #[test]
    fn embedding_oracles_hold(pair in normalizable_pair()) {
        let (nf, _) = pair.to_normal_form().unwrap();
        let e = build_embedding(&nf).unwrap();
        prop_assert!(e.is_homogeneous());
        prop_assert!(parametrization_check(&nf).unwrap());
        prop_assert!(character_check(&nf).unwrap());
        let p = positive_weight_embedding(&nf).unwrap();
        prop_assert!(p.weights.all_positive() && p.is_homogeneous());
    }

    #[test]
    fn graded_pieces(pair in normalizable_pair(), i in -4i64..=4) {
        prop_assert!(pair.generator_bound_check(i).unwrap());
        let g = pair.section_generator(i);
        prop_assert!(pair.contains(&g, i).unwrap());
        prop_assert!(pair.ring_closure_check(3).unwrap());
    }
}

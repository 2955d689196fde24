//! Divisor arithmetic, canonical forms and the textual round trip.

use cstar_core::divisor::common_refinement;
use cstar_core::text::{parse_divisor, parse_pair};
use cstar_core::util::{int, rat};
use cstar_core::{DpdPair, QDivisor, QPoly, QRatFunc, Rational};
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Rational> {
    (-7i64..=7, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn basis_poly() -> impl Strategy<Value = QPoly> {
    prop_oneof![
        (-4i64..=4).prop_map(|r| QPoly::linear_root(int(r))),
        (-3i64..=3, -3i64..=3)
            .prop_map(|(a, b)| QPoly::from_coeffs(vec![int(b), int(a), int(1)]))
            .prop_filter("squarefree", |p| p.is_squarefree().unwrap()),
    ]
}

pub fn divisor() -> impl Strategy<Value = QDivisor> {
    prop::collection::vec((basis_poly(), coeff()), 0..4).prop_map(|entries| {
        entries
            .into_iter()
            .fold(QDivisor::zero(), |acc, (p, c)| acc.add(&QDivisor::from_poly(&p, c).unwrap()))
    })
}

fn nonzero_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-4i64..=4, 1..4)
        .prop_map(|c| QPoly::from_coeffs(c.into_iter().map(int).collect()))
        .prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn canonical_basis(d in divisor()) {
        let entries = d.entries();
        for (i, (p, c)) in entries.iter().enumerate() {
            prop_assert!(p.is_monic() && p.is_squarefree().unwrap());
            prop_assert!(*c != int(0));
            for (q, _) in &entries[i + 1..] {
                prop_assert!(QPoly::gcd(p, q).unwrap().is_one());
                prop_assert!(p < q);
            }
        }
    }

    #[test]
    fn group_laws(a in divisor(), b in divisor(), c in divisor()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.scale(&int(2)), a.add(&a));
        prop_assert!(a.scale(&int(0)).is_zero());
    }

    #[test]
    fn floor_plus_fraction(a in divisor()) {
        prop_assert_eq!(a.floor().add(&a.fractional_part()), a.clone());
        prop_assert!(a.floor().is_integral());
        prop_assert!(a.fractional_part().is_effective());
    }

    #[test]
    fn div_is_a_homomorphism(f in nonzero_poly(), g in nonzero_poly()) {
        let (f, g) = (QRatFunc::from_poly(f), QRatFunc::from_poly(g));
        let lhs = QDivisor::div_of(&(&f * &g)).unwrap();
        let rhs = QDivisor::div_of(&f).unwrap().add(&QDivisor::div_of(&g).unwrap());
        prop_assert_eq!(lhs, rhs);
        let quotient = f.checked_div(&g).unwrap();
        let back = QDivisor::div_of(&quotient).unwrap().to_rational_function().unwrap();
        prop_assert_eq!(QDivisor::div_of(&back).unwrap(), QDivisor::div_of(&quotient).unwrap());
    }

    #[test]
    fn transport_round_trip(a in divisor(), alpha in (1i64..=3), beta in (-3i64..=3)) {
        let there = a.affine_transport(&int(alpha), &int(beta)).unwrap();
        // t -> (t - beta) / alpha undoes t -> alpha t + beta
        let back = there.affine_transport(&rat(1, alpha), &rat(-beta, alpha)).unwrap();
        prop_assert_eq!(back, a.clone());
        prop_assert_eq!(there.degree(), a.degree());
    }

    #[test]
    fn refinement_covers_supports(a in divisor(), b in divisor()) {
        let basis = common_refinement(&[&a, &b]);
        for (p, _) in a.entries().iter().chain(b.entries()) {
            let product = basis.iter().filter(|q| q.divides(p)).fold(QPoly::one(), |acc, q| &acc * q);
            prop_assert_eq!(product, p.clone());
        }
    }

    #[test]
    fn parse_print_round_trip(a in divisor()) {
        let printed = a.to_string();
        let parsed = parse_divisor(&printed).unwrap();
        prop_assert_eq!(&parsed, &a);
        prop_assert_eq!(parsed.to_string(), printed);
    }

    #[test]
    fn pair_round_trip(a in divisor(), b in divisor()) {
        let pair = DpdPair::new(a, b);
        prop_assert_eq!(parse_pair(&pair.to_string()).unwrap(), pair);
    }
}

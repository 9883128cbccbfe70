//! Property tests for the exact kernel: ring axioms, normalization laws,
//! sign/ordering coherence, and serialization round-trips.

use equiline::exact::{Rational, Surd};
use num_bigint::BigInt;
use proptest::prelude::*;

const RADICANDS: [u64; 8] = [1, 2, 3, 5, 6, 7, 10, 30];

fn arb_surd() -> impl Strategy<Value = Surd> {
    let term = (0usize..RADICANDS.len(), -9i64..=9, 1i64..=9, any::<bool>());
    proptest::collection::vec(term, 0..=4).prop_map(|terms| {
        let mut acc = Surd::zero();
        for (ri, num, den, golden) in terms {
            if num == 0 {
                continue;
            }
            let mut t = Surd::radical(num, den, RADICANDS[ri]).unwrap();
            if golden {
                t = t * Surd::golden_x();
            }
            acc = acc + t;
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn ring_axioms(a in arb_surd(), b in arb_surd(), c in arb_surd()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + Surd::zero(), a.clone());
        prop_assert_eq!(&a * Surd::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn sqrt_squares_back(n in 0i64..=10_000, d in 1i64..=1_000) {
        let q = Rational::new(BigInt::from(n), BigInt::from(d));
        let root = Surd::sqrt_rational(&q).unwrap();
        prop_assert_eq!(root.square().as_rational(), Some(q));
        prop_assert!(root.sign() >= 0);
    }

    #[test]
    fn normal_form_uniqueness(a in arb_surd(), b in arb_surd()) {
        // a − b has the empty normal form exactly when a and b are equal
        prop_assert_eq!((&a - &b).is_zero(), a == b);
    }

    #[test]
    fn sign_matches_float_away_from_zero(a in arb_surd()) {
        let f = a.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!(i32::from(a.sign()), if f > 0.0 { 1 } else { -1 });
        }
    }

    #[test]
    fn ordering_is_coherent(a in arb_surd(), b in arb_surd()) {
        prop_assert_eq!(a < b, (&b - &a).sign() == 1);
        prop_assert!(a.abs().sign() >= 0);
        prop_assert_eq!(a.abs().square(), a.square());
    }

    #[test]
    fn serialization_round_trip(a in arb_surd()) {
        let json = serde_json::to_string(&a).unwrap();
        let back: Surd = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(a, back);
    }

    #[test]
    fn inverse_is_two_sided(a in arb_surd()) {
        match a.inverse() {
            None => prop_assert!(a.is_zero()),
            Some(inv) => {
                prop_assert!((&a * &inv - Surd::one()).is_zero());
                prop_assert!((inv * &a - Surd::one()).is_zero());
            }
        }
    }
}

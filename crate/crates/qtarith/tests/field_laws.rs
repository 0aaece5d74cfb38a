use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qtarith::{parse_rational, Monomial, QTPoly, QTRational};

fn poly() -> impl Strategy<Value = QTPoly> {
    prop::collection::vec((0u32..3, 0u32..3, -3i64..=3), 1..4).prop_map(|ts| {
        QTPoly::from_terms(ts.into_iter().map(|(a, b, c)| (Monomial::new(a, b), BigInt::from(c))))
    })
}

fn nonzero_poly() -> impl Strategy<Value = QTPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn rational() -> impl Strategy<Value = QTRational> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| QTRational::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_and_multiplication_associate(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in rational(), b in rational(), c in rational()) {
        let lhs = &a * &(&b + &c);
        let rhs = &(&a * &b) + &(&a * &c);
        prop_assert!(lhs.cross_eq(&rhs));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_by_self_is_one(a in rational()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(a.checked_div(&a).unwrap(), QTRational::one());
        prop_assert_eq!(&a - &a, QTRational::zero());
    }

    #[test]
    fn canonical_form_is_stable(n in poly(), d in nonzero_poly(), k in nonzero_poly()) {
        let a = QTRational::new(n.clone(), d.clone()).unwrap();
        let b = QTRational::new(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.canonicalize(), a.clone());
        prop_assert_eq!(parse_rational(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_ring_map(a in rational(), b in rational(), q0 in -4i64..5, t0 in -4i64..5) {
        let (q0, t0) = (BigRational::from_integer(q0.into()), BigRational::from_integer(t0.into()));
        if let (Ok(x), Ok(y)) = (a.substitute(&q0, &t0), b.substitute(&q0, &t0)) {
            if let Ok(s) = (&a + &b).substitute(&q0, &t0) {
                prop_assert_eq!(s, &x + &y);
            }
            if let Ok(p) = (&a * &b).substitute(&q0, &t0) {
                prop_assert_eq!(p, x * y);
            }
        }
    }
}

use brauer_fusion::scalars::{
    format_rational, parse_rational, poly_gcd, rat, BigRational, OmegaPoly, OmegaRatFunc,
};
use proptest::prelude::*;

fn q() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, d)| rat(p, d))
}

fn poly() -> impl Strategy<Value = OmegaPoly> {
    prop::collection::vec(q(), 0..4).prop_map(OmegaPoly::from_coeffs)
}

fn ratfunc() -> impl Strategy<Value = OmegaRatFunc> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| {
        if d.is_zero() {
            None
        } else {
            OmegaRatFunc::reduce(n, d).ok()
        }
    })
}

proptest! {
    #[test]
    fn rational_text_round_trip(a in q()) {
        prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a.clone());
        prop_assert_eq!(parse_rational(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
            prop_assert!((&b * &b.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_reduced_and_monic(a in ratfunc()) {
        let g = poly_gcd(a.num(), a.den()).unwrap();
        prop_assert!(a.is_zero() || g.is_one());
        prop_assert_eq!(a.den().leading().cloned(), Some(rat(1, 1)));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(), b in ratfunc(), x in q()) {
        if let (Ok(va), Ok(vb)) = (a.evaluate(&x), b.evaluate(&x)) {
            prop_assert_eq!((&a + &b).evaluate(&x).unwrap(), &va + &vb);
            prop_assert_eq!((&a * &b).evaluate(&x).unwrap(), &va * &vb);
        }
    }

    #[test]
    fn serde_round_trip(a in ratfunc()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: OmegaRatFunc = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn gcd_divides_both(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = poly_gcd(&a, &b).unwrap();
        prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
    }
}

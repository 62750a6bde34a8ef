use fig8_skein::{engine, RatFunc, SkeinElement, TorusElement};
use fig8_skein::Channel;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec((-3i64..=3, -5i32..=5), 0..4).prop_map(RatFunc::laurent)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent()).prop_map(|(n, d)| if d.is_zero() { n } else { &n / &d })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip()).is_one());
        }
    }

    #[test]
    fn display_round_trips(a in ratfunc()) {
        prop_assert_eq!(a.to_string().parse::<RatFunc>().unwrap(), a);
    }

    // the action is Q(t)-linear; exercises the common-denominator path
    #[test]
    fn action_is_linear(c in ratfunc(), d in ratfunc(), p in 0i32..=2, q in -3i32..=3, n in 0u32..=2) {
        let u = TorusElement::term(c.clone(), p, q);
        let s = SkeinElement::term(Channel::Y, n, d.clone());
        let plain = engine().act(&TorusElement::basis(p, q), &SkeinElement::basis(Channel::Y, n));
        prop_assert_eq!(engine().act(&u, &s), plain.scale(&(&c * &d)));
    }
}

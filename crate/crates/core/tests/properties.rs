use kmk_moments::algebra::rational::int;
use kmk_moments::algebra::{expand_in_x, fine_structure_form, FineStructureForm, Poly, RationalFn};
use kmk_moments::ansatz::{ansatz_to_series, euler_apply, AnsatzSum, AnsatzTerm};
use kmk_moments::oracles::euler_series;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(-6i64..=6, 0..5).prop_map(|c| Poly::from_ints(&c))
}

// denominators that do not vanish at c = 1, so the x-expansion exists
fn ratfn() -> impl Strategy<Value = RationalFn> {
    (poly(), poly(), 0u32..4).prop_map(|(num, extra, a)| {
        let den = &Poly::two_minus_c().pow(a) * &(&(&extra * &Poly::c_minus_one()) + &Poly::one());
        RationalFn::new(num, den).unwrap()
    })
}

fn theta() -> impl Strategy<Value = FineStructureForm> {
    (1u32..5).prop_flat_map(|g| {
        let range = FineStructureForm::theorem_range(g);
        proptest::collection::btree_map(range, -50i64..=50, 0..4)
            .prop_map(move |m| FineStructureForm::new(g, m.into_iter().map(|(k, v)| (k, int(v)))))
    })
}

proptest! {
    #[test]
    fn poly_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
    }

    #[test]
    fn poly_division(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn ratfn_field_laws(f in ratfn(), g in ratfn()) {
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        if !g.is_zero() {
            prop_assert_eq!((&(&f * &g) / &g).unwrap(), f.clone());
        }
        prop_assert!(f.den().leading() == Some(&int(1)));
    }

    #[test]
    fn expansion_is_a_ring_map(f in ratfn(), g in ratfn()) {
        let order = 10;
        let ef = expand_in_x(&f, order).unwrap();
        let eg = expand_in_x(&g, order).unwrap();
        prop_assert_eq!(expand_in_x(&(&f * &g), order).unwrap(), &ef * &eg);
        prop_assert_eq!(expand_in_x(&(&f + &g), order).unwrap(), &ef + &eg);
    }

    #[test]
    fn fine_structure_round_trip(form in theta()) {
        let f = form.to_rational_fn();
        prop_assert_eq!(fine_structure_form(&f, form.g()).unwrap(), form);
    }

    #[test]
    fn euler_matches_coefficientwise(
        terms in proptest::collection::vec((poly(), 0u32..4, 0u32..4), 1..4),
        r in 0u32..4,
    ) {
        let s = AnsatzSum::from_terms(terms.into_iter().map(|(p, a, b)| AnsatzTerm::new(p, a, b)));
        let closed = ansatz_to_series(&euler_apply(r, &s), 10, 6);
        let direct = euler_series(r, &ansatz_to_series(&s, 10, 6));
        prop_assert_eq!(closed, direct);
    }
}

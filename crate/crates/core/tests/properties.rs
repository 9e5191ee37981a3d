mod common;

use std::sync::Arc;

use proptest::prelude::*;

use numsemi::element::{colon_by_element, is_m_full};
use numsemi::homology::{present_ideal, present_quotient, tor, torsion_length};
use numsemi::{
    DegreeBound, Field, Fp32003, NumericalSemigroup, Rational, TruncatedElement, ValueIdeal,
};

use common::Oracle;

type Q = Rational;
const AUTO: DegreeBound = DegreeBound::Auto;

const RINGS: &[&[i64]] = &[
    &[2, 3],
    &[3, 4, 5],
    &[4, 5, 6],
    &[3, 5, 7],
    &[4, 6, 9],
    &[5, 7, 9],
    &[7, 9, 11, 13],
    &[9, 10, 11, 12, 15],
];

/// A semigroup and up to `k` positive elements below twice its conductor.
fn integral(k: usize) -> impl Strategy<Value = (Arc<NumericalSemigroup>, Vec<i64>)> {
    prop::sample::select(RINGS).prop_flat_map(move |g| {
        let s = Arc::new(NumericalSemigroup::new(g).unwrap());
        let elems: Vec<i64> = s.elements_in(1, 2 * s.conductor() + 1).collect();
        (
            Just(s),
            prop::collection::vec(prop::sample::select(elems), 1..=k),
        )
    })
}

/// Two ideals over the same semigroup.
fn pair(k: usize) -> impl Strategy<Value = (ValueIdeal, ValueIdeal)> {
    prop::sample::select(RINGS).prop_flat_map(move |g| {
        let s = Arc::new(NumericalSemigroup::new(g).unwrap());
        let elems: Vec<i64> = s.elements_in(1, 2 * s.conductor() + 1).collect();
        let gens = prop::collection::vec(prop::sample::select(elems), 1..=k);
        (gens.clone(), gens).prop_map(move |(a, b)| {
            (
                ValueIdeal::from_gens(&s, &a).unwrap(),
                ValueIdeal::from_gens(&s, &b).unwrap(),
            )
        })
    })
}

fn ideal((s, g): (Arc<NumericalSemigroup>, Vec<i64>)) -> ValueIdeal {
    ValueIdeal::from_gens(&s, &g).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn triple_dual_is_dual(inst in integral(4), shift in -10i64..10) {
        let i = ideal(inst).shift(shift);
        prop_assert_eq!(i.dual().dual().dual(), i.dual());
        prop_assert!(i.is_subset_of(&i.dual().dual()));
    }

    #[test]
    fn closure_is_idempotent_and_extensive(inst in integral(4)) {
        let i = ideal(inst);
        let c = i.integral_closure().unwrap();
        prop_assert!(i.is_subset_of(&c));
        prop_assert_eq!(c.integral_closure().unwrap(), c);
    }

    #[test]
    fn colon_by_m_is_weakly_m_full(inst in integral(4)) {
        let j = ideal(inst);
        let m = ValueIdeal::maximal(j.semigroup());
        prop_assert!(j.colon_in_ring(&m).is_weakly_m_full());
    }

    #[test]
    fn shift_isomorphism_is_an_equivalence((a, b) in pair(3), k in -20i64..20) {
        prop_assert!(a.iso_up_to_shift(&a));
        prop_assert!(a.iso_up_to_shift(&a.shift(k)));
        prop_assert_eq!(a.iso_up_to_shift(&b), b.iso_up_to_shift(&a));
        if a.iso_up_to_shift(&b) {
            prop_assert!(a.shift(k).iso_up_to_shift(&b));
        }
    }

    #[test]
    fn product_is_commutative_and_contained((a, b) in pair(3)) {
        prop_assert_eq!(a.product(&b), b.product(&a));
        prop_assert!(a.product(&b).is_subset_of(&a.intersect(&b)));
    }

    #[test]
    fn colon_by_monomial_matches_ideal_colon(inst in integral(3), pick in any::<prop::sample::Index>()) {
        let j = ideal(inst);
        let s = j.semigroup().clone();
        let gens = s.generators();
        let x = gens[pick.index(gens.len())];
        let sub = colon_by_element(&j, &TruncatedElement::monomial(&s, x, Q::from_i64(1))).unwrap();
        prop_assert!(sub.equals_ideal(&j.colon_in_ring(&ValueIdeal::principal(&s, x))));
    }

    #[test]
    fn m_full_implies_weakly_m_full(inst in integral(4)) {
        let i = ideal(inst);
        let c = is_m_full::<Fp32003>(&i, 8, 1).unwrap();
        if c.is_m_full() == Some(true) {
            prop_assert!(i.is_weakly_m_full());
            prop_assert_eq!(c.replay(&i), Some(true));
        }
    }

    #[test]
    fn canonical_ideal_counts_gaps(g in prop::sample::select(RINGS)) {
        let s = Arc::new(NumericalSemigroup::new(g).unwrap());
        let w = ValueIdeal::canonical(&s);
        prop_assert_eq!(w.min(), 0);
        prop_assert_eq!(w.values_in(0, s.frobenius() + 1).count(), s.gaps().len());
        prop_assert!(w.dagger().iso_up_to_shift(&ValueIdeal::unit(&s)));
    }

    #[test]
    fn syzygies_match_oracle(inst in integral(3)) {
        let i = ideal(inst);
        let s = i.semigroup();
        let o = Oracle::new(s.generators());
        let p = present_ideal::<Q>(&i, AUTO).unwrap();
        let top = 2 * (s.conductor() + i.gens().iter().max().unwrap()) + s.multiplicity();
        for n in 0..=top {
            let got = p.relations().shifts.iter().filter(|&&d| d == n).count();
            prop_assert_eq!(got, common::syzygy_count(&o, i.gens(), n), "degree {}", n);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn principal_factor_gives_no_torsion(inst in integral(3), pick in any::<prop::sample::Index>()) {
        let i = ideal(inst);
        let s = i.semigroup().clone();
        let elems: Vec<i64> = s.elements_in(0, s.conductor() + 1).collect();
        let p = ValueIdeal::principal(&s, elems[pick.index(elems.len())]);
        prop_assert_eq!(torsion_length::<Q>(&i, &p, AUTO).unwrap().length, 0);
        prop_assert_eq!(torsion_length::<Q>(&p, &i, AUTO).unwrap().length, 0);
    }

    #[test]
    fn tor_is_symmetric((a, b) in pair(2)) {
        let (pa, pb) = (present_quotient::<Q>(&a).unwrap(), present_quotient::<Q>(&b).unwrap());
        for k in 1..=2 {
            let ab = tor(&pa, &pb, k, AUTO).unwrap();
            let ba = tor(&pb, &pa, k, AUTO).unwrap();
            prop_assert_eq!(&ab.graded, &ba.graded, "Tor_{}", k);
            prop_assert_eq!(ab.length, ba.length);
        }
    }

    #[test]
    fn tor_one_is_torsion_of_tensor((m, i) in pair(3)) {
        let t1 = tor(&present_ideal::<Q>(&m, AUTO).unwrap(), &present_quotient::<Q>(&i).unwrap(), 1, AUTO).unwrap();
        let t = torsion_length::<Q>(&m, &i, AUTO).unwrap();
        prop_assert_eq!(t1.length, numsemi::TorLength::Finite(t.length));
    }

    #[test]
    fn parameters_are_regular_on_ideals(inst in integral(3), pick in any::<prop::sample::Index>()) {
        let n = ideal(inst);
        let s = n.semigroup().clone();
        let a = s.generators()[pick.index(s.embdim())];
        let q = present_quotient::<Q>(&ValueIdeal::principal(&s, a)).unwrap();
        let r = tor(&q, &present_ideal::<Q>(&n, AUTO).unwrap(), 1, AUTO).unwrap();
        prop_assert!(r.length.is_zero());
    }

    #[test]
    fn torsion_is_field_independent((a, b) in pair(3)) {
        let q = torsion_length::<Q>(&a, &b, AUTO).unwrap();
        let p = torsion_length::<Fp32003>(&a, &b, AUTO).unwrap();
        prop_assert_eq!(q, p);
    }
}

mod common;

use std::sync::Arc;

use numsemi::homology::{
    auslander_transpose, hilbert_iso_to_ideal, kernel_generators, pd_le_one, present_ideal,
    present_quotient, tensor_presentation, tor, torsion_length,
};
use numsemi::{
    DegreeBound, Field, Fp32003, GradedFreeModule, GradedMap, GradedPresentation,
    NumericalSemigroup, Rational, TorLength, ValueIdeal,
};

use common::Oracle;

type Q = Rational;
const AUTO: DegreeBound = DegreeBound::Auto;

fn ns(g: &[i64]) -> Arc<NumericalSemigroup> {
    Arc::new(NumericalSemigroup::new(g).unwrap())
}

fn ideal(s: &Arc<NumericalSemigroup>, g: &[i64]) -> ValueIdeal {
    ValueIdeal::from_gens(s, g).unwrap()
}

#[test]
fn syzygies_of_4_11() {
    let s = ns(&[4, 5, 6]);
    let p = present_ideal::<Q>(&ideal(&s, &[4, 11]), AUTO).unwrap();
    assert_eq!(p.generators().shifts, vec![4, 11]);
    assert_eq!(p.relations().shifts, vec![15, 16, 17]);
    // (t^11, -t^4) up to scalar
    let (a, da) = p.map().entry(0, 0).unwrap();
    let (b, db) = p.map().entry(1, 0).unwrap();
    assert_eq!((da, db), (11, 4));
    assert_eq!(a + b, Q::from_i64(0));
}

#[test]
fn free_and_principal_have_no_relations() {
    let s = ns(&[4, 5, 6]);
    for g in [&[0][..], &[4]] {
        let p = present_ideal::<Q>(&ideal(&s, g), AUTO).unwrap();
        assert_eq!(p.relations().rank(), 0);
    }
}

#[test]
fn syzygy_of_zero_map_from_rank_zero() {
    let s = ns(&[4, 5, 6]);
    let z = GradedMap::<Q>::zero(
        &s,
        GradedFreeModule::new(vec![]),
        GradedFreeModule::new(vec![0]),
    );
    assert_eq!(z.syzygy(AUTO).unwrap().source().rank(), 0);
}

#[test]
fn syzygy_of_residue_field_presentation_is_first_syzygy_of_m() {
    let s = ns(&[4, 5, 6]);
    let k = present_quotient::<Q>(&ValueIdeal::maximal(&s)).unwrap();
    let syz = k.map().syzygy(AUTO).unwrap();
    assert!(syz.source().rank() >= 3);
    let direct = present_ideal::<Q>(&ValueIdeal::maximal(&s), AUTO).unwrap();
    assert_eq!(syz.source().shifts, direct.relations().shifts);
}

#[test]
fn kernel_generators_match_oracle_degreewise() {
    let s = ns(&[4, 5, 6]);
    let o = Oracle::new(&[4, 5, 6]);
    let gens = [4, 6, 11];
    let cols = vec![vec![(0, Q::from_i64(1))]; 3];
    let syz = kernel_generators(&s, &GradedFreeModule::new(gens.to_vec()), &cols, 1, AUTO).unwrap();
    for n in 0..60 {
        let got = syz.iter().filter(|(d, _)| *d == n).count();
        assert_eq!(got, common::syzygy_count(&o, &gens, n), "degree {n}");
    }
}

#[test]
fn tor_two_of_independent_pair_vanishes() {
    let s = ns(&[4, 5, 6]);
    let (i, j) = (ideal(&s, &[4, 5]), ideal(&s, &[4, 6]));
    let r = tor(
        &present_quotient::<Q>(&i).unwrap(),
        &present_quotient::<Q>(&j).unwrap(),
        2,
        AUTO,
    )
    .unwrap();
    assert_eq!(r.length, TorLength::Finite(0));
    assert_eq!(torsion_length::<Q>(&i, &j, AUTO).unwrap().length, 0);
}

#[test]
fn tor_against_free_module_vanishes() {
    let s = ns(&[4, 5, 6]);
    let k = present_quotient::<Q>(&ValueIdeal::maximal(&s)).unwrap();
    let r = GradedPresentation::<Q>::free(&s, vec![0]);
    for i in 1..=3 {
        assert!(
            tor(&k, &r, i, AUTO).unwrap().length.is_zero(),
            "Tor_{i}(k, R)"
        );
    }
}

#[test]
fn parameter_is_regular_on_ideals() {
    let s = ns(&[4, 5, 6]);
    let q = present_quotient::<Q>(&ValueIdeal::principal(&s, 4)).unwrap();
    let n = present_ideal::<Q>(&ideal(&s, &[4, 11]), AUTO).unwrap();
    assert_eq!(tor(&q, &n, 1, AUTO).unwrap().length, TorLength::Finite(0));
}

#[test]
fn tensor_with_r_is_identity() {
    let s = ns(&[4, 5, 6]);
    let r = GradedPresentation::<Q>::free(&s, vec![0]);
    let i = ideal(&s, &[4, 11]);
    let n = present_ideal::<Q>(&i, AUTO).unwrap();
    let t = tensor_presentation(&r, &n);
    assert_eq!(
        t.hilbert_range(-5, 50),
        n.minimalize().hilbert_range(-5, 50)
    );
    assert!(hilbert_iso_to_ideal(&t, &i));
}

#[test]
fn r_plus_rt_tensor_dagger_is_omega() {
    let s = ns(&[9, 10, 11, 12, 15]);
    let i = ideal(&s, &[0, 1]);
    let d = i.dagger();
    let t = tensor_presentation(
        &present_ideal::<Q>(&i, AUTO).unwrap(),
        &present_ideal::<Q>(&d, AUTO).unwrap(),
    );
    assert!(hilbert_iso_to_ideal(&t, &i.product(&d)));
    assert!(i.product(&d).iso_up_to_shift(&ValueIdeal::canonical(&s)));
    assert_eq!(torsion_length::<Q>(&i, &d, AUTO).unwrap().length, 0);
}

#[test]
fn l_tensor_dual_has_torsion() {
    let s = ns(&[9, 11, 13, 14, 15, 17]);
    let l = ideal(&s, &[26, 30, 32, 34, 36, 38, 42]);
    let q = torsion_length::<Q>(&l, &l.dual(), AUTO).unwrap();
    let p = torsion_length::<Fp32003>(&l, &l.dual(), AUTO).unwrap();
    assert!(q.length > 0);
    assert_eq!(q, p);
}

#[test]
fn transpose_of_4_11() {
    let s = ns(&[4, 5, 6]);
    let p = present_ideal::<Q>(&ideal(&s, &[4, 11]), AUTO).unwrap();
    let t = auslander_transpose(&p);
    // generators are the duals of the three relations, relations the duals of F0
    assert_eq!(t.generators().rank(), 3);
    assert_eq!(t.relations().rank(), 2);
    assert!(!t.has_unit_entries());
}

#[test]
fn transpose_over_2_3_recovers_m_stably() {
    let s = ns(&[2, 3]);
    let m = present_ideal::<Q>(&ValueIdeal::maximal(&s), AUTO).unwrap();
    let tt = auslander_transpose(&auslander_transpose(&m));
    assert_eq!(
        tt.hilbert_range(-10, 30),
        m.minimalize().hilbert_range(-10, 30)
    );
}

#[test]
fn projective_dimension_at_most_one() {
    let s = ns(&[4, 5, 6]);
    assert!(pd_le_one(
        &present_quotient::<Q>(&ValueIdeal::principal(&s, 4)).unwrap(),
        AUTO
    )
    .unwrap());
    assert!(pd_le_one(&GradedPresentation::<Q>::free(&s, vec![0]), AUTO).unwrap());
    assert!(!pd_le_one(
        &present_quotient::<Q>(&ValueIdeal::maximal(&s)).unwrap(),
        AUTO
    )
    .unwrap());
}

mod common;

use common::{q, tuples, Point};
use spinorss::conditions::{
    self, ricci_contracted_from_box, ricci_s1_spinor, ricci_s2_spinor, ricci_symmetric_from_box, verify_decomposition_ricci,
    verify_identities, verify_reduction_weyl, weyl_contraction_factor,
};
use spinorss::curvature::{box_on, BoxKind};
use spinorss::linalg::{random_value, seeded_rng};
use spinorss::{CurvatureSet, GaussianRational as Q, Polynomial, RicciSpinor, WeylSpinor};

fn random_point(seed: u64) -> Point {
    let mut rng = seeded_rng(seed);
    let psi: [Q; 5] = std::array::from_fn(|_| random_value(&mut rng, false));
    let mut phi: [[Q; 3]; 3] = Default::default();
    for a in 0..3 {
        phi[a][a] = random_value(&mut rng, true);
        for b in a + 1..3 {
            phi[a][b] = random_value(&mut rng, false);
            phi[b][a] = phi[a][b].conj();
        }
    }
    Point { psi, phi, lambda: random_value(&mut rng, true) }
}

fn to_set(p: &Point) -> CurvatureSet {
    let phi = p.phi.clone().map(|row| row.map(Polynomial::constant));
    CurvatureSet::new(
        WeylSpinor::from_constants(p.psi.clone()),
        RicciSpinor::new(phi).unwrap(),
        Polynomial::constant(p.lambda.clone()),
    )
    .unwrap()
}

fn value(p: &Polynomial) -> Q {
    p.as_constant().expect("numeric data")
}

#[test]
fn all_five_identities_hold_symbolically() {
    let checks = verify_identities();
    assert_eq!(checks.len(), 5);
    for c in &checks {
        assert!(c.passed, "{}: {:?}", c.name, c.first_failure);
    }
}

#[test]
fn contraction_factor_is_three_quarters() {
    assert_eq!(weyl_contraction_factor(), Some(Q::ratio(3, 4)));
}

#[test]
fn contraction_factor_matches_index_loops() {
    for seed in [1, 2, 3, 4] {
        let p = random_point(seed);
        for i in tuples(4) {
            let lhs = p.weyl_full_bc(i[0], i[1], i[2], i[3]);
            let rhs = &p.weyl_contracted(&i) * &Q::ratio(3, 4);
            assert_eq!(lhs, rhs, "seed {seed} index {i:?}");
        }
    }
}

#[test]
fn engine_matches_index_loops() {
    for seed in [5, 6] {
        let p = random_point(seed);
        let c = to_set(&p);
        let wf = conditions::weyl_full_spinor(&c);
        let wc = conditions::weyl_contracted_spinor(&c);
        let mx = conditions::mixed_spinor(&c);
        let rf = conditions::ricci_full_spinor(&c);
        let s1 = ricci_s1_spinor(&c);
        for i in tuples(6) {
            assert_eq!(value(wf.get(&i)), p.weyl_full(&i), "weyl full {i:?}");
            assert_eq!(value(mx.get(&i)), p.mixed(&i), "mixed {i:?}");
            assert_eq!(value(rf.get(&i)), p.ricci_full(&i), "ricci full {i:?}");
            assert_eq!(value(s1.get(&i)), p.s1(&i), "s1 {i:?}");
        }
        for i in tuples(4) {
            assert_eq!(value(wc.get(&i)), p.weyl_contracted(&i), "weyl contracted {i:?}");
        }
    }
}

#[test]
fn box_on_phi_matches_index_loops() {
    let p = random_point(9);
    let c = to_set(&p);
    let boxed = box_on(&c, &c.ricci_spinor(), BoxKind::Unprimed).unwrap();
    for i in tuples(6) {
        assert_eq!(value(boxed.get(&i)), p.ricci_full(&i));
    }
}

#[test]
fn box_on_weyl_is_minus_four_full_condition() {
    let c = CurvatureSet::generic();
    let boxed = box_on(&c, &c.weyl_spinor(), BoxKind::Unprimed).unwrap();
    assert_eq!(boxed, conditions::weyl_full_spinor(&c).scale(&q(-4)));
}

#[test]
fn ricci_commutator_splits_into_s1_and_s2() {
    let c = CurvatureSet::generic();
    assert_eq!(ricci_symmetric_from_box(&c), ricci_s1_spinor(&c).scale(&q(-2)));
    assert_eq!(ricci_contracted_from_box(&c), ricci_s2_spinor(&c));
}

#[test]
fn weyl_condition_has_five_independent_components() {
    let r = verify_reduction_weyl(&CurvatureSet::generic());
    assert_eq!((r.first_components, r.second_components), (15, 5));
    assert_eq!((r.rank_first, r.rank_second, r.rank_union), (5, 5, 5));
    assert_eq!(r.sampled, vec![(5, 5, 5); 3]);
    assert!(r.passes);
}

#[test]
fn weyl_ranks_vanish_without_weyl() {
    let c = CurvatureSet::generic().with_weyl(WeylSpinor::zero());
    let r = verify_reduction_weyl(&c);
    assert_eq!((r.rank_first, r.rank_second, r.rank_union), (0, 0, 0));
    assert!(r.passes);
}

#[test]
fn ricci_commutator_splits_into_fifteen_and_nine() {
    let r = verify_decomposition_ricci(&CurvatureSet::generic());
    assert_eq!((r.first_components, r.second_components), (27, 24));
    assert_eq!(r.rank_first, r.rank_second);
    assert_eq!(r.rank_first, r.rank_union);
    assert!(r.trace_vanishes);
    assert!(r.sampled.iter().all(|&s| s == (r.rank_first, r.rank_second, r.rank_union)));
    assert!(r.passes);
    let s1 = conditions::cond_ricci_s1(&CurvatureSet::generic());
    let s2 = conditions::cond_ricci_s2(&CurvatureSet::generic());
    assert_eq!((s1.components.len(), s2.components.len()), (15, 9));
}

#[test]
fn ricci_ranks_vanish_without_phi() {
    let c = CurvatureSet::generic().with_ricci(RicciSpinor::zero());
    let r = verify_decomposition_ricci(&c);
    assert_eq!((r.rank_first, r.rank_second, r.rank_union), (0, 0, 0));
    assert!(r.passes);
}

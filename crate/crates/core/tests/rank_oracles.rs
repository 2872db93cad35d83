use nilg2_core::catalog::{make_abelian, seven_dim_candidates};
use nilg2_core::g2::{self, G2Element, MElement, ThreeForm};
use nilg2_core::linalg::{frac, rat, Rational};
use nilg2_core::rank::classify::{family_b_i64, rank_of};
use nilg2_core::rank::*;
use num_traits::Zero;
use proptest::prelude::*;

fn a(x: i64, y: i64, z: i64) -> MElement {
    family_a(rat(x), rat(y), rat(z))
}

#[test]
fn classification_examples() {
    assert_eq!(classify_rank2(&MElement::from_i64([1, 0, 0, 0, 0, 0])), RankClass::RankAbove2(4));
    assert!(matches!(classify_rank2(&a(1, 0, 0)), RankClass::FamilyA { .. }));
    let b = MElement::from_i64([0, 1, 2, 2, -2, 0]);
    assert_eq!(rank_of(&b), 2);
    assert!(matches!(classify_rank2(&b), RankClass::FamilyB { .. }));
}

#[test]
fn sweep_at_bound_two() {
    let s = verify_rank2_classification(2).unwrap();
    assert_eq!(s.total, 15625);
    assert!(s.mismatches.is_empty());
    assert!(s.passed());
    // Family A with u3 u5 = 0 in {-2..2}^3 minus the origin: 5^3 - 4*4*5 - 1 = 44.
    assert_eq!(s.family_a, 44);
    // Family B points need u4 | 4 u2^2 and 2 u2 | u4^2 with |u3|, |u5| <= 2:
    // (u2, u4) in {(1, 2), (1, -2), (-1, 2), (-1, -2)}, each with 5 values of u6.
    assert_eq!(s.family_b, 20);
    assert_eq!(s.zero, 1);
}

#[test]
fn family_a_locus_examples() {
    assert!(rank_of(&a(1, 1, 1)) > 2);
    assert_eq!(rank_of(&a(0, 1, 1)), 2);
    assert_eq!(rank_of(&a(1, 0, 1)), 2);
    let l = family_a_rank_locus().unwrap();
    assert!(l.certified());
    assert_eq!(l.components, vec!["u3 = 0".to_string(), "u5 = 0".to_string()]);
}

#[test]
fn family_b_pairs() {
    let r = family_b_pair_identity(&family_b_i64(1, 2, 0).unwrap(), &family_b_i64(2, 4, 5).unwrap()).unwrap();
    assert!(r.consistent());
    let diff = r.difference.unwrap();
    let expected = a(0, 0, 0).add(&family_a(Rational::zero(), Rational::zero(), frac(-5, 2)));
    assert_eq!(diff, expected.u.map(|x| x.to_string()));

    let r = family_b_pair_identity(&family_b_i64(1, 2, 0).unwrap(), &family_b_i64(1, 3, 0).unwrap()).unwrap();
    assert_eq!(r.cross_term, "1");
    assert!(r.sum_rank > 2);
    assert!(!r.identity_required);

    let b = family_b_i64(1, 2, 0).unwrap();
    let r = family_b_pair_identity(&b, &b.scale(&rat(-1))).unwrap();
    assert_eq!(r.sum_class, "zero");
    assert!(family_b_pair_identity(&a(1, 0, 0), &b).is_err());
}

#[test]
fn refutation_examples() {
    let w = refute_rank2_3d_subspace(&[a(1, 0, 0), a(0, 1, 0), a(0, 0, 1)]).unwrap();
    assert_eq!(w.case, RefutationCase::FamilyAPlanes);
    assert!(w.coefficients.iter().all(|c| c != "0"));
    assert_eq!(w.rank, 4);

    let w = refute_rank2_3d_subspace(&[MElement::from_i64([1, 0, 0, 0, 0, 0]), a(1, 0, 0), a(0, 0, 1)]).unwrap();
    assert_ne!(w.element[0], "0");

    let w = refute_rank2_3d_subspace(&[family_b_i64(1, 2, 0).unwrap(), a(0, 0, 1), a(1, 0, 0)]).unwrap();
    assert_eq!(w.case, RefutationCase::FamilyBPlusA);
    assert_ne!(w.coefficients[0], "0");
    assert!(w.rank >= 3);
}

#[test]
fn search_is_seeded() {
    let x = random_search_rank2_subalgebra(500, 42).unwrap();
    let y = random_search_rank2_subalgebra(500, 42).unwrap();
    assert_eq!(serde_json::to_string(&x).unwrap(), serde_json::to_string(&y).unwrap());
    assert!(!x.found_rank_two_subalgebra());
    assert!(x.counterexamples.is_empty());
    assert_eq!(x.refuted, x.three_dimensional);
}

#[test]
fn catalog_certificates() {
    let entries = seven_dim_candidates();
    for entry in &entries[..5] {
        let o = catalog_obstruction(entry).unwrap();
        assert_eq!(o.conclusion, Conclusion::NotEmbeddable, "{}", o.name);
        let c = o.certificate.unwrap();
        assert_eq!(c.minors_checked, 1225);
        assert!(c.minors_vanish && c.grid_cross_check);
        assert_eq!((c.min_rank, c.max_rank), (2, 2));
        assert!(c.formula.unwrap().verified());
    }
    assert_eq!(catalog_obstruction(&entries[0]).unwrap().test_subspace, Some(TestSubspace::AdW));
    assert_eq!(catalog_obstruction(&entries[3]).unwrap().test_subspace, Some(TestSubspace::AdN));
    let ab = embedding_obstruction("R^7_3", &make_abelian(4, 3).unwrap()).unwrap();
    assert_eq!(ab.conclusion, Conclusion::AbelianNoObstruction);
}

#[test]
fn two_step_examples() {
    let entries = seven_dim_candidates();
    assert!(two_step_lemma_check(&entries[2].value).unwrap().passed());
    assert!(!two_step_lemma_check(&entries[5].value).unwrap().hypotheses_hold());
    assert!(!two_step_lemma_check(&entries[0].value).unwrap().hypotheses_hold());
}

#[test]
fn stabilizer_of_decomposable_form() {
    // GL(7) acts on decomposable 3-forms with orbit of dimension dim Gr(3,7) + 1 = 13.
    let e123 = ThreeForm::elementary(0, 1, 2);
    assert_eq!(g2::stabilizer_in_gl(&e123).unwrap().dim(), 36);
    let (_, phi) = g2::invariant_three_forms().unwrap();
    let stab = g2::stabilizer_in_gl(&phi).unwrap();
    assert!(stab.contains(&G2Element::basis(4).to_matrix().flatten()).unwrap());
    assert!(!phi.is_zero());
    for g in g2::g2_generators() {
        assert!(phi.act(&g).is_zero());
    }
}

#[test]
fn g2_commutator_in_span() {
    let c = G2Element::basis(0).to_matrix().commutator(&G2Element::basis(1).to_matrix());
    assert!(g2::membership_in_g2(&c).is_some());
    let s = g2::invariant_bilinear_form().unwrap();
    assert!(s.inverse().is_some());
}

proptest! {
    #[test]
    fn membership_round_trip(u in prop::array::uniform6(-5i64..=5)) {
        let e = MElement::from_i64(u);
        prop_assert_eq!(g2::membership_in_m(&e.to_matrix()), Some(e.clone()));
        let g = g2::membership_in_g2(&e.to_matrix()).unwrap();
        prop_assert!(g.u[6..].iter().all(Zero::is_zero));
    }

    #[test]
    fn rank_at_most_two_means_a_family(u in prop::array::uniform6(-3i64..=3)) {
        let e = MElement::from_i64(u);
        let class = classify_rank2(&e);
        prop_assert!(!matches!(class, RankClass::Unexplained(_)));
        prop_assert_eq!(class.is_rank_at_most_two(), rank_of(&e) <= 2);
    }

    #[test]
    fn family_b_always_has_rank_two(u2 in -6i64..=6, u4 in -6i64..=6, u6 in -6i64..=6) {
        prop_assume!(u2 != 0 && u4 != 0);
        prop_assert_eq!(rank_of(&family_b_i64(u2, u4, u6).unwrap()), 2);
    }
}

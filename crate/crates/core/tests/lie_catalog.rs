use nilg2_core::catalog::{by_name, make_abelian, make_abelian_labeled, make_n1, make_n2, make_n3, seven_dim_candidates, Epsilon};
use nilg2_core::format::{parse_algebra_file, serialize_algebra};
use nilg2_core::geometry::{curvature, curvature_identity_checks, geometry_report, holonomy_algebra, ricci};
use nilg2_core::linalg::{frac, rat, unit_vec, Mat, Subspace, Vector};
use nilg2_core::{Error, LieAlgebra, MetricLieAlgebra, Nilpotency};
use proptest::prelude::*;

fn e(n: usize, i: usize) -> Vector {
    unit_vec(n, i)
}

fn span(n: usize, idx: &[usize]) -> Subspace {
    let vs: Vec<Vector> = idx.iter().map(|&i| e(n, i)).collect();
    Subspace::span(&vs, n).unwrap()
}

fn scaled(v: Vector, c: i64) -> Vector {
    v.into_iter().map(|x| x * rat(c)).collect()
}

#[test]
fn bracket_examples() {
    let n2 = make_n2();
    assert_eq!(n2.algebra().bracket(&e(6, 0), &e(6, 1)).unwrap(), e(6, 5));
    assert_eq!(n2.algebra().bracket(&e(6, 2), &e(6, 2)).unwrap(), vec![rat(0); 6]);
    let n1 = make_n1(Epsilon::Plus);
    assert_eq!(n1.algebra().bracket(&e(7, 2), &e(7, 3)).unwrap(), e(7, 5));
    for eps in Epsilon::both() {
        let n1 = make_n1(eps);
        assert_eq!(
            n1.algebra().bracket(&e(7, 0), &e(7, 3)).unwrap(),
            scaled(e(7, 4), -eps.value())
        );
        assert_eq!(n1.algebra().jacobi_defect(), rat(0));
    }
}

#[test]
fn jacobi_perturbation_is_detected() {
    let n2 = make_n2();
    let mut brackets = n2.algebra().nonzero_brackets();
    brackets.push((0, 3, e(6, 4)));
    let bad = LieAlgebra::unchecked(n2.labels().to_vec(), brackets.clone()).unwrap();
    assert_ne!(bad.jacobi_defect(), rat(0));
    // [[a1,a2],a3] + [[a2,a3],a1] + [[a3,a1],a2] = [z1,a1] = -z2
    let (x, y, z, _) = bad.jacobi_witness().unwrap();
    assert_eq!((x, y, z), (0, 1, 2));
    assert_eq!(bad.jacobiator(0, 1, 2), scaled(e(6, 4), -1));
    assert!(matches!(LieAlgebra::new(n2.labels().to_vec(), brackets), Err(Error::Jacobi { .. })));
}

#[test]
fn adjoint_examples() {
    let n2 = make_n2();
    assert!(n2.algebra().ad_basis(3).is_zero());
    assert_eq!(n2.algebra().ad_basis(0).rank(), 2);
    for eps in Epsilon::both() {
        let n3 = make_n3(eps);
        let ad = n3.algebra().ad_basis(0);
        let mut expected = Mat::zeros(5, 5);
        expected[(2, 1)] = rat(1);
        expected[(4, 2)] = rat(-eps.value());
        assert_eq!(ad, expected);
    }
}

#[test]
fn series_and_centers() {
    let ab = make_abelian(4, 3).unwrap();
    assert_eq!(ab.algebra().center().dim(), 7);
    assert_eq!(ab.algebra().nilpotency_class(), Nilpotency::Class(1));
    assert!(ab.isotropic_ideal_j().is_zero());
    assert!(ab.algebra().killing_form().is_zero());

    let n2 = make_n2();
    let z = span(6, &[3, 4, 5]);
    assert_eq!(n2.algebra().nilpotency_class(), Nilpotency::Class(2));
    assert_eq!(n2.algebra().derived_algebra(), z);
    assert_eq!(n2.algebra().center(), z);
    assert_eq!(n2.isotropic_ideal_j(), z);

    let n3 = make_n3(Epsilon::Plus);
    let dims: Vec<usize> = n3.algebra().lower_central_series().iter().map(Subspace::dim).collect();
    assert_eq!(dims, vec![5, 3, 2, 0]);

    let n1 = make_n1(Epsilon::Plus);
    assert_eq!(n1.isotropic_ideal_j(), span(7, &[5, 6]));
    assert_eq!(n1.algebra().nilpotency_class(), Nilpotency::Class(5));
    assert!(n1.algebra().killing_form().is_zero());
}

#[test]
fn killing_of_two_dim_solvable() {
    let alg = LieAlgebra::new(vec!["e1".into(), "e2".into()], vec![(0, 1, e(2, 1))]).unwrap();
    let k = alg.killing_form();
    assert_eq!(k, Mat::from_i64(2, 2, &[1, 0, 0, 0]));
}

#[test]
fn invariant_forms() {
    let r3 = LieAlgebra::abelian(vec!["x".into(), "y".into(), "z".into()]);
    assert_eq!(r3.invariant_symmetric_forms().len(), 6);
    let n2 = make_n2();
    let forms = n2.algebra().invariant_symmetric_forms();
    let rows: Vec<Vector> = forms.iter().map(Mat::flatten).collect();
    let space = Subspace::span(&rows, 36).unwrap();
    assert!(space.contains(&n2.form().flatten()).unwrap());
    let heis = LieAlgebra::from_relations(&["x", "y", "z"], &[("x", "y", &[("z", 1)])]).unwrap();
    assert!(heis.nondegenerate_invariant_form(1 << 16).unwrap().is_none());
}

#[test]
fn orthogonal_complements_and_witt() {
    let n1 = make_n1(Epsilon::Plus);
    let j = n1.isotropic_ideal_j();
    let jp = n1.orthogonal_complement(&j).unwrap();
    assert_eq!(jp, span(7, &[2, 3, 4, 5, 6]));
    assert!(n1.algebra().derived_algebra().is_subspace_of(&jp).unwrap());
    assert!(n1.algebra().center().is_subspace_of(&jp).unwrap());
    let w = n1.witt_decomposition();
    assert!(w.is_valid_for(&n1));
    assert_eq!(w.w.dim(), 3);
    assert_eq!(w.j_star, span(7, &[0, 1]));
    assert_eq!(n1.form().signature().unwrap(), (4, 3, 0));
    assert_eq!(w.w.gram(n1.form()).signature().unwrap(), (2, 1, 0));

    let n2 = make_n2();
    let j2 = n2.isotropic_ideal_j();
    assert_eq!(n2.orthogonal_complement(&j2).unwrap(), j2);
    assert_eq!(n2.witt_decomposition().w.dim(), 0);
    assert!(n2.orthogonal_complement(&Subspace::zero(6)).unwrap() == Subspace::full(6));

    let n3 = make_n3(Epsilon::Plus);
    let w3 = n3.witt_decomposition();
    assert!(w3.is_valid_for(&n3));
    assert_eq!(w3.w.dim(), 1);
    assert_eq!(w3.w.gram(n3.form()).signature().unwrap(), (1, 0, 0));
}

#[test]
fn orthogonal_sums() {
    let pad = make_abelian(0, 1).unwrap();
    let s = make_n2().orthogonal_direct_sum(&pad).unwrap();
    assert_eq!((s.dim(), s.signature()), (7, (3, 4)));
    let s = make_n3(Epsilon::Plus)
        .orthogonal_direct_sum(&make_abelian(1, 1).unwrap())
        .unwrap();
    assert_eq!((s.dim(), s.signature()), (7, (4, 3)));
    let r = make_abelian_labeled(1, 1, "r").unwrap();
    let ab = make_abelian(1, 0).unwrap().orthogonal_direct_sum(&r).unwrap();
    assert!(ab.algebra().is_abelian());
    assert!(make_abelian(1, 0).unwrap().orthogonal_direct_sum(&make_abelian(1, 0).unwrap()).is_err());
}

#[test]
fn catalog_shapes() {
    assert_eq!(make_n1(Epsilon::Plus).signature(), (4, 3));
    assert_eq!(make_n2().signature(), (3, 3));
    assert_eq!(make_n3(Epsilon::Plus).signature(), (3, 2));
    assert_eq!(make_n3(Epsilon::Minus).signature(), (2, 3));
    let entries = seven_dim_candidates();
    assert_eq!(entries.len(), 6);
    for entry in &entries {
        assert_eq!(entry.value.dim(), 7);
        assert_eq!(entry.value.signature(), (4, 3));
    }
    assert_eq!(entries[2].value.algebra().nilpotency_class(), Nilpotency::Class(2));
    assert!(entries[2].flipped);
}

#[test]
fn format_round_trips_every_catalog_entry() {
    for entry in seven_dim_candidates() {
        let text = serialize_algebra(&entry.label(), &entry.value);
        let (name, m) = parse_algebra_file(&text).unwrap();
        assert_eq!(name, entry.label());
        assert_eq!(m, entry.value);
    }
    assert!(by_name("nIII-").is_some());
    assert!(by_name("nIV").is_none());
}

#[test]
fn invariance_error_names_the_triple() {
    let text = serialize_algebra("bad", &make_n2()).replace(
        "\"x\": \"a3\",\n      \"y\": \"z3\",\n      \"value\": \"1\"",
        "\"x\": \"a3\",\n      \"y\": \"z3\",\n      \"value\": \"2\"",
    );
    let err = parse_algebra_file(&text).unwrap_err();
    let Error::Invariance { x, y, z, bracket, .. } = &err else {
        panic!("unexpected {err:?}")
    };
    assert_eq!((x.as_str(), y.as_str(), z.as_str(), bracket.as_str()), ("a1", "a2", "a3", "z3"));
    let msg = err.to_string();
    assert!(msg.contains("[a1,a2] = z3"), "{msg}");
}

#[test]
fn curvature_examples() {
    let ab = make_abelian(4, 3).unwrap();
    assert!(geometry_report(ab.algebra()).is_flat);
    let n1 = make_n1(Epsilon::Plus);
    let r = curvature(n1.algebra(), &e(7, 0), &e(7, 1), &e(7, 0)).unwrap();
    assert_eq!(r, scaled(e(7, 3), 1).into_iter().map(|x| x * frac(-1, 4)).collect::<Vec<_>>());
    let entries = seven_dim_candidates();
    let n2r = entries[2].value.algebra();
    for x in 0..7 {
        for y in 0..7 {
            for z in 0..7 {
                assert!(curvature(n2r, &e(7, x), &e(7, y), &e(7, z)).unwrap().iter().all(|c| *c == rat(0)));
            }
        }
    }
}

#[test]
fn holonomy_dimensions() {
    let entries = seven_dim_candidates();
    let dims: Vec<usize> = entries.iter().map(|e| holonomy_algebra(e.value.algebra()).dim()).collect();
    assert_eq!(dims, vec![3, 3, 0, 1, 1, 0]);
    let n1 = make_n1(Epsilon::Plus);
    let ad_w: Vec<Vector> = (2..5).map(|i| n1.algebra().ad_basis(i).flatten()).collect();
    assert_eq!(holonomy_algebra(n1.algebra()), Subspace::span(&ad_w, 49).unwrap());
    let g = geometry_report(n1.algebra());
    assert!(g.holonomy_closed && !g.is_flat && g.ricci.is_zero());
}

#[test]
fn ricci_is_quarter_killing_on_semisimple_examples() {
    let sl2 = LieAlgebra::from_relations(
        &["h", "e", "f"],
        &[("h", "e", &[("e", 2)]), ("h", "f", &[("f", -2)]), ("e", "f", &[("h", 1)])],
    )
    .unwrap();
    let g = geometry_report(&sl2);
    assert!(g.ricci_is_quarter_killing);
    assert_eq!(g.ricci[(0, 0)], rat(2));
    let g2 = nilg2_core::g2::structure_constants_of_g2().unwrap();
    assert_eq!(ricci(&g2), g2.killing_form().scale(&frac(1, 4)));
}

fn triangular_algebra(n: usize, coeffs: &[i64]) -> Option<LieAlgebra> {
    let mut brackets = Vec::new();
    let mut it = coeffs.iter();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![rat(0); n];
            for slot in v.iter_mut().skip(j + 1) {
                *slot = rat(*it.next()?);
            }
            brackets.push((i, j, v));
        }
    }
    LieAlgebra::new((1..=n).map(|i| format!("e{i}")).collect(), brackets).ok()
}

fn skewed_algebra(n: usize, coeffs: &[i64], diag: &[i64]) -> Option<LieAlgebra> {
    // e0 acts diagonally on a triangular ideal spanned by e1..e{n-1}.
    let inner = triangular_algebra(n - 1, coeffs)?;
    let mut brackets = Vec::new();
    for j in 1..n {
        let mut v = vec![rat(0); n];
        v[j] = rat(diag[j - 1]);
        brackets.push((0, j, v));
    }
    for (i, j, v) in inner.nonzero_brackets() {
        let mut w = vec![rat(0)];
        w.extend(v);
        brackets.push((i + 1, j + 1, w));
    }
    LieAlgebra::new((1..=n).map(|i| format!("e{i}")).collect(), brackets).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nilpotent_tables_are_ricci_flat(coeffs in prop::collection::vec(-2i64..=2, 20)) {
        if let Some(alg) = triangular_algebra(5, &coeffs) {
            prop_assert!(alg.is_nilpotent());
            let g = geometry_report(&alg);
            prop_assert!(g.ricci_is_quarter_killing);
            prop_assert!(g.ricci.is_zero());
            prop_assert!(g.holonomy_closed);
            prop_assert_eq!(g.is_flat, g.holonomy_dim == 0);
        }
    }

    #[test]
    fn ricci_matches_killing_on_solvable_tables(
        coeffs in prop::collection::vec(-2i64..=2, 4),
        diag in prop::collection::vec(-2i64..=2, 3),
    ) {
        if let Some(alg) = skewed_algebra(4, &coeffs, &diag) {
            let g = geometry_report(&alg);
            prop_assert!(g.ricci_is_quarter_killing);
            prop_assert!(g.ricci.is_symmetric());
            prop_assert_eq!(g.is_flat, g.holonomy_dim == 0);
        }
    }

    #[test]
    fn curvature_identities_on_catalog(idx in 0usize..6, seed in any::<u64>()) {
        let entry = &seven_dim_candidates()[idx];
        let c = curvature_identity_checks(&entry.value, 8, seed).unwrap();
        prop_assert!(c.passed(), "{:?}", c);
    }

    #[test]
    fn witt_decomposition_is_valid_after_sign_flip(idx in 0usize..6) {
        let m: MetricLieAlgebra = seven_dim_candidates()[idx].value.negated();
        prop_assert!(m.witt_decomposition().is_valid_for(&m));
    }
}

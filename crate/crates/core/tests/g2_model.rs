use nilg2_core::g2::{self, MElement};
use nilg2_core::linalg::{rat, Mat};
use nilg2_core::Nilpotency;

fn antidiagonal() -> Mat {
    Mat::from_fn(7, 7, |i, j| if i + j == 6 { rat(1) } else { rat(0) })
}

#[test]
fn span_is_fourteen_dimensional_and_closed() {
    let m = g2::model().unwrap();
    assert_eq!(m.span.dim(), 14);
    assert!(m.span.is_commutator_closed());
    assert_eq!(m.m_span.dim(), 6);
    assert!(m.m_span.is_commutator_closed());
}

#[test]
fn invariant_form_is_antidiagonal() {
    let s = g2::invariant_bilinear_form().unwrap();
    assert_eq!(s, antidiagonal());
    assert_eq!(s.signature().unwrap(), (4, 3, 0));
    for g in g2::g2_generators() {
        assert!((&(&g.transpose() * &s) + &(&s * &g)).is_zero());
    }
}

#[test]
fn three_form_components() {
    let (space, phi) = g2::invariant_three_forms().unwrap();
    assert_eq!(space.dim(), 1);
    let expected = [
        ((0, 3, 6), 2),
        ((0, 4, 5), 1),
        ((1, 2, 6), 8),
        ((1, 3, 5), -2),
        ((2, 3, 4), -2),
    ];
    let got = phi.nonzero();
    assert_eq!(got.len(), expected.len());
    for (t, v) in expected {
        assert_eq!(phi.get(t.0, t.1, t.2), rat(v), "component {t:?}");
    }
    // skew-symmetry of the accessor
    assert_eq!(phi.get(6, 3, 0), rat(-2));
    assert_eq!(phi.get(3, 6, 0), rat(2));
}

#[test]
fn stabilizer_is_g2() {
    let (_, phi) = g2::invariant_three_forms().unwrap();
    let stab = g2::stabilizer_in_gl(&phi).unwrap();
    assert_eq!(stab.dim(), 14);
    let model = g2::model().unwrap();
    for g in model.span.generators() {
        assert!(stab.contains(&g.flatten()).unwrap());
    }
}

#[test]
fn killing_form_signature() {
    let alg = g2::structure_constants_of_g2().unwrap();
    assert_eq!(alg.dim(), 14);
    assert!(alg.jacobi_witness().is_none());
    let k = alg.killing_form();
    assert_eq!(k.signature().unwrap(), (8, 6, 0));
    assert!(alg.center().is_zero());
    assert_eq!(alg.derived_algebra().dim(), 14);
}

#[test]
fn m_is_nilpotent_of_class_five() {
    let (alg, class) = g2::m_structure().unwrap();
    assert_eq!(class, Nilpotency::Class(5));
    let dims: Vec<usize> = alg.lower_central_series().iter().map(|s| s.dim()).collect();
    assert_eq!(dims, vec![6, 4, 3, 2, 1, 0]);
}

#[test]
fn m_brackets() {
    let (alg, _) = g2::m_structure().unwrap();
    let e = |i: usize| {
        let mut u = [0i64; 6];
        u[i - 1] = 1;
        u
    };
    let br = |i: usize, j: usize| {
        let c = MElement::from_i64(e(i)).to_matrix().commutator(&MElement::from_i64(e(j)).to_matrix());
        g2::membership_in_m(&c).unwrap()
    };
    let scaled = |i: usize, c: i64| MElement::from_i64(e(i)).scale(&rat(c));
    assert_eq!(br(1, 2), scaled(4, -8));
    assert_eq!(br(1, 3), scaled(2, -1));
    assert_eq!(br(1, 4), scaled(5, 6));
    assert_eq!(br(2, 4), scaled(6, -6));
    assert_eq!(br(3, 5), scaled(6, -1));
    assert_eq!(alg.nonzero_brackets().len(), 5);
}

#[test]
fn m_elements_are_strictly_lower_triangular() {
    for g in g2::m_generators() {
        assert!(g.is_strictly_lower_triangular());
        assert!(g2::membership_in_g2(&g).is_some());
    }
    assert!(g2::membership_in_m(&Mat::identity(7)).is_none());
}

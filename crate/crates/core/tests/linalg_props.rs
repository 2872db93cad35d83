use nilg2_core::linalg::{frac, rat, unit_vec, HomPoly3, Mat, PolyMat, Rational, Subspace, Vector};
use proptest::prelude::*;

fn small_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| Mat::from_i64(rows, cols, &v))
}

fn vectors(count: usize, n: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..=count)
        .prop_map(|vs| vs.into_iter().map(|v| v.into_iter().map(rat).collect()).collect())
}

fn symmetric(n: usize) -> impl Strategy<Value = Mat> {
    small_mat(n, n).prop_map(|m| &m + &m.transpose())
}

proptest! {
    #[test]
    fn rank_equals_transpose_rank(m in (1usize..6, 1usize..6).prop_flat_map(|(r, c)| small_mat(r, c))) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rref_is_canonical_and_idempotent(vs in vectors(6, 5)) {
        let s = Subspace::span(&vs, 5).unwrap();
        let again = Subspace::from_rows(s.basis_vectors(), 5).unwrap();
        prop_assert_eq!(&again, &s);
        let mut rev = vs.clone();
        rev.reverse();
        let scaled: Vec<Vector> = rev.iter().map(|v| v.iter().map(|x| x * rat(-2)).collect()).collect();
        prop_assert_eq!(Subspace::span(&scaled, 5).unwrap(), s.clone());
        let pivots = s.pivots();
        prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        for (row, &p) in pivots.iter().enumerate() {
            for other in 0..s.dim() {
                let expected = if other == row { rat(1) } else { rat(0) };
                prop_assert_eq!(&s.basis()[(other, p)], &expected);
            }
        }
        for v in &vs {
            prop_assert!(s.contains(v).unwrap());
        }
    }

    #[test]
    fn grassmann_identity(a in vectors(4, 6), b in vectors(4, 6)) {
        let s = Subspace::span(&a, 6).unwrap();
        let t = Subspace::span(&b, 6).unwrap();
        let sum = s.sum(&t).unwrap();
        let cap = s.intersect(&t).unwrap();
        prop_assert_eq!(s.dim() + t.dim(), sum.dim() + cap.dim());
        prop_assert!(cap.is_subspace_of(&s).unwrap());
        prop_assert!(cap.is_subspace_of(&t).unwrap());
        prop_assert_eq!(s.intersect(&s).unwrap(), s);
    }

    #[test]
    fn signature_is_congruence_invariant(s in symmetric(4), p in small_mat(4, 4)) {
        prop_assume!(p.determinant().unwrap() != rat(0));
        let congruent = &(&p.transpose() * &s) * &p;
        prop_assert_eq!(s.signature().unwrap(), congruent.signature().unwrap());
        let (a, b, c) = s.signature().unwrap();
        prop_assert_eq!(a + b, s.rank());
        prop_assert_eq!(a + b + c, 4);
    }

    #[test]
    fn nullspace_is_kernel(m in small_mat(3, 5)) {
        let ns = m.nullspace();
        prop_assert_eq!(ns.len() + m.rank(), 5);
        for v in ns {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn inverse_and_solve_agree(m in small_mat(3, 3), b in prop::collection::vec(-4i64..=4, 3)) {
        let b: Vector = b.into_iter().map(rat).collect();
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(&(&m * &inv), &Mat::identity(3));
                prop_assert_eq!(m.solve(&b).unwrap(), inv.mul_vec(&b));
            }
            None => prop_assert_eq!(m.determinant().unwrap(), rat(0)),
        }
    }

    #[test]
    fn nonzero_cubics_do_not_vanish_on_grid(coeffs in prop::collection::vec(-3i64..=3, 10)) {
        let p = HomPoly3::from_coeffs(3, coeffs.iter().map(|&c| rat(c)).collect()).unwrap();
        prop_assert_eq!(p.is_zero(), p.vanishes_on_grid());
    }

    #[test]
    fn product_evaluates_pointwise(
        a in prop::collection::vec(-3i64..=3, 3),
        b in prop::collection::vec(-3i64..=3, 6),
        pt in prop::collection::vec(-5i64..=5, 3),
    ) {
        let p = HomPoly3::from_coeffs(1, a.into_iter().map(rat).collect()).unwrap();
        let q = HomPoly3::from_coeffs(2, b.into_iter().map(rat).collect()).unwrap();
        let pq = p.try_mul(&q).unwrap();
        let x = [pt[0], pt[1], pt[2]];
        prop_assert_eq!(pq.eval_i64(x), p.eval_i64(x) * q.eval_i64(x));
    }

    #[test]
    fn pencil_minors_match_evaluated_determinants(
        gens in prop::collection::vec(small_mat(3, 3), 3),
        pt in prop::collection::vec(-3i64..=3, 3),
    ) {
        let pm = PolyMat::pencil([&gens[0], &gens[1], &gens[2]]).unwrap();
        let minors = pm.minors(3).unwrap();
        let x = [rat(pt[0]), rat(pt[1]), rat(pt[2])];
        let m = pm.eval([&x[0], &x[1], &x[2]]);
        prop_assert_eq!(minors[0].eval([&x[0], &x[1], &x[2]]), m.determinant().unwrap());
    }
}

fn m_matrix_u1() -> Mat {
    nilg2_core::g2::MElement::from_i64([1, 0, 0, 0, 0, 0]).to_matrix()
}

#[test]
fn rank_examples() {
    assert_eq!(Mat::zeros(7, 7).rank(), 0);
    assert_eq!(Mat::identity(7).rank(), 7);
    assert_eq!(m_matrix_u1().rank(), 4);
}

#[test]
fn span_examples() {
    assert!(Subspace::span(&[vec![rat(0); 7]], 7).unwrap().is_zero());
    let e1 = unit_vec(7, 0);
    let s = Subspace::span(&[e1.clone(), e1.iter().map(|x| x * rat(2)).collect(), unit_vec(7, 2)], 7).unwrap();
    assert_eq!(s.basis_vectors(), vec![e1, unit_vec(7, 2)]);
    let m = m_matrix_u1();
    let cols: Vec<Vector> = (0..7).map(|j| m.col(j)).collect();
    assert_eq!(Subspace::span(&cols, 7).unwrap().dim(), 4);
    let a = Subspace::span(&[unit_vec(3, 0), unit_vec(3, 1)], 3).unwrap();
    let b = Subspace::span(&[unit_vec(3, 1), unit_vec(3, 2)], 3).unwrap();
    assert_eq!(a.intersect(&b).unwrap(), Subspace::span(&[unit_vec(3, 1)], 3).unwrap());
}

#[test]
fn signature_examples() {
    let d: Vec<Rational> = [1, 1, 1, 1, -1, -1, -1].iter().map(|&x| rat(x)).collect();
    assert_eq!(Mat::diagonal(&d).signature().unwrap(), (4, 3, 0));
    assert_eq!(Mat::from_i64(2, 2, &[0, 1, 1, 0]).signature().unwrap(), (1, 1, 0));
    let half = Mat::diagonal(&[frac(1, 2), frac(-1, 3)]);
    assert_eq!(half.signature().unwrap(), (1, 1, 0));
    assert!(Mat::from_i64(2, 2, &[0, 1, 0, 0]).signature().is_err());
}

#[test]
fn small_pencil_minors() {
    let i2 = Mat::identity(2);
    let z = Mat::zeros(2, 2);
    let pm = PolyMat::pencil([&i2, &z, &z]).unwrap();
    let m = pm.minors(2).unwrap();
    assert_eq!(m.len(), 1);
    assert_eq!(m[0], HomPoly3::var(0).try_mul(&HomPoly3::var(0)).unwrap());
    let swap = Mat::from_i64(2, 2, &[0, 1, 1, 0]);
    let pm = PolyMat::pencil([&i2, &swap, &z]).unwrap();
    let a2 = HomPoly3::var(0).try_mul(&HomPoly3::var(0)).unwrap();
    let b2 = HomPoly3::var(1).try_mul(&HomPoly3::var(1)).unwrap();
    assert_eq!(pm.minors(2).unwrap()[0], a2.try_sub(&b2).unwrap());
}

//! The 14-parameter matrix model of split g2 inside so(4,3), its maximal
//! strictly lower triangular subalgebra `m`, and the invariant bilinear
//! form and three-form it preserves.
//!
//! Matrices act on `R^7` in a Witt basis. Parameters are `u1..u14` for g2
//! and `u1..u6` for `m`; `m` is the g2 family with `u7..u14 = 0`.

use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Nilpotency};
use crate::linalg::poly::combinations;
use crate::linalg::rational::primitive_integer;
use crate::linalg::{frac, rat, unit_vec, zero_vec, Mat, MatrixSpan, Rational, Subspace, Vector};

pub const N: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G2Element {
    pub u: [Rational; 14],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MElement {
    pub u: [Rational; 6],
}

impl G2Element {
    pub fn from_slice(u: &[Rational]) -> Self {
        Self {
            u: std::array::from_fn(|i| u[i].clone()),
        }
    }

    pub fn basis(i: usize) -> Self {
        Self::from_slice(&unit_vec(14, i))
    }

    pub fn to_matrix(&self) -> Mat {
        g2_to_matrix(&self.u)
    }
}

impl MElement {
    pub fn from_slice(u: &[Rational]) -> Self {
        Self {
            u: std::array::from_fn(|i| u[i].clone()),
        }
    }

    pub fn from_i64(u: [i64; 6]) -> Self {
        Self { u: u.map(rat) }
    }

    pub fn zero() -> Self {
        Self::from_slice(&zero_vec(6))
    }

    pub fn to_matrix(&self) -> Mat {
        m_to_matrix(&self.u)
    }

    pub fn as_g2(&self) -> G2Element {
        let mut u = zero_vec(14);
        u[..6].clone_from_slice(&self.u);
        G2Element::from_slice(&u)
    }

    pub fn is_zero(&self) -> bool {
        self.u.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &MElement) -> MElement {
        MElement {
            u: std::array::from_fn(|i| &self.u[i] + &other.u[i]),
        }
    }

    pub fn scale(&self, c: &Rational) -> MElement {
        MElement {
            u: std::array::from_fn(|i| c * &self.u[i]),
        }
    }
}

/// The g2 matrix for parameters `u[0..14] = (u1, ..., u14)`.
///
/// Entry (5,7) is `-u10`: skew-symmetry against the antidiagonal form
/// pairs it with entry (1,3) = `u10`, and with it the span closes under
/// commutators.
pub fn g2_to_matrix(u: &[Rational]) -> Mat {
    assert_eq!(u.len(), 14);
    let p = |i: usize| u[i - 1].clone();
    let c = |n: i64, d: i64, i: usize| frac(n, d) * &u[i - 1];
    let z = Rational::zero;
    let rows: [[Rational; N]; N] = [
        [p(7), p(9), p(10), p(12), p(13), p(14), z()],
        [p(1), p(8), p(11), c(1, 2, 10), c(-1, 4, 12), z(), -p(14)],
        [p(2), p(3), p(7) - p(8), c(-1, 2, 9), z(), c(1, 4, 12), -p(13)],
        [p(4), c(4, 1, 2), c(-4, 1, 1), z(), c(1, 2, 9), c(-1, 2, 10), -p(12)],
        [p(5), c(-2, 1, 4), z(), c(4, 1, 1), p(8) - p(7), -p(11), -p(10)],
        [p(6), z(), c(2, 1, 4), c(-4, 1, 2), -p(3), -p(8), -p(9)],
        [z(), -p(6), -p(5), -p(4), -p(2), -p(1), -p(7)],
    ];
    Mat::from_fn(N, N, |i, j| rows[i][j].clone())
}

pub fn m_to_matrix(u: &[Rational]) -> Mat {
    assert_eq!(u.len(), 6);
    let mut full = zero_vec(14);
    full[..6].clone_from_slice(u);
    g2_to_matrix(&full)
}

/// Alternating three-form on `R^7`, stored by its components `phi_ijk`
/// for `i < j < k` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeForm {
    comps: Vec<Rational>,
}

fn triples() -> &'static [Vec<usize>] {
    static T: OnceLock<Vec<Vec<usize>>> = OnceLock::new();
    T.get_or_init(|| combinations(N, 3))
}

fn triple_index(mut t: [usize; 3]) -> Option<(usize, bool)> {
    if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
        return None;
    }
    let mut odd = false;
    for a in 0..3 {
        for b in 0..2 - a {
            if t[b] > t[b + 1] {
                t.swap(b, b + 1);
                odd = !odd;
            }
        }
    }
    let idx = triples()
        .iter()
        .position(|x| x[..] == t[..])
        .expect("sorted distinct triple");
    Some((idx, odd))
}

impl ThreeForm {
    pub fn from_components(comps: Vector) -> Result<Self> {
        if comps.len() != 35 {
            return Err(Error::DimensionMismatch {
                expected: 35,
                found: comps.len(),
            });
        }
        Ok(Self { comps })
    }

    /// `e^i ∧ e^j ∧ e^k` (zero-based indices).
    pub fn elementary(i: usize, j: usize, k: usize) -> Self {
        let mut comps = zero_vec(35);
        if let Some((idx, odd)) = triple_index([i, j, k]) {
            comps[idx] = rat(if odd { -1 } else { 1 });
        }
        Self { comps }
    }

    pub fn components(&self) -> &[Rational] {
        &self.comps
    }

    /// `phi(e_i, e_j, e_k)` with the alternating sign.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Rational {
        match triple_index([i, j, k]) {
            None => Rational::zero(),
            Some((idx, odd)) => {
                if odd {
                    -self.comps[idx].clone()
                } else {
                    self.comps[idx].clone()
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Zero::is_zero)
    }

    /// Nonzero components as `((i, j, k), value)`, zero-based.
    pub fn nonzero(&self) -> Vec<((usize, usize, usize), Rational)> {
        triples()
            .iter()
            .zip(&self.comps)
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| ((t[0], t[1], t[2]), c.clone()))
            .collect()
    }

    /// `(A·phi)(x,y,z) = -phi(Ax,y,z) - phi(x,Ay,z) - phi(x,y,Az)`.
    pub fn act(&self, a: &Mat) -> ThreeForm {
        ThreeForm {
            comps: action_matrix(a).mul_vec(&self.comps),
        }
    }
}

/// The 35x35 matrix of `phi -> A·phi`.
pub fn action_matrix(a: &Mat) -> Mat {
    let mut out = Mat::zeros(35, 35);
    for (row, t) in triples().iter().enumerate() {
        for pos in 0..3 {
            for m in 0..N {
                let coeff = &a[(m, t[pos])];
                if coeff.is_zero() {
                    continue;
                }
                let mut args = [t[0], t[1], t[2]];
                args[pos] = m;
                if let Some((col, odd)) = triple_index(args) {
                    if odd {
                        out[(row, col)] += coeff;
                    } else {
                        out[(row, col)] -= coeff;
                    }
                }
            }
        }
    }
    out
}

/// Derived data of the model, computed once.
pub struct G2Model {
    pub span: MatrixSpan,
    pub m_span: MatrixSpan,
    pub algebra: LieAlgebra,
    pub form: Mat,
    pub three_forms: Subspace,
    pub phi: ThreeForm,
}

static MODEL: OnceLock<std::result::Result<G2Model, Error>> = OnceLock::new();

pub fn model() -> Result<&'static G2Model> {
    MODEL
        .get_or_init(|| {
            let span = MatrixSpan::new(g2_generators())?;
            let m_span = MatrixSpan::new(m_generators())?;
            let algebra = LieAlgebra::from_matrix_span(&span, param_labels(14))?;
            let form = invariant_bilinear_form_of(span.generators())?;
            let (three_forms, phi) = invariant_three_forms_of(span.generators())?;
            Ok(G2Model {
                span,
                m_span,
                algebra,
                form,
                three_forms,
                phi,
            })
        })
        .as_ref()
        .map_err(Clone::clone)
}

pub fn param_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("u{i}")).collect()
}

pub fn g2_generators() -> Vec<Mat> {
    (0..14).map(|i| g2_to_matrix(&unit_vec(14, i))).collect()
}

pub fn m_generators() -> Vec<Mat> {
    (0..6).map(|i| m_to_matrix(&unit_vec(6, i))).collect()
}

/// Structure constants of the 14-dim span; fails if some commutator
/// leaves it.
pub fn structure_constants_of_g2() -> Result<LieAlgebra> {
    Ok(model()?.algebra.clone())
}

/// Solves `G^T S + S G = 0` over all generators. The solution space must
/// be one-dimensional; returns its primitive integer representative with
/// signature `(4, 3)`.
pub fn invariant_bilinear_form() -> Result<Mat> {
    Ok(model()?.form.clone())
}

fn invariant_bilinear_form_of(gens: &[Mat]) -> Result<Mat> {
    let slots: Vec<(usize, usize)> = (0..N).flat_map(|i| (i..N).map(move |j| (i, j))).collect();
    let basis: Vec<Mat> = slots
        .iter()
        .map(|&(i, j)| {
            let mut s = Mat::zeros(N, N);
            s[(i, j)] = rat(1);
            s[(j, i)] = rat(1);
            s
        })
        .collect();
    let mut cols: Vec<Vector> = vec![Vec::new(); slots.len()];
    for g in gens {
        for (c, s) in basis.iter().enumerate() {
            cols[c].extend((&(&g.transpose() * s) + &(s * g)).flatten());
        }
    }
    let sys = Mat::from_cols(cols[0].len(), &cols)?;
    let ns = sys.nullspace();
    if ns.len() != 1 {
        return Err(Error::NotUnique(ns.len()));
    }
    let v = primitive_integer(&ns[0]);
    let mut s = Mat::zeros(N, N);
    for (c, &(i, j)) in v.iter().zip(&slots) {
        s[(i, j)] = c.clone();
        s[(j, i)] = c.clone();
    }
    let (p, q, _) = s.signature()?;
    Ok(if p < q { -&s } else { s })
}

/// The one-dimensional space of three-forms annihilated by every
/// generator, and its primitive integer generator whose first nonzero
/// component is positive.
pub fn invariant_three_forms() -> Result<(Subspace, ThreeForm)> {
    let m = model()?;
    Ok((m.three_forms.clone(), m.phi.clone()))
}

fn invariant_three_forms_of(gens: &[Mat]) -> Result<(Subspace, ThreeForm)> {
    let mut rows = Vec::new();
    for g in gens {
        rows.extend(action_matrix(g).row_vectors());
    }
    let sys = Mat::from_rows(35, &rows)?;
    let ns = sys.nullspace();
    if ns.len() != 1 {
        return Err(Error::NotUnique(ns.len()));
    }
    let phi = ThreeForm::from_components(primitive_integer(&ns[0]))?;
    Ok((Subspace::span(&ns, 35)?, phi))
}

/// All `A` in gl(7) with `A·phi = 0`, as a subspace of the 49-dim space of
/// row-major flattened matrices.
pub fn stabilizer_in_gl(phi: &ThreeForm) -> Result<Subspace> {
    if phi.is_zero() {
        return Err(Error::InvalidArgument("three-form must be nonzero".into()));
    }
    let cols: Vec<Vector> = (0..N * N)
        .map(|e| {
            let mut a = Mat::zeros(N, N);
            a[(e / N, e % N)] = rat(1);
            phi.act(&a).components().to_vec()
        })
        .collect();
    let sys = Mat::from_cols(35, &cols)?;
    Subspace::from_rows(sys.nullspace(), N * N)
}

pub fn membership_in_m(m: &Mat) -> Option<MElement> {
    let model = model().ok()?;
    model.m_span.coordinates(m).map(|c| MElement::from_slice(&c))
}

pub fn membership_in_g2(m: &Mat) -> Option<G2Element> {
    let model = model().ok()?;
    model.span.coordinates(m).map(|c| G2Element::from_slice(&c))
}

/// Structure constants of `m` and its nilpotency class.
pub fn m_structure() -> Result<(LieAlgebra, Nilpotency)> {
    let alg = LieAlgebra::from_matrix_span(&model()?.m_span, param_labels(6))?;
    let class = alg.nilpotency_class();
    Ok((alg, class))
}

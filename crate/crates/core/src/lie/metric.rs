//! Lie algebras with an invariant scalar product.

use num_traits::{One, Zero};

use super::algebra::LieAlgebra;
use super::format_vector;
use crate::error::{Error, Result};
use crate::linalg::rational::{add_scaled, max_abs, scale_vec};
use crate::linalg::{dot, unit_vec, Mat, Rational, Subspace, Vector};

/// A Lie algebra together with a nondegenerate symmetric form satisfying
/// `<[x,y],z> + <y,[x,z]> = 0`. Both properties are checked on
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricLieAlgebra {
    algebra: LieAlgebra,
    form: Mat,
}

/// `n = j* ⊕ w ⊕ j` with `j`, `j*` totally isotropic and dually paired and
/// `w` orthogonal to both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittDecomposition {
    pub j_star: Subspace,
    pub w: Subspace,
    pub j: Subspace,
    /// Basis of `j*` dual to `j_basis`.
    pub j_star_basis: Vec<Vector>,
    /// Canonical basis of `j`.
    pub j_basis: Vec<Vector>,
    /// `<j_star_basis[k], j_basis[l]>`; the identity by construction.
    pub pairing: Mat,
}

impl MetricLieAlgebra {
    pub fn new(algebra: LieAlgebra, form: Mat) -> Result<Self> {
        let n = algebra.dim();
        if form.rows() != n || form.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: form.rows(),
            });
        }
        if !form.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let rank = form.rank();
        if rank < n {
            return Err(Error::Degenerate { rank, dim: n });
        }
        let m = Self { algebra, form };
        if let Some((x, y, z, r)) = m.invariance_witness() {
            let l = m.algebra.labels();
            return Err(Error::Invariance {
                x: l[x].clone(),
                y: l[y].clone(),
                z: l[z].clone(),
                bracket: format_vector(l, &m.algebra.bracket_basis(x, y)),
                residual: r.to_string(),
            });
        }
        Ok(m)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn form(&self) -> &Mat {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn pairing(&self, u: &[Rational], v: &[Rational]) -> Rational {
        dot(u, &self.form.mul_vec(v))
    }

    fn residual(&self, x: usize, y: usize, z: usize) -> Rational {
        let n = self.dim();
        let xy = self.algebra.bracket_basis(x, y);
        let xz = self.algebra.bracket_basis(x, z);
        self.pairing(&xy, &unit_vec(n, z)) + self.pairing(&unit_vec(n, y), &xz)
    }

    fn invariance_witness(&self) -> Option<(usize, usize, usize, Rational)> {
        let n = self.dim();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let r = self.residual(x, y, z);
                    if !r.is_zero() {
                        return Some((x, y, z, r));
                    }
                }
            }
        }
        None
    }

    /// Largest `|<[x,y],z> + <y,[x,z]>|` over basis triples.
    pub fn invariance_residual(&self) -> Rational {
        let n = self.dim();
        let mut all = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    all.push(self.residual(x, y, z));
                }
            }
        }
        max_abs(&all)
    }

    /// `(p, q)`; the form is nondegenerate, so there is no null part.
    pub fn signature(&self) -> (usize, usize) {
        let (p, q, _) = self.form.signature().expect("form is symmetric");
        (p, q)
    }

    /// `+1` when `p >= q`, else `-1`.
    pub fn epsilon(&self) -> i64 {
        let (p, q) = self.signature();
        if p >= q {
            1
        } else {
            -1
        }
    }

    /// `j = z(n) ∩ [n, n]`.
    pub fn isotropic_ideal_j(&self) -> Subspace {
        self.algebra
            .center()
            .intersect(&self.algebra.derived_algebra())
            .expect("same ambient dimension")
    }

    pub fn orthogonal_complement(&self, s: &Subspace) -> Result<Subspace> {
        s.orthogonal_complement(&self.form)
    }

    /// Same algebra with the form negated, swapping `(p, q)`.
    pub fn negated(&self) -> Self {
        Self {
            algebra: self.algebra.clone(),
            form: -&self.form,
        }
    }

    /// Flips the sign of the form when `p < q`.
    pub fn with_positive_majority(&self) -> (Self, bool) {
        let (p, q) = self.signature();
        if p < q {
            (self.negated(), true)
        } else {
            (self.clone(), false)
        }
    }

    pub fn orthogonal_direct_sum(&self, other: &MetricLieAlgebra) -> Result<Self> {
        let (n, m) = (self.dim(), other.dim());
        let algebra = self.algebra.direct_sum(&other.algebra)?;
        let form = Mat::from_fn(n + m, n + m, |i, j| {
            if i < n && j < n {
                self.form[(i, j)].clone()
            } else if i >= n && j >= n {
                other.form[(i - n, j - n)].clone()
            } else {
                Rational::zero()
            }
        });
        Self::new(algebra, form)
    }

    /// Deterministic Witt decomposition.
    ///
    /// `w` is spanned by the canonical basis rows of `j^⊥` that are not in
    /// the span of `j` and the rows already taken, in ascending order. `j*`
    /// is built by hyperbolic completion: for each canonical basis vector
    /// `z_k` of `j`, the lowest coordinate vector with nonzero pairing
    /// (after removing the components along earlier pairs) is normalized to
    /// `<a_k, z_l> = δ_kl`, projected off `w`, and finally made isotropic by
    /// `a_k -= 1/2 sum_l <a_k, a_l> z_l`.
    pub fn witt_decomposition(&self) -> WittDecomposition {
        let n = self.dim();
        let j = self.isotropic_ideal_j();
        let j_perp = self.orthogonal_complement(&j).expect("same ambient");
        let z = j.basis_vectors();

        let mut taken = j.clone();
        let mut w_rows = Vec::new();
        for row in j_perp.basis_vectors() {
            if !taken.contains(&row).expect("ambient") {
                taken = taken.sum(&Subspace::span([&row], n).expect("ambient")).expect("ambient");
                w_rows.push(row);
            }
        }
        let w = Subspace::span(&w_rows, n).expect("ambient");

        let mut a: Vec<Vector> = Vec::with_capacity(z.len());
        for zk in z.iter() {
            let mut chosen = None;
            for m in 0..n {
                let mut x = unit_vec(n, m);
                for (l, al) in a.iter().enumerate() {
                    let c = self.pairing(&unit_vec(n, m), &z[l]);
                    add_scaled(&mut x, &-c, al);
                }
                let p = self.pairing(&x, zk);
                if !p.is_zero() {
                    chosen = Some(scale_vec(&p.recip(), &x));
                    break;
                }
            }
            let ak = chosen.expect("nondegenerate form pairs every nonzero vector");
            for al in a.iter_mut() {
                let c = self.pairing(al, zk);
                add_scaled(al, &-c, &ak);
            }
            a.push(ak);
        }

        // Project off w.
        let wb = w.basis_vectors();
        if !wb.is_empty() {
            let gram_inv = w.gram(&self.form).inverse().expect("w is nondegenerate");
            for ak in a.iter_mut() {
                let pw: Vector = wb.iter().map(|wi| self.pairing(wi, ak)).collect();
                let coeffs = gram_inv.mul_vec(&pw);
                for (c, wi) in coeffs.iter().zip(&wb) {
                    add_scaled(ak, &-c.clone(), wi);
                }
            }
        }

        // Make j* totally isotropic.
        let half = Rational::one() / Rational::from_integer(2.into());
        let gram: Vec<Vec<Rational>> = a
            .iter()
            .map(|x| a.iter().map(|y| self.pairing(x, y)).collect())
            .collect();
        for (k, ak) in a.iter_mut().enumerate() {
            for (l, zl) in z.iter().enumerate() {
                add_scaled(ak, &-(&half * &gram[k][l]), zl);
            }
        }

        let pairing = Mat::from_fn(a.len(), z.len(), |k, l| self.pairing(&a[k], &z[l]));
        WittDecomposition {
            j_star: Subspace::span(&a, n).expect("ambient"),
            w,
            j,
            j_star_basis: a,
            j_basis: z,
            pairing,
        }
    }
}

impl WittDecomposition {
    /// Checks every defining property against `m`.
    pub fn is_valid_for(&self, m: &MetricLieAlgebra) -> bool {
        let f = m.form();
        let d = self.j.dim();
        let whole = self
            .j_star
            .sum(&self.w)
            .and_then(|s| s.sum(&self.j))
            .map(|s| s.dim() == m.dim())
            .unwrap_or(false);
        let dims_add = self.j_star.dim() + self.w.dim() + d == m.dim();
        let w_orth = self.w.basis_vectors().iter().all(|x| {
            self.j_star_basis
                .iter()
                .chain(&self.j_basis)
                .all(|y| m.pairing(x, y).is_zero())
        });
        let (p, q) = m.signature();
        let w_sig = self.w.gram(f).signature().ok();
        whole
            && dims_add
            && self.pairing == Mat::identity(d)
            && self.j.is_totally_isotropic(f)
            && self.j_star.is_totally_isotropic(f)
            && w_orth
            && w_sig == Some((p.wrapping_sub(d), q.wrapping_sub(d), 0))
    }
}

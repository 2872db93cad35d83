//! Canonical subspaces of `Q^n`.

use num_traits::Zero;

use super::mat::Mat;
use super::rational::{dot, Rational, Vector};
use crate::error::{Error, Result};

/// A linear subspace stored by the reduced row echelon form of a basis.
///
/// The echelon form is unique, so two subspaces are equal exactly when
/// their stored bases are equal entrywise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Mat::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Mat::identity(ambient),
        }
    }

    /// Span of `vectors`, each of length `ambient`.
    pub fn span<'a>(vectors: impl IntoIterator<Item = &'a Vector>, ambient: usize) -> Result<Self> {
        let rows: Vec<Vector> = vectors.into_iter().cloned().collect();
        Self::from_rows(rows, ambient)
    }

    pub fn from_rows(rows: Vec<Vector>, ambient: usize) -> Result<Self> {
        if rows.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = Mat::from_rows(ambient, &rows)?;
        let (r, pivots) = m.rref();
        let basis = Mat::from_rows(ambient, &r.row_vectors()[..pivots.len()])?;
        Ok(Self { ambient, basis })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical basis as matrix rows.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    /// Pivot column of each canonical basis row.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("echelon rows are nonzero")
            })
            .collect()
    }

    fn check(&self, other: usize) -> Result<()> {
        if self.ambient != other {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other,
            })
        } else {
            Ok(())
        }
    }

    /// Membership test; reduces `v` against the echelon basis.
    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        self.check(v.len())?;
        Ok(self.coordinates(v)?.is_some())
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vector>> {
        self.check(v.len())?;
        let pivots = self.pivots();
        let coords: Vector = pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (c, row) in coords.iter().zip(self.basis.row_vectors()) {
            super::rational::add_scaled(&mut rest, &-c.clone(), &row);
        }
        Ok(if super::is_zero_vec(&rest) {
            Some(coords)
        } else {
            None
        })
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other.ambient)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Self::from_rows(rows, self.ambient)
    }

    /// Annihilator under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        let ns = self.basis.nullspace();
        Self::from_rows(ns, self.ambient).expect("nullspace vectors have ambient length")
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other.ambient)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check(other.ambient)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Orthogonal complement under the bilinear form `form`.
    pub fn orthogonal_complement(&self, form: &Mat) -> Result<Subspace> {
        self.check(form.rows())?;
        if self.is_zero() {
            return Ok(Self::full(self.ambient));
        }
        let images: Vec<Vector> = self
            .basis_vectors()
            .iter()
            .map(|s| form.transpose().mul_vec(s))
            .collect();
        Ok(Self::span(&images, self.ambient)?.annihilator())
    }

    /// Whether `form(v, w) = 0` for all `v, w` in the subspace.
    pub fn is_totally_isotropic(&self, form: &Mat) -> bool {
        let b = self.basis_vectors();
        b.iter()
            .all(|v| b.iter().all(|w| dot(v, &form.mul_vec(w)).is_zero()))
    }

    /// Gram matrix of `form` on the canonical basis.
    pub fn gram(&self, form: &Mat) -> Mat {
        let b = self.basis_vectors();
        Mat::from_fn(b.len(), b.len(), |i, j| dot(&b[i], &form.mul_vec(&b[j])))
    }
}

//! Spans of linearly independent matrices with exact coordinate recovery.

use super::mat::Mat;
use super::rational::{add_scaled, zero_vec, Rational, Vector};
use super::subspace::Subspace;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct MatrixSpan {
    rows: usize,
    cols: usize,
    gens: Vec<Mat>,
    /// Flattened entry positions on which the generators are independent.
    pivots: Vec<usize>,
    /// Inverse of the generator values at `pivots` (row i = generator i).
    inv: Mat,
}

impl MatrixSpan {
    /// Fails when the generators are linearly dependent or differ in shape.
    pub fn new(gens: Vec<Mat>) -> Result<Self> {
        let (rows, cols) = gens.first().map_or((0, 0), |g| (g.rows(), g.cols()));
        let flat: Vec<Vector> = gens.iter().map(Mat::flatten).collect();
        let m = Mat::from_rows(rows * cols, &flat)?;
        let (_, pivots) = m.rref();
        if pivots.len() != gens.len() {
            return Err(Error::InvalidArgument(format!(
                "{} matrices span only {} dimensions",
                gens.len(),
                pivots.len()
            )));
        }
        let k = gens.len();
        let at = Mat::from_fn(k, k, |i, j| gens[i].entries()[pivots[j]].clone());
        let inv = at.inverse().expect("pivot minor is invertible");
        Ok(Self {
            rows,
            cols,
            gens,
            pivots,
            inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[Mat] {
        &self.gens
    }

    /// `sum_i c_i * gens[i]`.
    pub fn combine(&self, c: &[Rational]) -> Mat {
        assert_eq!(c.len(), self.gens.len());
        let mut acc = zero_vec(self.rows * self.cols);
        for (ci, g) in c.iter().zip(&self.gens) {
            add_scaled(&mut acc, ci, g.entries());
        }
        Mat::unflatten(self.rows, self.cols, &acc)
    }

    /// The unique coefficient vector reproducing `m`, or `None` when `m`
    /// lies outside the span.
    pub fn coordinates(&self, m: &Mat) -> Option<Vector> {
        if (m.rows(), m.cols()) != (self.rows, self.cols) {
            return None;
        }
        let y: Vector = self.pivots.iter().map(|&p| m.entries()[p].clone()).collect();
        // c * at = y  =>  c = y * inv
        let c = self.inv.transpose().mul_vec(&y);
        if &self.combine(&c) == m {
            Some(c)
        } else {
            None
        }
    }

    /// The span as a canonical subspace of `rows*cols`-space.
    pub fn subspace(&self) -> Subspace {
        let flat: Vec<Vector> = self.gens.iter().map(Mat::flatten).collect();
        Subspace::span(&flat, self.rows * self.cols).expect("uniform shape")
    }

    /// Whether every pairwise commutator stays in the span.
    pub fn is_commutator_closed(&self) -> bool {
        self.closure_failure().is_none()
    }

    /// First generator pair whose commutator leaves the span.
    pub fn closure_failure(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                if self.coordinates(&self.gens[i].commutator(&self.gens[j])).is_none() {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn recovers_coordinates_and_rejects_outsiders() {
        let e = |i: usize, j: usize| {
            let mut m = Mat::zeros(2, 2);
            m[(i, j)] = rat(1);
            m
        };
        let span = MatrixSpan::new(vec![e(0, 1), &e(0, 0) - &e(1, 1)]).unwrap();
        let m = span.combine(&[rat(3), rat(-2)]);
        assert_eq!(span.coordinates(&m), Some(vec![rat(3), rat(-2)]));
        assert_eq!(span.coordinates(&Mat::identity(2)), None);
        assert!(span.is_commutator_closed());
        assert!(MatrixSpan::new(vec![e(0, 1), e(0, 1)]).is_err());
    }
}

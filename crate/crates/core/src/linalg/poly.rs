//! Homogeneous polynomials of degree at most three in three variables.
//!
//! These carry the symbolic minors of three-parameter matrix pencils
//! `a*Q1 + b*Q2 + c*Q3`, where every minor of size at most three is a
//! homogeneous cubic or lower.

use std::fmt;

use num_traits::Zero;

use super::mat::Mat;
use super::rational::{rat, Rational};
use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 3;

/// Exponents `(i, j, k)` with `i + j + k = degree`, in lexicographically
/// decreasing order.
pub fn monomials(degree: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for i in (0..=degree).rev() {
        for j in (0..=degree - i).rev() {
            out.push([i, j, degree - i - j]);
        }
    }
    out
}

fn monomial_index(degree: u32, e: [u32; 3]) -> usize {
    // Position of (i, j, k) in `monomials(degree)`.
    let i = e[0];
    let before: u32 = ((i + 1)..=degree).map(|t| degree - t + 1).sum();
    (before + (degree - i - e[1])) as usize
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomPoly3 {
    degree: u32,
    coeffs: Vec<Rational>,
}

impl HomPoly3 {
    pub fn zero() -> Self {
        Self {
            degree: 0,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self {
            degree: 0,
            coeffs: vec![c],
        }
    }

    /// `a*x + b*y + c*z`.
    pub fn linear(a: Rational, b: Rational, c: Rational) -> Self {
        Self {
            degree: 1,
            coeffs: vec![a, b, c],
        }
    }

    /// The `i`-th variable.
    pub fn var(i: usize) -> Self {
        let mut c = vec![Rational::zero(); 3];
        c[i] = rat(1);
        Self {
            degree: 1,
            coeffs: c,
        }
    }

    pub fn from_coeffs(degree: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::DegreeOverflow(degree));
        }
        let n = monomials(degree).len();
        if coeffs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: coeffs.len(),
            });
        }
        Ok(Self { degree, coeffs })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: [u32; 3]) -> Rational {
        if e.iter().sum::<u32>() != self.degree {
            return Rational::zero();
        }
        self.coeffs[monomial_index(self.degree, e)].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero terms as `(exponents, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = ([u32; 3], &Rational)> {
        monomials(self.degree)
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn eval(&self, p: [&Rational; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in self.terms() {
            let mut t = c.clone();
            for v in 0..3 {
                for _ in 0..e[v] {
                    t *= p[v];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_i64(&self, p: [i64; 3]) -> Rational {
        let p = p.map(rat);
        self.eval([&p[0], &p[1], &p[2]])
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(Self {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let degree = self.degree + other.degree;
        if degree > MAX_DEGREE {
            return Err(Error::DegreeOverflow(degree));
        }
        let mut coeffs = vec![Rational::zero(); monomials(degree).len()];
        for (ea, a) in self.terms() {
            for (eb, b) in other.terms() {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                coeffs[monomial_index(degree, e)] += a * b;
            }
        }
        Ok(Self { degree, coeffs })
    }

    /// Whether every monomial has at least `e[v]` powers of variable `v`.
    pub fn divisible_by_monomial(&self, e: [u32; 3]) -> bool {
        self.terms().all(|(m, _)| (0..3).all(|v| m[v] >= e[v]))
    }

    /// Evaluates on the tensor grid `{0..3}^3`.
    ///
    /// A polynomial whose degree in each variable is at most three is
    /// determined by these 64 values, so vanishing here is equivalent to
    /// being the zero polynomial.
    pub fn vanishes_on_grid(&self) -> bool {
        (0..4i64).all(|a| (0..4).all(|b| (0..4).all(|c| self.eval_i64([a, b, c]).is_zero())))
    }
}

impl fmt::Debug for HomPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl HomPoly3 {
    /// Renders the polynomial with the given variable names.
    pub fn display_with(&self, names: [&str; 3]) -> String {
        let mut out = String::new();
        for (e, c) in self.terms() {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&format!("({c})"));
            for v in 0..3 {
                match e[v] {
                    0 => {}
                    1 => out.push_str(&format!("*{}", names[v])),
                    n => out.push_str(&format!("*{}^{}", names[v], n)),
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for HomPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(["a", "b", "c"]))
    }
}

/// A matrix with polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMat {
    rows: usize,
    cols: usize,
    data: Vec<HomPoly3>,
}

impl PolyMat {
    /// The pencil `a*q[0] + b*q[1] + c*q[2]`.
    pub fn pencil(q: [&Mat; 3]) -> Result<Self> {
        let (rows, cols) = (q[0].rows(), q[0].cols());
        for m in &q[1..] {
            if (m.rows(), m.cols()) != (rows, cols) {
                return Err(Error::DimensionMismatch {
                    expected: rows * cols,
                    found: m.rows() * m.cols(),
                });
            }
        }
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(HomPoly3::linear(
                    q[0][(i, j)].clone(),
                    q[1][(i, j)].clone(),
                    q[2][(i, j)].clone(),
                ));
            }
        }
        Ok(Self { rows, cols, data })
    }

    /// Matrix whose columns are the given polynomial vectors.
    pub fn from_columns(cols: &[Vec<HomPoly3>]) -> Result<Self> {
        let rows = cols.first().map_or(0, Vec::len);
        if let Some(c) = cols.iter().find(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch {
                expected: rows,
                found: c.len(),
            });
        }
        let mut data = Vec::with_capacity(rows * cols.len());
        for i in 0..rows {
            for c in cols {
                data.push(c[i].clone());
            }
        }
        Ok(Self {
            rows,
            cols: cols.len(),
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &HomPoly3 {
        &self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<HomPoly3> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn eval(&self, p: [&Rational; 3]) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| self.get(i, j).eval(p))
    }

    fn minor_det(&self, r: &[usize], c: &[usize]) -> Result<HomPoly3> {
        let e = |a: usize, b: usize| self.get(r[a], c[b]);
        match r.len() {
            1 => Ok(e(0, 0).clone()),
            2 => e(0, 0).try_mul(e(1, 1))?.try_sub(&e(0, 1).try_mul(e(1, 0))?),
            3 => {
                let mut acc = HomPoly3::zero();
                for (p, sign) in [
                    ([0, 1, 2], false),
                    ([1, 2, 0], false),
                    ([2, 0, 1], false),
                    ([0, 2, 1], true),
                    ([1, 0, 2], true),
                    ([2, 1, 0], true),
                ] {
                    let t = e(0, p[0]).try_mul(e(1, p[1]))?.try_mul(e(2, p[2]))?;
                    acc = if sign { acc.try_sub(&t)? } else { acc.try_add(&t)? };
                }
                Ok(acc)
            }
            k => Err(Error::MinorSize(k)),
        }
    }

    /// All `k x k` minors, rows and columns in lexicographic order.
    pub fn minors(&self, k: usize) -> Result<Vec<HomPoly3>> {
        if !(1..=3).contains(&k) {
            return Err(Error::MinorSize(k));
        }
        let rs = combinations(self.rows, k);
        let cs = combinations(self.cols, k);
        let mut out = Vec::with_capacity(rs.len() * cs.len());
        for r in &rs {
            for c in &cs {
                out.push(self.minor_det(r, c)?);
            }
        }
        Ok(out)
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_indexing_roundtrips() {
        for d in 0..=3 {
            for (n, e) in monomials(d).into_iter().enumerate() {
                assert_eq!(monomial_index(d, e), n);
            }
        }
        assert_eq!(monomials(3).len(), 10);
    }

    #[test]
    fn scalar_pencil_minor() {
        let i2 = Mat::identity(2);
        let z = Mat::zeros(2, 2);
        let p = PolyMat::pencil([&i2, &z, &z]).unwrap();
        let m = p.minors(2).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0], HomPoly3::var(0).try_mul(&HomPoly3::var(0)).unwrap());
    }

    #[test]
    fn symmetric_pencil_minor() {
        let i2 = Mat::identity(2);
        let swap = Mat::from_i64(2, 2, &[0, 1, 1, 0]);
        let z = Mat::zeros(2, 2);
        let m = PolyMat::pencil([&i2, &swap, &z]).unwrap().minors(2).unwrap();
        let a2 = HomPoly3::var(0).try_mul(&HomPoly3::var(0)).unwrap();
        let b2 = HomPoly3::var(1).try_mul(&HomPoly3::var(1)).unwrap();
        assert_eq!(m[0], a2.try_sub(&b2).unwrap());
    }

    #[test]
    fn degree_overflow_is_reported() {
        let a = HomPoly3::var(0);
        let a2 = a.try_mul(&a).unwrap();
        let a4 = a2.try_mul(&a2);
        assert_eq!(a4, Err(Error::DegreeOverflow(4)));
        assert!(HomPoly3::var(0).try_add(&a2).is_err());
        assert!(PolyMat::pencil([&Mat::identity(4), &Mat::identity(4), &Mat::identity(4)])
            .unwrap()
            .minors(4)
            .is_err());
    }

    #[test]
    fn nonzero_cubic_is_detected_by_grid() {
        let c = HomPoly3::from_coeffs(3, (0..10).map(|i| rat(i - 4)).collect()).unwrap();
        assert!(!c.vanishes_on_grid());
        assert!(HomPoly3::zero().vanishes_on_grid());
    }
}

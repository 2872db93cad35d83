//! Lie algebras given by structure constants on an ordered basis.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, unit_vec, zero_vec, Mat, MatrixSpan, Rational, Subspace, Vector};
use crate::linalg::rational::max_abs;

/// Result of the nilpotency test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    /// Largest `k` with `C^k != 0`, where `C^1 = L` and `C^{k+1} = [L, C^k]`.
    Class(usize),
    NotNilpotent,
}

/// Structure constants `[e_i, e_j] = sum_k c_ij^k e_k`, stored for `i < j`
/// only; `[e_j, e_i]` is derived, so antisymmetry cannot be violated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    table: Vec<Vector>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    /// Builds and validates an algebra. `brackets` lists `(i, j, [e_i, e_j])`;
    /// pairs with `i > j` are stored as the negated `(j, i)` entry.
    pub fn new(labels: Vec<String>, brackets: Vec<(usize, usize, Vector)>) -> Result<Self> {
        let alg = Self::unchecked(labels, brackets)?;
        if let Some((x, y, z, d)) = alg.jacobi_witness() {
            return Err(Error::Jacobi {
                x: alg.labels[x].clone(),
                y: alg.labels[y].clone(),
                z: alg.labels[z].clone(),
                defect: d.to_string(),
            });
        }
        Ok(alg)
    }

    /// Same as [`LieAlgebra::new`] without the Jacobi check, for tables that
    /// are being screened.
    pub fn unchecked(labels: Vec<String>, brackets: Vec<(usize, usize, Vector)>) -> Result<Self> {
        let n = labels.len();
        for (a, l) in labels.iter().enumerate() {
            if labels[..a].contains(l) {
                return Err(Error::Table(format!("duplicate basis label {l:?}")));
            }
        }
        let mut table = vec![zero_vec(n); n * n.saturating_sub(1) / 2];
        for (i, j, v) in brackets {
            if i >= n || j >= n {
                return Err(Error::Table(format!("basis index out of range in [{i},{j}]")));
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            match i.cmp(&j) {
                std::cmp::Ordering::Equal => {
                    if v.iter().any(|x| !x.is_zero()) {
                        return Err(Error::Table(format!(
                            "[{l},{l}] must vanish",
                            l = labels[i]
                        )));
                    }
                }
                std::cmp::Ordering::Less => {
                    let slot = &mut table[pair_index(n, i, j)];
                    add_scaled(slot, &Rational::from_integer(1.into()), &v);
                }
                std::cmp::Ordering::Greater => {
                    let slot = &mut table[pair_index(n, j, i)];
                    add_scaled(slot, &Rational::from_integer((-1).into()), &v);
                }
            }
        }
        Ok(Self { labels, table })
    }

    /// Abelian algebra on the given labels.
    pub fn abelian(labels: Vec<String>) -> Self {
        Self::unchecked(labels, Vec::new()).expect("empty table is valid")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => zero_vec(n),
            std::cmp::Ordering::Less => self.table[pair_index(n, i, j)].clone(),
            std::cmp::Ordering::Greater => {
                self.table[pair_index(n, j, i)].iter().map(|x| -x).collect()
            }
        }
    }

    /// Nonzero `(i, j, [e_i, e_j])` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vector)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = &self.table[pair_index(n, i, j)];
                if v.iter().any(|x| !x.is_zero()) {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(Zero::is_zero))
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            })
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if i == j || y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                let (slot, sign) = if i < j {
                    (&self.table[pair_index(n, i, j)], c)
                } else {
                    (&self.table[pair_index(n, j, i)], -c)
                };
                add_scaled(&mut out, &sign, slot);
            }
        }
        out
    }

    /// `[[x,y],z] + [[y,z],x] + [[z,x],y]` on basis vectors.
    pub fn jacobiator(&self, x: usize, y: usize, z: usize) -> Vector {
        let n = self.dim();
        let e = |i| unit_vec(n, i);
        let t1 = self.bracket_unchecked(&self.bracket_basis(x, y), &e(z));
        let t2 = self.bracket_unchecked(&self.bracket_basis(y, z), &e(x));
        let t3 = self.bracket_unchecked(&self.bracket_basis(z, x), &e(y));
        t1.iter().zip(&t2).zip(&t3).map(|((a, b), c)| a + b + c).collect()
    }

    /// First basis triple `x < y < z` with nonzero Jacobiator, with its
    /// max-abs defect.
    pub fn jacobi_witness(&self) -> Option<(usize, usize, usize, Rational)> {
        let n = self.dim();
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    let d = max_abs(&self.jacobiator(x, y, z));
                    if !d.is_zero() {
                        return Some((x, y, z, d));
                    }
                }
            }
        }
        None
    }

    /// Max over basis triples of the max-abs Jacobiator coordinate; zero
    /// exactly for Lie algebras.
    pub fn jacobi_defect(&self) -> Rational {
        let n = self.dim();
        let mut worst = Rational::zero();
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    let d = max_abs(&self.jacobiator(x, y, z));
                    if d > worst {
                        worst = d;
                    }
                }
            }
        }
        worst
    }

    /// Matrix of `y -> [x, y]`; column `j` holds `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Result<Mat> {
        self.check_len(x)?;
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.bracket_unchecked(x, &unit_vec(n, j)))
            .collect();
        Mat::from_cols(n, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Mat {
        self.ad_matrix(&unit_vec(self.dim(), i)).expect("basis vector has the right length")
    }

    /// `[S, T]` as a subspace.
    pub fn bracket_of(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut out = Vec::new();
        for a in s.basis_vectors() {
            for b in t.basis_vectors() {
                let v = self.bracket_unchecked(&a, &b);
                if v.iter().any(|x| !x.is_zero()) {
                    out.push(v);
                }
            }
        }
        Subspace::from_rows(out, self.dim()).expect("bracket vectors have ambient length")
    }

    /// Kernel of `x -> ad(x)`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // x is central iff sum_i x_i [e_i, e_j] = 0 for all j.
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.bracket_basis(i, j)[k].clone()).collect::<Vector>());
            }
        }
        if n == 0 {
            return Subspace::zero(0);
        }
        let m = Mat::from_rows(n, &rows).expect("square table");
        Subspace::from_rows(m.nullspace(), n).expect("kernel vectors")
    }

    pub fn derived_algebra(&self) -> Subspace {
        let full = Subspace::full(self.dim());
        self.bracket_of(&full, &full)
    }

    /// `C^1 = L, C^2, ...`, stopping at the first repeated term; the last
    /// entry is the zero subspace exactly when the algebra is nilpotent.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().expect("non-empty");
            if last.is_zero() {
                break;
            }
            let next = self.bracket_of(&full, last);
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn nilpotency_class(&self) -> Nilpotency {
        let series = self.lower_central_series();
        if series.last().is_some_and(Subspace::is_zero) {
            Nilpotency::Class(series.len() - 1)
        } else {
            Nilpotency::NotNilpotent
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        matches!(self.nilpotency_class(), Nilpotency::Class(_))
    }

    /// `B(x, y) = tr(ad x ad y)`.
    pub fn killing_form(&self) -> Mat {
        let n = self.dim();
        let ads: Vec<Mat> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut b = Mat::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = (&ads[i] * &ads[j]).trace();
                b[(i, j)] = t.clone();
                b[(j, i)] = t;
            }
        }
        b
    }

    /// Basis of the space of symmetric forms `S` with
    /// `S([x,y],z) + S(y,[x,z]) = 0` for all basis triples, returned as
    /// symmetric matrices. The coordinates are the upper-triangular entries
    /// in row-major order, canonicalized by echelon form.
    pub fn invariant_symmetric_forms(&self) -> Vec<Mat> {
        let n = self.dim();
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let slot = |a: usize, b: usize| {
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            slots.iter().position(|&s| s == (a, b)).expect("slot exists")
        };
        let mut rows = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let xy = self.bracket_basis(x, y);
                for z in y..n {
                    let xz = self.bracket_basis(x, z);
                    let mut row = zero_vec(slots.len());
                    for k in 0..n {
                        if !xy[k].is_zero() {
                            row[slot(k, z)] += &xy[k];
                        }
                        if !xz[k].is_zero() {
                            row[slot(y, k)] += &xz[k];
                        }
                    }
                    if row.iter().any(|r| !r.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let kernel = if rows.is_empty() {
            Subspace::full(slots.len())
        } else {
            let m = Mat::from_rows(slots.len(), &rows).expect("uniform rows");
            Subspace::from_rows(m.nullspace(), slots.len()).expect("kernel")
        };
        kernel
            .basis_vectors()
            .iter()
            .map(|v| {
                let mut s = Mat::zeros(n, n);
                for (c, &(i, j)) in v.iter().zip(&slots) {
                    s[(i, j)] = c.clone();
                    s[(j, i)] = c.clone();
                }
                s
            })
            .collect()
    }

    /// A nondegenerate invariant symmetric form, if one exists.
    ///
    /// `det(sum t_i S_i)` has degree at most `n` in each `t_i`, so it is the
    /// zero polynomial iff it vanishes on the grid `{0..n}^s`; the grid is
    /// scanned exhaustively, which is an exact decision procedure. Errors
    /// when the grid would exceed `max_points`.
    pub fn nondegenerate_invariant_form(&self, max_points: u64) -> Result<Option<Mat>> {
        let basis = self.invariant_symmetric_forms();
        let n = self.dim();
        let s = basis.len();
        if s == 0 {
            return Ok(if n == 0 { Some(Mat::zeros(0, 0)) } else { None });
        }
        let mut stacked = Vec::with_capacity(s * n);
        for b in &basis {
            stacked.extend(b.row_vectors());
        }
        if Mat::from_rows(n, &stacked)?.rank() < n {
            // every invariant form kills a common nonzero vector
            return Ok(None);
        }
        let side = n as u64 + 1;
        let points = side.checked_pow(s as u32).unwrap_or(u64::MAX);
        if points > max_points {
            return Err(Error::InvalidArgument(format!(
                "determinant grid of {side}^{s} points exceeds the limit {max_points}"
            )));
        }
        let mut t = vec![0u64; s];
        loop {
            let mut m = Mat::zeros(n, n);
            for (ti, b) in t.iter().zip(&basis) {
                if *ti != 0 {
                    m = &m + &b.scale(&Rational::from_integer((*ti as i64).into()));
                }
            }
            if !m.determinant()?.is_zero() {
                return Ok(Some(m));
            }
            // odometer increment
            let mut k = 0;
            loop {
                if k == s {
                    return Ok(None);
                }
                t[k] += 1;
                if t[k] < side {
                    break;
                }
                t[k] = 0;
                k += 1;
            }
        }
    }

    /// Orthogonal-sum bracket table on `self ⊕ other`, labels concatenated.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        let (n, m) = (self.dim(), other.dim());
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut brackets = Vec::new();
        for (i, j, v) in self.nonzero_brackets() {
            let mut w = v.clone();
            w.extend(zero_vec(m));
            brackets.push((i, j, w));
        }
        for (i, j, v) in other.nonzero_brackets() {
            let mut w = zero_vec(n);
            w.extend(v.iter().cloned());
            brackets.push((n + i, n + j, w));
        }
        Self::unchecked(labels, brackets)
    }

    /// Structure constants of a commutator-closed matrix span, basis in
    /// generator order.
    pub fn from_matrix_span(span: &MatrixSpan, labels: Vec<String>) -> Result<LieAlgebra> {
        let g = span.generators();
        let mut brackets = Vec::new();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let c = g[i].commutator(&g[j]);
                let coords = span.coordinates(&c).ok_or_else(|| {
                    Error::Closure(format!("[{}, {}]", labels[i], labels[j]))
                })?;
                brackets.push((i, j, coords));
            }
        }
        Self::new(labels, brackets)
    }

    /// Convenience for hand-written tables: `rel` lists `(x, y, [(z, c)])`
    /// meaning `[x, y] = sum c * z`.
    pub fn from_relations(labels: &[&str], rel: &[(&str, &str, &[(&str, i64)])]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let n = labels.len();
        let idx = |l: &str| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::Table(format!("unknown label {l:?}")))
        };
        let mut brackets = Vec::new();
        for (x, y, terms) in rel {
            let mut v = zero_vec(n);
            for (z, c) in terms.iter() {
                v[idx(z)?] += Rational::from_integer((*c).into());
            }
            brackets.push((idx(x)?, idx(y)?, v));
        }
        Self::new(labels, brackets)
    }
}

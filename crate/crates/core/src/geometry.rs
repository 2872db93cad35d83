//! Geometry of bi-invariant metrics at the Lie algebra level: curvature
//! `R(x,y)z = 1/4 [[x,y],z]`, Ricci contraction, holonomy `ad([g, g])`,
//! and the end-to-end classification verdict in dimension seven.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{seven_dim_candidates, CatalogEntry, Disposal};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, MetricLieAlgebra};
use crate::linalg::{dot, frac, rat, Mat, Rational, Subspace, Vector};
use crate::rank::{catalog_obstruction, Conclusion, ObstructionReport};

pub fn curvature(alg: &LieAlgebra, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<Vector> {
    let xy = alg.bracket(x, y)?;
    let q = frac(1, 4);
    Ok(alg.bracket(&xy, z)?.iter().map(|c| c * &q).collect())
}

fn curvature_basis(alg: &LieAlgebra, x: usize, y: usize, z: usize) -> Vector {
    let n = alg.dim();
    let xy = alg.bracket_basis(x, y);
    let mut out = vec![Rational::zero(); n];
    for (k, c) in xy.iter().enumerate() {
        if !c.is_zero() {
            for (o, v) in out.iter_mut().zip(alg.bracket_basis(k, z)) {
                *o += c * v;
            }
        }
    }
    let q = frac(1, 4);
    out.iter().map(|c| c * &q).collect()
}

/// `Ric(y, z) = tr(x -> R(x, y) z)`, contracted directly from the curvature.
pub fn ricci(alg: &LieAlgebra) -> Mat {
    let n = alg.dim();
    Mat::from_fn(n, n, |y, z| {
        (0..n)
            .map(|x| curvature_basis(alg, x, y, z)[x].clone())
            .fold(Rational::zero(), |a, b| a + b)
    })
}

/// `span{ad(v) : v in [g, g]}` inside the `n^2`-dim space of matrices.
pub fn holonomy_algebra(alg: &LieAlgebra) -> Subspace {
    let n = alg.dim();
    let rows: Vec<Vector> = alg
        .derived_algebra()
        .basis_vectors()
        .iter()
        .map(|v| alg.ad_matrix(v).expect("derived vectors have ambient length").flatten())
        .collect();
    Subspace::from_rows(rows, n * n).expect("flattened matrices")
}

pub fn is_flat(alg: &LieAlgebra) -> bool {
    let n = alg.dim();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| curvature_basis(alg, x, y, z).iter().all(Zero::is_zero))))
}

#[derive(Clone, Debug, Serialize)]
pub struct GeometryReport {
    #[serde(serialize_with = "ser_mat")]
    pub ricci: Mat,
    #[serde(serialize_with = "ser_mat")]
    pub killing: Mat,
    pub ricci_is_quarter_killing: bool,
    pub holonomy_dim: usize,
    #[serde(skip)]
    pub holonomy_basis: Subspace,
    pub holonomy_closed: bool,
    pub is_flat: bool,
}

fn ser_mat<S: serde::Serializer>(m: &Mat, s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect();
    serde::Serialize::serialize(&rows, s)
}

fn matrix_subspace_closed(s: &Subspace, n: usize) -> bool {
    let ms: Vec<Mat> = s.basis_vectors().iter().map(|v| Mat::unflatten(n, n, v)).collect();
    ms.iter().enumerate().all(|(i, a)| {
        ms[i + 1..]
            .iter()
            .all(|b| s.contains(&a.commutator(b).flatten()).unwrap_or(false))
    })
}

pub fn geometry_report(alg: &LieAlgebra) -> GeometryReport {
    let ric = ricci(alg);
    let killing = alg.killing_form();
    let quarter = killing.scale(&frac(1, 4));
    let hol = holonomy_algebra(alg);
    GeometryReport {
        ricci_is_quarter_killing: ric == quarter,
        ricci: ric,
        killing,
        holonomy_dim: hol.dim(),
        holonomy_closed: matrix_subspace_closed(&hol, alg.dim()),
        holonomy_basis: hol,
        is_flat: is_flat(alg),
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CurvatureChecks {
    pub samples: usize,
    pub antisymmetry_failures: usize,
    pub bianchi_failures: usize,
    pub compatibility_failures: usize,
}

impl CurvatureChecks {
    pub fn passed(&self) -> bool {
        self.antisymmetry_failures == 0 && self.bianchi_failures == 0 && self.compatibility_failures == 0
    }
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| frac(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect()
}

/// Antisymmetry in `(x, y)`, the first Bianchi identity and
/// `<R(x,y)z, v> + <z, R(x,y)v> = 0` on seeded random rational vectors.
pub fn curvature_identity_checks(m: &MetricLieAlgebra, samples: usize, seed: u64) -> Result<CurvatureChecks> {
    let alg = m.algebra();
    let n = m.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = CurvatureChecks {
        samples,
        ..Default::default()
    };
    for _ in 0..samples {
        let [x, y, z, v] = std::array::from_fn(|_| random_vector(&mut rng, n));
        let rxy = curvature(alg, &x, &y, &z)?;
        let ryx = curvature(alg, &y, &x, &z)?;
        if rxy.iter().zip(&ryx).any(|(a, b)| !(a + b).is_zero()) {
            out.antisymmetry_failures += 1;
        }
        let ryz = curvature(alg, &y, &z, &x)?;
        let rzx = curvature(alg, &z, &x, &y)?;
        if (0..n).any(|k| !(&rxy[k] + &ryz[k] + &rzx[k]).is_zero()) {
            out.bianchi_failures += 1;
        }
        let rv = curvature(alg, &x, &y, &v)?;
        let f = m.form();
        let lhs = dot(&f.mul_vec(&rxy), &v) + dot(&f.mul_vec(&z), &rv);
        if !lhs.is_zero() {
            out.compatibility_failures += 1;
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug)]
pub enum Sampling {
    Exhaustive,
    Seeded { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct LowDimReport {
    pub dim: usize,
    pub coeff_bound: i64,
    pub candidates: usize,
    pub distinct: usize,
    pub jacobi: usize,
    pub nilpotent_non_abelian: usize,
    /// Non-abelian nilpotent tables carrying a nondegenerate invariant form.
    pub survivors: Vec<String>,
    /// Tables for which the determinant grid exceeded its budget.
    pub undecided: usize,
}

impl LowDimReport {
    pub fn passed(&self) -> bool {
        self.survivors.is_empty() && self.undecided == 0
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn table_from_coeffs(n: usize, coeffs: &[i64]) -> Vec<(usize, usize, Vector)> {
    pairs(n)
        .into_iter()
        .enumerate()
        .map(|(p, (i, j))| (i, j, coeffs[p * n..(p + 1) * n].iter().map(|&c| rat(c)).collect()))
        .collect()
}

fn sample_coeffs(rng: &mut ChaCha8Rng, n: usize, bound: i64, triangular: bool) -> Vec<i64> {
    let ps = pairs(n);
    let mut out = vec![0i64; ps.len() * n];
    for (p, &(_, j)) in ps.iter().enumerate() {
        for k in 0..n {
            let allowed = !triangular || k > j;
            if allowed && (triangular || rng.gen_bool(0.25)) {
                out[p * n + k] = rng.gen_range(-bound..=bound);
            }
        }
    }
    out
}

enum TableOutcome {
    NotLie,
    Skipped,
    Checked(Option<String>),
    Undecided,
}

fn examine(n: usize, coeffs: &[i64]) -> TableOutcome {
    let labels = (1..=n).map(|i| format!("e{i}")).collect();
    let Ok(alg) = LieAlgebra::new(labels, table_from_coeffs(n, coeffs)) else {
        return TableOutcome::NotLie;
    };
    if alg.is_abelian() || !alg.is_nilpotent() {
        return TableOutcome::Skipped;
    }
    match alg.nondegenerate_invariant_form(1 << 20) {
        Ok(None) => TableOutcome::Checked(None),
        Ok(Some(_)) => TableOutcome::Checked(Some(format!("{coeffs:?}"))),
        Err(_) => TableOutcome::Undecided,
    }
}

/// Enumerates bracket tables on `R^dim` with structure constants in
/// `{-bound..bound}` and confirms that no non-abelian nilpotent one admits
/// a nondegenerate invariant form.
pub fn verify_lowdim_abelian_lemma(dim: usize, coeff_bound: i64, sampling: Sampling) -> Result<LowDimReport> {
    if !(3..=4).contains(&dim) || coeff_bound < 1 {
        return Err(Error::InvalidArgument(format!(
            "dimension must be 3 or 4 and the bound positive, got ({dim}, {coeff_bound})"
        )));
    }
    let width = pairs(dim).len() * dim;
    let tables: Vec<Vec<i64>> = match sampling {
        Sampling::Exhaustive => {
            let side = (2 * coeff_bound + 1) as u64;
            let total = side
                .checked_pow(width as u32)
                .filter(|&t| t <= 1 << 24)
                .ok_or_else(|| Error::InvalidArgument("exhaustive enumeration too large".into()))?;
            (0..total)
                .map(|mut idx| {
                    (0..width)
                        .map(|_| {
                            let d = (idx % side) as i64 - coeff_bound;
                            idx /= side;
                            d
                        })
                        .collect()
                })
                .collect()
        }
        Sampling::Seeded { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..samples)
                .map(|t| sample_coeffs(&mut rng, dim, coeff_bound, t % 2 == 0))
                .collect()
        }
    };
    let candidates = tables.len();
    let distinct: Vec<Vec<i64>> = tables.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    let outcomes: Vec<TableOutcome> = distinct.par_iter().map(|c| examine(dim, c)).collect();
    let mut rep = LowDimReport {
        dim,
        coeff_bound,
        candidates,
        distinct: distinct.len(),
        jacobi: 0,
        nilpotent_non_abelian: 0,
        survivors: Vec::new(),
        undecided: 0,
    };
    for o in outcomes {
        match o {
            TableOutcome::NotLie => {}
            TableOutcome::Skipped => rep.jacobi += 1,
            TableOutcome::Checked(s) => {
                rep.jacobi += 1;
                rep.nilpotent_non_abelian += 1;
                rep.survivors.extend(s);
            }
            TableOutcome::Undecided => {
                rep.jacobi += 1;
                rep.nilpotent_non_abelian += 1;
                rep.undecided += 1;
            }
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseOutcome {
    pub label: String,
    pub disposal: Disposal,
    pub obstruction: ObstructionReport,
    pub geometry: GeometryReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremVerdict {
    pub cases: Vec<CaseOutcome>,
    pub surviving: Vec<String>,
    pub conclusion: String,
    pub flat_torus: bool,
}

fn case_outcome(entry: &CatalogEntry) -> Result<CaseOutcome> {
    Ok(CaseOutcome {
        label: entry.label(),
        disposal: entry.disposal,
        obstruction: catalog_obstruction(entry)?,
        geometry: geometry_report(entry.value.algebra()),
    })
}

/// Runs the obstruction on every seven-dimensional candidate. The verdict
/// is a flat torus exactly when the one surviving case is abelian of
/// index 3 with trivial holonomy.
pub fn verify_main_theorem() -> Result<TheoremVerdict> {
    let entries = seven_dim_candidates();
    let cases: Vec<CaseOutcome> = entries.par_iter().map(case_outcome).collect::<Result<_>>()?;
    let surviving: Vec<&CaseOutcome> = cases
        .iter()
        .filter(|c| c.obstruction.conclusion != Conclusion::NotEmbeddable)
        .collect();
    let flat_torus = surviving.len() == 1 && {
        let s = surviving[0];
        let entry = entries.iter().find(|e| e.label() == s.label).expect("case from catalog");
        let (p, q) = entry.value.signature();
        s.obstruction.conclusion == Conclusion::AbelianNoObstruction
            && entry.value.algebra().is_abelian()
            && p.min(q) == 3
            && s.geometry.is_flat
            && s.geometry.holonomy_dim == 0
    };
    let conclusion = if flat_torus {
        "flat torus".to_string()
    } else {
        format!("unresolved: {} surviving cases", surviving.len())
    };
    Ok(TheoremVerdict {
        surviving: surviving.iter().map(|c| c.label.clone()).collect(),
        cases,
        conclusion,
        flat_torus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_n1, Epsilon};
    use crate::linalg::unit_vec;

    #[test]
    fn curvature_example_in_n1() {
        let m = make_n1(Epsilon::Plus);
        let r = curvature(m.algebra(), &unit_vec(7, 0), &unit_vec(7, 1), &unit_vec(7, 0)).unwrap();
        let mut expected = vec![rat(0); 7];
        expected[3] = frac(-1, 4);
        assert_eq!(r, expected);
    }

    #[test]
    fn ricci_on_non_nilpotent_example() {
        let alg = LieAlgebra::new(vec!["e1".into(), "e2".into()], vec![(0, 1, vec![rat(0), rat(1)])]).unwrap();
        let g = geometry_report(&alg);
        assert!(g.ricci_is_quarter_killing);
        assert_eq!(g.ricci[(0, 0)], frac(1, 4));
        assert!(!g.is_flat);
        assert_eq!(g.holonomy_dim, 1);
    }

    #[test]
    fn heisenberg_has_no_nondegenerate_form() {
        let h = LieAlgebra::from_relations(&["x", "y", "z"], &[("x", "y", &[("z", 1)])]).unwrap();
        assert!(h.nondegenerate_invariant_form(1 << 20).unwrap().is_none());
    }

    #[test]
    fn lowdim_rejects_bad_dimension() {
        assert!(verify_lowdim_abelian_lemma(5, 1, Sampling::Exhaustive).is_err());
    }
}

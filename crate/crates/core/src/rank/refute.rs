//! Constructive refutation: a 3-dim subspace of `m` always contains an
//! element of rank at least three.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::g2::MElement;
use crate::linalg::{rat, unit_vec, Mat, Rational, Vector};

use super::classify::{in_case_b, rank_of};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RefutationCase {
    /// A basis element with `u1 != 0`.
    U1Nonzero,
    /// The subspace is all of family A; `A(1, 1, 1)` lies in it.
    FamilyAPlanes,
    /// An element with exactly one of `u2, u4` zero.
    MixedHead,
    /// An element with `u2, u4 != 0` outside family B.
    OutsideFamilyB,
    /// A family-B element plus an A-direction with `(u3, u5) != 0`.
    FamilyBPlusA,
    /// Found by scanning small integer combinations.
    GridSearch,
}

#[derive(Clone, Debug, Serialize)]
pub struct RefutationWitness {
    pub coefficients: [String; 3],
    pub element: [String; 6],
    pub rank: usize,
    pub case: RefutationCase,
}

fn combine(basis: &[MElement; 3], c: &[Rational]) -> MElement {
    let mut out = MElement::zero();
    for (b, ci) in basis.iter().zip(c) {
        if !ci.is_zero() {
            out = out.add(&b.scale(ci));
        }
    }
    out
}

/// Coefficient matrix of the functionals `u_k` on the subspace: rows are
/// the given parameter indices, columns the basis elements.
fn functionals(basis: &[MElement; 3], params: &[usize]) -> Mat {
    Mat::from_fn(params.len(), 3, |r, c| basis[c].u[params[r]].clone())
}

fn head(basis: &[MElement; 3], c: &[Rational]) -> (Rational, Rational) {
    let e = combine(basis, c);
    (e.u[1].clone(), e.u[3].clone())
}

fn structural_candidate(basis: &[MElement; 3]) -> Option<(Vector, RefutationCase)> {
    if let Some(i) = (0..3).find(|&i| !basis[i].u[0].is_zero()) {
        return Some((unit_vec(3, i), RefutationCase::U1Nonzero));
    }
    let heads = functionals(basis, &[1, 3]);
    match heads.rank() {
        0 => {
            let t = functionals(basis, &[2, 4, 5]);
            let c = t.solve(&[rat(1), rat(1), rat(1)])?;
            Some((c, RefutationCase::FamilyAPlanes))
        }
        2 => {
            let c = heads.solve(&[rat(1), rat(0)])?;
            Some((c, RefutationCase::MixedHead))
        }
        _ => {
            let i = (0..3).find(|&i| !(basis[i].u[1].is_zero() && basis[i].u[3].is_zero()))?;
            let c0 = unit_vec(3, i);
            let (p, q) = head(basis, &c0);
            if p.is_zero() || q.is_zero() {
                return Some((c0, RefutationCase::MixedHead));
            }
            if !in_case_b(&combine(basis, &c0)) {
                return Some((c0, RefutationCase::OutsideFamilyB));
            }
            let kernel = heads.nullspace();
            let k = kernel.into_iter().find(|k| {
                let e = combine(basis, k);
                !(e.u[2].is_zero() && e.u[4].is_zero())
            })?;
            let c: Vector = c0.iter().zip(&k).map(|(a, b)| a + b).collect();
            Some((c, RefutationCase::FamilyBPlusA))
        }
    }
}

fn grid_candidate(basis: &[MElement; 3]) -> Option<Vector> {
    for a in -3..=3i64 {
        for b in -3..=3i64 {
            for c in -3..=3i64 {
                if a == 0 && b == 0 && c == 0 {
                    continue;
                }
                let coeffs = vec![rat(a), rat(b), rat(c)];
                if rank_of(&combine(basis, &coeffs)) >= 3 {
                    return Some(coeffs);
                }
            }
        }
    }
    None
}

/// Returns coefficients of an element of rank at least three in the span
/// of `basis`, whose rank is verified before returning.
pub fn refute_rank2_3d_subspace(basis: &[MElement; 3]) -> Result<RefutationWitness> {
    let rows: Vec<Vector> = basis.iter().map(|b| b.u.to_vec()).collect();
    let r = Mat::from_rows(6, &rows)?.rank();
    if r != 3 {
        return Err(Error::InvalidArgument(format!(
            "basis spans a subspace of dimension {r}, expected 3"
        )));
    }
    let found = structural_candidate(basis)
        .filter(|(c, _)| rank_of(&combine(basis, c)) >= 3)
        .or_else(|| grid_candidate(basis).map(|c| (c, RefutationCase::GridSearch)));
    let (c, case) = found.ok_or_else(|| {
        Error::Counterexample(format!(
            "no element of rank >= 3 in span of {:?}",
            basis.iter().map(|b| b.u.clone().map(|x| x.to_string())).collect::<Vec<_>>()
        ))
    })?;
    let e = combine(basis, &c);
    Ok(RefutationWitness {
        coefficients: [c[0].to_string(), c[1].to_string(), c[2].to_string()],
        element: e.u.clone().map(|x| x.to_string()),
        rank: rank_of(&e),
        case,
    })
}

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rat, HomPoly3, Mat, PolyMat, Rational, Subspace};

/// A claimed description of the image of `Q(a, b, c) = a Q1 + b Q2 + c Q3`.
#[derive(Clone, Debug)]
pub enum ImageFormula {
    /// The image is spanned by two polynomial vectors.
    Span {
        description: String,
        vectors: [Vec<HomPoly3>; 2],
    },
    /// The image is `x^perp ∩ ideal` for a linear polynomial vector `x`.
    PerpInIdeal {
        description: String,
        x: Vec<HomPoly3>,
        form: Mat,
        ideal: Subspace,
    },
}

impl ImageFormula {
    pub fn description(&self) -> &str {
        match self {
            ImageFormula::Span { description, .. } | ImageFormula::PerpInIdeal { description, .. } => description,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FormulaCheck {
    pub description: String,
    /// Every column of the pencil lies in the claimed image, identically.
    pub columns_inside: bool,
    /// The claimed image is two-dimensional for generic parameters.
    pub generically_two_dimensional: bool,
}

impl FormulaCheck {
    pub fn verified(&self) -> bool {
        self.columns_inside && self.generically_two_dimensional
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RankTwoCertificate {
    /// Number of 3x3 minor identities checked by coefficient expansion.
    pub minors_checked: usize,
    pub minors_vanish: bool,
    /// The determining grid `{0..3}^3` agrees with the symbolic result.
    pub grid_cross_check: bool,
    pub sample_points: usize,
    pub min_rank: usize,
    pub max_rank: usize,
    pub formula: Option<FormulaCheck>,
}

impl RankTwoCertificate {
    /// Constant rank two away from the origin, with the formula (if any)
    /// verified.
    pub fn holds(&self) -> bool {
        self.minors_vanish
            && self.grid_cross_check
            && self.min_rank == 2
            && self.max_rank == 2
            && self.formula.as_ref().map_or(true, FormulaCheck::verified)
    }
}

fn sum_polys(terms: impl IntoIterator<Item = Result<HomPoly3>>) -> Result<HomPoly3> {
    let mut acc = HomPoly3::zero();
    for t in terms {
        acc = acc.try_add(&t?)?;
    }
    Ok(acc)
}

fn bilinear(u: &[HomPoly3], form: &Mat, v: &[HomPoly3]) -> Result<HomPoly3> {
    let n = u.len();
    sum_polys((0..n).flat_map(|i| {
        (0..n)
            .filter(move |&k| !form[(i, k)].is_zero() && !u[i].is_zero())
            .map(move |k| u[i].scale(&form[(i, k)]).try_mul(&v[k]))
    }))
}

fn linear_functional(h: &[Rational], v: &[HomPoly3]) -> Result<HomPoly3> {
    sum_polys(h.iter().zip(v).filter(|(c, _)| !c.is_zero()).map(|(c, p)| Ok(p.scale(c))))
}

fn check_formula(pencil: &PolyMat, formula: &ImageFormula) -> Result<FormulaCheck> {
    let cols: Vec<Vec<HomPoly3>> = (0..pencil.cols()).map(|j| pencil.column(j)).collect();
    let (inside, generic) = match formula {
        ImageFormula::Span { vectors, .. } => {
            let mut inside = true;
            for c in &cols {
                let m = PolyMat::from_columns(&[vectors[0].clone(), vectors[1].clone(), c.clone()])?;
                inside &= m.minors(3)?.iter().all(HomPoly3::is_zero);
            }
            let pair = PolyMat::from_columns(&[vectors[0].clone(), vectors[1].clone()])?;
            let generic = pair.minors(2)?.iter().any(|p| !p.is_zero());
            (inside, generic)
        }
        ImageFormula::PerpInIdeal { x, form, ideal, .. } => {
            let ann = ideal.annihilator().basis_vectors();
            let mut inside = true;
            for c in &cols {
                inside &= bilinear(x, form, c)?.is_zero();
                for h in &ann {
                    inside &= linear_functional(h, c)?.is_zero();
                }
            }
            let mut transverse = false;
            for y in ideal.basis_vectors() {
                let yc: Vec<HomPoly3> = y.iter().map(|v| HomPoly3::constant(v.clone())).collect();
                transverse |= !bilinear(x, form, &yc)?.is_zero();
            }
            (inside, ideal.dim() == 3 && transverse)
        }
    };
    Ok(FormulaCheck {
        description: formula.description().to_string(),
        columns_inside: inside,
        generically_two_dimensional: generic,
    })
}

/// Certifies that every nonzero element of `span(Q1, Q2, Q3)` has rank two:
/// all 3x3 minors of the pencil vanish identically, and rank two is
/// attained at every nonzero point of `{-3..3}^3`.
pub fn constant_rank_two_certificate(q: [&Mat; 3], formula: Option<&ImageFormula>) -> Result<RankTwoCertificate> {
    let rows: Vec<_> = q.iter().map(|m| m.flatten()).collect();
    let width = rows[0].len();
    if Mat::from_rows(width, &rows)?.rank() != 3 {
        return Err(Error::InvalidArgument("pencil generators are linearly dependent".into()));
    }
    let pencil = PolyMat::pencil(q)?;
    let minors = pencil.minors(3)?;
    let vanish = minors.iter().all(HomPoly3::is_zero);

    let mut grid_low = true;
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                grid_low &= pencil.eval([&rat(a), &rat(b), &rat(c)]).rank() <= 2;
            }
        }
    }

    let mut min_rank = usize::MAX;
    let mut max_rank = 0;
    let mut points = 0;
    for a in -3..=3 {
        for b in -3..=3 {
            for c in -3..=3 {
                if (a, b, c) == (0, 0, 0) {
                    continue;
                }
                points += 1;
                let r = pencil.eval([&rat(a), &rat(b), &rat(c)]).rank();
                min_rank = min_rank.min(r);
                max_rank = max_rank.max(r);
            }
        }
    }
    let formula = formula.map(|f| check_formula(&pencil, f)).transpose()?;
    Ok(RankTwoCertificate {
        minors_checked: minors.len(),
        minors_vanish: vanish,
        grid_cross_check: vanish == grid_low,
        sample_points: points,
        min_rank,
        max_rank,
        formula,
    })
}

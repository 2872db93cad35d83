use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::g2::MElement;
use crate::linalg::{rat, HomPoly3, PolyMat, Rational};

use super::classify::{classify_rank2, family_a, in_case_b, rank_of, RankClass};

/// Rank locus of the family `A(u3, u5, u6)` inside its 3-dim parameter space.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyALocus {
    pub nonzero_minors: usize,
    /// Every 3x3 minor of the pencil is divisible by `u3 u5`.
    pub minors_divisible_by_u3u5: bool,
    /// A minor of the form `c u3^i u5^j`, which forces `u3 u5 = 0` on the locus.
    pub forcing_minor: Option<String>,
    /// Components of the locus, as defining equations.
    pub components: Vec<String>,
    pub grid_points: usize,
    /// On the grid, rank at most two holds exactly where `u3 u5 = 0`.
    pub grid_agrees: bool,
    /// Every grid point of the locus has some parameter equal to zero.
    pub inside_coordinate_planes: bool,
}

impl FamilyALocus {
    pub fn certified(&self) -> bool {
        self.minors_divisible_by_u3u5 && self.forcing_minor.is_some() && self.grid_agrees
    }
}

fn family_a_pencil() -> Result<PolyMat> {
    let gens = [
        family_a(rat(1), rat(0), rat(0)).to_matrix(),
        family_a(rat(0), rat(1), rat(0)).to_matrix(),
        family_a(rat(0), rat(0), rat(1)).to_matrix(),
    ];
    PolyMat::pencil([&gens[0], &gens[1], &gens[2]])
}

fn is_forcing(p: &HomPoly3) -> bool {
    let terms: Vec<_> = p.terms().collect();
    terms.len() == 1 && {
        let e = terms[0].0;
        e[0] >= 1 && e[1] >= 1 && e[2] == 0
    }
}

/// Exact locus of rank at most two within the family: `u3 u5 = 0`, i.e. the
/// union of the planes `u3 = 0` and `u5 = 0`.
pub fn family_a_rank_locus() -> Result<FamilyALocus> {
    let minors = family_a_pencil()?.minors(3)?;
    let nonzero: Vec<&HomPoly3> = minors.iter().filter(|m| !m.is_zero()).collect();
    let divisible = nonzero.iter().all(|m| m.divisible_by_monomial([1, 1, 0]));
    let forcing = nonzero.iter().find(|m| is_forcing(m)).map(|m| m.display_with(["u3", "u5", "u6"]));

    let mut grid_points = 0;
    let mut agrees = true;
    let mut inside = true;
    for u3 in -3..=3i64 {
        for u5 in -3..=3i64 {
            for u6 in -3..=3i64 {
                grid_points += 1;
                let e = family_a(rat(u3), rat(u5), rat(u6));
                let low = rank_of(&e) <= 2;
                agrees &= low == (u3 * u5 == 0);
                if low {
                    inside &= u3 == 0 || u5 == 0 || u6 == 0;
                }
            }
        }
    }
    Ok(FamilyALocus {
        nonzero_minors: nonzero.len(),
        minors_divisible_by_u3u5: divisible,
        forcing_minor: forcing,
        components: vec!["u3 = 0".into(), "u5 = 0".into()],
        grid_points,
        grid_agrees: agrees,
        inside_coordinate_planes: inside,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    pub sum: [String; 6],
    pub sum_rank: usize,
    pub sum_class: String,
    /// The sum is a rank-two element with `u2 + v2, u4 + v4 != 0`.
    pub identity_required: bool,
    /// `u2 v4 - u4 v2`.
    pub cross_term: String,
    pub identity_holds: Option<bool>,
    /// `B1 - (u4/v4) B2`, when the identity is required.
    pub difference: Option<[String; 6]>,
    /// The difference equals `A(0, 0, u6 - (u4/v4) v6)`.
    pub difference_is_u6_direction: Option<bool>,
}

impl PairReport {
    pub fn consistent(&self) -> bool {
        !self.identity_required
            || (self.identity_holds == Some(true) && self.difference_is_u6_direction == Some(true))
    }
}

fn show(e: &MElement) -> [String; 6] {
    e.u.clone().map(|x| x.to_string())
}

/// For two family-B elements whose sum has rank two with nonzero `u2, u4`,
/// checks `u2 v4 = u4 v2` and `B1 - (u4/v4) B2 = A(0, 0, u6 - (u4/v4) v6)`.
pub fn family_b_pair_identity(b1: &MElement, b2: &MElement) -> Result<PairReport> {
    for (name, b) in [("first", b1), ("second", b2)] {
        if !in_case_b(b) {
            return Err(Error::InvalidArgument(format!("{name} element is not in family B")));
        }
    }
    let sum = b1.add(b2);
    let sum_rank = rank_of(&sum);
    let class = classify_rank2(&sum);
    let (u2, u4, u6) = (&b1.u[1], &b1.u[3], &b1.u[5]);
    let (v2, v4, v6) = (&b2.u[1], &b2.u[3], &b2.u[5]);
    let cross = u2 * v4 - u4 * v2;
    let required = sum_rank <= 2 && !sum.u[1].is_zero() && !sum.u[3].is_zero();
    let (identity, difference, is_u6) = if required {
        let t = u4 / v4;
        let diff = b1.add(&b2.scale(&-t.clone()));
        let target = family_a(Rational::zero(), Rational::zero(), u6 - &t * v6);
        (Some(cross.is_zero()), Some(show(&diff)), Some(diff == target))
    } else {
        (None, None, None)
    };
    let sum_class = match class {
        RankClass::Zero => "zero".to_string(),
        RankClass::FamilyA { .. } => "family A".into(),
        RankClass::FamilyB { .. } => "family B".into(),
        RankClass::RankAbove2(r) => format!("rank {r}"),
        RankClass::Unexplained(r) => format!("unexplained rank {r}"),
    };
    Ok(PairReport {
        sum: show(&sum),
        sum_rank,
        sum_class,
        identity_required: required,
        cross_term: cross.to_string(),
        identity_holds: identity,
        difference,
        difference_is_u6_direction: is_u6,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;
    use crate::rank::classify::family_b_i64;

    #[test]
    fn locus_is_union_of_two_planes() {
        let l = family_a_rank_locus().unwrap();
        assert!(l.certified());
        assert!(l.inside_coordinate_planes);
        assert_eq!(l.grid_points, 343);
    }

    #[test]
    fn pair_with_proportional_heads() {
        let r = family_b_pair_identity(&family_b_i64(1, 2, 0).unwrap(), &family_b_i64(2, 4, 5).unwrap()).unwrap();
        assert!(r.identity_required);
        assert_eq!(r.sum_rank, 2);
        assert_eq!(r.identity_holds, Some(true));
        assert_eq!(r.difference_is_u6_direction, Some(true));
        let d = r.difference.unwrap();
        assert_eq!(d[5], frac(-5, 2).to_string());
    }

    #[test]
    fn opposite_pair_sums_to_zero() {
        let b = family_b_i64(1, 2, 3).unwrap();
        let neg = family_b_i64(-1, -2, -3).unwrap();
        let r = family_b_pair_identity(&b, &neg).unwrap();
        assert_eq!(r.sum_class, "zero");
        assert!(!r.identity_required);
    }
}

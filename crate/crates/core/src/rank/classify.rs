//! Rank-two elements of `m`: every such element has `u1 = 0` and is either
//! `A(u3, u5, u6)` (`u2 = u4 = 0`) or `B(u2, u4, u6)` with `u2, u4 != 0`,
//! `u3 = 4 u2^2 / u4` and `u5 = -u4^2 / (2 u2)`.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::g2::MElement;
use crate::linalg::{rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankClass {
    Zero,
    FamilyA { u3: Rational, u5: Rational, u6: Rational },
    FamilyB { u2: Rational, u4: Rational, u6: Rational },
    RankAbove2(usize),
    /// Rank at most two but neither family applies. The classification
    /// says this never happens; sweeps count it as a mismatch.
    Unexplained(usize),
}

impl RankClass {
    pub fn is_rank_at_most_two(&self) -> bool {
        matches!(self, RankClass::Zero | RankClass::FamilyA { .. } | RankClass::FamilyB { .. })
    }
}

pub fn rank_of(e: &MElement) -> usize {
    e.to_matrix().rank()
}

/// `u1 = u2 = u4 = 0`.
pub fn in_case_a(e: &MElement) -> bool {
    let u = &e.u;
    u[0].is_zero() && u[1].is_zero() && u[3].is_zero()
}

/// `u1 = 0`, `u2, u4 != 0`, `u3 u4 = 4 u2^2`, `2 u2 u5 = -u4^2`.
pub fn in_case_b(e: &MElement) -> bool {
    let u = &e.u;
    let (u1, u2, u3, u4, u5) = (&u[0], &u[1], &u[2], &u[3], &u[4]);
    u1.is_zero()
        && !u2.is_zero()
        && !u4.is_zero()
        && u3 * u4 == rat(4) * u2 * u2
        && rat(2) * u2 * u5 == -(u4 * u4)
}

/// `A(u3, u5, u6)`.
pub fn family_a(u3: Rational, u5: Rational, u6: Rational) -> MElement {
    let z = Rational::zero;
    MElement {
        u: [z(), z(), u3, z(), u5, u6],
    }
}

/// `B(u2, u4, u6)`; `None` unless `u2, u4 != 0`.
pub fn family_b(u2: Rational, u4: Rational, u6: Rational) -> Option<MElement> {
    if u2.is_zero() || u4.is_zero() {
        return None;
    }
    let u3 = rat(4) * &u2 * &u2 / &u4;
    let u5 = -(&u4 * &u4) / (rat(2) * &u2);
    Some(MElement {
        u: [Rational::zero(), u2, u3, u4, u5, u6],
    })
}

pub fn family_b_i64(u2: i64, u4: i64, u6: i64) -> Option<MElement> {
    family_b(rat(u2), rat(u4), rat(u6))
}

pub fn classify_rank2(e: &MElement) -> RankClass {
    if e.is_zero() {
        return RankClass::Zero;
    }
    let r = rank_of(e);
    if r > 2 {
        return RankClass::RankAbove2(r);
    }
    let u = &e.u;
    if in_case_a(e) {
        RankClass::FamilyA {
            u3: u[2].clone(),
            u5: u[4].clone(),
            u6: u[5].clone(),
        }
    } else if in_case_b(e) {
        RankClass::FamilyB {
            u2: u[1].clone(),
            u4: u[3].clone(),
            u6: u[5].clone(),
        }
    } else {
        RankClass::Unexplained(r)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub u: [String; 6],
    pub rank: usize,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub bound: i64,
    pub total: usize,
    pub rank_at_most_two: usize,
    pub zero: usize,
    pub family_a: usize,
    /// Case (a) parameters whose matrix nevertheless has rank above two.
    pub case_a_rank_above_two: usize,
    pub family_b: usize,
    pub rank_above_two: usize,
    pub mismatches: Vec<Mismatch>,
    /// Every nonzero rank-at-most-two element has `u1 = 0`.
    pub rank_two_have_u1_zero: bool,
    /// Every family-B witness satisfies `u3 u4 = 4 u2^2` and `2 u2 u5 = -u4^2`.
    pub family_b_identities_hold: bool,
    /// Nonzero rank-at-most-two elements all have rank exactly two.
    pub rank_exactly_two: bool,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
            && self.rank_two_have_u1_zero
            && self.family_b_identities_hold
            && self.rank_exactly_two
    }
}

struct PointOutcome {
    class: RankClass,
    rank: usize,
    case_a: bool,
    case_b: bool,
    u1_zero: bool,
    b_identity: bool,
    e: MElement,
}

/// Exhaustive check over `u in {-bound..bound}^6` that rank at most two
/// holds exactly on `0`, the rank-two part of case (a), and case (b).
pub fn verify_rank2_classification(bound: i64) -> Result<SweepReport> {
    if bound < 2 {
        return Err(Error::InvalidArgument(format!("bound must be at least 2, got {bound}")));
    }
    let side = (2 * bound + 1) as usize;
    let total = side.pow(6);
    let outcomes: Vec<PointOutcome> = (0..total)
        .into_par_iter()
        .map(|mut idx| {
            let mut u = [0i64; 6];
            for slot in u.iter_mut() {
                *slot = (idx % side) as i64 - bound;
                idx /= side;
            }
            let e = MElement::from_i64(u);
            let rank = rank_of(&e);
            let class = classify_rank2(&e);
            PointOutcome {
                rank,
                case_a: in_case_a(&e),
                case_b: in_case_b(&e),
                u1_zero: e.u[0].is_zero(),
                b_identity: match &class {
                    RankClass::FamilyB { .. } => in_case_b(&e),
                    _ => true,
                },
                class,
                e,
            }
        })
        .collect();

    let mut rep = SweepReport {
        bound,
        total,
        rank_at_most_two: 0,
        zero: 0,
        family_a: 0,
        case_a_rank_above_two: 0,
        family_b: 0,
        rank_above_two: 0,
        mismatches: Vec::new(),
        rank_two_have_u1_zero: true,
        family_b_identities_hold: true,
        rank_exactly_two: true,
    };
    for o in outcomes {
        let fmt_u = || o.e.u.clone().map(|x| x.to_string());
        match &o.class {
            RankClass::Zero => rep.zero += 1,
            RankClass::FamilyA { .. } => rep.family_a += 1,
            RankClass::FamilyB { .. } => rep.family_b += 1,
            RankClass::RankAbove2(_) => rep.rank_above_two += 1,
            RankClass::Unexplained(r) => rep.mismatches.push(Mismatch {
                u: fmt_u(),
                rank: *r,
                reason: "rank at most two outside both families".into(),
            }),
        }
        if o.rank <= 2 {
            rep.rank_at_most_two += 1;
            if o.rank > 0 {
                rep.rank_two_have_u1_zero &= o.u1_zero;
                rep.rank_exactly_two &= o.rank == 2;
            }
        }
        if o.case_a && o.rank > 2 {
            rep.case_a_rank_above_two += 1;
        }
        if o.case_b && o.rank != 2 {
            rep.mismatches.push(Mismatch {
                u: fmt_u(),
                rank: o.rank,
                reason: "case (b) parameters without rank two".into(),
            });
        }
        rep.family_b_identities_hold &= o.b_identity;
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u1_direction_has_rank_four() {
        let e = MElement::from_i64([1, 0, 0, 0, 0, 0]);
        assert_eq!(rank_of(&e), 4);
        assert_eq!(classify_rank2(&e), RankClass::RankAbove2(4));
    }

    #[test]
    fn family_a_generator_is_rank_two() {
        let e = MElement::from_i64([0, 0, 1, 0, 0, 0]);
        assert_eq!(rank_of(&e), 2);
        assert!(matches!(classify_rank2(&e), RankClass::FamilyA { .. }));
    }

    #[test]
    fn family_b_example() {
        let e = MElement::from_i64([0, 1, 2, 2, -2, 0]);
        assert_eq!(family_b_i64(1, 2, 0).unwrap(), e);
        assert_eq!(rank_of(&e), 2);
        assert_eq!(
            classify_rank2(&e),
            RankClass::FamilyB {
                u2: rat(1),
                u4: rat(2),
                u6: rat(0)
            }
        );
    }

    #[test]
    fn zero_and_bad_bound() {
        assert_eq!(classify_rank2(&MElement::zero()), RankClass::Zero);
        assert!(verify_rank2_classification(1).is_err());
        assert!(family_b_i64(0, 1, 0).is_none());
    }
}

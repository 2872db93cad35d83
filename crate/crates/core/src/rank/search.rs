use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::g2::{self, MElement};
use crate::linalg::{frac, rat, Mat, PolyMat, Subspace, Vector};

use super::classify::{family_a, family_b};
use super::family::family_b_pair_identity;
use super::refute::refute_rank2_3d_subspace;

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ trial.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn small(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(-8..=8)
}

fn nonzero_small(rng: &mut ChaCha8Rng) -> i64 {
    loop {
        let v = small(rng);
        if v != 0 {
            return v;
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Strategy {
    Generic,
    Support,
    FamilyMix,
    IdealSlice,
}

const STRATEGIES: [Strategy; 4] = [
    Strategy::Generic,
    Strategy::Support,
    Strategy::FamilyMix,
    Strategy::IdealSlice,
];

fn random_in(rng: &mut ChaCha8Rng, basis: &[Vector]) -> MElement {
    let mut u = vec![rat(0); 6];
    for b in basis {
        let c = rat(small(rng));
        for (slot, x) in u.iter_mut().zip(b) {
            *slot += &c * x;
        }
    }
    MElement::from_slice(&u)
}

fn sample(rng: &mut ChaCha8Rng, strategy: Strategy, ideals: &Ideals) -> [MElement; 3] {
    match strategy {
        Strategy::Generic => std::array::from_fn(|_| MElement::from_i64(std::array::from_fn(|_| small(rng)))),
        Strategy::Support => {
            let mask: [bool; 6] = loop {
                let m: [bool; 6] = std::array::from_fn(|_| rng.gen_bool(0.5));
                if m.iter().filter(|&&b| b).count() >= 3 {
                    break m;
                }
            };
            std::array::from_fn(|_| MElement::from_i64(std::array::from_fn(|k| if mask[k] { small(rng) } else { 0 })))
        }
        Strategy::FamilyMix => {
            let b = family_b(rat(nonzero_small(rng)), rat(nonzero_small(rng)), rat(small(rng)))
                .expect("nonzero heads");
            let mut a = || family_a(rat(small(rng)), rat(small(rng)), rat(small(rng)));
            [b, a(), a()]
        }
        Strategy::IdealSlice => [
            MElement::from_slice(&ideals.last),
            random_in(rng, &ideals.second),
            random_in(rng, &ideals.second),
        ],
    }
}

struct Ideals {
    second: Vec<Vector>,
    last: Vector,
}

fn ideals() -> Result<Ideals> {
    let (alg, _) = g2::m_structure()?;
    let lcs = alg.lower_central_series();
    let last = lcs
        .iter()
        .rev()
        .find(|s| !s.is_zero())
        .ok_or_else(|| Error::InvalidArgument("m is abelian".into()))?;
    Ok(Ideals {
        second: lcs[1].basis_vectors(),
        last: last.basis_vectors().remove(0),
    })
}

/// Whether the span of the three elements is closed under the commutator.
pub fn is_subalgebra(basis: &[MElement; 3]) -> Result<bool> {
    let rows: Vec<Vector> = basis.iter().map(|b| b.u.to_vec()).collect();
    let space = Subspace::span(&rows, 6)?;
    for i in 0..3 {
        for j in i + 1..3 {
            let c = basis[i].to_matrix().commutator(&basis[j].to_matrix());
            let Some(e) = g2::membership_in_m(&c) else {
                return Ok(false);
            };
            if !space.contains(&e.u)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether every element of the span has rank at most two, decided from
/// the 3x3 minors of the pencil.
pub fn all_rank_at_most_two(basis: &[MElement; 3]) -> Result<bool> {
    let m = basis.clone().map(|b| b.to_matrix());
    let minors = PolyMat::pencil([&m[0], &m[1], &m[2]])?.minors(3)?;
    Ok(minors.iter().all(|p| p.is_zero()))
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub trials: usize,
    pub seed: u64,
    pub three_dimensional: usize,
    pub subalgebras: usize,
    pub refuted: usize,
    pub by_case: BTreeMap<String, usize>,
    /// Bases of subspaces all of whose nonzero elements have rank two.
    pub counterexamples: Vec<[[String; 6]; 3]>,
    /// Subalgebras among the counterexamples.
    pub subalgebra_counterexamples: usize,
}

impl SearchReport {
    pub fn found_rank_two_subalgebra(&self) -> bool {
        self.subalgebra_counterexamples > 0
    }
}

enum Outcome {
    Degenerate,
    Checked {
        closed: bool,
        case: Option<String>,
        counterexample: Option<[MElement; 3]>,
    },
}

fn run_trial(seed: u64, trial: usize, ideals: &Ideals) -> Result<Outcome> {
    let mut rng = trial_rng(seed, trial as u64);
    let strategy = STRATEGIES[trial % STRATEGIES.len()];
    let basis = sample(&mut rng, strategy, ideals);
    let rows: Vec<Vector> = basis.iter().map(|b| b.u.to_vec()).collect();
    if Mat::from_rows(6, &rows)?.rank() != 3 {
        return Ok(Outcome::Degenerate);
    }
    let closed = is_subalgebra(&basis)?;
    match refute_rank2_3d_subspace(&basis) {
        Ok(w) if w.rank >= 3 => Ok(Outcome::Checked {
            closed,
            case: Some(format!("{:?}", w.case)),
            counterexample: None,
        }),
        Ok(_) | Err(Error::Counterexample(_)) => {
            let confirmed = all_rank_at_most_two(&basis)?;
            Ok(Outcome::Checked {
                closed,
                case: None,
                counterexample: confirmed.then_some(basis),
            })
        }
        Err(e) => Err(e),
    }
}

/// Samples 3-dim subspaces of `m`, keeps track of which are subalgebras,
/// and refutes the rank-two property on each one. Trials are seeded
/// independently so the report depends only on `(trials, seed)`.
pub fn random_search_rank2_subalgebra(trials: usize, seed: u64) -> Result<SearchReport> {
    let ideals = ideals()?;
    let outcomes: Vec<Outcome> = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(seed, t, &ideals))
        .collect::<Result<_>>()?;
    let mut rep = SearchReport {
        trials,
        seed,
        three_dimensional: 0,
        subalgebras: 0,
        refuted: 0,
        by_case: BTreeMap::new(),
        counterexamples: Vec::new(),
        subalgebra_counterexamples: 0,
    };
    for o in outcomes {
        let Outcome::Checked { closed, case, counterexample } = o else {
            continue;
        };
        rep.three_dimensional += 1;
        rep.subalgebras += closed as usize;
        if let Some(c) = case {
            rep.refuted += 1;
            *rep.by_case.entry(c).or_default() += 1;
        }
        if let Some(b) = counterexample {
            rep.subalgebra_counterexamples += closed as usize;
            rep.counterexamples.push(b.map(|e| e.u.map(|x| x.to_string())));
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, Serialize)]
pub struct RefutationSweep {
    pub subspaces: usize,
    pub seed: u64,
    pub verified: usize,
    pub failures: Vec<String>,
    pub by_case: BTreeMap<String, usize>,
}

impl RefutationSweep {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.verified == self.subspaces
    }
}

fn recheck(basis: &[MElement; 3], coeffs: &[String; 3]) -> Result<usize> {
    let mut e = MElement::zero();
    for (b, c) in basis.iter().zip(coeffs) {
        e = e.add(&b.scale(&crate::linalg::parse_rational(c)?));
    }
    Ok(e.to_matrix().rank())
}

/// Runs the structured refutation on `count` seeded 3-dim subspaces and
/// recomputes the rank of every returned witness from its coefficients.
pub fn refutation_sweep(count: usize, seed: u64) -> Result<RefutationSweep> {
    let ideals = ideals()?;
    let results: Vec<(String, std::result::Result<(), String>)> = (0..count)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t as u64);
            let strategy = STRATEGIES[t % STRATEGIES.len()];
            let basis = loop {
                let b = sample(&mut rng, strategy, &ideals);
                let rows: Vec<Vector> = b.iter().map(|e| e.u.to_vec()).collect();
                if Mat::from_rows(6, &rows)?.rank() == 3 {
                    break b;
                }
            };
            let show = || format!("{:?}", basis.clone().map(|e| e.u.map(|x| x.to_string())));
            Ok(match refute_rank2_3d_subspace(&basis) {
                Ok(w) => {
                    let case = format!("{:?}", w.case);
                    match recheck(&basis, &w.coefficients)? {
                        r if r >= 3 && r == w.rank => (case, Ok(())),
                        r => (case, Err(format!("{}: witness rank {r}", show()))),
                    }
                }
                Err(e) => ("error".to_string(), Err(format!("{}: {e}", show()))),
            })
        })
        .collect::<Result<_>>()?;
    let mut rep = RefutationSweep {
        subspaces: count,
        seed,
        verified: 0,
        failures: Vec::new(),
        by_case: BTreeMap::new(),
    };
    for (case, r) in results {
        match r {
            Ok(()) => {
                rep.verified += 1;
                *rep.by_case.entry(case).or_default() += 1;
            }
            Err(msg) => rep.failures.push(msg),
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, Serialize)]
pub struct PairSweepReport {
    pub samples: usize,
    pub seed: u64,
    /// Pairs whose sum has rank two with nonzero heads.
    pub closing: usize,
    pub identity_failures: usize,
    pub difference_failures: usize,
}

impl PairSweepReport {
    pub fn passed(&self) -> bool {
        self.identity_failures == 0 && self.difference_failures == 0
    }
}

/// Random family-B pairs; half of them have proportional heads so that
/// the sum is likely to stay in family B.
pub fn family_b_pair_sweep(samples: usize, seed: u64) -> Result<PairSweepReport> {
    let outcomes: Vec<(bool, bool, bool)> = (0..samples)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t as u64);
            let (u2, u4) = (nonzero_small(&mut rng), nonzero_small(&mut rng));
            let b1 = family_b(rat(u2), rat(u4), rat(small(&mut rng))).expect("nonzero heads");
            let b2 = if t % 2 == 0 {
                let s = frac(nonzero_small(&mut rng), nonzero_small(&mut rng));
                family_b(&s * rat(u2), &s * rat(u4), rat(small(&mut rng)))
            } else {
                family_b(rat(nonzero_small(&mut rng)), rat(nonzero_small(&mut rng)), rat(small(&mut rng)))
            }
            .expect("nonzero heads");
            let r = family_b_pair_identity(&b1, &b2)?;
            Ok((
                r.identity_required,
                r.identity_holds == Some(false),
                r.difference_is_u6_direction == Some(false),
            ))
        })
        .collect::<Result<_>>()?;
    Ok(PairSweepReport {
        samples,
        seed,
        closing: outcomes.iter().filter(|o| o.0).count(),
        identity_failures: outcomes.iter().filter(|o| o.1).count(),
        difference_failures: outcomes.iter().filter(|o| o.2).count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn search_is_deterministic_and_finds_nothing() {
        let a = random_search_rank2_subalgebra(64, 7).unwrap();
        let b = random_search_rank2_subalgebra(64, 7).unwrap();
        assert_eq!(a.by_case, b.by_case);
        assert_eq!(a.subalgebras, b.subalgebras);
        assert!(a.counterexamples.is_empty());
        assert!(a.subalgebras > 0);
        assert_eq!(a.refuted, a.three_dimensional);
    }

    #[test]
    fn pair_sweep_has_closing_pairs() {
        let r = family_b_pair_sweep(200, 3).unwrap();
        assert!(r.closing > 0);
        assert!(r.passed());
    }

    #[test]
    fn refutation_sweep_verifies_every_witness() {
        let r = refutation_sweep(100, 11).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.by_case.values().sum::<usize>(), 100);
    }
}

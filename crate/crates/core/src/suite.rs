//! Check suites behind the command-line front end. Every stage records its
//! findings in a [`Report`]; errors become failed records.

use num_traits::Zero;
use serde::Serialize;

use crate::catalog::{make_n1, make_n2, make_n3, seven_dim_candidates, Epsilon};
use crate::error::Result;
use crate::g2::{self, N};
use crate::geometry::{
    curvature_identity_checks, geometry_report, verify_lowdim_abelian_lemma, verify_main_theorem, Sampling,
};
use crate::lie::{MetricLieAlgebra, Nilpotency};
use crate::linalg::Mat;
use crate::rank::{
    catalog_obstruction, embedding_obstruction, family_a_rank_locus, family_b_pair_sweep,
    random_search_rank2_subalgebra, refutation_sweep, two_step_lemma_check, verify_rank2_classification, Conclusion,
};
use crate::report::Report;

pub mod anchor {
    pub const CATALOG: &str = "metric-nilpotent-catalog";
    pub const G2: &str = "g2-split-model";
    pub const M: &str = "maximal-nilpotent-m";
    pub const RANK2: &str = "rank-two-classification";
    pub const FAMILY_A: &str = "family-a-rank-locus";
    pub const NO_RANK2: &str = "no-rank-two-subalgebra";
    pub const FAMILY_B: &str = "family-b-pairs";
    pub const LOWDIM: &str = "low-dimension-abelian";
    pub const TWO_STEP: &str = "two-step-index-three";
    pub const OBSTRUCTION: &str = "embedding-obstruction";
    pub const GEOMETRY: &str = "bi-invariant-geometry";
    pub const VERDICT: &str = "flat-torus-verdict";
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub bound: i64,
    pub trials: usize,
    pub refutations: usize,
    pub pair_samples: usize,
    pub lowdim4_samples: usize,
    pub curvature_samples: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            bound: 2,
            trials: 100_000,
            refutations: 10_000,
            pair_samples: 10_000,
            lowdim4_samples: 10_000,
            curvature_samples: 1_000,
            seed: 2024,
        }
    }
}

fn stage(report: &mut Report, name: &str, anchor: &str, f: impl FnOnce(&mut Report) -> Result<()>) {
    if let Err(e) = f(report) {
        report.fail_with(name, anchor, "stage aborted", e.to_string());
    }
}

fn format_three_form(phi: &g2::ThreeForm) -> String {
    let (coeffs, labels): (Vec<_>, Vec<_>) = phi
        .nonzero()
        .into_iter()
        .map(|((i, j, k), c)| (c, format!("e{}{}{}", i + 1, j + 1, k + 1)))
        .unzip();
    crate::lie::format_vector(&labels, &coeffs)
}

fn dims_of(m: &MetricLieAlgebra) -> (usize, usize) {
    let w = m.witt_decomposition();
    (w.j.dim(), w.w.dim())
}

pub fn catalog_checks(r: &mut Report) {
    let cases: Vec<(&str, MetricLieAlgebra, &[(usize, usize)], (usize, usize), Option<usize>)> = vec![
        ("nI(eps=+1)", make_n1(Epsilon::Plus), &[(4, 3)], (2, 3), None),
        ("nI(eps=-1)", make_n1(Epsilon::Minus), &[(3, 4)], (2, 3), None),
        ("nII", make_n2(), &[(3, 3)], (3, 0), Some(2)),
        ("nIII(eps=+1)", make_n3(Epsilon::Plus), &[(3, 2), (2, 3)], (2, 1), Some(3)),
        ("nIII(eps=-1)", make_n3(Epsilon::Minus), &[(3, 2), (2, 3)], (2, 1), Some(3)),
    ];
    for (name, m, sigs, jw, class) in cases {
        let alg = m.algebra();
        let defect = alg.jacobi_defect();
        let residual = m.invariance_residual();
        r.check(
            &format!("{name}: Jacobi and invariance"),
            anchor::CATALOG,
            defect.is_zero() && residual.is_zero(),
            format!("Jacobi defect {defect}, invariance residual {residual}"),
        );
        let sig = m.signature();
        r.check(
            &format!("{name}: signature"),
            anchor::CATALOG,
            sigs.contains(&sig),
            format!("{sig:?}"),
        );
        let got = dims_of(&m);
        r.check(
            &format!("{name}: dim(j, w)"),
            anchor::CATALOG,
            got == jw && m.witt_decomposition().is_valid_for(&m),
            format!("{got:?}"),
        );
        let computed = alg.nilpotency_class();
        let series: Vec<usize> = alg.lower_central_series().iter().map(|s| s.dim()).collect();
        match class {
            Some(c) => r.check(
                &format!("{name}: nilpotency class"),
                anchor::CATALOG,
                computed == Nilpotency::Class(c),
                format!("{computed:?}, lower central series {series:?}"),
            ),
            None => r.check(
                &format!("{name}: nilpotency class (recorded)"),
                anchor::CATALOG,
                alg.is_nilpotent(),
                format!("{computed:?}, lower central series {series:?}; not three-step"),
            ),
        };
    }
    let entries = seven_dim_candidates();
    let all_ok = entries
        .iter()
        .all(|e| e.value.dim() == 7 && e.value.signature() == (4, 3) && e.value.algebra().is_nilpotent());
    r.check(
        "seven-dimensional completions",
        anchor::CATALOG,
        entries.len() == 6 && all_ok,
        entries.iter().map(|e| e.label()).collect::<Vec<_>>().join(", "),
    );
}

pub fn g2_checks(r: &mut Report) {
    stage(r, "g2 model", anchor::G2, |r| {
        let m = g2::model()?;
        r.check(
            "g2: 14 generators, commutator-closed",
            anchor::G2,
            m.span.dim() == 14 && m.span.is_commutator_closed(),
            format!("dim {}", m.span.dim()),
        );
        let (p, q, z) = m.form.signature()?;
        let antidiagonal = Mat::from_fn(N, N, |i, j| crate::linalg::rat((i + j == N - 1) as i64));
        r.check(
            "g2: invariant form unique, signature (4,3)",
            anchor::G2,
            (p, q, z) == (4, 3, 0),
            format!(
                "signature ({p},{q}); {}",
                if m.form == antidiagonal { "antidiagonal ones" } else { "non-standard" }
            ),
        );
        r.check(
            "g2: invariant three-forms",
            anchor::G2,
            m.three_forms.dim() == 1,
            format!(
                "dim {}; phi = {}",
                m.three_forms.dim(),
                format_three_form(&m.phi)
            ),
        );
        let stab = g2::stabilizer_in_gl(&m.phi)?;
        let span_rows: Vec<_> = m.span.generators().iter().map(Mat::flatten).collect();
        let span = crate::linalg::Subspace::span(&span_rows, N * N)?;
        r.check(
            "g2: stabilizer of phi",
            anchor::G2,
            stab.dim() == 14 && stab == span,
            format!("dim {}, equals the generator span: {}", stab.dim(), stab == span),
        );
        let killing = m.algebra.killing_form().signature()?;
        r.check(
            "g2: Killing form",
            anchor::G2,
            killing == (8, 6, 0),
            format!("signature {killing:?}"),
        );
        Ok(())
    });
}

pub fn m_checks(r: &mut Report) {
    stage(r, "m", anchor::M, |r| {
        let model = g2::model()?;
        let gens = g2::m_generators();
        let inside = gens.iter().all(|g| g2::membership_in_g2(g).is_some());
        let triangular = gens.iter().all(Mat::is_strictly_lower_triangular);
        r.check(
            "m: 6-dim, strictly triangular, closed, inside g2",
            anchor::M,
            model.m_span.dim() == 6 && triangular && inside && model.m_span.is_commutator_closed(),
            format!("dim {}, triangular {triangular}, inside g2 {inside}", model.m_span.dim()),
        );
        let (alg, class) = g2::m_structure()?;
        let series: Vec<usize> = alg.lower_central_series().iter().map(|s| s.dim()).collect();
        r.check(
            "m: nilpotent",
            anchor::M,
            class == Nilpotency::Class(5),
            format!("{class:?}, lower central series {series:?}"),
        );
        Ok(())
    });
}

pub fn rank_checks(r: &mut Report, bound: i64) {
    stage(r, "rank-two classification", anchor::RANK2, |r| {
        let s = verify_rank2_classification(bound)?;
        let detail = format!(
            "{} matrices, {} mismatches; zero {}, family A {}, family B {}, rank > 2 {}",
            s.total,
            s.mismatches.len(),
            s.zero,
            s.family_a,
            s.family_b,
            s.rank_above_two
        );
        let rec = r.check("rank-two sweep", anchor::RANK2, s.passed(), detail);
        if let Some(m) = s.mismatches.first() {
            rec.witness = Some(format!("u = {:?} rank {}: {}", m.u, m.rank, m.reason));
        }
        r.check(
            "rank-two elements have u1 = 0",
            anchor::RANK2,
            s.rank_two_have_u1_zero,
            "checked on every nonzero element of rank at most two",
        );
        r.check(
            "family-B identities",
            anchor::RANK2,
            s.family_b_identities_hold,
            "u3 u4 = 4 u2^2 and 2 u2 u5 = -u4^2",
        );
        let l = family_a_rank_locus()?;
        r.check(
            "family-A rank locus",
            anchor::FAMILY_A,
            l.certified(),
            format!(
                "locus {}; forcing minor {}; {} grid points agree",
                l.components.join(" or "),
                l.forcing_minor.as_deref().unwrap_or("none"),
                l.grid_points
            ),
        );
        Ok(())
    });
}

pub fn no_rank2_checks(r: &mut Report, cfg: &SuiteConfig) {
    stage(r, "no rank-two subalgebra", anchor::NO_RANK2, |r| {
        let s = random_search_rank2_subalgebra(cfg.trials, cfg.seed)?;
        let rec = r.check(
            "random search for a rank-two subalgebra",
            anchor::NO_RANK2,
            s.counterexamples.is_empty(),
            format!(
                "{} trials (seed {}), {} three-dimensional, {} subalgebras, {} refuted",
                s.trials, s.seed, s.three_dimensional, s.subalgebras, s.refuted
            ),
        );
        if let Some(c) = s.counterexamples.first() {
            rec.witness = Some(format!("{c:?}"));
        }
        let f = refutation_sweep(cfg.refutations, cfg.seed.wrapping_add(1))?;
        let rec = r.check(
            "structured refutations",
            anchor::NO_RANK2,
            f.passed(),
            format!("{}/{} witnesses verified; cases {:?}", f.verified, f.subspaces, f.by_case),
        );
        if let Some(w) = f.failures.first() {
            rec.witness = Some(w.clone());
        }
        let p = family_b_pair_sweep(cfg.pair_samples, cfg.seed.wrapping_add(2))?;
        r.check(
            "family-B pair identity",
            anchor::FAMILY_B,
            p.passed() && p.closing > 0,
            format!(
                "{} samples, {} closing pairs, {} identity failures, {} difference failures",
                p.samples, p.closing, p.identity_failures, p.difference_failures
            ),
        );
        Ok(())
    });
}

pub fn lowdim_checks(r: &mut Report, cfg: &SuiteConfig) {
    stage(r, "low-dimension enumeration", anchor::LOWDIM, |r| {
        for (dim, bound, sampling) in [
            (3, 1, Sampling::Exhaustive),
            (
                4,
                2,
                Sampling::Seeded {
                    samples: cfg.lowdim4_samples,
                    seed: cfg.seed,
                },
            ),
        ] {
            let l = verify_lowdim_abelian_lemma(dim, bound, sampling)?;
            let rec = r.check(
                &format!("dim {dim}: nilpotent metric algebras are abelian"),
                anchor::LOWDIM,
                l.passed(),
                format!(
                    "{} tables ({} distinct), {} Lie, {} non-abelian nilpotent, {} survivors",
                    l.candidates,
                    l.distinct,
                    l.jacobi,
                    l.nilpotent_non_abelian,
                    l.survivors.len()
                ),
            );
            if let Some(s) = l.survivors.first() {
                rec.witness = Some(s.clone());
            }
        }
        Ok(())
    });
}

pub fn two_step_checks(r: &mut Report) {
    stage(r, "two-step criterion", anchor::TWO_STEP, |r| {
        for e in seven_dim_candidates() {
            let t = two_step_lemma_check(&e.value)?;
            if !t.hypotheses_hold() {
                continue;
            }
            let failed: Vec<String> = t.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
            let rec = r.check(
                &format!("{}: two-step structure", e.label()),
                anchor::TWO_STEP,
                t.passed(),
                t.checks
                    .iter()
                    .map(|c| format!("{} ({})", c.name, c.detail))
                    .collect::<Vec<_>>()
                    .join("; "),
            );
            if !failed.is_empty() {
                rec.witness = Some(failed.join(", "));
            }
        }
        Ok(())
    });
}

fn obstruction_record(r: &mut Report, name: &str, m: &MetricLieAlgebra) -> Result<()> {
    let o = embedding_obstruction(name, m)?;
    let detail = match &o.certificate {
        Some(c) => format!(
            "{:?} via {:?} [{}]: {} minors vanish {}, rank {}..{} on {} points{}",
            o.conclusion,
            o.test_subspace.expect("certificate implies a test subspace"),
            o.generators.join(", "),
            c.minors_checked,
            c.minors_vanish,
            c.min_rank,
            c.max_rank,
            c.sample_points,
            c.formula
                .as_ref()
                .map(|f| format!("; {} verified {}", f.description, f.verified()))
                .unwrap_or_default()
        ),
        None => format!("{:?}: {}", o.conclusion, o.reason),
    };
    r.check(
        &format!("{name}: obstruction"),
        anchor::OBSTRUCTION,
        o.conclusion != Conclusion::Inconclusive,
        detail,
    );
    Ok(())
}

pub fn obstruction_checks(r: &mut Report) {
    stage(r, "obstructions", anchor::OBSTRUCTION, |r| {
        for e in seven_dim_candidates() {
            let o = catalog_obstruction(&e)?;
            let expected = if e.value.algebra().is_abelian() {
                Conclusion::AbelianNoObstruction
            } else {
                Conclusion::NotEmbeddable
            };
            let formula_ok = o
                .certificate
                .as_ref()
                .map_or(true, |c| c.minors_checked == 1225 && c.formula.as_ref().is_some_and(|f| f.verified()));
            obstruction_record(r, &e.label(), &e.value)?;
            if o.conclusion != expected || !formula_ok {
                r.fail_with(
                    &format!("{}: expected {expected:?}", e.label()),
                    anchor::OBSTRUCTION,
                    "unexpected conclusion or unverified image formula",
                    format!("{:?}", o.conclusion),
                );
            }
        }
        Ok(())
    });
}

pub fn geometry_checks(r: &mut Report, cfg: &SuiteConfig) {
    stage(r, "geometry", anchor::GEOMETRY, |r| {
        for e in seven_dim_candidates() {
            let g = geometry_report(e.value.algebra());
            let c = curvature_identity_checks(&e.value, cfg.curvature_samples, cfg.seed)?;
            r.check(
                &format!("{}: curvature", e.label()),
                anchor::GEOMETRY,
                g.ricci_is_quarter_killing && g.ricci.is_zero() && g.holonomy_closed && c.passed(),
                format!(
                    "Ric = Killing/4 {}, Ricci-flat {}, holonomy dim {}, flat {}, identities on {} samples {}",
                    g.ricci_is_quarter_killing,
                    g.ricci.is_zero(),
                    g.holonomy_dim,
                    g.is_flat,
                    c.samples,
                    c.passed()
                ),
            );
        }
        Ok(())
    });
}

pub fn verdict_checks(r: &mut Report) {
    stage(r, "verdict", anchor::VERDICT, |r| {
        let v = verify_main_theorem()?;
        let obstructed = v
            .cases
            .iter()
            .filter(|c| c.obstruction.conclusion == Conclusion::NotEmbeddable)
            .count();
        r.check(
            "seven-dimensional verdict",
            anchor::VERDICT,
            v.flat_torus && obstructed == 5,
            format!(
                "{}: {obstructed} obstructed, surviving {}",
                v.conclusion,
                v.surviving.join(", ")
            ),
        );
        Ok(())
    });
}

/// Every stage in order: catalog, g2 model, m, rank classification,
/// rank-two search and refutations, low-dimension enumeration, two-step criterion,
/// obstructions, geometry, verdict.
pub fn verify_paper(cfg: &SuiteConfig) -> Report {
    let mut r = Report::new("verify-paper");
    catalog_checks(&mut r);
    g2_checks(&mut r);
    m_checks(&mut r);
    rank_checks(&mut r, cfg.bound);
    no_rank2_checks(&mut r, cfg);
    lowdim_checks(&mut r, cfg);
    two_step_checks(&mut r);
    obstruction_checks(&mut r);
    geometry_checks(&mut r, cfg);
    verdict_checks(&mut r);
    r
}

/// Structural summary of a single metric Lie algebra.
pub fn analyze(name: &str, m: &MetricLieAlgebra) -> Report {
    let mut r = Report::new(format!("analyze {name}"));
    let alg = m.algebra();
    let (p, q) = m.signature();
    r.check("dimension", anchor::CATALOG, true, m.dim().to_string());
    r.check("signature", anchor::CATALOG, true, format!("({p}, {q})"));
    let series: Vec<usize> = alg.lower_central_series().iter().map(|s| s.dim()).collect();
    r.check(
        "nilpotency",
        anchor::CATALOG,
        true,
        format!("{:?}, lower central series {series:?}", alg.nilpotency_class()),
    );
    r.check("center", anchor::CATALOG, true, alg.center().dim().to_string());
    r.check("derived algebra", anchor::CATALOG, true, alg.derived_algebra().dim().to_string());
    let w = m.witt_decomposition();
    r.check(
        "dim j",
        anchor::CATALOG,
        w.is_valid_for(m),
        format!("{} (w: {}, j*: {})", w.j.dim(), w.w.dim(), w.j_star.dim()),
    );
    let g = geometry_report(alg);
    r.check(
        "Ricci",
        anchor::GEOMETRY,
        g.ricci_is_quarter_killing,
        if g.ricci.is_zero() { "0".to_string() } else { format!("{:?}", g.ricci) },
    );
    r.check("holonomy dim", anchor::GEOMETRY, g.holonomy_closed, g.holonomy_dim.to_string());
    r.check("flat", anchor::GEOMETRY, true, g.is_flat.to_string());
    r
}

pub fn obstruct(name: &str, m: &MetricLieAlgebra) -> Report {
    let mut r = Report::new(format!("obstruct {name}"));
    if let Err(e) = obstruction_record(&mut r, name, m) {
        r.fail_with(&format!("{name}: obstruction"), anchor::OBSTRUCTION, "aborted", e.to_string());
    }
    r
}

pub fn g2_check() -> Report {
    let mut r = Report::new("g2 check");
    g2_checks(&mut r);
    m_checks(&mut r);
    r
}

pub fn rank_classify(bound: i64) -> Report {
    let mut r = Report::new(format!("rank-classify --bound {bound}"));
    rank_checks(&mut r, bound);
    r
}

pub fn search(trials: usize, seed: u64) -> Report {
    let cfg = SuiteConfig {
        trials,
        refutations: trials.min(10_000),
        pair_samples: trials.min(10_000),
        seed,
        ..SuiteConfig::default()
    };
    let mut r = Report::new(format!("search --trials {trials} --seed {seed}"));
    no_rank2_checks(&mut r, &cfg);
    r
}

#[derive(Serialize)]
struct G2Dump {
    generators: Vec<Vec<Vec<String>>>,
    m_generators: Vec<Vec<Vec<String>>>,
    invariant_form: Vec<Vec<String>>,
    three_form: Vec<(String, String)>,
}

fn mat_strings(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect()
}

/// The model's generators, invariant form and three-form as JSON.
pub fn g2_dump() -> Result<String> {
    let m = g2::model()?;
    let dump = G2Dump {
        generators: m.span.generators().iter().map(mat_strings).collect(),
        m_generators: m.m_span.generators().iter().map(mat_strings).collect(),
        invariant_form: mat_strings(&m.form),
        three_form: m
            .phi
            .nonzero()
            .into_iter()
            .map(|((i, j, k), c)| (format!("e{}{}{}", i + 1, j + 1, k + 1), c.to_string()))
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&dump).expect("plain data serializes"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_n1() {
        let r = analyze("nI", &make_n1(Epsilon::Plus));
        assert!(r.passed(), "{}", r.human());
        let get = |n: &str| r.records.iter().find(|x| x.name == n).unwrap().detail.clone();
        assert!(get("dim j").starts_with('2'));
        assert_eq!(get("holonomy dim"), "3");
        assert_eq!(get("Ricci"), "0");
    }

    #[test]
    fn small_suite_passes() {
        let cfg = SuiteConfig {
            trials: 200,
            refutations: 200,
            pair_samples: 200,
            lowdim4_samples: 200,
            curvature_samples: 20,
            ..SuiteConfig::default()
        };
        let r = verify_paper(&cfg);
        assert!(r.passed(), "{}", r.human());
    }
}

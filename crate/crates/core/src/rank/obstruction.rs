//! Non-embedding of a metric nilpotent Lie algebra into `g2(2)`: its
//! adjoint image would have to contain a 3-dim subalgebra all of whose
//! nonzero elements have rank two, and `m` has none.

use num_traits::Zero;
use serde::Serialize;

use crate::catalog::CatalogEntry;
use crate::error::Result;
use crate::lie::{MetricLieAlgebra, Nilpotency};
use crate::linalg::{HomPoly3, Mat, MatrixSpan, Subspace, Vector};

use super::certificate::{constant_rank_two_certificate, ImageFormula, RankTwoCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TestSubspace {
    /// `ad(w)` for the Witt summand `w`.
    AdW,
    /// The whole adjoint image `ad(n)`.
    AdN,
    /// `ad(j*)`, which equals `ad(n)` for two-step algebras.
    AdJStar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Conclusion {
    NotEmbeddable,
    AbelianNoObstruction,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub name: String,
    pub ad_image_dim: usize,
    pub test_subspace: Option<TestSubspace>,
    /// Basis labels whose adjoint maps span the test subspace.
    pub generators: Vec<String>,
    pub closed: bool,
    pub abelian: bool,
    pub certificate: Option<RankTwoCertificate>,
    pub conclusion: Conclusion,
    pub reason: String,
}

impl ObstructionReport {
    fn without_test(name: &str, ad_image_dim: usize, conclusion: Conclusion, reason: String) -> Self {
        ObstructionReport {
            name: name.to_string(),
            ad_image_dim,
            test_subspace: None,
            generators: Vec::new(),
            closed: false,
            abelian: false,
            certificate: None,
            conclusion,
            reason,
        }
    }
}

fn ad_image(m: &MetricLieAlgebra) -> (Vec<usize>, Subspace) {
    let alg = m.algebra();
    let n = alg.dim();
    let mut chosen = Vec::new();
    let mut span = Subspace::zero(n * n);
    for i in 0..n {
        let v = alg.ad_basis(i).flatten();
        if !span.contains(&v).expect("ambient") {
            span = span.sum(&Subspace::span([&v], n * n).expect("ambient")).expect("ambient");
            chosen.push(i);
        }
    }
    (chosen, span)
}

fn labelled_vector(m: &MetricLieAlgebra, entries: &[(&str, HomPoly3)]) -> Option<Vec<HomPoly3>> {
    let mut v = vec![HomPoly3::zero(); m.dim()];
    for (label, p) in entries {
        let i = m.algebra().index_of(label)?;
        v[i] = v[i].try_add(p).ok()?;
    }
    Some(v)
}

fn coefficient(m: &MetricLieAlgebra, x: &str, y: &str, z: &str) -> Option<crate::Rational> {
    let alg = m.algebra();
    let (i, j, k) = (alg.index_of(x)?, alg.index_of(y)?, alg.index_of(z)?);
    Some(alg.bracket_basis(i, j)[k].clone())
}

/// `im Q = span{z1, Q a1}` for `Q = α ad w1 + β ad w2 + γ ad w3`.
fn ad_w_formula(m: &MetricLieAlgebra, pencil_column_a1: Vec<HomPoly3>) -> Option<ImageFormula> {
    let z1 = labelled_vector(m, &[("z1", HomPoly3::constant(crate::linalg::rat(1)))])?;
    Some(ImageFormula::Span {
        description: "im Q = span{z1, Q a1}".into(),
        vectors: [z1, pencil_column_a1],
    })
}

/// `im Q = span{α1 w - β ε z1, α2 ε z1 - α1 ε z2}` for
/// `Q = α1 ad a1 + α2 ad a2 + β ad w`, with `ε` read off `[a2, w] = ε z1`.
fn ad_n_formula(m: &MetricLieAlgebra) -> Option<ImageFormula> {
    let eps = coefficient(m, "a2", "w", "z1")?;
    if eps.is_zero() {
        return None;
    }
    let (a1, a2, b) = (HomPoly3::var(0), HomPoly3::var(1), HomPoly3::var(2));
    let v1 = labelled_vector(m, &[("w", a1.clone()), ("z1", b.scale(&-eps.clone()))])?;
    let v2 = labelled_vector(m, &[("z1", a2.scale(&eps)), ("z2", a1.scale(&-eps))])?;
    Some(ImageFormula::Span {
        description: "im Q = span{α1 w - β ε z1, α2 ε z1 - α1 ε z2}".into(),
        vectors: [v1, v2],
    })
}

/// `im ad(x) = x^perp ∩ j` for `x = α a1 + β a2 + γ a3` in `j*`.
fn ad_j_star_formula(m: &MetricLieAlgebra, j_star: &[Vector], j: &Subspace) -> ImageFormula {
    let x: Vec<HomPoly3> = (0..m.dim())
        .map(|i| {
            let mut p = HomPoly3::zero();
            for (k, a) in j_star.iter().enumerate() {
                if !a[i].is_zero() {
                    p = p.try_add(&HomPoly3::var(k).scale(&a[i])).expect("linear terms");
                }
            }
            p
        })
        .collect();
    ImageFormula::PerpInIdeal {
        description: "im ad(x) = x^perp ∩ j".into(),
        x,
        form: m.form().clone(),
        ideal: j.clone(),
    }
}

fn evaluate(
    name: &str,
    ad_dim: usize,
    kind: TestSubspace,
    gens: Vec<Mat>,
    labels: Vec<String>,
    formula: Option<ImageFormula>,
) -> Result<ObstructionReport> {
    let span = MatrixSpan::new(gens.clone())?;
    let closed = span.is_commutator_closed();
    let abelian = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutator(b).is_zero()));
    let cert = constant_rank_two_certificate([&gens[0], &gens[1], &gens[2]], formula.as_ref())?;
    let ok = cert.holds() && closed;
    let reason = if ok {
        format!(
            "{kind:?} is a 3-dim subalgebra of constant rank 2; m contains none, so no embedding into g2(2)"
        )
    } else {
        format!("{kind:?} does not certify constant rank 2")
    };
    Ok(ObstructionReport {
        name: name.to_string(),
        ad_image_dim: ad_dim,
        test_subspace: Some(kind),
        generators: labels,
        closed,
        abelian,
        certificate: Some(cert),
        conclusion: if ok { Conclusion::NotEmbeddable } else { Conclusion::Inconclusive },
        reason,
    })
}

/// Picks a 3-dim test subspace of the adjoint image and certifies that it
/// has constant rank two. Abelian algebras carry no obstruction.
pub fn embedding_obstruction(name: &str, m: &MetricLieAlgebra) -> Result<ObstructionReport> {
    let alg = m.algebra();
    let (chosen, image) = ad_image(m);
    let ad_dim = image.dim();
    if alg.is_abelian() {
        return Ok(ObstructionReport::without_test(
            name,
            0,
            Conclusion::AbelianNoObstruction,
            "abelian: ad vanishes, nothing to test".into(),
        ));
    }
    let class = alg.nilpotency_class();
    if class == Nilpotency::NotNilpotent {
        return Ok(ObstructionReport::without_test(
            name,
            ad_dim,
            Conclusion::Inconclusive,
            "not nilpotent".into(),
        ));
    }
    let labels = alg.labels();

    if class == Nilpotency::Class(2) {
        let witt = m.witt_decomposition();
        if witt.j_star_basis.len() != 3 {
            return Ok(ObstructionReport::without_test(
                name,
                ad_dim,
                Conclusion::Inconclusive,
                format!("two-step with dim j = {}, expected 3", witt.j.dim()),
            ));
        }
        let gens: Vec<Mat> = witt.j_star_basis.iter().map(|a| alg.ad_matrix(a)).collect::<Result<_>>()?;
        let names = witt
            .j_star_basis
            .iter()
            .map(|a| crate::lie::format_vector(labels, a))
            .collect();
        let formula = ad_j_star_formula(m, &witt.j_star_basis, &witt.j);
        return evaluate(name, ad_dim, TestSubspace::AdJStar, gens, names, Some(formula));
    }

    if ad_dim == 3 {
        let gens: Vec<Mat> = chosen.iter().map(|&i| alg.ad_basis(i)).collect();
        let names = chosen.iter().map(|&i| labels[i].clone()).collect();
        let expected = ["a1", "a2", "w"].iter().map(|s| alg.index_of(s));
        let formula = if expected.eq(chosen.iter().map(|&i| Some(i))) {
            ad_n_formula(m)
        } else {
            None
        };
        return evaluate(name, ad_dim, TestSubspace::AdN, gens, names, formula);
    }

    let witt = m.witt_decomposition();
    let w = witt.w.basis_vectors();
    if w.len() == 3 {
        let gens: Vec<Mat> = w.iter().map(|v| alg.ad_matrix(v)).collect::<Result<_>>()?;
        let rows: Vec<Vector> = gens.iter().map(Mat::flatten).collect();
        if Mat::from_rows(rows[0].len(), &rows)?.rank() == 3 {
            let names = w.iter().map(|v| crate::lie::format_vector(labels, v)).collect();
            let expected = ["w1", "w2", "w3"].iter().map(|s| alg.index_of(s).map(|i| crate::linalg::unit_vec(alg.dim(), i)));
            let formula = if expected.eq(w.iter().cloned().map(Some)) {
                let pencil = crate::linalg::PolyMat::pencil([&gens[0], &gens[1], &gens[2]])?;
                alg.index_of("a1").and_then(|i| ad_w_formula(m, pencil.column(i)))
            } else {
                None
            };
            return evaluate(name, ad_dim, TestSubspace::AdW, gens, names, formula);
        }
    }
    Ok(ObstructionReport::without_test(
        name,
        ad_dim,
        Conclusion::Inconclusive,
        "no 3-dim test subspace of the adjoint image found".into(),
    ))
}

pub fn catalog_obstruction(entry: &CatalogEntry) -> Result<ObstructionReport> {
    embedding_obstruction(&entry.label(), &entry.value)
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: String) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoStepReport {
    /// Hypotheses: dimension 7, two-step nilpotent, index 3.
    pub hypotheses: Vec<Check>,
    pub checks: Vec<Check>,
    pub certificate: Option<RankTwoCertificate>,
}

impl TwoStepReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|c| c.passed)
    }

    pub fn passed(&self) -> bool {
        self.hypotheses_hold()
            && self.checks.iter().all(|c| c.passed)
            && self.certificate.as_ref().is_some_and(RankTwoCertificate::holds)
    }
}

/// For a 7-dim two-step nilpotent metric algebra of index 3: `dim j = 3`,
/// `ad(n) = ad(j*)` is 3-dim, `[n, n] = j`, `z(n) = w ⊕ j`, and `ad(j*)`
/// has constant rank two with image `x^perp ∩ j`.
pub fn two_step_lemma_check(m: &MetricLieAlgebra) -> Result<TwoStepReport> {
    let alg = m.algebra();
    let (p, q) = m.signature();
    let class = alg.nilpotency_class();
    let hypotheses = vec![
        check("dimension 7", m.dim() == 7, format!("dim = {}", m.dim())),
        check("two-step nilpotent", class == Nilpotency::Class(2), format!("{class:?}")),
        check("index 3", p.min(q) == 3, format!("signature ({p}, {q})")),
    ];
    if !hypotheses.iter().all(|c| c.passed) {
        return Ok(TwoStepReport {
            hypotheses,
            checks: Vec::new(),
            certificate: None,
        });
    }
    let witt = m.witt_decomposition();
    let (_, image) = ad_image(m);
    let derived = alg.derived_algebra();
    let center = alg.center();
    let w_plus_j = witt.w.sum(&witt.j)?;
    let n = m.dim();
    let ad_j_star = Subspace::from_rows(
        witt.j_star_basis
            .iter()
            .map(|a| alg.ad_matrix(a).map(|x| x.flatten()))
            .collect::<Result<_>>()?,
        n * n,
    )?;
    let checks = vec![
        check("dim j = 3", witt.j.dim() == 3, format!("dim j = {}", witt.j.dim())),
        check(
            "dim ad(n) = dim j* = 3",
            image.dim() == 3 && witt.j_star.dim() == 3,
            format!("dim ad(n) = {}, dim j* = {}", image.dim(), witt.j_star.dim()),
        ),
        check("ad(n) = ad(j*)", ad_j_star == image, format!("dim ad(j*) = {}", ad_j_star.dim())),
        check("[n, n] = j", derived == witt.j, format!("dim [n, n] = {}", derived.dim())),
        check("z(n) = w + j", center == w_plus_j, format!("dim z(n) = {}", center.dim())),
    ];
    let certificate = if witt.j_star_basis.len() == 3 {
        let gens: Vec<Mat> = witt.j_star_basis.iter().map(|a| alg.ad_matrix(a)).collect::<Result<_>>()?;
        let f = ad_j_star_formula(m, &witt.j_star_basis, &witt.j);
        Some(constant_rank_two_certificate([&gens[0], &gens[1], &gens[2]], Some(&f))?)
    } else {
        None
    };
    Ok(TwoStepReport {
        hypotheses,
        checks,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::seven_dim_candidates;

    #[test]
    fn catalog_dispositions() {
        let expected = [
            Some(TestSubspace::AdW),
            Some(TestSubspace::AdW),
            Some(TestSubspace::AdJStar),
            Some(TestSubspace::AdN),
            Some(TestSubspace::AdN),
            None,
        ];
        for (entry, kind) in seven_dim_candidates().iter().zip(expected) {
            let r = catalog_obstruction(entry).unwrap();
            assert_eq!(r.test_subspace, kind, "{}", r.name);
            if kind.is_some() {
                assert_eq!(r.conclusion, Conclusion::NotEmbeddable, "{r:?}");
                let f = r.certificate.as_ref().unwrap().formula.as_ref().expect("formula attached");
                assert!(f.verified(), "{}: {f:?}", r.name);
                assert_eq!(r.abelian, kind != Some(TestSubspace::AdN), "{}", r.name);
                assert!(r.closed);
            } else {
                assert_eq!(r.conclusion, Conclusion::AbelianNoObstruction);
            }
        }
    }

    #[test]
    fn two_step_case() {
        let entries = seven_dim_candidates();
        let r = two_step_lemma_check(&entries[2].value).unwrap();
        assert!(r.passed(), "{r:?}");
        let n1 = two_step_lemma_check(&entries[0].value).unwrap();
        assert!(!n1.hypotheses_hold());
        let ab = two_step_lemma_check(&entries[5].value).unwrap();
        assert!(!ab.hypotheses_hold());
    }
}

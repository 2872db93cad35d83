//! The indecomposable non-abelian nilpotent metric Lie algebras of
//! dimension below eight, and their seven-dimensional index-3 completions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, MetricLieAlgebra};
use crate::linalg::{rat, Mat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub fn value(self) -> i64 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }

    pub fn both() -> [Epsilon; 2] {
        [Epsilon::Plus, Epsilon::Minus]
    }
}

impl TryFrom<i64> for Epsilon {
    type Error = Error;
    fn try_from(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Epsilon::Plus),
            -1 => Ok(Epsilon::Minus),
            _ => Err(Error::InvalidArgument(format!("epsilon must be +1 or -1, got {v}"))),
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Epsilon::Plus => "+1",
            Epsilon::Minus => "-1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CatalogName {
    #[serde(rename = "nI")]
    NI,
    #[serde(rename = "nII")]
    NII,
    #[serde(rename = "nIII")]
    NIII,
    #[serde(rename = "abelian")]
    Abelian,
}

/// How the non-embedding argument disposes of a seven-dimensional case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Disposal {
    /// `ad(w)` is a three-dimensional abelian subalgebra of constant rank two.
    ConstantRankAdW,
    /// Two-step nilpotent: `ad(n) = ad(j*)` has constant rank two.
    TwoStep,
    /// `ad(n)` itself is three-dimensional of constant rank two.
    ConstantRankAdN,
    /// Abelian: survives, with trivial holonomy.
    FlatTorus,
}

impl Disposal {
    pub fn describe(self) -> &'static str {
        match self {
            Disposal::ConstantRankAdW => "ad(w) is 3-dim abelian of constant rank 2; no such subalgebra in m",
            Disposal::TwoStep => "two-step, index 3: ad(n) = ad(j*) has constant rank 2; no such subalgebra in m",
            Disposal::ConstantRankAdN => "ad(n) is 3-dim of constant rank 2; no such subalgebra in m",
            Disposal::FlatTorus => "abelian: trivial holonomy, flat torus",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub epsilon: Option<Epsilon>,
    /// Signature `(p0, q0)` of the abelian summand.
    pub padding: (usize, usize),
    /// Whether the form was negated to reach signature `(4, 3)`.
    pub flipped: bool,
    pub disposal: Disposal,
    pub value: MetricLieAlgebra,
}

impl CatalogEntry {
    pub fn label(&self) -> String {
        let core = match (self.name, self.epsilon) {
            (CatalogName::NI, Some(e)) => format!("nI(eps={e})"),
            (CatalogName::NII, _) => "nII".to_string(),
            (CatalogName::NIII, Some(e)) => format!("nIII(eps={e})"),
            (CatalogName::Abelian, _) => {
                let (p, q) = self.value.signature();
                return format!("R^{}_{}", p + q, q);
            }
            (_, None) => unreachable!("nI and nIII carry epsilon"),
        };
        match self.padding {
            (0, 0) => core,
            (p, q) => format!("{core} + R^{}_{}", p + q, q),
        }
    }
}

/// Form with `<x_i, y_i> = 1` for each pair plus the given extra entries.
fn form_from(n: usize, pairs: &[(usize, usize, Rational)]) -> Mat {
    let mut f = Mat::zeros(n, n);
    for (i, j, v) in pairs {
        f[(*i, *j)] = v.clone();
        f[(*j, *i)] = v.clone();
    }
    f
}

/// Basis `(a1, a2, w1, w2, w3, z1, z2)`.
pub fn make_n1(eps: Epsilon) -> MetricLieAlgebra {
    let e = eps.value();
    let alg = LieAlgebra::from_relations(
        &["a1", "a2", "w1", "w2", "w3", "z1", "z2"],
        &[
            ("a1", "a2", &[("w1", 1)]),
            ("a1", "w1", &[("w2", 1)]),
            ("a1", "w2", &[("w3", -e)]),
            ("a1", "w3", &[("z2", -1)]),
            ("a2", "w3", &[("z1", 1)]),
            ("w1", "w2", &[("z1", e)]),
        ],
    )
    .expect("nI satisfies Jacobi");
    let form = form_from(
        7,
        &[
            (0, 5, rat(1)),
            (1, 6, rat(1)),
            (2, 4, rat(1)),
            (3, 3, rat(e)),
        ],
    );
    MetricLieAlgebra::new(alg, form).expect("nI metric is invariant")
}

/// Basis `(a1, a2, a3, z1, z2, z3)`.
pub fn make_n2() -> MetricLieAlgebra {
    let alg = LieAlgebra::from_relations(
        &["a1", "a2", "a3", "z1", "z2", "z3"],
        &[
            ("a1", "a2", &[("z3", 1)]),
            ("a2", "a3", &[("z1", 1)]),
            ("a3", "a1", &[("z2", 1)]),
        ],
    )
    .expect("nII satisfies Jacobi");
    let form = form_from(6, &[(0, 3, rat(1)), (1, 4, rat(1)), (2, 5, rat(1))]);
    MetricLieAlgebra::new(alg, form).expect("nII metric is invariant")
}

/// Basis `(a1, a2, w, z1, z2)`.
pub fn make_n3(eps: Epsilon) -> MetricLieAlgebra {
    let e = eps.value();
    let alg = LieAlgebra::from_relations(
        &["a1", "a2", "w", "z1", "z2"],
        &[
            ("a1", "a2", &[("w", 1)]),
            ("a1", "w", &[("z2", -e)]),
            ("a2", "w", &[("z1", e)]),
        ],
    )
    .expect("nIII satisfies Jacobi");
    let form = form_from(5, &[(0, 3, rat(1)), (1, 4, rat(1)), (2, 2, rat(e))]);
    MetricLieAlgebra::new(alg, form).expect("nIII metric is invariant")
}

/// `R^{p+q}` with `diag(+1 x p, -1 x q)`, basis `e1, e2, ...`.
pub fn make_abelian(p: usize, q: usize) -> Result<MetricLieAlgebra> {
    make_abelian_labeled(p, q, "e")
}

pub fn make_abelian_labeled(p: usize, q: usize, prefix: &str) -> Result<MetricLieAlgebra> {
    if p + q == 0 {
        return Err(Error::InvalidArgument("abelian algebra needs p + q >= 1".into()));
    }
    let ls = (1..=p + q).map(|i| format!("{prefix}{i}")).collect();
    let diag: Vec<Rational> = (0..p + q).map(|i| rat(if i < p { 1 } else { -1 })).collect();
    MetricLieAlgebra::new(LieAlgebra::abelian(ls), Mat::diagonal(&diag))
}

fn completion(
    name: CatalogName,
    epsilon: Option<Epsilon>,
    base: MetricLieAlgebra,
    padding: (usize, usize),
    disposal: Disposal,
) -> CatalogEntry {
    let sum = if padding == (0, 0) {
        base
    } else {
        let pad = make_abelian_labeled(padding.0, padding.1, "r").expect("nonempty padding");
        base.orthogonal_direct_sum(&pad).expect("orthogonal sum of metric algebras")
    };
    let (value, flipped) = sum.with_positive_majority();
    CatalogEntry {
        name,
        epsilon,
        padding,
        flipped,
        disposal,
        value,
    }
}

/// Every seven-dimensional nilpotent metric Lie algebra of index 3 up to
/// isomorphism, normalized to signature `(4, 3)`, in case order.
pub fn seven_dim_candidates() -> Vec<CatalogEntry> {
    let mut out = Vec::with_capacity(6);
    for eps in Epsilon::both() {
        out.push(completion(CatalogName::NI, Some(eps), make_n1(eps), (0, 0), Disposal::ConstantRankAdW));
    }
    out.push(completion(CatalogName::NII, None, make_n2(), (0, 1), Disposal::TwoStep));
    out.push(completion(
        CatalogName::NIII,
        Some(Epsilon::Plus),
        make_n3(Epsilon::Plus),
        (1, 1),
        Disposal::ConstantRankAdN,
    ));
    out.push(completion(
        CatalogName::NIII,
        Some(Epsilon::Minus),
        make_n3(Epsilon::Minus),
        (2, 0),
        Disposal::ConstantRankAdN,
    ));
    out.push(CatalogEntry {
        name: CatalogName::Abelian,
        epsilon: None,
        padding: (0, 0),
        flipped: false,
        disposal: Disposal::FlatTorus,
        value: make_abelian(4, 3).expect("p + q = 7"),
    });
    out
}

/// Looks up an exportable algebra by name: `nI`, `nI-`, `nII`, `nIII`,
/// `nIII-`, `abelian` (`R^7_3`), or any label produced by
/// [`CatalogEntry::label`].
pub fn by_name(name: &str) -> Option<(String, MetricLieAlgebra)> {
    let simple = match name {
        "nI" | "nI+" => Some(make_n1(Epsilon::Plus)),
        "nI-" => Some(make_n1(Epsilon::Minus)),
        "nII" => Some(make_n2()),
        "nIII" | "nIII+" => Some(make_n3(Epsilon::Plus)),
        "nIII-" => Some(make_n3(Epsilon::Minus)),
        "abelian" => make_abelian(4, 3).ok(),
        _ => None,
    };
    if let Some(m) = simple {
        return Some((name.to_string(), m));
    }
    seven_dim_candidates()
        .into_iter()
        .find(|e| e.label() == name)
        .map(|e| (e.label(), e.value))
}

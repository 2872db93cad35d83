//! JSON documents describing metric Lie algebras. Rationals are written as
//! `"p"` or `"p/q"` strings so nothing is rounded.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, MetricLieAlgebra};
use crate::linalg::{parse_rational, zero_vec, Mat, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub x: String,
    pub y: String,
    pub value: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricEntry {
    pub x: String,
    pub y: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default)]
    pub metric: Vec<MetricEntry>,
}

impl AlgebraFile {
    pub fn from_metric(name: &str, m: &MetricLieAlgebra) -> Self {
        let labels = m.labels();
        let brackets = m
            .algebra()
            .nonzero_brackets()
            .into_iter()
            .map(|(i, j, v)| BracketEntry {
                x: labels[i].clone(),
                y: labels[j].clone(),
                value: v
                    .iter()
                    .zip(labels)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, l)| (l.clone(), c.to_string()))
                    .collect(),
            })
            .collect();
        let n = m.dim();
        let mut metric = Vec::new();
        for i in 0..n {
            for j in i..n {
                let v = &m.form()[(i, j)];
                if !v.is_zero() {
                    metric.push(MetricEntry {
                        x: labels[i].clone(),
                        y: labels[j].clone(),
                        value: v.to_string(),
                    });
                }
            }
        }
        AlgebraFile {
            name: name.to_string(),
            dim: n,
            basis: labels.to_vec(),
            brackets,
            metric,
        }
    }

    /// Resolves labels, fills the antisymmetric table and the symmetric
    /// form, and validates Jacobi, nondegeneracy and invariance.
    pub fn to_metric(&self) -> Result<MetricLieAlgebra> {
        let n = self.basis.len();
        if n != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: n,
            });
        }
        let mut index = HashMap::new();
        for (i, l) in self.basis.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::Parse(format!("duplicate basis label {l:?}")));
            }
        }
        let resolve = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| Error::Parse(format!("unknown basis label {l:?}")))
        };

        let mut table: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
        for b in &self.brackets {
            let (i, j) = (resolve(&b.x)?, resolve(&b.y)?);
            let mut v = zero_vec(n);
            for (label, text) in &b.value {
                v[resolve(label)?] += parse_rational(text)?;
            }
            if i == j {
                if v.iter().any(|c| !c.is_zero()) {
                    return Err(Error::Table(format!("[{0}, {0}] must vanish", b.x)));
                }
                continue;
            }
            let (key, v) = if i < j {
                ((i, j), v)
            } else {
                ((j, i), v.into_iter().map(|c| -c).collect())
            };
            if table.insert(key, v).is_some() {
                return Err(Error::Table(format!("bracket [{}, {}] given twice", b.x, b.y)));
            }
        }
        let alg = LieAlgebra::new(
            self.basis.clone(),
            table.into_iter().map(|((i, j), v)| (i, j, v)).collect(),
        )?;

        let mut form = Mat::zeros(n, n);
        let mut seen = HashMap::new();
        for e in &self.metric {
            let (i, j) = (resolve(&e.x)?, resolve(&e.y)?);
            let v = parse_rational(&e.value)?;
            let key = (i.min(j), i.max(j));
            if let Some(prev) = seen.insert(key, v.clone()) {
                if prev != v {
                    return Err(Error::Parse(format!(
                        "conflicting metric entries for ({}, {})",
                        e.x, e.y
                    )));
                }
            }
            form[(i, j)] = v.clone();
            form[(j, i)] = v;
        }
        MetricLieAlgebra::new(alg, form)
    }
}

pub fn parse_algebra_file(text: &str) -> Result<(String, MetricLieAlgebra)> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let m = file.to_metric()?;
    Ok((file.name, m))
}

pub fn serialize_algebra(name: &str, m: &MetricLieAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_metric(name, m)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::make_n2;

    #[test]
    fn round_trip_n2() {
        let text = serialize_algebra("nII", &make_n2());
        let (name, m) = parse_algebra_file(&text).unwrap();
        assert_eq!(name, "nII");
        assert_eq!(m, make_n2());
    }

    #[test]
    fn abelian_from_diagonal_metric() {
        let text = r#"{"name": "R3", "dim": 3, "basis": ["e1", "e2", "e3"],
            "metric": [{"x": "e1", "y": "e1", "value": "1"},
                       {"x": "e2", "y": "e2", "value": "1"},
                       {"x": "e3", "y": "e3", "value": "-1"}]}"#;
        let (_, m) = parse_algebra_file(text).unwrap();
        assert!(m.algebra().is_abelian());
        assert_eq!(m.signature(), (2, 1));
    }

    #[test]
    fn syntax_error_has_position() {
        let err = parse_algebra_file("{\"name\": \"x\",\n \"dim\": }").unwrap_err();
        let Error::Parse(msg) = err else { panic!("{err:?}") };
        assert!(msg.contains("line 2"), "{msg}");
    }

    #[test]
    fn bad_rational_and_unknown_label() {
        let text = r#"{"name": "x", "dim": 1, "basis": ["e"], "metric": [{"x": "e", "y": "e", "value": "1/-2"}]}"#;
        assert!(matches!(parse_algebra_file(text), Err(Error::Parse(_))));
        let text = r#"{"name": "x", "dim": 1, "basis": ["e"], "metric": [{"x": "e", "y": "f", "value": "1"}]}"#;
        assert!(matches!(parse_algebra_file(text), Err(Error::Parse(_))));
    }
}

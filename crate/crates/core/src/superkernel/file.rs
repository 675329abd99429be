//! JSON algebra definitions: `{name, generators: [{name, parity}], brackets: [{left, right, result}]}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Parity, SuperAlgebra};
use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, Scalar};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub name: String,
    pub parity: Parity,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    /// Generator name to rational string.
    pub result: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub generators: Vec<GeneratorEntry>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

impl AlgebraFile {
    /// Builds the algebra. A bracket whose mirror `[right, left]` is omitted is
    /// filled in by graded antisymmetry; every other omitted bracket is zero.
    pub fn build(&self) -> Result<SuperAlgebra<Rational>> {
        let names: Vec<String> = self.generators.iter().map(|g| g.name.clone()).collect();
        let parities: Vec<Parity> = self.generators.iter().map(|g| g.parity).collect();
        let n = names.len();
        let mut alg = SuperAlgebra::<Rational>::abelian(self.name.clone(), names, parities)?;
        let mut c = vec![None::<Rational>; n * n * n];
        let at = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
        let mut given = vec![false; n * n];

        for b in &self.brackets {
            let i = alg.index_of(&b.left)?;
            let j = alg.index_of(&b.right)?;
            if given[i * n + j] {
                return Err(Error::MalformedAlgebra(format!("bracket [{}, {}] given twice", b.left, b.right)));
            }
            given[i * n + j] = true;
            let mut row = vec![Rational::from_i64(0); n];
            for (g, v) in &b.result {
                let k = alg.index_of(g)?;
                row[k] = parse_rational(v).ok_or_else(|| Error::Parse(format!("bad rational `{v}`")))?;
            }
            for (k, v) in row.into_iter().enumerate() {
                let triple = || (b.left.clone(), b.right.clone(), alg.generator_names()[k].clone());
                if (alg.parity(i) + alg.parity(j)) != alg.parity(k) && v != Rational::from_i64(0) {
                    let (left, right, result) = triple();
                    return Err(Error::BracketViolation { rule: "parity closure", left, right, result });
                }
                c[at(i, j, k)] = Some(v);
            }
        }

        let mut dense = vec![Rational::from_i64(0); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let z = alg.z(i, j);
                    let v = match (&c[at(i, j, k)], &c[at(j, i, k)]) {
                        (Some(v), Some(m)) => {
                            if *v != -(z * m.clone()) {
                                return Err(Error::BracketViolation {
                                    rule: "graded antisymmetry",
                                    left: alg.generator_names()[i].clone(),
                                    right: alg.generator_names()[j].clone(),
                                    result: alg.generator_names()[k].clone(),
                                });
                            }
                            v.clone()
                        }
                        (Some(v), None) => v.clone(),
                        (None, Some(m)) => -(z * m.clone()),
                        (None, None) => Rational::from_i64(0),
                    };
                    dense[at(i, j, k)] = v;
                }
            }
        }
        alg = SuperAlgebra::new(self.name.clone(), alg.generator_names().to_vec(), alg.parities().to_vec(), dense)?;
        Ok(alg)
    }

    /// Lists each unordered bracket once, skipping zero ones.
    pub fn from_algebra(alg: &SuperAlgebra<Rational>) -> Self {
        let n = alg.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i..n {
                let result: BTreeMap<String, String> = (0..n)
                    .filter(|&k| !alg.c(i, j, k).is_negligible())
                    .map(|k| (alg.generator_names()[k].clone(), format_rational(alg.c(i, j, k))))
                    .collect();
                if !result.is_empty() {
                    brackets.push(BracketEntry {
                        left: alg.generator_names()[i].clone(),
                        right: alg.generator_names()[j].clone(),
                        result,
                    });
                }
            }
        }
        Self {
            name: alg.name().to_string(),
            generators: alg
                .generator_names()
                .iter()
                .zip(alg.parities())
                .map(|(name, &parity)| GeneratorEntry { name: name.clone(), parity })
                .collect(),
            brackets,
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra file serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::algebra;

    #[test]
    fn round_trip_osp22() {
        let a = algebra("osp22").unwrap();
        let json = AlgebraFile::from_algebra(&a).to_json();
        let back = AlgebraFile::from_json(&json).unwrap().build().unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn rejects_parity_violation() {
        let json = r#"{"name":"bad","generators":[{"name":"h","parity":0},{"name":"v","parity":1}],
            "brackets":[{"left":"h","right":"v","result":{"h":"1"}}]}"#;
        let err = AlgebraFile::from_json(json).unwrap().build().unwrap_err();
        assert!(matches!(err, Error::BracketViolation { rule: "parity closure", .. }), "{err}");
        assert!(err.to_string().contains("(h, v, h)"));
    }

    #[test]
    fn rejects_antisymmetry_violation() {
        let json = r#"{"name":"bad","generators":[{"name":"a","parity":0},{"name":"b","parity":0}],
            "brackets":[{"left":"a","right":"b","result":{"a":"1"}},
                        {"left":"b","right":"a","result":{"a":"1"}}]}"#;
        let err = AlgebraFile::from_json(json).unwrap().build().unwrap_err();
        assert!(matches!(err, Error::BracketViolation { rule: "graded antisymmetry", .. }));
    }

    #[test]
    fn rejects_nonzero_self_bracket_of_even() {
        let json = r#"{"name":"bad","generators":[{"name":"a","parity":0}],
            "brackets":[{"left":"a","right":"a","result":{"a":"1"}}]}"#;
        assert!(AlgebraFile::from_json(json).unwrap().build().is_err());
    }

    #[test]
    fn odd_self_bracket_allowed() {
        let json = r#"{"name":"ok","generators":[{"name":"h","parity":0},{"name":"q","parity":1}],
            "brackets":[{"left":"q","right":"q","result":{"h":"1/2"}}]}"#;
        let a = AlgebraFile::from_json(json).unwrap().build().unwrap();
        assert_eq!(a.c(1, 1, 0), &Rational::from_ratio(1, 2));
    }
}

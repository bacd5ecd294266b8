//! JSON schemas shared by the algebra types.
//!
//! Scalars are written as coefficient arrays (low degree first). On input a
//! bare integer is also accepted and read in the prime subfield.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fdalg::SCAlgebra;
use crate::field::{Fe, Field, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Int(i64),
    Coeffs(Vec<i64>),
}

pub fn scalar_out(f: &Field, a: Fe) -> ScalarRepr {
    ScalarRepr::Coeffs(f.coeffs(a).into_iter().map(i64::from).collect())
}

pub fn scalar_in(f: &Field, s: &ScalarRepr) -> Result<Fe> {
    match s {
        ScalarRepr::Int(v) => Ok(f.from_i64(*v)),
        ScalarRepr::Coeffs(c) => {
            if c.len() > f.degree() as usize {
                return Err(Error::Invalid(format!("scalar {c:?} has more than {} coefficients for {f}", f.degree())));
            }
            let p = f.p() as i64;
            let digits: Vec<u32> = c.iter().map(|&x| x.rem_euclid(p) as u32).collect();
            f.from_coeffs(&digits)
        }
    }
}

pub fn vec_out(f: &Field, v: &[Fe]) -> Vec<ScalarRepr> {
    v.iter().map(|&a| scalar_out(f, a)).collect()
}

pub fn vec_in(f: &Field, v: &[ScalarRepr], len: usize, what: &str) -> Result<Vec<Fe>> {
    if v.len() != len {
        return Err(Error::ShapeMismatch(format!("{what} has length {}, expected {len}", v.len())));
    }
    v.iter().map(|s| scalar_in(f, s)).collect()
}

pub fn matrix_in(f: &Field, rows: &[Vec<ScalarRepr>], n: usize, m: usize, what: &str) -> Result<Vec<Vec<Fe>>> {
    if rows.len() != n {
        return Err(Error::ShapeMismatch(format!("{what} has {} rows, expected {n}", rows.len())));
    }
    rows.iter().enumerate().map(|(i, r)| vec_in(f, r, m, &format!("{what}[{i}]"))).collect()
}

pub fn tensor_in(f: &Field, t: &[Vec<Vec<ScalarRepr>>], n: usize, what: &str) -> Result<Vec<Fe>> {
    if t.len() != n {
        return Err(Error::ShapeMismatch(format!("{what} has {} slices, expected {n}", t.len())));
    }
    let mut out = Vec::with_capacity(n * n * n);
    for (i, slice) in t.iter().enumerate() {
        for row in matrix_in(f, slice, n, n, &format!("{what}[{i}]"))? {
            out.extend(row);
        }
    }
    Ok(out)
}

pub fn tensor_out(f: &Field, flat: &[Fe], n: usize) -> Vec<Vec<Vec<ScalarRepr>>> {
    (0..n)
        .map(|i| (0..n).map(|j| vec_out(f, &flat[(i * n + j) * n..(i * n + j + 1) * n])).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldSpec,
    pub dim: usize,
    pub unit: Vec<ScalarRepr>,
    pub mul: Vec<Vec<Vec<ScalarRepr>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl AlgebraJson {
    pub fn build(&self) -> Result<SCAlgebra> {
        let f = self.field.build()?;
        let n = self.dim;
        let mul = tensor_in(&f, &self.mul, n, "mul")?;
        let unit = vec_in(&f, &self.unit, n, "unit")?;
        SCAlgebra::new(f, n, mul, unit, self.labels.clone())
    }

    pub fn from_algebra(a: &SCAlgebra) -> AlgebraJson {
        let f = a.field();
        AlgebraJson {
            field: f.spec(),
            dim: a.dim(),
            unit: vec_out(f, a.unit()),
            mul: tensor_out(f, a.structure_constants(), a.dim()),
            labels: a.labels().map(|l| l.to_vec()),
        }
    }
}

impl Serialize for SCAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlgebraJson::from_algebra(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SCAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        AlgebraJson::deserialize(d)?.build().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_round_trip() {
        let f9 = Field::new(3, 2).unwrap();
        let a = SCAlgebra::matrix_algebra(&f9, 2).unwrap();
        let text = serde_json::to_string(&a).unwrap();
        let back: SCAlgebra = serde_json::from_str(&text).unwrap();
        assert_eq!(a, back);
    }

    #[test]
    fn integers_are_accepted() {
        let text = r#"{"field": {"p": 3}, "dim": 1, "unit": [4], "mul": [[[1]]]}"#;
        let a: SCAlgebra = serde_json::from_str(text).unwrap();
        assert_eq!(a.unit(), &[Fe(1)]);
        let bad = r#"{"field": {"p": 3}, "dim": 2, "unit": [1], "mul": [[[1]]]}"#;
        assert!(serde_json::from_str::<SCAlgebra>(bad).is_err());
    }
}

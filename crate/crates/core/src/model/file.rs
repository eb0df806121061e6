//! JSON descriptor files.
//!
//! ```json
//! {
//!   "dim": 2,
//!   "components": [
//!     {"kind": "conormal_point", "point": ["0", "0"], "mult": 2, "weight": 0},
//!     {"kind": "torus_conormal", "matrix": [[2, 3]], "mult": 1, "weight": -1}
//!   ],
//!   "slices": [{"label": "w1-axis", "base": "1,0", "dir": "0,1"}],
//!   "conified_multiplicities": {"w2": 3},
//!   "moderate_at_infinity": true
//! }
//! ```

use std::collections::BTreeMap;

use rug::Rational;
use serde::{Deserialize, Serialize};

use super::{ComponentKind, DModuleDescriptor, Direction, LagrangianComponent};
use crate::algebra::parse::indexed_names;
use crate::algebra::{format_poly, parse_poly, parse_scalar, GRat, MPoly};
use crate::error::{Error, Result};

/// A complex line `u ↦ base + u·dir` in the dual space.
#[derive(Clone, Debug, PartialEq)]
pub struct SlicePlan {
    pub label: String,
    pub base: Direction,
    pub dir: Direction,
    pub truncation_order: Option<Rational>,
}

impl SlicePlan {
    pub fn new(label: &str, base: Direction, dir: Direction) -> Self {
        SlicePlan { label: label.to_string(), base, dir, truncation_order: None }
    }

    pub fn with_order(mut self, order: Rational) -> Self {
        self.truncation_order = Some(order);
        self
    }

    pub fn point(&self, u: &GRat) -> Direction {
        self.base.iter().zip(&self.dir).map(|(b, e)| b + &(e * u)).collect()
    }
}

/// Everything a descriptor file carries.
#[derive(Clone, Debug, PartialEq)]
pub struct DescriptorFile {
    pub descriptor: DModuleDescriptor,
    pub slices: Vec<SlicePlan>,
    /// Conified multiplicities keyed by a discriminant factor written in `w1..wN`.
    pub conified_multiplicities: BTreeMap<String, i64>,
    pub moderate_at_infinity: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum VecField {
    Text(String),
    List(Vec<Scalar>),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PolyField {
    One(String),
    Many(Vec<String>),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    poly: Option<PolyField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    point: Option<VecField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<i64>>>,
    #[serde(default = "one")]
    mult: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    non_resonant: Option<bool>,
}

fn one() -> i64 {
    1
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSlice {
    label: String,
    base: VecField,
    dir: VecField,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    truncation_order: Option<Scalar>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    dim: usize,
    components: Vec<RawComponent>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    slices: Vec<RawSlice>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    conified_multiplicities: BTreeMap<String, i64>,
    #[serde(default)]
    moderate_at_infinity: bool,
}

fn at(path: &str, e: Error) -> Error {
    match e {
        Error::Parse { location, message } => Error::Parse { location: format!("{} ({})", path, location), message },
        other => other,
    }
}

fn perr(path: &str, msg: impl Into<String>) -> Error {
    Error::Parse { location: path.to_string(), message: msg.into() }
}

fn scalar(s: &Scalar, path: &str) -> Result<GRat> {
    match s {
        Scalar::Int(k) => Ok(GRat::from_int(*k)),
        Scalar::Text(t) => parse_scalar(t).map_err(|e| at(path, e)),
    }
}

fn vector(v: &VecField, n: usize, path: &str) -> Result<Direction> {
    let out: Vec<GRat> = match v {
        VecField::Text(t) => t
            .split(',')
            .enumerate()
            .map(|(k, x)| parse_scalar(x.trim()).map_err(|e| at(&format!("{}[{}]", path, k), e)))
            .collect::<Result<_>>()?,
        VecField::List(l) => l
            .iter()
            .enumerate()
            .map(|(k, x)| scalar(x, &format!("{}[{}]", path, k)))
            .collect::<Result<_>>()?,
    };
    if out.len() != n {
        return Err(perr(path, format!("expected {} entries, found {}", n, out.len())));
    }
    Ok(out)
}

/// Parse a comma-separated or JSON-list vector of length `n`.
pub fn parse_vector(s: &str, n: usize) -> Result<Direction> {
    vector(&VecField::Text(s.to_string()), n, "vector")
}

fn rational(s: &Scalar, path: &str) -> Result<Rational> {
    let g = scalar(s, path)?;
    if !g.is_real() {
        return Err(perr(path, "expected a real rational"));
    }
    Ok(g.re().clone())
}

fn forbid(path: &str, kind: &str, present: bool, field: &str) -> Result<()> {
    if present {
        return Err(perr(path, format!("field '{}' is not allowed for kind '{}'", field, kind)));
    }
    Ok(())
}

impl DescriptorFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        let n = raw.dim;
        if n == 0 {
            return Err(perr("dim", "dimension must be at least 1"));
        }
        let zn = indexed_names("z", n);
        let mut comps = vec![];
        for (i, rc) in raw.components.iter().enumerate() {
            let path = format!("components[{}]", i);
            if rc.mult < 1 {
                return Err(perr(&format!("{}.mult", path), "multiplicity must be a positive integer"));
            }
            let k = rc.kind.as_str();
            let kind = match k {
                "conormal_hypersurface" => {
                    forbid(&path, k, rc.point.is_some(), "point")?;
                    forbid(&path, k, rc.matrix.is_some(), "matrix")?;
                    let f = match &rc.poly {
                        Some(PolyField::One(s)) => parse_poly(s, &zn).map_err(|e| at(&format!("{}.poly", path), e))?,
                        _ => return Err(perr(&format!("{}.poly", path), "expected a polynomial string")),
                    };
                    ComponentKind::ConormalHypersurface { f }
                }
                "conormal_point" => {
                    forbid(&path, k, rc.poly.is_some(), "poly")?;
                    forbid(&path, k, rc.matrix.is_some(), "matrix")?;
                    let p = rc.point.as_ref().ok_or_else(|| perr(&format!("{}.point", path), "missing point"))?;
                    ComponentKind::ConormalPoint { point: vector(p, n, &format!("{}.point", path))? }
                }
                "zero_section" => {
                    forbid(&path, k, rc.poly.is_some(), "poly")?;
                    forbid(&path, k, rc.point.is_some(), "point")?;
                    forbid(&path, k, rc.matrix.is_some(), "matrix")?;
                    ComponentKind::ZeroSection
                }
                "conormal_linear" => {
                    forbid(&path, k, rc.point.is_some(), "point")?;
                    forbid(&path, k, rc.matrix.is_some(), "matrix")?;
                    let eqs = match &rc.poly {
                        Some(PolyField::Many(v)) => v.clone(),
                        Some(PolyField::One(s)) => vec![s.clone()],
                        None => return Err(perr(&format!("{}.poly", path), "missing equations")),
                    };
                    let equations = eqs
                        .iter()
                        .enumerate()
                        .map(|(j, s)| parse_poly(s, &zn).map_err(|e| at(&format!("{}.poly[{}]", path, j), e)))
                        .collect::<Result<Vec<MPoly>>>()?;
                    ComponentKind::ConormalLinear { equations }
                }
                "torus_conormal" => {
                    forbid(&path, k, rc.poly.is_some(), "poly")?;
                    forbid(&path, k, rc.point.is_some(), "point")?;
                    let m = rc.matrix.clone().ok_or_else(|| perr(&format!("{}.matrix", path), "missing matrix"))?;
                    ComponentKind::TorusConormal { matrix: m, non_resonant: rc.non_resonant.unwrap_or(true) }
                }
                other => return Err(perr(&format!("{}.kind", path), format!("unknown kind '{}'", other))),
            };
            if rc.non_resonant.is_some() && k != "torus_conormal" {
                return Err(perr(&path, "field 'non_resonant' is only allowed for torus_conormal"));
            }
            comps.push(LagrangianComponent { kind, mult: rc.mult as u32, sheaf_weight: rc.weight });
        }
        let mut slices = vec![];
        for (i, rs) in raw.slices.iter().enumerate() {
            let path = format!("slices[{}]", i);
            let base = vector(&rs.base, n, &format!("{}.base", path))?;
            let dir = vector(&rs.dir, n, &format!("{}.dir", path))?;
            if dir.iter().all(|x| x.is_zero()) {
                return Err(perr(&format!("{}.dir", path), "direction must be nonzero"));
            }
            let truncation_order = match &rs.truncation_order {
                Some(s) => Some(rational(s, &format!("{}.truncation_order", path))?),
                None => None,
            };
            slices.push(SlicePlan { label: rs.label.clone(), base, dir, truncation_order });
        }
        let wn = indexed_names("w", n);
        for key in raw.conified_multiplicities.keys() {
            parse_poly(key, &wn).map_err(|e| at(&format!("conified_multiplicities[{:?}]", key), e))?;
        }
        Ok(DescriptorFile {
            descriptor: DModuleDescriptor::new(n, comps),
            slices,
            conified_multiplicities: raw.conified_multiplicities,
            moderate_at_infinity: raw.moderate_at_infinity,
        })
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        let n = self.descriptor.dim;
        let zn = indexed_names("z", n);
        let vecf = |v: &Direction| VecField::List(v.iter().map(|x| Scalar::Text(x.to_string())).collect());
        let components = self
            .descriptor
            .components
            .iter()
            .map(|c| {
                let mut rc = RawComponent {
                    kind: c.kind.name().to_string(),
                    poly: None,
                    point: None,
                    matrix: None,
                    mult: c.mult as i64,
                    weight: c.sheaf_weight,
                    non_resonant: None,
                };
                match &c.kind {
                    ComponentKind::ConormalHypersurface { f } => rc.poly = Some(PolyField::One(format_poly(f, &zn))),
                    ComponentKind::ConormalPoint { point } => rc.point = Some(vecf(point)),
                    ComponentKind::ZeroSection => {}
                    ComponentKind::ConormalLinear { equations } => {
                        rc.poly = Some(PolyField::Many(equations.iter().map(|e| format_poly(e, &zn)).collect()))
                    }
                    ComponentKind::TorusConormal { matrix, non_resonant } => {
                        rc.matrix = Some(matrix.clone());
                        rc.non_resonant = Some(*non_resonant);
                    }
                }
                rc
            })
            .collect();
        let slices = self
            .slices
            .iter()
            .map(|s| RawSlice {
                label: s.label.clone(),
                base: vecf(&s.base),
                dir: vecf(&s.dir),
                truncation_order: s.truncation_order.as_ref().map(|r| Scalar::Text(r.to_string())),
            })
            .collect();
        let raw = RawFile {
            dim: n,
            components,
            slices,
            conified_multiplicities: self.conified_multiplicities.clone(),
            moderate_at_infinity: self.moderate_at_infinity,
        };
        serde_json::to_string_pretty(&raw).unwrap()
    }

    pub fn slice(&self, label: &str) -> Option<&SlicePlan> {
        self.slices.iter().find(|s| s.label == label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A23: &str = r#"{
        "dim": 2,
        "components": [
            {"kind": "conormal_point", "point": ["0", "0"], "mult": 2, "weight": 0},
            {"kind": "torus_conormal", "matrix": [[2, 3]], "mult": 1, "weight": -1}
        ],
        "slices": [{"label": "a", "base": "1,0", "dir": [0, 1]}],
        "conified_multiplicities": {"w2": 3},
        "moderate_at_infinity": true
    }"#;

    #[test]
    fn round_trip() {
        let f = DescriptorFile::from_json(A23).unwrap();
        assert_eq!(f.descriptor.components.len(), 2);
        let g = DescriptorFile::from_json(&f.to_json()).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn rejects_unknown_fields() {
        let bad = A23.replace("\"mult\": 2", "\"mult\": 2, \"colour\": 1");
        assert!(matches!(DescriptorFile::from_json(&bad), Err(Error::Parse { .. })));
        let bad = A23.replace("conormal_point", "conormal_blob");
        assert!(matches!(DescriptorFile::from_json(&bad), Err(Error::Parse { .. })));
    }
}

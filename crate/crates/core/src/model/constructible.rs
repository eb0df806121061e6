use super::{ComponentKind, DModuleDescriptor};
use crate::algebra::{GRat, MPoly};
use crate::error::{Error, Result};

/// Support of one stratum of a constructible function.
#[derive(Clone, Debug, PartialEq)]
pub enum Support {
    Whole,
    Hypersurface(MPoly),
    Point(Vec<GRat>),
    Linear(Vec<MPoly>),
    TorusOrbit(Vec<Vec<i64>>),
}

/// `weight · 1_stratum`; strata are locally closed and pairwise disjoint.
#[derive(Clone, Debug, PartialEq)]
pub struct Piece {
    pub support: Support,
    pub weight: i64,
}

/// Stalkwise Euler characteristic of the solution complex as a constructible function.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstructibleModel {
    pub dim: usize,
    pub pieces: Vec<Piece>,
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 { 1 } else { -1 }
}

/// Weights `(-1)^dim S · m` on each support unless the descriptor overrides them.
///
/// Torus orbits have no default; their weight must be supplied.
pub fn default_constructible(desc: &DModuleDescriptor) -> Result<ConstructibleModel> {
    let n = desc.dim;
    let mut pieces = vec![];
    for (i, c) in desc.components.iter().enumerate() {
        let m = c.mult as i64;
        let support = match &c.kind {
            ComponentKind::ConormalHypersurface { f } => Support::Hypersurface(f.clone()),
            ComponentKind::ConormalPoint { point } => Support::Point(point.clone()),
            ComponentKind::ZeroSection => Support::Whole,
            ComponentKind::ConormalLinear { equations } if equations.len() == n => {
                Support::Point(super::super::critical::linear_point(equations, n)?)
            }
            ComponentKind::ConormalLinear { equations } => Support::Linear(equations.clone()),
            ComponentKind::TorusConormal { matrix, .. } => Support::TorusOrbit(matrix.clone()),
        };
        let weight = match c.sheaf_weight {
            Some(w) => w,
            None => match &c.kind {
                ComponentKind::TorusConormal { .. } => {
                    return Err(Error::WeightsRequired(format!(
                        "component {} is a torus orbit; give its stalk weight",
                        i
                    )))
                }
                k => sign(k.support_dim(n)) * m,
            },
        };
        pieces.push(Piece { support, weight });
    }
    Ok(ConstructibleModel { dim: n, pieces })
}

//! Characteristic-cycle descriptors of regular holonomic D-modules.

mod constructible;
mod file;
mod validate;

pub use constructible::{default_constructible, ConstructibleModel, Piece, Support};
pub use file::{parse_vector, DescriptorFile, SlicePlan};
pub use validate::{validate, Diagnostic};

use crate::algebra::parse::indexed_names;
use crate::algebra::{format_poly, GRat, MPoly};

/// One irreducible conic Lagrangian in `T*C^N`.
#[derive(Clone, Debug, PartialEq)]
pub enum ComponentKind {
    /// Conormal to the smooth hypersurface `{f = 0}`.
    ConormalHypersurface { f: MPoly },
    /// Cotangent fiber over a point.
    ConormalPoint { point: Vec<GRat> },
    /// The zero section.
    ZeroSection,
    /// Conormal to the affine subspace cut out by linear equations.
    ConormalLinear { equations: Vec<MPoly> },
    /// Conormal to the closure of the torus orbit `s ↦ (s^a(1), …, s^a(N))`.
    /// `matrix` is `d × N`, column `j` is the exponent vector `a(j)`.
    TorusConormal { matrix: Vec<Vec<i64>>, non_resonant: bool },
}

impl ComponentKind {
    pub fn name(&self) -> &'static str {
        match self {
            ComponentKind::ConormalHypersurface { .. } => "conormal_hypersurface",
            ComponentKind::ConormalPoint { .. } => "conormal_point",
            ComponentKind::ZeroSection => "zero_section",
            ComponentKind::ConormalLinear { .. } => "conormal_linear",
            ComponentKind::TorusConormal { .. } => "torus_conormal",
        }
    }

    /// Dimension of the support.
    pub fn support_dim(&self, n: usize) -> usize {
        match self {
            ComponentKind::ConormalHypersurface { .. } => n - 1,
            ComponentKind::ConormalPoint { .. } => 0,
            ComponentKind::ZeroSection => n,
            ComponentKind::ConormalLinear { equations } => n - equations.len(),
            ComponentKind::TorusConormal { matrix, .. } => matrix.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LagrangianComponent {
    pub kind: ComponentKind,
    pub mult: u32,
    /// Stalk weight of the solution complex on the open stratum, if known.
    pub sheaf_weight: Option<i64>,
}

impl LagrangianComponent {
    pub fn new(kind: ComponentKind, mult: u32) -> Self {
        LagrangianComponent { kind, mult, sheaf_weight: None }
    }

    pub fn with_weight(mut self, w: i64) -> Self {
        self.sheaf_weight = Some(w);
        self
    }

    pub fn describe(&self, n: usize) -> String {
        let z = indexed_names("z", n);
        match &self.kind {
            ComponentKind::ConormalHypersurface { f } => format!("T*_{{{} = 0}}", format_poly(f, &z)),
            ComponentKind::ConormalPoint { point } => {
                let p: Vec<String> = point.iter().map(|x| x.to_string()).collect();
                format!("T*_({})", p.join(", "))
            }
            ComponentKind::ZeroSection => "T*_X X".to_string(),
            ComponentKind::ConormalLinear { equations } => {
                let e: Vec<String> = equations.iter().map(|f| format_poly(f, &z)).collect();
                format!("T*_{{{}}}", e.join(", "))
            }
            ComponentKind::TorusConormal { matrix, .. } => format!("T*_Z torus orbit A = {:?}", matrix),
        }
    }
}

/// A characteristic cycle `Σ m_i [Λ_i]` in `T*C^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct DModuleDescriptor {
    pub dim: usize,
    pub components: Vec<LagrangianComponent>,
}

impl DModuleDescriptor {
    pub fn new(dim: usize, components: Vec<LagrangianComponent>) -> Self {
        DModuleDescriptor { dim, components }
    }

    pub fn z_names(&self) -> Vec<String> {
        indexed_names("z", self.dim)
    }

    pub fn w_names(&self) -> Vec<String> {
        indexed_names("w", self.dim)
    }
}

/// A nonzero dual vector.
pub type Direction = Vec<GRat>;

pub(crate) mod validate_helpers {
    pub(crate) use super::validate::{linear_rows, rank};
}

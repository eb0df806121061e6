//! Critical points and values of linear functions on Lagrangian supports.

mod analysis;
mod elim;
mod linear;
mod locus;
mod numeric;
mod system;

pub use analysis::{
    Analysis, ComponentDelta, CoveringDegree, CriticalFiber, CrossFactor, DiscriminantLocus, FiberPoint, OmegaFailure,
    OmegaVerdict, StalkJump,
};
pub use linear::{annihilates, direction_basis, linear_point};
pub use locus::{critical_value_poly, CriticalValuePoly};
pub use system::DirectionFamily;

pub(crate) use analysis::exact_value;
pub(crate) use locus::certify;

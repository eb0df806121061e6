//! Critical values along normal slices, expanded as Laurent–Puiseux series.

mod newton;
mod series;

pub use newton::newton_puiseux;
pub use series::{pole_part, PolePart, PuiseuxSeries, PuiseuxTerm};

use crate::critical::{critical_value_poly, CriticalValuePoly, DirectionFamily};
use crate::error::{Error, Result};
use crate::model::{LagrangianComponent, SlicePlan};
use crate::settings::Settings;

/// `F(u, c)`: the certified critical value polynomial of `comp` over `w = v + u·e`.
///
/// The result lives in the ring `[c, u]`.
pub fn specialize_along_slice(comp: &LagrangianComponent, n: usize, slice: &SlicePlan, st: &Settings) -> Result<CriticalValuePoly> {
    if slice.dir.iter().all(|x| x.is_zero()) {
        return Err(Error::Precondition("slice direction is zero".into()));
    }
    let fam = DirectionFamily::slice(slice);
    let phi = critical_value_poly(comp, n, &fam, st)?;
    if phi.generic_degree == 0 {
        return Err(Error::SliceNotTransversal(format!("no critical values along slice '{}'", slice.label)));
    }
    Ok(phi)
}

//! Exponential factors along boundary slices and at infinity, Stokes lines.

use rug::{Complex, Rational};

use crate::algebra::cnum::{arg_positive, cabs_f64};
use crate::algebra::{CApprox, GRat};
use crate::critical::{Analysis, DiscriminantLocus};
use crate::error::{Error, Result};
use crate::model::{Direction, SlicePlan};
use crate::puiseux::{newton_puiseux, specialize_along_slice, PolePart, PuiseuxSeries, PuiseuxTerm};

/// Where an exponential factor lives.
#[derive(Clone, Debug, PartialEq)]
pub enum FactorContext {
    BoundarySlice(String),
    InfinityLine(Direction),
}

/// `E^{P}` with `P` a pole part, counted `mult` times.
#[derive(Clone, Debug)]
pub struct ExponentialFactor {
    pub pole_series: PolePart,
    pub mult: u32,
    pub context: FactorContext,
}

/// One branch cycle of the critical values along a slice.
#[derive(Clone, Debug)]
pub struct SliceBranch {
    pub component: usize,
    pub series: PuiseuxSeries,
    /// Copies of the cycle in the slice polynomial.
    pub branch_mult: u32,
    /// Multiplicity of the Lagrangian component.
    pub mult: u32,
}

#[derive(Clone, Debug)]
pub struct BoundaryReport {
    pub label: String,
    /// Slice polynomials `F_i(u, c)` as text, one per contributing component.
    pub slice_polys: Vec<(usize, String)>,
    pub branches: Vec<SliceBranch>,
    /// Pole parts of `-φ_i`, conjugates listed individually.
    pub factors: Vec<ExponentialFactor>,
    /// Branches without poles but with ramification.
    pub regular_ramified: Vec<SliceBranch>,
    pub irregularity: Rational,
}

impl BoundaryReport {
    /// The irregularity as an integer, which it must be.
    pub fn irr(&self) -> i64 {
        self.irregularity.numer().to_i64().unwrap_or(0)
    }
}

/// Small nonzero parameters at which the slice should leave the discriminant.
const PROBES: [(i64, i64); 3] = [(1, 7), (-1, 97), (1, 1009)];

/// Exponential factors of the Fourier transform restricted to a normal slice, and its irregularity.
pub fn boundary_factors(an: &Analysis, slice: &SlicePlan) -> Result<BoundaryReport> {
    let desc = an.descriptor();
    let st = an.settings();
    if an.omega(&slice.base)?.member {
        return Err(Error::SmoothBasePoint);
    }
    let mut inside = false;
    for (a, b) in PROBES {
        let w = slice.point(&GRat::from_ratio(a, b));
        if an.omega(&w)?.member {
            inside = true;
            break;
        }
    }
    if !inside {
        return Err(Error::SliceNotTransversal(format!("slice '{}' stays off Ω near its base point", slice.label)));
    }
    let mut polys = vec![];
    let mut branches = vec![];
    for (i, comp) in desc.components.iter().enumerate() {
        if an.generic_degree(i)? == 0 {
            continue;
        }
        let f = match specialize_along_slice(comp, desc.dim, slice, st) {
            Ok(f) => f,
            Err(Error::SliceNotTransversal(_)) => continue,
            Err(e) => return Err(e),
        };
        polys.push((i, f.text()));
        let br = newton_puiseux(&f.poly, slice.truncation_order.as_ref(), st.precision)?;
        let sheets: u32 = br.iter().map(|(s, m)| s.ram * m).sum();
        if sheets as usize != f.generic_degree {
            return Err(Error::InconsistentBranchData(format!(
                "component {}: {} sheets for a degree-{} slice polynomial",
                i, sheets, f.generic_degree
            )));
        }
        for (s, m) in br {
            branches.push(SliceBranch { component: i, series: s, branch_mult: m, mult: comp.mult });
        }
    }
    let mut factors = vec![];
    let mut regular_ramified = vec![];
    let mut irr = Rational::new();
    for b in &branches {
        let pole = b.series.pole_part();
        let copies = b.branch_mult * b.mult;
        if pole.is_trivial() {
            if b.series.ram > 1 {
                regular_ramified.push(b.clone());
            }
            continue;
        }
        irr += Rational::from(&pole.order * (b.series.ram * copies));
        for c in b.series.conjugates() {
            factors.push(ExponentialFactor {
                pole_series: c.pole_part().negated(),
                mult: copies,
                context: FactorContext::BoundarySlice(slice.label.clone()),
            });
        }
    }
    if *irr.denom() != 1 || irr < 0 {
        return Err(Error::InconsistentBranchData(format!("irregularity {} is not a non-negative integer", irr)));
    }
    Ok(BoundaryReport { label: slice.label.clone(), slice_polys: polys, branches, factors, regular_ramified, irregularity: irr })
}

/// Linear factor `-c λ` at infinity with its multiplicity.
#[derive(Clone, Debug)]
pub struct InfinityFactor {
    pub c: CApprox,
    pub exact: Option<GRat>,
    pub mult: u32,
}

impl InfinityFactor {
    /// As a pole part in `t = 1/λ`: `-c·t^{-1}`, or trivial when `c = 0`.
    pub fn as_factor(&self, w: &Direction) -> ExponentialFactor {
        let terms = if self.c.abs() == 0.0 && self.exact.as_ref().is_none_or(|q| q.is_zero()) {
            vec![]
        } else {
            vec![PuiseuxTerm {
                exp: Rational::from(-1),
                coeff: CApprox::new(Complex::with_val(self.c.prec(), -self.c.value()), self.c.err()),
                exact: self.exact.as_ref().map(|q| -q),
            }]
        };
        let order = if terms.is_empty() { Rational::new() } else { Rational::from(1) };
        ExponentialFactor { pole_series: PolePart { terms, order }, mult: self.mult, context: FactorContext::InfinityLine(w.clone()) }
    }

    pub fn is_trivial(&self) -> bool {
        match &self.exact {
            Some(q) => q.is_zero(),
            None => self.c.abs() == 0.0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct InfinityReport {
    pub w: Direction,
    pub factors: Vec<InfinityFactor>,
    /// The Fourier transform restricted to the line through `w` is regular at the origin.
    pub regular_at_origin: bool,
}

/// Exponential factors `-⟨α_i, w⟩ λ` at `λ = ∞`, equal coefficients merged.
pub fn infinity_factors(an: &Analysis, w: &[GRat]) -> Result<InfinityReport> {
    let fib = an.fiber(w)?;
    let mut out: Vec<InfinityFactor> = vec![];
    for p in &fib.points {
        let hit = out.iter_mut().find(|f| match (&f.exact, &p.c_exact) {
            (Some(a), Some(b)) => a == b,
            _ => f.c.dist(&p.c) <= 1e-9 * p.c.abs().max(1.0),
        });
        match hit {
            Some(f) => f.mult += p.mult,
            None => out.push(InfinityFactor { c: p.c.clone(), exact: p.c_exact.clone(), mult: p.mult }),
        }
    }
    out.sort_by(|a, b| {
        (a.c.re(), a.c.im()).partial_cmp(&(b.c.re(), b.c.im())).unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(InfinityReport { w: w.to_vec(), factors: out, regular_at_origin: true })
}

#[derive(Clone, Debug)]
pub struct StokesLine {
    /// Angle of the line in `[0, π)`.
    pub theta: f64,
    pub pairs: Vec<(usize, usize)>,
}

/// Lines `Re((c_i - c_j) λ) = 0` in the `λ`-plane.
#[derive(Clone, Debug)]
pub struct StokesArrangement {
    pub w: Direction,
    /// Critical values indexed as in the pairs.
    pub values: Vec<CApprox>,
    pub directions: Vec<StokesLine>,
    pub pairs: Vec<(usize, usize)>,
}

const THETA_TOL: f64 = 1e-12;

pub fn stokes_directions(an: &Analysis, w: &[GRat]) -> Result<StokesArrangement> {
    let inf = infinity_factors(an, w)?;
    let values: Vec<CApprox> = inf.factors.iter().map(|f| f.c.clone()).collect();
    Ok(stokes_from_values(w, values))
}

pub(crate) fn stokes_from_values(w: &[GRat], values: Vec<CApprox>) -> StokesArrangement {
    let pi = std::f64::consts::PI;
    let mut lines: Vec<StokesLine> = vec![];
    let mut pairs = vec![];
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let d = Complex::with_val(values[i].prec(), values[i].value() - values[j].value());
            if cabs_f64(&d) == 0.0 {
                continue;
            }
            pairs.push((i, j));
            let mut theta = (pi / 2.0 - arg_positive(&d)).rem_euclid(pi);
            if pi - theta < THETA_TOL || theta.abs() < THETA_TOL {
                theta = 0.0;
            }
            match lines.iter_mut().find(|l| (l.theta - theta).abs() < THETA_TOL) {
                Some(l) => l.pairs.push((i, j)),
                None => lines.push(StokesLine { theta, pairs: vec![(i, j)] }),
            }
        }
    }
    lines.sort_by(|a, b| a.theta.partial_cmp(&b.theta).unwrap());
    StokesArrangement { w: w.to_vec(), values, directions: lines, pairs }
}

/// Index of the discriminant factor vanishing at `v`, checked to be a smooth point of it.
pub fn divisor_at(locus: &DiscriminantLocus, v: &[GRat]) -> Result<usize> {
    if !locus.eval(v).is_zero() {
        return Err(Error::SmoothBasePoint);
    }
    let factors = locus.factors();
    let hits: Vec<usize> = (0..factors.len()).filter(|&k| factors[k].eval(v).is_zero()).collect();
    if hits.len() != 1 {
        return Err(Error::Precondition(format!("base point lies on {} discriminant factors", hits.len())));
    }
    let f = &factors[hits[0]];
    let smooth = (0..f.nvars()).any(|j| !f.derivative(j).eval(v).is_zero());
    if !smooth {
        return Err(Error::Precondition("base point is a singular point of its discriminant factor".into()));
    }
    Ok(hits[0])
}

//! Report assembly for the command-line front end.

mod structured;
mod svg;
mod text;

pub use svg::{render_stokes_svg, emit_stokes_svg};

use rug::Rational;

use crate::algebra::{parse_poly, GRat, MPoly};
use crate::critical::{Analysis, CoveringDegree, DiscriminantLocus, OmegaVerdict, StalkJump};
use crate::error::{Error, Result};
use crate::invariants::{
    boundary_factors, chi_c, chi_slice, divisor_at, ft_multiplicity_chi_route, ft_multiplicity_conified_route,
    infinity_factors, stokes_directions, BoundaryReport, ChiRoute, InfinityReport, Region, StokesArrangement,
};
use crate::model::{default_constructible, validate, DescriptorFile, Direction, SlicePlan};
use crate::settings::{random_grat, Settings};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Rank,
    Omega,
    Discriminant,
    Profile,
    Puiseux,
    Boundary,
    Infinity,
    Stokes,
    Chi,
    Multiplicity,
    Report,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Rank => "rank",
            Command::Omega => "omega",
            Command::Discriminant => "discriminant",
            Command::Profile => "profile",
            Command::Puiseux => "puiseux",
            Command::Boundary => "boundary",
            Command::Infinity => "infinity",
            Command::Stokes => "stokes",
            Command::Chi => "chi",
            Command::Multiplicity => "multiplicity",
            Command::Report => "report",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

/// Everything one invocation needs.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub settings: Settings,
    pub truncation: Option<Rational>,
    pub format: Format,
    /// Restrict slice-based commands to one slice label.
    pub slice: Option<String>,
    pub w: Option<Direction>,
    pub v: Option<Direction>,
    pub v0: Option<Direction>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig { command, settings: Settings::default(), truncation: None, format: Format::Text, slice: None, w: None, v: None, v0: None }
    }
}

#[derive(Clone, Debug)]
pub struct SliceSection {
    pub label: String,
    pub base: Direction,
    pub dir: Direction,
    pub boundary: BoundaryReport,
}

#[derive(Clone, Debug)]
pub struct ChiTable {
    pub chi_total: i64,
    /// `(direction, τ, χ_c over ℓ(w)⁻¹(τ))`.
    pub slices: Vec<(Direction, GRat, i64)>,
    /// `(direction, χ_w)`.
    pub pointwise: Vec<(Direction, i64)>,
}

#[derive(Clone, Debug)]
pub struct MultiplicityRow {
    pub slice: String,
    pub factor: String,
    pub v: Direction,
    pub v0: Direction,
    pub irr: Rational,
    pub chi_route: Option<ChiRoute>,
    pub conified: Option<(i64, i64)>,
    pub notes: Vec<String>,
}

impl MultiplicityRow {
    pub fn agree(&self) -> Option<bool> {
        match (&self.chi_route, &self.conified) {
            (Some(c), Some((_, m))) => Some(c.mult == *m),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Provenance {
    pub precision: u32,
    pub seed: u64,
    pub version: &'static str,
}

/// All sections a command produced; absent sections are empty.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub command: Command,
    pub descriptor: Vec<String>,
    pub dim: usize,
    pub diagnostics: Option<Vec<String>>,
    pub rank: Option<CoveringDegree>,
    pub omega: Vec<(Direction, OmegaVerdict)>,
    pub discriminant: Option<DiscriminantLocus>,
    pub profiles: Vec<(Direction, Vec<StalkJump>)>,
    pub slices: Vec<SliceSection>,
    pub infinity: Vec<InfinityReport>,
    pub stokes: Vec<StokesArrangement>,
    pub chi: Option<ChiTable>,
    pub multiplicities: Vec<MultiplicityRow>,
    pub provenance: Provenance,
}

impl InvariantReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => text::render(self),
            Format::Structured => structured::render(self),
        }
    }
}

fn slices_for(file: &DescriptorFile, cfg: &RunConfig) -> Result<Vec<SlicePlan>> {
    let mut out: Vec<SlicePlan> = match &cfg.slice {
        Some(l) => vec![file.slice(l).cloned().ok_or_else(|| Error::Precondition(format!("no slice labelled '{}'", l)))?],
        None => file.slices.clone(),
    };
    if let Some(t) = &cfg.truncation {
        for s in out.iter_mut() {
            s.truncation_order = Some(t.clone());
        }
    }
    Ok(out)
}

/// A direction in Ω: the one given, or the first of a fixed list, or a seeded sample.
pub fn direction_in_omega(an: &Analysis, given: Option<&Direction>) -> Result<Direction> {
    if let Some(w) = given {
        return Ok(w.clone());
    }
    let n = an.descriptor().dim;
    const PRIMES: [i64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
    let first: Direction = (0..n).map(|k| GRat::from_int(PRIMES[k % 8] + (k / 8) as i64)).collect();
    if an.omega(&first)?.member {
        return Ok(first);
    }
    let mut rng = an.settings().rng("default-direction");
    for _ in 0..16 {
        let w: Direction = (0..n).map(|_| random_grat(&mut rng)).collect();
        if an.omega(&w)?.member {
            return Ok(w);
        }
    }
    Err(Error::Precondition("no direction in Ω found".into()))
}

/// A point `v + εe` of the slice inside Ω.
fn slice_reference(an: &Analysis, s: &SlicePlan) -> Result<Direction> {
    for (a, b) in [(1, 7), (-1, 97), (1, 1009)] {
        let w = s.point(&GRat::from_ratio(a, b));
        if an.omega(&w)?.member {
            return Ok(w);
        }
    }
    Err(Error::SliceNotTransversal(format!("slice '{}' stays off Ω near its base point", s.label)))
}

fn monic_key(p: &MPoly) -> MPoly {
    p.monic()
}

fn conified_input(file: &DescriptorFile, factor: &MPoly, names: &[String]) -> Result<Option<i64>> {
    for (k, n) in &file.conified_multiplicities {
        let p = parse_poly(k, names)?;
        if monic_key(&p) == monic_key(factor) {
            return Ok(Some(*n));
        }
    }
    Ok(None)
}

fn multiplicity_rows(an: &Analysis, file: &DescriptorFile, slices: &[SliceSection], cfg: &RunConfig) -> Result<Vec<MultiplicityRow>> {
    let st = an.settings();
    let locus = an.discriminant_locus()?;
    let names = an.descriptor().w_names();
    let model = default_constructible(an.descriptor());
    let mut rows = vec![];
    for s in slices {
        let plan = SlicePlan::new(&s.label, s.base.clone(), s.dir.clone());
        let v = cfg.v.clone().unwrap_or_else(|| s.base.clone());
        let v0 = match &cfg.v0 {
            Some(x) => x.clone(),
            None => slice_reference(an, &plan)?,
        };
        let k = divisor_at(&locus, &v)?;
        let factor = locus.factors()[k].clone();
        let irr = s.boundary.irregularity.clone();
        let mut notes = vec![];
        let chi_route = match &model {
            Ok(m) => Some(ft_multiplicity_chi_route(m, &v, &v0, &irr, st)?),
            Err(e) => {
                notes.push(format!("χ route unavailable: {}", e));
                None
            }
        };
        let conified = match conified_input(file, &factor, &names)? {
            Some(n) if file.moderate_at_infinity => Some((n, ft_multiplicity_conified_route(n, &irr)?)),
            Some(_) => {
                notes.push("conified route needs moderate_at_infinity".into());
                None
            }
            None => None,
        };
        rows.push(MultiplicityRow { slice: s.label.clone(), factor: crate::algebra::format_poly(&factor, &names), v, v0, irr, chi_route, conified, notes });
    }
    Ok(rows)
}

/// Run one command on a parsed descriptor file.
pub fn run(file: &DescriptorFile, cfg: &RunConfig) -> Result<InvariantReport> {
    let desc = &file.descriptor;
    let st = cfg.settings;
    let mut rep = InvariantReport {
        command: cfg.command,
        descriptor: desc.components.iter().map(|c| format!("{} (mult {})", c.describe(desc.dim), c.mult)).collect(),
        dim: desc.dim,
        diagnostics: None,
        rank: None,
        omega: vec![],
        discriminant: None,
        profiles: vec![],
        slices: vec![],
        infinity: vec![],
        stokes: vec![],
        chi: None,
        multiplicities: vec![],
        provenance: Provenance { precision: st.precision, seed: st.seed, version: env!("CARGO_PKG_VERSION") },
    };
    let diags = validate(desc);
    if !diags.is_empty() {
        let text: Vec<String> = diags.iter().map(|d| d.to_string()).collect();
        if cfg.command == Command::Validate {
            rep.diagnostics = Some(text);
            return Ok(rep);
        }
        return Err(Error::Invalid(text.join("; ")));
    }
    if cfg.command == Command::Validate {
        rep.diagnostics = Some(vec![]);
        return Ok(rep);
    }
    let an = Analysis::new(desc, st);
    use Command::*;
    let c = cfg.command;
    if matches!(c, Rank | Report) {
        rep.rank = Some(an.covering_degree()?);
    }
    if matches!(c, Discriminant | Report) {
        rep.discriminant = Some(an.discriminant_locus()?);
    }
    if c == Omega {
        let w = cfg.w.clone().ok_or_else(|| Error::Precondition("omega needs --w".into()))?;
        rep.omega.push((w.clone(), an.omega(&w)?));
    }
    let needs_w = matches!(c, Profile | Infinity | Stokes | Report);
    let w = if needs_w { Some(direction_in_omega(&an, cfg.w.as_ref())?) } else { None };
    if let Some(w) = &w {
        if c == Report {
            rep.omega.push((w.clone(), an.omega(w)?));
        }
        if matches!(c, Profile | Report) {
            rep.profiles.push((w.clone(), an.stalk_profile(w)?));
        }
        if matches!(c, Infinity | Report) {
            rep.infinity.push(infinity_factors(&an, w)?);
        }
        if matches!(c, Stokes | Report) {
            rep.stokes.push(stokes_directions(&an, w)?);
        }
    }
    if matches!(c, Puiseux | Boundary | Multiplicity | Report) {
        for s in slices_for(file, cfg)? {
            let boundary = boundary_factors(&an, &s)?;
            rep.slices.push(SliceSection { label: s.label.clone(), base: s.base.clone(), dir: s.dir.clone(), boundary });
        }
        if rep.slices.is_empty() && c != Report {
            return Err(Error::Precondition("descriptor has no slices".into()));
        }
    }
    if matches!(c, Multiplicity | Report) {
        rep.multiplicities = multiplicity_rows(&an, file, &rep.slices, cfg)?;
    }
    if matches!(c, Chi | Report) {
        match default_constructible(desc) {
            Ok(model) => {
                let total = chi_c(&model, &Region::Full, &st)?;
                let mut dirs: Vec<Direction> = vec![];
                match (&cfg.w, &cfg.v) {
                    (None, None) => dirs.push(direction_in_omega(&an, None)?),
                    _ => dirs.extend(cfg.w.iter().chain(cfg.v.iter()).cloned()),
                }
                let mut slices = vec![];
                let mut pointwise = vec![];
                for d in dirs {
                    let (x, tau) = chi_slice(&model, &d, &st)?;
                    slices.push((d.clone(), tau, x));
                    pointwise.push((d, total - x));
                }
                rep.chi = Some(ChiTable { chi_total: total, slices, pointwise });
            }
            Err(e) if c == Report => rep.descriptor.push(format!("χ table skipped: {}", e)),
            Err(e) => return Err(e),
        }
    }
    Ok(rep)
}

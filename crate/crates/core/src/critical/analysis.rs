use std::cell::RefCell;
use std::rc::Rc;

use rug::Complex;

use super::elim::{eliminate, Lift};
use super::linear::{annihilates, direction_basis};
use super::locus::{certify, component_system, exact_root, Certified, CriticalValuePoly};
use super::numeric::{gauss_newton, system_residual};
use super::system::{DirectionFamily, LagrangeSystem, SysKind};
use crate::algebra::cnum::{cabs_f64, dist};
use crate::algebra::{
    complex_roots, format_poly, resultant_in, squarefree_part, CApprox, GRat, MPoly, UniPoly,
};
use crate::error::{Error, Result};
use crate::model::{ComponentKind, DModuleDescriptor, Direction};
use crate::settings::{random_grat, Settings};

/// Total and per-component number of sheets of the critical covering.
#[derive(Clone, Debug, PartialEq)]
pub struct CoveringDegree {
    pub total: usize,
    pub per_component: Vec<usize>,
    /// Generic rank `Σ k_i m_i`.
    pub rank: usize,
    /// Normalized volume of the torus configuration when a cross-check applies.
    pub volume: Option<u64>,
}

/// Why a direction is not in Ω.
#[derive(Clone, Debug, PartialEq)]
pub enum OmegaFailure {
    ZeroDirection,
    DegreeDrop { component: usize, degree: usize, generic: usize },
    RepeatedValue { component: usize },
    ContinuumFiber { component: usize },
    Escape { component: usize, found: usize, generic: usize },
    Collision { first: usize, second: usize },
    Degenerate { component: usize, reason: String },
}

impl std::fmt::Display for OmegaFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OmegaFailure::ZeroDirection => write!(f, "w = 0"),
            OmegaFailure::DegreeDrop { component, degree, generic } => {
                write!(f, "component {}: degree drops to {} (generic {})", component, degree, generic)
            }
            OmegaFailure::RepeatedValue { component } => write!(f, "component {}: repeated critical value", component),
            OmegaFailure::ContinuumFiber { component } => write!(f, "component {}: continuum of critical points", component),
            OmegaFailure::Escape { component, found, generic } => {
                write!(f, "component {}: {} verified critical points (generic {})", component, found, generic)
            }
            OmegaFailure::Collision { first, second } => {
                write!(f, "components {} and {} share a critical point", first, second)
            }
            OmegaFailure::Degenerate { component, reason } => write!(f, "component {}: {}", component, reason),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OmegaVerdict {
    pub member: bool,
    pub failures: Vec<OmegaFailure>,
}

impl OmegaVerdict {
    pub fn certificate(&self) -> String {
        if self.member {
            "all components: full degree, simple values, verified sheets, no collisions".into()
        } else {
            self.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("; ")
        }
    }
}

/// One critical point `α` over `w` with its critical value.
#[derive(Clone, Debug)]
pub struct FiberPoint {
    pub component: usize,
    pub alpha: Vec<CApprox>,
    pub c: CApprox,
    pub c_exact: Option<GRat>,
    pub mult: u32,
}

#[derive(Clone, Debug)]
pub struct CriticalFiber {
    pub w: Direction,
    pub points: Vec<FiberPoint>,
}

impl CriticalFiber {
    pub fn degree(&self) -> usize {
        self.points.len()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComponentDelta {
    pub component: usize,
    /// Squarefree, normalized; `1` when the component adds nothing.
    pub delta: MPoly,
    pub factors: Vec<MPoly>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CrossFactor {
    pub components: (usize, usize),
    pub factor: MPoly,
    /// Whether a shared critical point was found at a sample point of the factor.
    pub verified: bool,
}

/// Squarefree polynomial in `w1..wN` whose zero set is the complement of Ω.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscriminantLocus {
    pub names: Vec<String>,
    pub components: Vec<ComponentDelta>,
    pub cross: Vec<CrossFactor>,
    pub delta: MPoly,
}

impl DiscriminantLocus {
    pub fn text(&self) -> String {
        format_poly(&self.delta, &self.names)
    }

    pub fn eval(&self, w: &[GRat]) -> GRat {
        self.delta.eval(w)
    }

    /// Every nonconstant factor recorded (monomial variables, component pieces, verified cross factors).
    pub fn factors(&self) -> Vec<MPoly> {
        let mut out: Vec<MPoly> = vec![];
        for c in &self.components {
            for f in &c.factors {
                if !out.contains(f) {
                    out.push(f.clone());
                }
            }
        }
        for c in &self.cross {
            if c.verified && !out.contains(&c.factor) {
                out.push(c.factor.clone());
            }
        }
        out
    }
}

/// One jump of the stalk profile: `mult` copies of `C_{t ≥ position + a}`.
#[derive(Clone, Debug, PartialEq)]
pub struct StalkJump {
    pub position: f64,
    /// Exact `Re c` when the critical value is Gaussian-rational.
    pub exact: Option<rug::Rational>,
    pub mult: u32,
}

const DEGREE_CAP: u32 = 40;
const MERGE_TOL: f64 = 1e-9;

/// Critical-locus computations over one descriptor, caching the symbolic polynomials.
pub struct Analysis {
    desc: DModuleDescriptor,
    st: Settings,
    symbolic: RefCell<Vec<Option<Rc<Certified>>>>,
}

struct ComponentPoints {
    points: Vec<(Vec<Complex>, Complex, Option<GRat>)>,
}

impl Analysis {
    pub fn new(desc: &DModuleDescriptor, st: Settings) -> Self {
        Analysis { desc: desc.clone(), st, symbolic: RefCell::new(vec![None; desc.components.len()]) }
    }

    pub fn descriptor(&self) -> &DModuleDescriptor {
        &self.desc
    }

    pub fn settings(&self) -> &Settings {
        &self.st
    }

    fn n(&self) -> usize {
        self.desc.dim
    }

    fn symbolic_cert(&self, i: usize) -> Result<Rc<Certified>> {
        if let Some(c) = &self.symbolic.borrow()[i] {
            return Ok(c.clone());
        }
        let fam = DirectionFamily::symbolic(self.n());
        let cert = Rc::new(certify(&self.desc.components[i], self.n(), &fam, &self.st)?);
        self.symbolic.borrow_mut()[i] = Some(cert.clone());
        Ok(cert)
    }

    /// Symbolic `Φ_i(c, w)`.
    pub fn symbolic(&self, i: usize) -> Result<CriticalValuePoly> {
        Ok(self.symbolic_cert(i)?.phi.clone())
    }

    pub fn generic_degree(&self, i: usize) -> Result<usize> {
        Ok(self.symbolic_cert(i)?.phi.generic_degree)
    }

    pub fn covering_degree(&self) -> Result<CoveringDegree> {
        let mut per = vec![];
        let mut rank = 0;
        for (i, c) in self.desc.components.iter().enumerate() {
            let k = self.generic_degree(i)?;
            per.push(k);
            rank += k * c.mult as usize;
        }
        let tori: Vec<_> = self
            .desc
            .components
            .iter()
            .filter_map(|c| match &c.kind {
                ComponentKind::TorusConormal { matrix, non_resonant } => Some((matrix, *non_resonant)),
                _ => None,
            })
            .collect();
        let mut volume = None;
        if tori.len() == 1 && tori[0].1 {
            let v = crate::invariants::normalized_volume(tori[0].0)?;
            if v as usize != rank {
                return Err(Error::VolumeMismatch { rank, volume: v });
            }
            volume = Some(v);
        }
        Ok(CoveringDegree { total: per.iter().sum(), per_component: per, rank, volume })
    }

    fn pointwise(&self, i: usize, w: &[GRat]) -> Result<(Certified, ComponentPoints)> {
        let fam = DirectionFamily::point(w);
        let cert = certify(&self.desc.components[i], self.n(), &fam, &self.st)?;
        let prec = self.st.wp();
        let mut points = vec![];
        match &self.desc.components[i].kind {
            ComponentKind::ConormalPoint { point } => {
                let c = dot(point, w);
                points.push((point.iter().map(|x| x.to_complex(prec)).collect(), c.to_complex(prec), Some(c)));
            }
            ComponentKind::ConormalLinear { equations } if equations.len() == self.n() => {
                let p = super::linear::linear_point(equations, self.n())?;
                let c = dot(&p, w);
                points.push((p.iter().map(|x| x.to_complex(prec)).collect(), c.to_complex(prec), Some(c)));
            }
            _ => {
                if let Some(sys) = &cert.sys {
                    for l in &cert.lifted {
                        if l.kind != Lift::Genuine {
                            continue;
                        }
                        for s in &l.solutions {
                            points.push((sys.alpha(&s.x, prec), l.c.clone(), l.c_exact.clone()));
                        }
                    }
                }
            }
        }
        Ok((cert, ComponentPoints { points }))
    }

    /// Whether `w` lies in the open set Ω where the critical covering is unramified.
    pub fn omega(&self, w: &[GRat]) -> Result<OmegaVerdict> {
        let mut failures = vec![];
        if w.iter().all(|x| x.is_zero()) {
            return Ok(OmegaVerdict { member: false, failures: vec![OmegaFailure::ZeroDirection] });
        }
        let n = self.n();
        let mut all_points: Vec<(usize, Vec<Complex>)> = vec![];
        for (i, comp) in self.desc.components.iter().enumerate() {
            match &comp.kind {
                ComponentKind::ZeroSection => continue,
                ComponentKind::ConormalLinear { equations } if equations.len() < n => {
                    if annihilates(equations, n, w) {
                        failures.push(OmegaFailure::ContinuumFiber { component: i });
                    }
                    continue;
                }
                ComponentKind::ConormalHypersurface { .. } | ComponentKind::TorusConormal { .. } => {
                    let phi = self.symbolic(i)?;
                    let spec = phi.specialize(w);
                    if spec.degree() < phi.generic_degree {
                        failures.push(OmegaFailure::DegreeDrop { component: i, degree: spec.degree(), generic: phi.generic_degree });
                        continue;
                    }
                    if spec.squarefree_part().degree() < spec.degree() {
                        failures.push(OmegaFailure::RepeatedValue { component: i });
                        continue;
                    }
                }
                _ => {}
            }
            match self.pointwise(i, w) {
                Ok((_, pts)) => {
                    let generic = self.generic_degree(i)?;
                    if pts.points.len() != generic {
                        failures.push(OmegaFailure::Escape { component: i, found: pts.points.len(), generic });
                    }
                    for (a, _, _) in pts.points {
                        all_points.push((i, a));
                    }
                }
                Err(Error::NonConvergence { .. }) | Err(Error::DegreeCap(_)) | Err(Error::Io(_)) => {
                    return Err(Error::NonConvergence { what: format!("critical points of component {}", i), residual: f64::NAN })
                }
                Err(e) => failures.push(OmegaFailure::Degenerate { component: i, reason: e.to_string() }),
            }
        }
        let tol = self.st.loose();
        for a in 0..all_points.len() {
            for b in a + 1..all_points.len() {
                let (ia, pa) = &all_points[a];
                let (ib, pb) = &all_points[b];
                if ia == ib {
                    continue;
                }
                let close = pa.iter().zip(pb).all(|(x, y)| dist(x, y).to_f64() <= tol * cabs_f64(x).max(1.0));
                if close {
                    failures.push(OmegaFailure::Collision { first: *ia, second: *ib });
                }
            }
        }
        Ok(OmegaVerdict { member: failures.is_empty(), failures })
    }

    /// Critical points over `w ∈ Ω`, recovered coordinate by coordinate.
    pub fn fiber(&self, w: &[GRat]) -> Result<CriticalFiber> {
        let verdict = self.omega(w)?;
        if !verdict.member {
            return Err(Error::NotInOmega(verdict.certificate()));
        }
        let prec = self.st.wp();
        let mut points = vec![];
        for (i, comp) in self.desc.components.iter().enumerate() {
            match &comp.kind {
                ComponentKind::ConormalHypersurface { .. } | ComponentKind::TorusConormal { .. } => {
                    let (cert, _) = self.pointwise(i, w)?;
                    let roots: Vec<(Complex, Option<GRat>)> = cert.lifted.iter().map(|l| (l.c.clone(), l.c_exact.clone())).collect();
                    let sys = component_system(&comp.kind, &DirectionFamily::point(w), false).unwrap();
                    for (alpha, c, c_exact, res) in self.match_coordinates(&sys, w, &roots)? {
                        let scale = alpha.iter().map(|a| cabs_f64(a)).fold(1.0, f64::max);
                        let err = (res.max(2f64.powi(-(self.st.precision as i32))) * scale).sqrt() * scale;
                        points.push(FiberPoint {
                            component: i,
                            alpha: alpha.into_iter().map(|a| CApprox::new(Complex::with_val(self.st.precision, a), err)).collect(),
                            c: CApprox::new(Complex::with_val(self.st.precision, &c), if c_exact.is_some() { 0.0 } else { err }),
                            c_exact,
                            mult: comp.mult,
                        });
                    }
                }
                ComponentKind::ZeroSection => {}
                ComponentKind::ConormalLinear { equations } if equations.len() < self.n() => {}
                _ => {
                    let (_, pts) = self.pointwise(i, w)?;
                    for (a, c, ce) in pts.points {
                        let alpha = match &comp.kind {
                            ComponentKind::ConormalPoint { point } => point.iter().map(|x| CApprox::from_grat(x, self.st.precision)).collect(),
                            _ => a.iter().map(|x| CApprox::new(Complex::with_val(self.st.precision, x), 0.0)).collect(),
                        };
                        let _ = c;
                        let ce = ce.unwrap();
                        points.push(FiberPoint { component: i, alpha, c: CApprox::from_grat(&ce, self.st.precision), c_exact: Some(ce), mult: comp.mult });
                    }
                }
            }
        }
        let _ = prec;
        Ok(CriticalFiber { w: w.to_vec(), points })
    }

    /// Per-coordinate elimination, combinatorial matching against the critical values, refinement.
    fn match_coordinates(
        &self,
        sys: &LagrangeSystem,
        w: &[GRat],
        roots: &[(Complex, Option<GRat>)],
    ) -> Result<Vec<(Vec<Complex>, Complex, Option<GRat>, f64)>> {
        let st = &self.st;
        let prec = st.wp();
        let (coords, zeta) = match &sys.kind {
            SysKind::Hypersurface { z, zeta } => (z.clone(), Some(*zeta)),
            SysKind::Torus { s, .. } => (s.clone(), None),
        };
        let torus = zeta.is_none();
        let mut cand: Vec<Vec<Complex>> = vec![];
        for &k in &coords {
            let mut order: Vec<usize> = zeta.into_iter().collect();
            order.extend(coords.iter().rev().copied().filter(|&j| j != k));
            let chain = eliminate(&sys.eqs, &order, &sys.strip_vars())?;
            let p = UniPoly::from_mpoly(&chain.result, k)
                .ok_or_else(|| Error::DegenerateDirection("coordinate elimination left extra variables".into()))?;
            let mut vals = vec![];
            if p.degree() > 0 {
                for r in complex_roots(&p, st.wp())? {
                    let z = Complex::with_val(prec, r.value.value());
                    if torus && cabs_f64(&z) <= st.loose() {
                        continue;
                    }
                    vals.push(z);
                }
            }
            cand.push(vals);
        }
        let total: usize = cand.iter().map(|v| v.len().max(1)).product();
        if total > 200_000 {
            return Err(Error::MatchingAmbiguity(format!("{} coordinate combinations", total)));
        }
        // score every combination
        let mut scored: Vec<(Vec<Complex>, Complex, f64)> = vec![];
        let mut idx = vec![0usize; coords.len()];
        if cand.iter().any(|v| v.is_empty()) {
            if roots.is_empty() {
                return Ok(vec![]);
            }
            return Err(Error::MatchingAmbiguity("a coordinate has no candidate values".into()));
        }
        loop {
            let mut x: Vec<Complex> = (0..sys.nvars).map(|_| Complex::new(prec)).collect();
            for (t, &k) in coords.iter().enumerate() {
                x[k] = cand[t][idx[t]].clone();
            }
            if let Some(zv) = zeta {
                x[zv] = least_squares_zeta(sys, &x, w, prec);
            }
            let alpha = sys.alpha(&x, prec);
            let cval = ell(&alpha, w, prec);
            let res = system_residual(&sys.eqs, &x, prec);
            scored.push((x, cval, res));
            let mut t = 0;
            loop {
                if t == idx.len() {
                    break;
                }
                idx[t] += 1;
                if idx[t] < cand[t].len() {
                    break;
                }
                idx[t] = 0;
                t += 1;
            }
            if t == idx.len() {
                break;
            }
        }
        let unknowns = sys.unknowns();
        let mut out = vec![];
        let mut table = vec![];
        for (c, ce) in roots {
            let scale = cabs_f64(c).max(1.0);
            let best = scored
                .iter()
                .filter(|(_, cv, _)| dist(cv, c).to_f64() <= st.loose().sqrt() * scale)
                .min_by(|a, b| a.2.partial_cmp(&b.2).unwrap());
            let Some((x0, _, r0)) = best else {
                table.push(format!("c = {}: no matching combination", crate::algebra::capprox::fmt_complex(c.real().to_f64(), c.imag().to_f64(), 12)));
                continue;
            };
            let mut x = x0.clone();
            let mut res = *r0;
            if res > st.strict() {
                res = gauss_newton(&sys.eqs, &unknowns, &mut x, prec, 40);
            }
            if res > st.strict() {
                table.push(format!("c = {}: best residual {:e}", crate::algebra::capprox::fmt_complex(c.real().to_f64(), c.imag().to_f64(), 12), res));
                continue;
            }
            let alpha = sys.alpha(&x, prec);
            out.push((alpha, c.clone(), ce.clone(), res));
        }
        if !table.is_empty() {
            return Err(Error::MatchingAmbiguity(table.join("; ")));
        }
        Ok(out)
    }

    /// Sorted jump positions `Re c_i` with multiplicities, equal positions merged.
    pub fn stalk_profile(&self, w: &[GRat]) -> Result<Vec<StalkJump>> {
        let fib = self.fiber(w)?;
        let mut jumps: Vec<StalkJump> = vec![];
        for p in &fib.points {
            let exact = p.c_exact.as_ref().map(|q| q.re().clone());
            let position = p.c.re();
            let same = |j: &StalkJump| match (&j.exact, &exact) {
                (Some(a), Some(b)) => a == b,
                _ => (j.position - position).abs() <= MERGE_TOL * position.abs().max(1.0),
            };
            match jumps.iter_mut().find(|j| same(j)) {
                Some(j) => j.mult += p.mult,
                None => jumps.push(StalkJump { position, exact, mult: p.mult }),
            }
        }
        jumps.sort_by(|a, b| a.position.partial_cmp(&b.position).unwrap());
        Ok(jumps)
    }

    /// Squarefree `Δ` with a factor per source of ramification.
    pub fn discriminant_locus(&self) -> Result<DiscriminantLocus> {
        let n = self.n();
        let names = self.desc.w_names();
        let wvars: Vec<usize> = (1..=n).collect();
        let mut comps = vec![];
        let mut total = MPoly::one(n);
        for (i, comp) in self.desc.components.iter().enumerate() {
            let mut pieces: Vec<MPoly> = vec![];
            match &comp.kind {
                ComponentKind::ConormalHypersurface { .. } | ComponentKind::TorusConormal { .. } => {
                    let phi = self.symbolic(i)?;
                    if phi.generic_degree > 0 {
                        pieces.push(phi.lc().project(&wvars));
                        pieces.push(phi.discriminant()?.project(&wvars));
                    }
                    if let ComponentKind::TorusConormal { matrix, .. } = &comp.kind {
                        if matrix.len() == 1 {
                            pieces.extend(torus_escape_factors(matrix, n));
                        }
                    }
                }
                ComponentKind::ConormalLinear { equations } if n - equations.len() == 1 => {
                    let d = &direction_basis(equations, n)[0];
                    pieces.push(MPoly::linear(d, &GRat::zero()));
                }
                _ => {}
            }
            let factors = split_factors(&pieces, n)?;
            let mut delta = MPoly::one(n);
            for f in &factors {
                delta = &delta * f;
            }
            let delta = squarefree_part(&delta);
            total = &total * &delta;
            comps.push(ComponentDelta { component: i, delta, factors });
        }
        let mut cross = vec![];
        let idx: Vec<usize> = (0..self.desc.components.len())
            .filter(|&i| self.generic_degree(i).map(|k| k > 0).unwrap_or(false))
            .collect();
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                let pi = self.symbolic(i)?.poly;
                let pj = self.symbolic(j)?.poly;
                let r = resultant_in(&pi, &pj, 0)?.project(&wvars);
                for f in split_factors(&[r], n)? {
                    // already part of Δ through a component
                    if comps.iter().any(|c: &ComponentDelta| c.factors.iter().any(|g| g.monic() == f.monic())) {
                        continue;
                    }
                    let verified = self.collision_on(&f, i, j);
                    if verified {
                        total = &total * &f;
                    }
                    cross.push(CrossFactor { components: (i, j), factor: f, verified });
                }
            }
        }
        let delta = squarefree_part(&total);
        if delta.total_degree() > DEGREE_CAP {
            return Err(Error::DegreeCap(format!("discriminant of total degree {}", delta.total_degree())));
        }
        Ok(DiscriminantLocus { names, components: comps, cross, delta })
    }

    /// Whether two components share a critical point at a sample point of `f = 0`.
    fn collision_on(&self, f: &MPoly, i: usize, j: usize) -> bool {
        let Some(w) = sample_on(f, &self.st) else { return true };
        let (Ok((_, a)), Ok((_, b))) = (self.pointwise(i, &w), self.pointwise(j, &w)) else { return true };
        let tol = self.st.loose();
        a.points.iter().any(|(pa, _, _)| {
            b.points
                .iter()
                .any(|(pb, _, _)| pa.iter().zip(pb).all(|(x, y)| dist(x, y).to_f64() <= tol * cabs_f64(x).max(1.0)))
        })
    }
}

fn dot(p: &[GRat], w: &[GRat]) -> GRat {
    let mut acc = GRat::zero();
    for (a, b) in p.iter().zip(w) {
        acc += &(a * b);
    }
    acc
}

fn ell(alpha: &[Complex], w: &[GRat], prec: u32) -> Complex {
    let mut acc = Complex::new(prec);
    for (a, b) in alpha.iter().zip(w) {
        acc += Complex::with_val(prec, a * &b.to_complex(prec));
    }
    acc
}

fn least_squares_zeta(sys: &LagrangeSystem, x: &[Complex], w: &[GRat], prec: u32) -> Complex {
    let f = &sys.eqs[0];
    let n = w.len();
    let mut num = Complex::new(prec);
    let mut den = Complex::new(prec);
    for j in 0..n {
        let g = f.derivative(j).eval_complex(x, prec);
        let wj = w[j].to_complex(prec);
        let cw = Complex::with_val(prec, wj.conj_ref());
        num += Complex::with_val(prec, &cw * &g);
        den += Complex::with_val(prec, &cw * &wj);
    }
    if den.is_zero() {
        return Complex::new(prec);
    }
    num / den
}

/// Where the single critical point of a one-parameter torus escapes to `0` or `∞`.
fn torus_escape_factors(matrix: &[Vec<i64>], n: usize) -> Vec<MPoly> {
    let fam = DirectionFamily::symbolic(n);
    let sys = super::system::torus_system(matrix, &fam, false);
    let Some(p) = sys.eqs.first() else { return vec![] };
    let coeffs = p.coeffs_in(0);
    let wvars: Vec<usize> = (1..=n).collect();
    let mut out = vec![];
    if let Some(c0) = coeffs.first() {
        out.push(c0.project(&wvars));
    }
    if let Some(cl) = coeffs.last() {
        out.push(cl.project(&wvars));
    }
    out
}

/// Monomial variables split off, remaining pieces made squarefree.
fn split_factors(pieces: &[MPoly], n: usize) -> Result<Vec<MPoly>> {
    let mut out: Vec<MPoly> = vec![];
    let push = |f: MPoly, out: &mut Vec<MPoly>| {
        if !f.is_constant() && !out.contains(&f) {
            out.push(f);
        }
    };
    for p in pieces {
        if p.is_zero() {
            continue;
        }
        let m = p.monomial_content();
        for (v, &k) in m.iter().enumerate() {
            if k > 0 {
                push(MPoly::var(n, v), &mut out);
            }
        }
        let rest = p.div_monomial(&m);
        if rest.is_constant() {
            continue;
        }
        if rest.total_degree() > 4 * DEGREE_CAP {
            return Err(Error::DegreeCap(format!("factor of total degree {}", rest.total_degree())));
        }
        let sq = squarefree_part(&rest);
        if sq.total_degree() > DEGREE_CAP {
            return Err(Error::DegreeCap(format!("factor of total degree {}", sq.total_degree())));
        }
        push(sq, &mut out);
    }
    Ok(out)
}

/// A rational point on `f = 0` obtained by solving for a variable of degree one.
pub(crate) fn sample_on(f: &MPoly, st: &Settings) -> Option<Vec<GRat>> {
    let n = f.nvars();
    let mut rng = st.rng("sample-on-factor");
    for _ in 0..16 {
        for v in 0..n {
            if f.degree_in(v) != 1 {
                continue;
            }
            let vals: Vec<GRat> = (0..n).map(|_| random_grat(&mut rng)).collect();
            let mut g = f.clone();
            for u in 0..n {
                if u != v {
                    g = g.subst_const(u, &vals[u]);
                }
            }
            let a = g.coeffs_in(v);
            if a.len() < 2 {
                continue;
            }
            let a1 = a[1].constant_value().unwrap_or_default();
            if a1.is_zero() {
                continue;
            }
            let a0 = a[0].constant_value().unwrap_or_default();
            let mut w = vals.clone();
            w[v] = -(&a0 / &a1);
            if w.iter().any(|x| !x.is_zero()) {
                return Some(w);
            }
        }
    }
    None
}

/// Exact root check helper re-exported for the invariants layer.
pub(crate) fn exact_value(f: &UniPoly, z: &Complex) -> Option<GRat> {
    exact_root(f, z)
}

//! Certified critical value polynomials.

use rug::Complex;

use super::elim::{eliminate, lift, Chain, Lift, Solution};
use super::linear::linear_point;
use super::system::{hypersurface_system, torus_system, DirectionFamily, LagrangeSystem, SysKind};
use crate::algebra::{
    complex_roots, discriminant_in, format_poly, gcd, primitive_part, squarefree_part, GRat, MPoly, UniPoly,
};
use crate::error::{Error, Result};
use crate::model::{ComponentKind, LagrangianComponent};
use crate::settings::{random_grat, Settings};

/// `Φ(c, p)` whose roots in `c` are the critical values of `ℓ(w(p))` on a support.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalValuePoly {
    /// Polynomial in `[c, params…]`, primitive and squarefree in `c`.
    pub poly: MPoly,
    pub names: Vec<String>,
    pub generic_degree: usize,
}

impl CriticalValuePoly {
    fn new(poly: MPoly, names: Vec<String>) -> Self {
        let generic_degree = poly.degree_in(0) as usize;
        CriticalValuePoly { poly, names, generic_degree }
    }

    pub fn nparams(&self) -> usize {
        self.names.len() - 1
    }

    /// `Φ(c, p)` as a univariate polynomial in `c`.
    pub fn specialize(&self, p: &[GRat]) -> UniPoly {
        let vals: Vec<(usize, GRat)> = p.iter().enumerate().map(|(k, x)| (k + 1, x.clone())).collect();
        let q = self.poly.subst_consts(&vals);
        UniPoly::from_mpoly(&q, 0).unwrap()
    }

    /// Leading coefficient in `c`, a polynomial in the parameters (ring `[c, params…]`).
    pub fn lc(&self) -> MPoly {
        self.poly.coeffs_in(0).last().cloned().unwrap_or_else(|| MPoly::zero(self.poly.nvars()))
    }

    /// `disc_c Φ`, a polynomial in the parameters (ring `[c, params…]`).
    pub fn discriminant(&self) -> Result<MPoly> {
        if self.generic_degree < 2 {
            return Ok(MPoly::one(self.poly.nvars()));
        }
        discriminant_in(&self.poly, 0)
    }

    pub fn text(&self) -> String {
        format_poly(&self.poly, &self.names)
    }
}

/// Solutions lifted over one root of the critical value polynomial.
#[derive(Clone, Debug)]
pub(crate) struct LiftedRoot {
    pub c: Complex,
    pub c_exact: Option<GRat>,
    pub kind: Lift,
    pub solutions: Vec<Solution>,
}

/// Certified polynomial together with the fiber data found while certifying.
#[derive(Clone, Debug)]
pub(crate) struct Certified {
    pub phi: CriticalValuePoly,
    pub sys: Option<LagrangeSystem>,
    pub lifted: Vec<LiftedRoot>,
}

pub(crate) fn component_system(kind: &ComponentKind, fam: &DirectionFamily, with_c: bool) -> Option<LagrangeSystem> {
    match kind {
        ComponentKind::ConormalHypersurface { f } => Some(hypersurface_system(f, fam, with_c)),
        ComponentKind::TorusConormal { matrix, .. } => Some(torus_system(matrix, fam, with_c)),
        _ => None,
    }
}

fn value_names(fam: &DirectionFamily) -> Vec<String> {
    let mut v = vec!["c".to_string()];
    v.extend(fam.names.iter().cloned());
    v
}

fn candidate(sys: &LagrangeSystem, alternative: bool) -> Result<(Chain, MPoly)> {
    let chain = eliminate(&sys.eqs, &sys.order(alternative), &sys.strip_vars())?;
    let keep = sys.value_vars();
    let r = chain.result.project(&keep);
    if !r.contains_var(0) {
        return Ok((chain, MPoly::one(keep.len())));
    }
    let r = squarefree_part(&primitive_part(&r, 0));
    Ok((chain, r.monic()))
}

/// Rational roots from the numeric approximations, verified exactly.
pub(crate) fn exact_root(f: &UniPoly, z: &Complex) -> Option<GRat> {
    for den in [1u64 << 12, 1 << 24, 1 << 40] {
        let q = GRat::rationalize(z, den);
        if f.eval(&q).is_zero() {
            return Some(q);
        }
    }
    None
}

fn lift_roots(sys: &LagrangeSystem, chain: &Chain, phi_at: &UniPoly, sample: &[GRat], st: &Settings) -> Result<Vec<LiftedRoot>> {
    let prec = st.wp();
    let mut out = vec![];
    if phi_at.degree() == 0 {
        return Ok(out);
    }
    let c_var = sys.c_var.unwrap();
    for r in complex_roots(phi_at, st.wp())? {
        let c = r.value.value().clone();
        let c_exact = exact_root(phi_at, &c);
        let c = match &c_exact {
            Some(q) => q.to_complex(prec),
            None => c,
        };
        let mut fixed = vec![(c_var, c.clone())];
        for (k, &pv) in sys.params.iter().enumerate() {
            fixed.push((pv, sample[k].to_complex(prec)));
        }
        let (kind, solutions) = lift(sys, chain, &fixed, st);
        out.push(LiftedRoot { c, c_exact, kind, solutions });
    }
    Ok(out)
}

fn sample_params(phi: &MPoly, nparams: usize, st: &Settings, purpose: &str) -> Result<Vec<GRat>> {
    if nparams == 0 {
        return Ok(vec![]);
    }
    let mut rng = st.rng(purpose);
    for _ in 0..32 {
        let p: Vec<GRat> = (0..nparams).map(|_| random_grat(&mut rng)).collect();
        let cp = CriticalValuePoly::new(phi.clone(), vec![String::new(); nparams + 1]);
        let u = cp.specialize(&p);
        if u.degree() == phi.degree_in(0) as usize && u.squarefree_part().degree() == u.degree() {
            return Ok(p);
        }
    }
    Err(Error::DegenerateDirection("no generic parameter sample found".into()))
}

fn point_phi(point: &[GRat], fam: &DirectionFamily) -> MPoly {
    let np = fam.nparams();
    let nv = np + 1;
    let map: Vec<usize> = (1..=np).collect();
    let mut phi = MPoly::var(nv, 0);
    for (p, w) in point.iter().zip(&fam.w) {
        phi = &phi - &w.embed(nv, &map).scale(p);
    }
    phi
}

/// Certified critical value polynomial of one component over a direction family.
pub(crate) fn certify(comp: &LagrangianComponent, n: usize, fam: &DirectionFamily, st: &Settings) -> Result<Certified> {
    let names = value_names(fam);
    let nv = fam.nparams() + 1;
    let trivial = |poly: MPoly| Certified {
        phi: CriticalValuePoly::new(poly, names.clone()),
        sys: None,
        lifted: vec![],
    };
    match &comp.kind {
        ComponentKind::ConormalPoint { point } => return Ok(trivial(point_phi(point, fam))),
        ComponentKind::ConormalLinear { equations } if equations.len() == n => {
            return Ok(trivial(point_phi(&linear_point(equations, n)?, fam)))
        }
        ComponentKind::ConormalLinear { .. } | ComponentKind::ZeroSection => return Ok(trivial(MPoly::one(nv))),
        _ => {}
    }
    let sys = component_system(&comp.kind, fam, true).unwrap();
    let (chain1, cand1) = candidate(&sys, false)?;
    if !cand1.contains_var(0) {
        return Ok(Certified { phi: CriticalValuePoly::new(cand1, names), sys: Some(sys), lifted: vec![] });
    }
    let sample = sample_params(&cand1, fam.nparams(), st, "certify")?;
    let cp1 = CriticalValuePoly::new(cand1.clone(), names.clone());
    let lifted = lift_roots(&sys, &chain1, &cp1.specialize(&sample), &sample, st)?;
    let genuine = lifted.iter().filter(|l| l.kind == Lift::Genuine).count();
    if genuine == lifted.len() {
        return Ok(Certified { phi: cp1, sys: Some(sys), lifted });
    }
    if genuine == 0 && fam.nparams() == 0 {
        let lifted = lifted.into_iter().filter(|l| l.kind == Lift::Genuine).collect();
        return Ok(Certified { phi: CriticalValuePoly::new(MPoly::one(nv), names), sys: Some(sys), lifted });
    }
    let singular = matches!(sys.kind, SysKind::Hypersurface { .. }) && lifted.iter().any(|l| l.kind == Lift::Boundary);
    let (_, cand2) = candidate(&sys, true)?;
    let g = if cand2.contains_var(0) { gcd(&cand1, &cand2) } else { MPoly::one(nv) };
    let cpg = CriticalValuePoly::new(g.clone(), names.clone());
    let roots_g = if g.contains_var(0) { lift_roots(&sys, &chain1, &cpg.specialize(&sample), &sample, st)? } else { vec![] };
    if roots_g.len() == genuine && roots_g.iter().all(|l| l.kind == Lift::Genuine) {
        return Ok(Certified { phi: cpg, sys: Some(sys), lifted: roots_g });
    }
    if singular {
        return Err(Error::SingularSupport(format!(
            "critical system has solutions with vanishing multiplier: {}",
            comp.describe(n)
        )));
    }
    Err(Error::CannotCertify { first: format_poly(&cand1, &names), second: format_poly(&cand2, &names) })
}

/// Critical value polynomial of a component over a direction family.
pub fn critical_value_poly(comp: &LagrangianComponent, n: usize, fam: &DirectionFamily, st: &Settings) -> Result<CriticalValuePoly> {
    Ok(certify(comp, n, fam, st)?.phi)
}

//! Iterated-resultant elimination with numeric back-substitution.

use rug::Complex;

use super::numeric::{full_values, gauss_newton, stage_candidates, system_residual};
use super::system::{LagrangeSystem, SysKind};
use crate::algebra::cnum::cabs;
use crate::algebra::{gcd, resultant_in, MPoly};
use crate::error::{Error, Result};
use crate::settings::Settings;

const TERM_CAP: usize = 60_000;

/// Equations that still contain `var` when it is eliminated.
#[derive(Clone, Debug)]
pub(crate) struct Stage {
    pub var: usize,
    pub polys: Vec<MPoly>,
}

#[derive(Clone, Debug)]
pub(crate) struct Chain {
    pub stages: Vec<Stage>,
    /// Gcd of what remains, free of every eliminated variable.
    pub result: MPoly,
}

fn tidy(p: MPoly, strip: &[usize]) -> MPoly {
    p.strip_monomial(strip).monic()
}

/// Eliminate `order` one variable at a time.
///
/// The pivot is the polynomial of smallest positive degree in the variable;
/// it is paired with every other polynomial containing that variable.
pub(crate) fn eliminate(eqs: &[MPoly], order: &[usize], strip: &[usize]) -> Result<Chain> {
    let nv = eqs.first().map(|e| e.nvars()).unwrap_or(0);
    let mut cur: Vec<MPoly> = vec![];
    for e in eqs {
        let t = tidy(e.clone(), strip);
        if !t.is_zero() && !cur.contains(&t) {
            cur.push(t);
        }
    }
    let mut stages = vec![];
    for &var in order {
        let (with, without): (Vec<MPoly>, Vec<MPoly>) = cur.into_iter().partition(|p| p.contains_var(var));
        if with.is_empty() {
            return Err(Error::DegenerateDirection(format!("variable {} is unconstrained", var)));
        }
        let piv = with
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.degree_in(var), p.num_terms(), p.total_degree()))
            .map(|(k, _)| k)
            .unwrap();
        let mut next = without;
        for (k, g) in with.iter().enumerate() {
            if k == piv {
                continue;
            }
            let mut r = resultant_in(&with[piv], g, var)?;
            if r.is_zero() {
                r = split_common_factor(&with, piv, k, var)?;
            }
            if r.num_terms() > TERM_CAP {
                return Err(Error::DegreeCap(format!("{} terms after eliminating variable {}", r.num_terms(), var)));
            }
            let r = tidy(r, strip);
            if r.is_constant() {
                // no common solutions at all
                return Ok(Chain { stages, result: MPoly::one(nv) });
            }
            if !next.contains(&r) {
                next.push(r);
            }
        }
        stages.push(Stage { var, polys: with });
        cur = next;
    }
    let mut g = MPoly::zero(nv);
    for p in &cur {
        g = gcd(&g, p);
    }
    if cur.is_empty() {
        return Err(Error::DegenerateDirection("nothing left after elimination".into()));
    }
    Ok(Chain { stages, result: g })
}

/// Pivot and `g = with[k]` share a factor `d`.  Solutions off `V(d)` are caught by
/// `Res(A/d, B/d)` and those on it by `Res(d, C)` for a third equation `C`.
fn split_common_factor(with: &[MPoly], piv: usize, k: usize, var: usize) -> Result<MPoly> {
    let degenerate = || Error::DegenerateDirection(format!("resultant in variable {} vanishes identically", var));
    let d = gcd(&with[piv], &with[k]);
    let a = with[piv].exact_div(&d).ok_or_else(degenerate)?;
    let b = with[k].exact_div(&d).ok_or_else(degenerate)?;
    let off = if a.contains_var(var) && b.contains_var(var) { resultant_in(&a, &b, var)? } else { MPoly::one(d.nvars()) };
    let third = (0..with.len()).find(|&j| j != piv && j != k).ok_or_else(degenerate)?;
    let on = resultant_in(&d, &with[third], var)?;
    let r = &off * &on;
    if r.is_zero() {
        return Err(degenerate());
    }
    Ok(r)
}

/// Why a candidate value did not lift to a genuine solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Lift {
    Genuine,
    /// Lifts only to solutions on the boundary (`ζ = 0` or a torus coordinate at `0`/`∞`).
    Boundary,
    None,
}

/// A verified solution: full ring assignment.
#[derive(Clone, Debug)]
pub(crate) struct Solution {
    pub x: Vec<Complex>,
}

fn is_genuine(sys: &LagrangeSystem, x: &[Complex], st: &Settings) -> bool {
    let tol = st.loose();
    match &sys.kind {
        SysKind::Hypersurface { z, zeta } => {
            let scale = z.iter().map(|&k| cabs(&x[k]).to_f64()).fold(1.0, f64::max);
            cabs(&x[*zeta]).to_f64() > tol * scale
        }
        SysKind::Torus { s, .. } => s.iter().all(|&k| {
            let a = cabs(&x[k]).to_f64();
            a > tol && a < 1.0 / tol
        }),
    }
}

/// Back-substitute through the chain with `fixed` values, refine on the full
/// system, and return every solution found with its classification.
pub(crate) fn lift(sys: &LagrangeSystem, chain: &Chain, fixed: &[(usize, Complex)], st: &Settings) -> (Lift, Vec<Solution>) {
    let prec = st.wp();
    let mut start: Vec<Option<Complex>> = vec![None; sys.nvars];
    for (v, x) in fixed {
        start[*v] = Some(x.clone());
    }
    let mut partial = vec![start];
    for stage in chain.stages.iter().rev() {
        let mut next = vec![];
        for vals in &partial {
            match stage_candidates(&stage.polys, stage.var, vals, prec, st.loose()) {
                None => {}
                Some(cands) => {
                    for z in cands {
                        let mut v = vals.clone();
                        v[stage.var] = Some(z);
                        next.push(v);
                    }
                }
            }
        }
        partial = next;
        if partial.len() > 4096 {
            partial.truncate(4096);
        }
    }
    let unknowns = sys.unknowns();
    let mut sols: Vec<Solution> = vec![];
    for vals in partial {
        let mut x = full_values(&vals, prec);
        let mut res = system_residual(&sys.eqs, &x, prec);
        if res > st.strict() {
            res = gauss_newton(&sys.eqs, &unknowns, &mut x, prec, 40);
        }
        if res > st.strict() {
            continue;
        }
        let dup = sols.iter().any(|s| {
            unknowns
                .iter()
                .all(|&u| crate::algebra::cnum::dist(&s.x[u], &x[u]).to_f64() <= st.loose() * cabs(&x[u]).to_f64().max(1.0))
        });
        if !dup {
            sols.push(Solution { x });
        }
    }
    let genuine: Vec<Solution> = sols.iter().filter(|s| is_genuine(sys, &s.x, st)).cloned().collect();
    if !genuine.is_empty() {
        (Lift::Genuine, genuine)
    } else if !sols.is_empty() {
        (Lift::Boundary, sols)
    } else {
        (Lift::None, vec![])
    }
}

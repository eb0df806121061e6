//! Newton–Puiseux expansion of the roots `c(u)` of `F(u, c)` near `u = 0`.

use std::collections::BTreeMap;

use rug::{Complex, Integer, Rational};

use super::series::{PuiseuxSeries, PuiseuxTerm};
use crate::algebra::cnum::{cabs_f64, principal_pow};
use crate::algebra::roots::{cluster, numeric_roots};
use crate::algebra::{complex_roots, CApprox, GRat, MPoly, UniPoly};
use crate::error::{Error, Result};

/// Coefficient that stays exact until a characteristic root leaves `Q(i)`.
#[derive(Clone, Debug)]
enum Coef {
    E(GRat),
    A(Complex),
}

impl Coef {
    fn c(&self, prec: u32) -> Complex {
        match self {
            Coef::E(q) => q.to_complex(prec),
            Coef::A(z) => z.clone(),
        }
    }

    fn mul(&self, o: &Coef, prec: u32) -> Coef {
        match (self, o) {
            (Coef::E(a), Coef::E(b)) => Coef::E(a * b),
            _ => Coef::A(Complex::with_val(prec, &self.c(prec) * &o.c(prec))),
        }
    }

    fn add(&self, o: &Coef, prec: u32) -> Coef {
        match (self, o) {
            (Coef::E(a), Coef::E(b)) => Coef::E(a + b),
            _ => Coef::A(Complex::with_val(prec, &self.c(prec) + &o.c(prec))),
        }
    }

    fn abs(&self) -> f64 {
        match self {
            Coef::E(q) => {
                let (re, im) = q.to_f64_pair();
                re.hypot(im)
            }
            Coef::A(z) => cabs_f64(z),
        }
    }

    fn exact_zero(&self) -> bool {
        matches!(self, Coef::E(q) if q.is_zero())
    }

    fn pow(&self, k: u32) -> Coef {
        match self {
            Coef::E(q) => Coef::E(q.pow(k)),
            Coef::A(z) => Coef::A(crate::algebra::cnum::cpow(z, k)),
        }
    }
}

/// `Σ rows[j][e] x^e y^j`, Laurent in `x`.
#[derive(Clone, Debug)]
struct Bi {
    rows: Vec<BTreeMap<i64, Coef>>,
}

impl Bi {
    fn from_mpoly(f: &MPoly) -> Bi {
        let deg = f.degree_in(0) as usize;
        let mut rows = vec![BTreeMap::new(); deg + 1];
        for (e, c) in f.terms() {
            rows[e[0] as usize].insert(e[1] as i64, Coef::E(c.clone()));
        }
        Bi { rows }
    }

    fn row_order(&self, j: usize) -> Option<i64> {
        self.rows.get(j).and_then(|r| r.keys().next().copied())
    }

    fn first_row(&self) -> Option<usize> {
        (0..self.rows.len()).find(|&j| !self.rows[j].is_empty())
    }

    fn scale(&self) -> f64 {
        self.rows.iter().flat_map(|r| r.values()).map(|c| c.abs()).fold(0.0, f64::max)
    }

    /// Drop numerically vanishing coefficients.
    fn clean(&mut self, tol: f64) {
        let s = self.scale();
        for r in self.rows.iter_mut() {
            r.retain(|_, c| match c {
                Coef::E(q) => !q.is_zero(),
                Coef::A(z) => cabs_f64(z) > tol * s,
            });
        }
        while self.rows.last().is_some_and(|r| r.is_empty()) {
            self.rows.pop();
        }
    }

    /// `x^(-m) G(x^q, x^p (a + y))` normalized so the smallest exponent is `0`.
    fn substitute(&self, q: i64, p: i64, a: &Coef, prec: u32, tol: f64) -> Bi {
        let deg = self.rows.len().saturating_sub(1);
        let mut rows: Vec<BTreeMap<i64, Coef>> = vec![BTreeMap::new(); deg + 1];
        let apow: Vec<Coef> = (0..=deg as u32).map(|k| a.pow(k)).collect();
        for (j, row) in self.rows.iter().enumerate() {
            for (e, c) in row {
                let xe = q * e + p * j as i64;
                for k in 0..=j {
                    let b = Integer::from(Integer::binomial_u(j as u32, k as u32));
                    let coef = c.mul(&apow[j - k], prec).mul(&Coef::E(GRat::from_rational(Rational::from(b))), prec);
                    let slot = rows[k].entry(xe).or_insert(Coef::E(GRat::zero()));
                    *slot = slot.add(&coef, prec);
                }
            }
        }
        let mut out = Bi { rows };
        out.clean(tol);
        let m = out.rows.iter().filter_map(|r| r.keys().next().copied()).min().unwrap_or(0);
        for r in out.rows.iter_mut() {
            *r = std::mem::take(r).into_iter().map(|(e, c)| (e - m, c)).collect();
        }
        out
    }
}

/// Lower convex hull of `(j, v_j)` over rows `lo..=hi`.
fn lower_hull(g: &Bi, lo: usize, hi: usize) -> Vec<(usize, i64)> {
    let pts: Vec<(usize, i64)> = (lo..=hi).filter_map(|j| g.row_order(j).map(|v| (j, v))).collect();
    let mut hull: Vec<(usize, i64)> = vec![];
    for p in pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // remove b if it lies on or above segment a-p
            let cross = (b.0 as i64 - a.0 as i64) * (p.1 - a.1) - (b.1 - a.1) * (p.0 as i64 - a.0 as i64);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

/// Distinct nonzero roots of the edge polynomial with multiplicities.
fn edge_roots(coeffs: &[Coef], prec: u32, tol: f64) -> Result<Vec<(Coef, usize)>> {
    if coeffs.iter().all(|c| matches!(c, Coef::E(_))) {
        let u = UniPoly::new(coeffs.iter().map(|c| if let Coef::E(q) = c { q.clone() } else { unreachable!() }).collect());
        let mut out = vec![];
        for r in complex_roots(&u, prec)? {
            let z = r.value.value().clone();
            match crate::critical::exact_value(&u, &z) {
                Some(q) if !q.is_zero() => out.push((Coef::E(q), r.mult)),
                Some(_) => {}
                None => out.push((Coef::A(Complex::with_val(prec, &z)), r.mult)),
            }
        }
        return Ok(out);
    }
    let cs: Vec<Complex> = coeffs.iter().map(|c| c.c(prec)).collect();
    let deg = cs.len() - 1;
    if deg == 1 {
        let z = Complex::with_val(prec, -&cs[0]) / &cs[1];
        return Ok(vec![(Coef::A(z), 1)]);
    }
    let zs = numeric_roots(&cs, prec);
    let ctol = tol.powf(1.0 / deg as f64);
    Ok(cluster(&zs, ctol).into_iter().map(|(z, m)| (Coef::A(z), m)).collect())
}

/// `s^(1/q)` on the principal branch, exact when the root is in `Q(i)`.
fn qth_root(s: &Coef, q: u32, prec: u32) -> Coef {
    if q == 1 {
        return s.clone();
    }
    let z = principal_pow(&s.c(prec), 1, q);
    if let Coef::E(sq) = s {
        let r = GRat::rationalize(&z, 1 << 24);
        if r.pow(q) == *sq {
            return Coef::E(r);
        }
    }
    Coef::A(z)
}

struct Ctx {
    prec: u32,
    out_prec: u32,
    tol: f64,
    trunc: Option<Rational>,
    out: Vec<(PuiseuxSeries, u32)>,
}

const MAX_STEPS: usize = 256;

fn term(exp: Rational, a: &Coef, ctx: &Ctx) -> PuiseuxTerm {
    let z = Complex::with_val(ctx.out_prec, a.c(ctx.prec));
    let (exact, err) = match a {
        Coef::E(q) => (Some(q.clone()), 0.0),
        Coef::A(_) => (None, a.abs() * 2f64.powi(-(ctx.out_prec as i32))),
    };
    PuiseuxTerm { exp, coeff: CApprox::new(z, err), exact }
}

#[allow(clippy::too_many_arguments)]
fn expand(g: Bi, lo_sheets: usize, ram: u32, base: Rational, terms: Vec<PuiseuxTerm>, complete: bool, first: bool, steps: usize, ctx: &mut Ctx) -> Result<()> {
    if steps > MAX_STEPS {
        return Err(Error::NonConvergence { what: "branches do not separate".into(), residual: f64::NAN });
    }
    let Some(j0) = g.first_row() else { return Ok(()) };
    // sheets of the current factor: rows j0..=hi
    let hi = if first { g.rows.len() - 1 } else { lo_sheets };
    if j0 > 0 {
        // y^j0 divides: the branch terminates here
        let trunc = ctx.trunc.clone().unwrap_or_else(|| Rational::from(&base + 3));
        ctx.out.push((PuiseuxSeries { ram, terms: terms.clone(), trunc, finite: complete }, j0 as u32));
    }
    if hi <= j0 {
        return Ok(());
    }
    let hull = lower_hull(&g, j0, hi);
    for w in hull.windows(2) {
        let ((j1, v1), (j2, v2)) = (w[0], w[1]);
        let gamma = Rational::from((v1 - v2, (j2 - j1) as i64));
        if !first && gamma <= 0 {
            continue;
        }
        let q = gamma.denom().to_u32().unwrap();
        let p = gamma.numer().to_i64().unwrap();
        // edge polynomial in s = a^q
        let len = (j2 - j1) / q as usize;
        let mut ec: Vec<Coef> = vec![Coef::E(GRat::zero()); len + 1];
        for (k, slot) in ec.iter_mut().enumerate() {
            let j = j1 + k * q as usize;
            let v = v1 - (k as i64) * p;
            if let Some(c) = g.rows[j].get(&v) {
                *slot = c.clone();
            }
        }
        let exp = Rational::from(&base + &Rational::from(&gamma / ram));
        let new_ram = ram * q;
        for (s, mult) in edge_roots(&ec, ctx.prec, ctx.tol)? {
            if s.exact_zero() {
                continue;
            }
            let a = qth_root(&s, q, ctx.prec);
            if first {
                let lead = exp.clone();
                match &ctx.trunc {
                    Some(t) if *t <= lead => return Err(Error::TruncationBelowLeading { order: t.to_string(), leading: lead.to_string() }),
                    _ => {}
                }
            }
            let trunc = match &ctx.trunc {
                Some(t) => t.clone(),
                None => {
                    let lead = terms.first().map(|t| t.exp.clone()).unwrap_or_else(|| exp.clone());
                    Rational::from(&lead + 3)
                }
            };
            let recorded = exp < trunc;
            if !recorded && mult == 1 {
                ctx.out.push((PuiseuxSeries { ram: new_ram, terms: terms.clone(), trunc, finite: false }, 1));
                continue;
            }
            let mut t2 = terms.clone();
            if recorded {
                t2.push(term(exp.clone(), &a, ctx));
            }
            let g1 = g.substitute(q as i64, p, &a, ctx.prec, ctx.tol);
            let saved = ctx.trunc.clone();
            if ctx.trunc.is_none() {
                ctx.trunc = Some(trunc.clone());
            }
            expand(g1, mult, new_ram, exp.clone(), t2, complete && recorded, false, steps + 1, ctx)?;
            ctx.trunc = saved;
        }
    }
    Ok(())
}

/// Expand every branch cycle of `F(u, c) = 0` at `u = 0`.
///
/// `f` lives in the ring `[c, u]`.  Returns one representative per cycle with
/// its multiplicity.  `order` overrides the default truncation (leading exponent + 3).
pub fn newton_puiseux(f: &MPoly, order: Option<&Rational>, precision: u32) -> Result<Vec<(PuiseuxSeries, u32)>> {
    if f.nvars() != 2 {
        return Err(Error::Precondition("expected a polynomial in c and u".into()));
    }
    if f.is_zero() || f.degree_in(0) == 0 {
        return Err(Error::Precondition("polynomial has no roots in c".into()));
    }
    let prec = precision + 64;
    let mut ctx = Ctx {
        prec,
        out_prec: precision,
        tol: 2f64.powi(-((precision as i32) * 3 / 4)),
        trunc: order.cloned(),
        out: vec![],
    };
    let g = Bi::from_mpoly(f);
    expand(g, 0, 1, Rational::new(), vec![], true, true, 0, &mut ctx)?;
    let mut out = ctx.out;
    out.sort_by(|a, b| {
        let (ea, aa) = a.0.order_key();
        let (eb, ab) = b.0.order_key();
        ea.cmp(&eb).then(aa.partial_cmp(&ab).unwrap_or(std::cmp::Ordering::Equal))
    });
    Ok(out)
}

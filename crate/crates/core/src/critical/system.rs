//! Lagrange systems for the critical points of `ℓ(w)` on a support.

use crate::algebra::parse::indexed_names;
use crate::algebra::{GRat, MPoly};
use crate::model::{Direction, SlicePlan};

/// Directions `w(p)` given by polynomials in a few parameters.
#[derive(Clone, Debug)]
pub struct DirectionFamily {
    pub names: Vec<String>,
    /// One polynomial per coordinate, each in `names.len()` variables.
    pub w: Vec<MPoly>,
}

impl DirectionFamily {
    /// `w = (w1, …, wN)` with every coordinate a parameter.
    pub fn symbolic(n: usize) -> Self {
        DirectionFamily { names: indexed_names("w", n), w: (0..n).map(|j| MPoly::var(n, j)).collect() }
    }

    pub fn point(w: &[GRat]) -> Self {
        DirectionFamily { names: vec![], w: w.iter().map(|x| MPoly::constant(0, x.clone())).collect() }
    }

    /// `w = base + u·dir`.
    pub fn slice(s: &SlicePlan) -> Self {
        let w = s
            .base
            .iter()
            .zip(&s.dir)
            .map(|(b, e)| MPoly::linear(std::slice::from_ref(e), b))
            .collect();
        DirectionFamily { names: vec!["u".to_string()], w }
    }

    pub fn nparams(&self) -> usize {
        self.names.len()
    }

    pub fn dim(&self) -> usize {
        self.w.len()
    }

    pub fn at(&self, p: &[GRat]) -> Direction {
        self.w.iter().map(|q| q.eval(p)).collect()
    }
}

#[derive(Clone, Debug)]
pub(crate) enum SysKind {
    Hypersurface { z: Vec<usize>, zeta: usize },
    Torus { s: Vec<usize>, matrix: Vec<Vec<i64>> },
}

/// Polynomial system in the ring `[unknowns…, c?, params…]`.
#[derive(Clone, Debug)]
pub(crate) struct LagrangeSystem {
    pub nvars: usize,
    pub kind: SysKind,
    pub c_var: Option<usize>,
    pub params: Vec<usize>,
    pub eqs: Vec<MPoly>,
}

impl LagrangeSystem {
    pub fn unknowns(&self) -> Vec<usize> {
        match &self.kind {
            SysKind::Hypersurface { z, zeta } => {
                let mut u = z.clone();
                u.push(*zeta);
                u
            }
            SysKind::Torus { s, .. } => s.clone(),
        }
    }

    /// Elimination order; the alternative reverses the support coordinates.
    pub fn order(&self, alternative: bool) -> Vec<usize> {
        match &self.kind {
            SysKind::Hypersurface { z, zeta } => {
                let mut o = vec![*zeta];
                if alternative {
                    o.extend(z.iter().copied());
                } else {
                    o.extend(z.iter().rev().copied());
                }
                o
            }
            SysKind::Torus { s, .. } => {
                if alternative {
                    s.clone()
                } else {
                    s.iter().rev().copied().collect()
                }
            }
        }
    }

    /// Variables whose monomial content may be discarded during elimination.
    pub fn strip_vars(&self) -> Vec<usize> {
        let mut v = self.params.clone();
        if let SysKind::Torus { s, .. } = &self.kind {
            v.extend(s.iter().copied());
        }
        v
    }

    /// Critical value polynomial variables `[c, params…]`.
    pub fn value_vars(&self) -> Vec<usize> {
        let mut v = vec![self.c_var.expect("system without c")];
        v.extend(self.params.iter().copied());
        v
    }

    /// Support coordinates of a solution (`z`, or `s^a(j)` for tori).
    pub fn alpha(&self, x: &[rug::Complex], prec: u32) -> Vec<rug::Complex> {
        match &self.kind {
            SysKind::Hypersurface { z, .. } => z.iter().map(|&k| x[k].clone()).collect(),
            SysKind::Torus { s, matrix } => {
                let n = matrix[0].len();
                (0..n)
                    .map(|j| {
                        let mut t = rug::Complex::with_val(prec, 1);
                        for (i, &si) in s.iter().enumerate() {
                            let a = matrix[i][j];
                            if a >= 0 {
                                t *= crate::algebra::cnum::cpow(&x[si], a as u32);
                            } else {
                                t /= crate::algebra::cnum::cpow(&x[si], (-a) as u32);
                            }
                        }
                        t
                    })
                    .collect()
            }
        }
    }
}

fn embed_family(fam: &DirectionFamily, nvars: usize, first_param: usize) -> Vec<MPoly> {
    let map: Vec<usize> = (0..fam.nparams()).map(|k| first_param + k).collect();
    fam.w.iter().map(|q| q.embed(nvars, &map)).collect()
}

/// `f = 0`, `∂_j f = ζ w_j`, optionally `c = Σ z_j w_j`.
pub(crate) fn hypersurface_system(f: &MPoly, fam: &DirectionFamily, with_c: bool) -> LagrangeSystem {
    let n = f.nvars();
    let zeta = n;
    let c_var = if with_c { Some(n + 1) } else { None };
    let first_param = n + 1 + with_c as usize;
    let nvars = first_param + fam.nparams();
    let zmap: Vec<usize> = (0..n).collect();
    let fe = f.embed(nvars, &zmap);
    let w = embed_family(fam, nvars, first_param);
    let zeta_p = MPoly::var(nvars, zeta);
    let mut eqs = vec![fe.clone()];
    for j in 0..n {
        eqs.push(&fe.derivative(j) - &(&zeta_p * &w[j]));
    }
    if let Some(cv) = c_var {
        let mut lin = MPoly::var(nvars, cv);
        for j in 0..n {
            lin = &lin - &(&MPoly::var(nvars, j) * &w[j]);
        }
        eqs.push(lin);
    }
    eqs.retain(|e| !e.is_zero());
    LagrangeSystem {
        nvars,
        kind: SysKind::Hypersurface { z: (0..n).collect(), zeta },
        c_var,
        params: (first_param..nvars).collect(),
        eqs,
    }
}

/// Multiply the Laurent polynomial given by `(exponent, coeff)` terms by the
/// smallest monomial making it polynomial, then drop any monomial content.
fn clear_laurent(terms: Vec<(Vec<i64>, MPoly)>, svars: &[usize], nvars: usize) -> MPoly {
    let d = svars.len();
    let mut shift = vec![0i64; d];
    for (e, _) in &terms {
        for i in 0..d {
            shift[i] = shift[i].max(-e[i]);
        }
    }
    let mut acc = MPoly::zero(nvars);
    for (e, c) in terms {
        let mut m = vec![0u32; nvars];
        for i in 0..d {
            m[svars[i]] = (e[i] + shift[i]) as u32;
        }
        acc = &acc + &(&MPoly::monomial(m, GRat::one()) * &c);
    }
    acc.strip_monomial(svars)
}

/// `s_i ∂_i g = 0` and optionally `c = g(s)` for `g = Σ w_j s^a(j)`, cleared of denominators.
pub(crate) fn torus_system(matrix: &[Vec<i64>], fam: &DirectionFamily, with_c: bool) -> LagrangeSystem {
    let d = matrix.len();
    let n = matrix[0].len();
    let c_var = if with_c { Some(d) } else { None };
    let first_param = d + with_c as usize;
    let nvars = first_param + fam.nparams();
    let w = embed_family(fam, nvars, first_param);
    let svars: Vec<usize> = (0..d).collect();
    let col = |j: usize| -> Vec<i64> { (0..d).map(|i| matrix[i][j]).collect() };
    let mut eqs = vec![];
    for i in 0..d {
        let terms: Vec<(Vec<i64>, MPoly)> = (0..n)
            .filter(|&j| matrix[i][j] != 0)
            .map(|j| (col(j), w[j].scale(&GRat::from_int(matrix[i][j]))))
            .collect();
        if !terms.is_empty() {
            eqs.push(clear_laurent(terms, &svars, nvars));
        }
    }
    if let Some(cv) = c_var {
        let mut terms: Vec<(Vec<i64>, MPoly)> = (0..n).map(|j| (col(j), -&w[j])).collect();
        terms.push((vec![0; d], MPoly::var(nvars, cv)));
        eqs.push(clear_laurent(terms, &svars, nvars));
    }
    eqs.retain(|e| !e.is_zero());
    LagrangeSystem {
        nvars,
        kind: SysKind::Torus { s: svars, matrix: matrix.to_vec() },
        c_var,
        params: (first_param..nvars).collect(),
        eqs,
    }
}

//! Numeric evaluation, back-substitution and Gauss–Newton refinement.

use rug::{Complex, Float};

use crate::algebra::cnum::{cabs, cpow, dist};
use crate::algebra::roots::{numeric_roots, relative_residual};
use crate::algebra::MPoly;

/// Coefficients of `p` in `var` after substituting the known values.
pub(crate) fn specialize_univariate(p: &MPoly, var: usize, vals: &[Option<Complex>], prec: u32) -> Vec<Complex> {
    let d = p.degree_in(var) as usize;
    let mut out: Vec<Complex> = (0..=d).map(|_| Complex::new(prec)).collect();
    for (e, c) in p.terms() {
        let mut t = c.to_complex(prec);
        for (u, &k) in e.iter().enumerate() {
            if u == var || k == 0 {
                continue;
            }
            let x = vals[u].as_ref().expect("value for an eliminated variable");
            t *= cpow(x, k);
        }
        out[e[var] as usize] += t;
    }
    out
}

/// Drop leading coefficients that are negligible relative to the largest one.
pub(crate) fn trim_numeric(c: &mut Vec<Complex>, rel: f64) {
    let m = c.iter().map(|a| cabs(a).to_f64()).fold(0.0, f64::max);
    while c.last().is_some_and(|a| cabs(a).to_f64() <= m * rel) {
        c.pop();
    }
}

pub(crate) fn full_values(vals: &[Option<Complex>], prec: u32) -> Vec<Complex> {
    vals.iter().map(|v| v.clone().unwrap_or_else(|| Complex::new(prec))).collect()
}

/// Relative residual of one polynomial at a full assignment.
pub(crate) fn poly_residual(p: &MPoly, x: &[Complex], prec: u32) -> f64 {
    let v = cabs(&p.eval_complex(x, prec));
    let s = p.eval_abs(x, prec);
    if s.is_zero() {
        return v.to_f64();
    }
    (v / s).to_f64()
}

pub(crate) fn system_residual(eqs: &[MPoly], x: &[Complex], prec: u32) -> f64 {
    eqs.iter().map(|p| poly_residual(p, x, prec)).fold(0.0, f64::max)
}

/// Solve the square complex system `a·x = b` by Gaussian elimination with partial pivoting.
pub(crate) fn solve_linear(mut a: Vec<Vec<Complex>>, mut b: Vec<Complex>, prec: u32) -> Option<Vec<Complex>> {
    let n = b.len();
    for k in 0..n {
        let p = (k..n).max_by(|&i, &j| cabs(&a[i][k]).partial_cmp(&cabs(&a[j][k])).unwrap())?;
        if a[p][k].is_zero() {
            return None;
        }
        a.swap(k, p);
        b.swap(k, p);
        let piv = a[k][k].clone();
        for i in k + 1..n {
            let f = Complex::with_val(prec, &a[i][k] / &piv);
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let t = Complex::with_val(prec, &f * &a[k][j]);
                a[i][j] -= t;
            }
            let t = Complex::with_val(prec, &f * &b[k]);
            b[i] -= t;
        }
    }
    let mut x: Vec<Complex> = (0..n).map(|_| Complex::new(prec)).collect();
    for k in (0..n).rev() {
        let mut s = b[k].clone();
        for j in k + 1..n {
            s -= Complex::with_val(prec, &a[k][j] * &x[j]);
        }
        x[k] = s / &a[k][k];
    }
    Some(x)
}

/// Gauss–Newton on `eqs` over the variables `unknowns`, others fixed in `x`.
pub(crate) fn gauss_newton(eqs: &[MPoly], unknowns: &[usize], x: &mut [Complex], prec: u32, iters: usize) -> f64 {
    let jac: Vec<Vec<MPoly>> = eqs.iter().map(|p| unknowns.iter().map(|&u| p.derivative(u)).collect()).collect();
    let n = unknowns.len();
    let mut best = system_residual(eqs, x, prec);
    let tiny = Float::with_val(prec, Float::i_exp(1, 16 - prec as i32));
    for _ in 0..iters {
        let r: Vec<Complex> = eqs.iter().map(|p| p.eval_complex(x, prec)).collect();
        let j: Vec<Vec<Complex>> = jac.iter().map(|row| row.iter().map(|d| d.eval_complex(x, prec)).collect()).collect();
        // normal equations J^H J δ = -J^H r
        let mut a = vec![vec![Complex::new(prec); n]; n];
        let mut b = vec![Complex::new(prec); n];
        for (ri, row) in r.iter().zip(&j) {
            for p in 0..n {
                let cp = Complex::with_val(prec, row[p].conj_ref());
                for q in 0..n {
                    a[p][q] += Complex::with_val(prec, &cp * &row[q]);
                }
                b[p] -= Complex::with_val(prec, &cp * ri);
            }
        }
        let Some(delta) = solve_linear(a, b, prec) else { break };
        let mut trial = x.to_vec();
        for (k, &u) in unknowns.iter().enumerate() {
            trial[u] += &delta[k];
        }
        let res = system_residual(eqs, &trial, prec);
        let step = delta.iter().map(|d| cabs(d)).fold(Float::new(prec), |a, b| if b > a { b } else { a });
        if res <= best || res < 1e-300 {
            x.clone_from_slice(&trial);
            best = res;
        } else {
            break;
        }
        if step <= tiny || best == 0.0 {
            break;
        }
    }
    best
}

/// `|p(z)|` relative to the coefficient norm, stable near `z = 0`.
fn scaled_residual(c: &[Complex], z: &Complex) -> f64 {
    let m = c.iter().map(|a| cabs(a).to_f64()).fold(0.0, f64::max);
    if m == 0.0 {
        return 0.0;
    }
    let r = relative_residual(c, z);
    let d = c.len().saturating_sub(1) as i32;
    let s = cabs(z).to_f64().max(1.0).powi(d);
    let mut num = Complex::new(z.prec().0);
    for a in c.iter().rev() {
        num *= z;
        num += a;
    }
    r.min(cabs(&num).to_f64() / (m * s))
}

/// Candidate values of `var` making every polynomial of the stage small.
pub(crate) fn stage_candidates(polys: &[MPoly], var: usize, vals: &[Option<Complex>], prec: u32, loose: f64) -> Option<Vec<Complex>> {
    let mut specs: Vec<Vec<Complex>> = polys
        .iter()
        .map(|p| {
            let mut c = specialize_univariate(p, var, vals, prec);
            trim_numeric(&mut c, loose * 1e-6);
            c
        })
        .collect();
    specs.retain(|c| !c.is_empty());
    if specs.is_empty() {
        return None;
    }
    let piv = specs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() >= 2)
        .min_by_key(|(_, c)| c.len())
        .map(|(k, _)| k);
    let Some(piv) = piv else { return Some(vec![]) };
    let roots = numeric_roots(&specs[piv], prec);
    let mut out: Vec<Complex> = vec![];
    for z in roots {
        let ok = specs.iter().enumerate().all(|(k, c)| k == piv || scaled_residual(c, &z) <= loose);
        if ok && !out.iter().any(|y| dist(y, &z).to_f64() <= loose * cabs(&z).to_f64().max(1.0)) {
            out.push(z);
        }
    }
    Some(out)
}

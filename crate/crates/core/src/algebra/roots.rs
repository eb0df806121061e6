use rug::ops::Pow;
use rug::{Complex, Float};

use super::capprox::CApprox;
use super::cnum::{cabs, dist, unity_root};
use super::upoly::UniPoly;
use crate::error::{Error, Result};

/// A root with its multiplicity.
#[derive(Clone, Debug)]
pub struct Root {
    pub value: CApprox,
    pub mult: usize,
}

const GUARD: u32 = 32;

fn horner2(c: &[Complex], z: &Complex, prec: u32) -> (Complex, Complex) {
    let mut p = Complex::new(prec);
    let mut dp = Complex::new(prec);
    for a in c.iter().rev() {
        dp *= z;
        dp += &p;
        p *= z;
        p += a;
    }
    (p, dp)
}

fn horner(c: &[Complex], z: &Complex, prec: u32) -> Complex {
    let mut p = Complex::new(prec);
    for a in c.iter().rev() {
        p *= z;
        p += a;
    }
    p
}

fn horner_abs(c: &[Complex], z: &Complex, prec: u32) -> Float {
    let r = cabs(z);
    let mut p = Float::new(prec);
    for a in c.iter().rev() {
        p *= &r;
        p += cabs(a);
    }
    p
}

/// Relative residual `|f(z)| / Σ|a_k||z|^k`.
pub fn relative_residual(c: &[Complex], z: &Complex) -> f64 {
    let prec = z.prec().0;
    let num = cabs(&horner(c, z, prec));
    let den = horner_abs(c, z, prec);
    if den.is_zero() {
        return 0.0;
    }
    (num / den).to_f64()
}

/// Simultaneous Aberth iteration; returns the iterates and whether all corrections fell below tolerance.
pub fn aberth(coeffs: &[Complex], prec: u32, max_iter: usize) -> (Vec<Complex>, bool) {
    let mut c: Vec<Complex> = coeffs.iter().map(|a| Complex::with_val(prec, a)).collect();
    while c.last().is_some_and(|a| a.is_zero()) {
        c.pop();
    }
    let mut zeros = 0;
    while c.len() > 1 && c[0].is_zero() {
        c.remove(0);
        zeros += 1;
    }
    let n = c.len().saturating_sub(1);
    let mut out: Vec<Complex> = (0..zeros).map(|_| Complex::new(prec)).collect();
    if n == 0 {
        return (out, true);
    }
    if n == 1 {
        let z = -Complex::with_val(prec, &c[0] / &c[1]);
        out.push(z);
        return (out, true);
    }
    let lead = cabs(&c[n]);
    let r0 = (cabs(&c[0]) / &lead).to_f64().powf(1.0 / n as f64);
    let mut rmax: f64 = 0.0;
    for k in 0..n {
        let t = (cabs(&c[k]) / &lead).to_f64().powf(1.0 / (n - k) as f64);
        rmax = rmax.max(t);
    }
    let radius = if r0.is_finite() && r0 > 0.0 { r0.min(2.0 * rmax).max(rmax * 1e-3) } else { rmax.max(1.0) };
    let mut z: Vec<Complex> = (0..n)
        .map(|k| {
            let u = unity_root(n as u32, k as i64, prec);
            let tilt = Complex::with_val(prec, (0.6f64.cos(), 0.6f64.sin()));
            Complex::with_val(prec, u * tilt) * Float::with_val(prec, radius)
        })
        .collect();
    let tol = Float::with_val(prec, Float::with_val(prec, 2).pow(-((prec as i32) - 12)));
    let floor = 2f64.powi(-(prec as i32) + 10);
    let mut done = vec![false; n];
    for it in 0..max_iter {
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp) = horner2(&c, &z[k], prec);
            if p.is_zero() || relative_residual(&c, &z[k]) <= floor {
                done[k] = true;
                continue;
            }
            let mut s = Complex::new(prec);
            for j in 0..n {
                if j != k {
                    let d = Complex::with_val(prec, &z[k] - &z[j]);
                    if !d.is_zero() {
                        s += d.recip();
                    }
                }
            }
            let corr = if dp.is_zero() {
                Complex::with_val(prec, (1e-3 * (it as f64 + 1.0), 1e-3))
            } else {
                let w = Complex::with_val(prec, &p / &dp);
                let den = Complex::with_val(prec, 1 - Complex::with_val(prec, &w * &s));
                if den.is_zero() { w } else { w / den }
            };
            let mag = cabs(&corr) / cabs(&z[k]).max(&Float::with_val(prec, 1));
            if mag <= tol {
                done[k] = true;
            }
            z[k] -= corr;
        }
        if done.iter().all(|&d| d) {
            break;
        }
    }
    out.extend(z);
    (out, done.iter().all(|&d| d))
}

fn newton_polish(c: &[Complex], z: &mut Complex, prec: u32, steps: usize) {
    for _ in 0..steps {
        let (p, dp) = horner2(c, z, prec);
        if dp.is_zero() || p.is_zero() {
            return;
        }
        *z -= Complex::with_val(prec, &p / &dp);
    }
}

fn sort_roots(v: &mut [Complex]) {
    v.sort_by(|a, b| {
        a.real()
            .partial_cmp(b.real())
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.imag().partial_cmp(b.imag()).unwrap_or(std::cmp::Ordering::Equal))
    });
}

/// All complex roots of an exact polynomial with multiplicities.
///
/// Roots are found on the squarefree factors; multiplicities come from the
/// squarefree decomposition.  Each error radius bounds the distance to a true root.
pub fn complex_roots(f: &UniPoly, prec: u32) -> Result<Vec<Root>> {
    let wp = prec + GUARD;
    let full = f.to_complex(wp);
    let mut out = vec![];
    for (g, m) in f.squarefree_decomposition() {
        let gc = g.to_complex(wp);
        let (mut zs, ok) = aberth(&gc, wp, 2000);
        let deg = g.degree();
        for z in zs.iter_mut() {
            newton_polish(&gc, z, wp, 3);
        }
        sort_roots(&mut zs);
        let bound = Float::with_val(wp, 2).pow(-(prec as i32 / 2));
        let mut worst = 0.0f64;
        for z in &zs {
            let res = relative_residual(&full, z).max(relative_residual(&gc, z));
            worst = worst.max(res);
        }
        if !ok && worst > bound.to_f64() {
            return Err(Error::NonConvergence {
                what: format!("roots of degree-{} factor", deg),
                residual: worst,
            });
        }
        for z in zs {
            let (p, dp) = horner2(&gc, &z, wp);
            let err = if dp.is_zero() {
                f64::INFINITY
            } else {
                (cabs(&p) / cabs(&dp)).to_f64() * deg as f64
            };
            let rnd = cabs(&z).to_f64() * 2f64.powi(-(prec as i32));
            let value = Complex::with_val(prec, &z);
            out.push(Root { value: CApprox::new(value, err + rnd), mult: m });
        }
    }
    Ok(out)
}

/// Roots of a numeric polynomial (ascending coefficients), multiplicities not merged.
pub fn numeric_roots(coeffs: &[Complex], prec: u32) -> Vec<Complex> {
    let (mut zs, _) = aberth(coeffs, prec, 1500);
    let mut c: Vec<Complex> = coeffs.to_vec();
    while c.last().is_some_and(|a| a.is_zero()) {
        c.pop();
    }
    for z in zs.iter_mut() {
        newton_polish(&c, z, prec, 4);
    }
    sort_roots(&mut zs);
    zs
}

/// Group numerically close values; returns representatives with counts.
pub fn cluster(values: &[Complex], tol: f64) -> Vec<(Complex, usize)> {
    let mut out: Vec<(Complex, usize)> = vec![];
    for v in values {
        let scale = cabs(v).to_f64().max(1.0);
        match out.iter_mut().find(|(r, _)| dist(r, v).to_f64() <= tol * scale) {
            Some(e) => e.1 += 1,
            None => out.push((v.clone(), 1)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::grat::GRat;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&k| GRat::from_int(k)).collect())
    }

    #[test]
    fn roots_of_x2_plus_1() {
        let r = complex_roots(&up(&[1, 0, 1]), 128).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().any(|x| x.value.contains(&GRat::i(), 1e-30)));
        assert!(r.iter().any(|x| x.value.contains(&-GRat::i(), 1e-30)));
        assert!(r.iter().all(|x| x.mult == 1));
    }

    #[test]
    fn double_root() {
        let r = complex_roots(&up(&[9, -6, 1]), 128).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].mult, 2);
        assert!(r[0].value.contains(&GRat::from_int(3), 1e-30));
    }

    #[test]
    fn wilkinson_like() {
        let mut f = up(&[1]);
        for k in 1..=12 {
            f = f.mul(&up(&[-k, 1]));
        }
        let r = complex_roots(&f, 128).unwrap();
        assert_eq!(r.len(), 12);
        for k in 1..=12 {
            assert!(r.iter().any(|x| x.value.contains(&GRat::from_int(k), 1e-25)));
        }
    }
}

//! Euler characteristic of a reduced affine plane curve by a finite projection.
//!
//! With `g` monic of degree `d` in `y`, `(x, y) ↦ x` is finite of degree `d` and
//! unramified off the discriminant, so `χ(V) = d − Σ_{x₀} deg gcd(g(x₀, ·), g_y(x₀, ·))`
//! over the roots of the discriminant.  The sum is computed exactly by running Euclid's
//! algorithm over `ℚ(i)[x]/(D)` and splitting `D` whenever a leading coefficient is a
//! zero divisor.

use crate::algebra::{resultant_in, GRat, MPoly, UniPoly};

/// Polynomial in `y` with coefficients in `ℚ(i)[x]`, ascending.
type Poly = Vec<UniPoly>;

fn rem(c: &UniPoly, d: &UniPoly) -> UniPoly {
    c.divrem(d).1
}

/// `c⁻¹ mod d` for `c` coprime to `d`.
fn inv_mod(c: &UniPoly, d: &UniPoly) -> UniPoly {
    let (mut r0, mut r1) = (d.clone(), rem(c, d));
    let (mut s0, mut s1) = (UniPoly::zero(), UniPoly::constant(GRat::one()));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s = s0.sub(&q.mul(&s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    // r0 is a nonzero constant
    let k = UniPoly::constant(r0.lc().inv().unwrap());
    rem(&s0.mul(&k), d)
}

fn reduce(p: &Poly, d: &UniPoly) -> Poly {
    let mut out: Poly = p.iter().map(|c| rem(c, d)).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Where the leading coefficient of `p` vanishes on part of `V(d)`, the two parts.
fn split(p: &Poly, d: &UniPoly) -> Option<(UniPoly, UniPoly)> {
    let g = d.gcd(p.last()?);
    if g.degree() > 0 && g.degree() < d.degree() {
        Some((g.clone(), d.divrem(&g).0))
    } else {
        None
    }
}

/// `a mod b` where the leading coefficient of `b` is a unit modulo `d`.
fn poly_rem(a: &Poly, b: &Poly, d: &UniPoly) -> Poly {
    let inv = inv_mod(b.last().unwrap(), d);
    let mut r = a.clone();
    let db = b.len() - 1;
    while r.len() > db {
        let t = rem(&r.last().unwrap().mul(&inv), d);
        let shift = r.len() - 1 - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] = rem(&r[shift + j].sub(&bc.mul(&t)), d);
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

/// `Σ_{x₀ ∈ V(d)} deg gcd(a(x₀, ·), b(x₀, ·))` for squarefree `d`.
fn defect(d: &UniPoly, a: &Poly, b: &Poly) -> usize {
    if d.degree() == 0 {
        return 0;
    }
    let (mut a, mut b) = (reduce(a, d), reduce(b, d));
    loop {
        for p in [&a, &b] {
            if let Some((d1, d2)) = split(p, d) {
                return defect(&d1, &a, &b) + defect(&d2, &a, &b);
            }
        }
        if b.is_empty() {
            return d.degree() * a.len().saturating_sub(1);
        }
        if b.len() == 1 {
            return 0;
        }
        let r = poly_rem(&a, &b, d);
        a = b;
        b = r;
    }
}

fn in_y(h: &MPoly) -> Poly {
    h.coeffs_in(1).iter().map(|c| UniPoly::from_mpoly(c, 0).unwrap()).collect()
}

/// `χ(V(g))` for squarefree `g(x, y)` with constant leading coefficient in `y`.
pub(crate) fn chi_monic_curve(g: &MPoly) -> Option<i64> {
    let d = g.degree_in(1) as usize;
    if d == 0 || !g.coeffs_in(1).last()?.is_constant() {
        return None;
    }
    if d == 1 {
        // the graph of a polynomial
        return Some(1);
    }
    let gy = g.derivative(1);
    let disc = resultant_in(g, &gy, 1).ok()?;
    let disc = UniPoly::from_mpoly(&disc, 0)?;
    if disc.is_zero() {
        return None;
    }
    let dd = disc.squarefree_part();
    Some(d as i64 - defect(&dd, &in_y(g), &in_y(&gy)) as i64)
}

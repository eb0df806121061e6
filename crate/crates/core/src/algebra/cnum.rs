//! Small helpers over `rug::Complex`.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};

pub fn czero(prec: u32) -> Complex {
    Complex::new(prec)
}

pub fn cone(prec: u32) -> Complex {
    Complex::with_val(prec, 1)
}

pub fn cpow(z: &Complex, k: u32) -> Complex {
    let prec = z.prec().0;
    let mut acc = cone(prec);
    let mut base = z.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = Complex::with_val(prec, &base * &base);
        }
    }
    acc
}

pub fn cabs(z: &Complex) -> Float {
    Float::with_val(z.prec().0, z.abs_ref())
}

pub fn cabs_f64(z: &Complex) -> f64 {
    cabs(z).to_f64()
}

pub fn to_f64_pair(z: &Complex) -> (f64, f64) {
    (z.real().to_f64(), z.imag().to_f64())
}

/// `exp(2πi·k/n)`.
pub fn unity_root(n: u32, k: i64, prec: u32) -> Complex {
    let pi = Float::with_val(prec, Constant::Pi);
    let t = Float::with_val(prec, pi * 2u32) * Float::with_val(prec, k) / n;
    let (s, c) = t.sin_cos(Float::new(prec));
    Complex::with_val(prec, (c, s))
}

/// Principal value of `z^(p/q)`.
pub fn principal_pow(z: &Complex, p: i64, q: u32) -> Complex {
    let prec = z.prec().0;
    if z.is_zero() {
        return czero(prec);
    }
    let l = Complex::with_val(prec, z.ln_ref());
    let e = Float::with_val(prec, p) / q;
    Complex::with_val(prec, l * e).exp()
}

/// `x^(p/q)` on the principal branch of `x^(1/q)`, given `r = x^(1/q)`.
pub fn pow_from_root(r: &Complex, p: i64) -> Complex {
    let prec = r.prec().0;
    if p >= 0 {
        cpow(r, p as u32)
    } else {
        Complex::with_val(prec, cpow(r, (-p) as u32).recip())
    }
}

/// Principal argument in `[0, 2π)`.
pub fn arg_positive(z: &Complex) -> f64 {
    let (re, im) = to_f64_pair(z);
    let a = im.atan2(re);
    if a < 0.0 {
        a + 2.0 * std::f64::consts::PI
    } else {
        a
    }
}

pub fn two_pow_neg(bits: u32, prec: u32) -> Float {
    Float::with_val(prec, 2).pow(-(bits as i32))
}

pub fn dist(a: &Complex, b: &Complex) -> Float {
    let d = Complex::with_val(a.prec().0, a - b);
    cabs(&d)
}

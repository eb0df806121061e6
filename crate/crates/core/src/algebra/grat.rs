use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::{Complex, Float, Integer, Rational};

/// An exact Gaussian rational `re + im*i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GRat {
    re: Rational,
    im: Rational,
}

impl GRat {
    pub fn new(re: Rational, im: Rational) -> Self {
        GRat { re, im }
    }

    pub fn zero() -> Self {
        GRat::default()
    }

    pub fn one() -> Self {
        GRat::from_int(1)
    }

    pub fn i() -> Self {
        GRat::new(Rational::new(), Rational::from(1))
    }

    pub fn from_int(n: i64) -> Self {
        GRat::new(Rational::from(n), Rational::new())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        GRat::new(Rational::from((num, den)), Rational::new())
    }

    pub fn from_rational(r: Rational) -> Self {
        GRat::new(r, Rational::new())
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.cmp0().is_eq() && self.im.cmp0().is_eq()
    }

    pub fn is_one(&self) -> bool {
        self.im.cmp0().is_eq() && self.re == 1
    }

    pub fn is_real(&self) -> bool {
        self.im.cmp0().is_eq()
    }

    pub fn conj(&self) -> GRat {
        GRat::new(self.re.clone(), Rational::from(-&self.im))
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> Rational {
        Rational::from(&self.re * &self.re) + Rational::from(&self.im * &self.im)
    }

    pub fn inv(&self) -> Option<GRat> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(GRat::new(
            Rational::from(&self.re / &n),
            Rational::from(-&self.im) / &n,
        ))
    }

    pub fn pow(&self, mut k: u32) -> GRat {
        let mut base = self.clone();
        let mut acc = GRat::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    pub fn mul_int(&self, n: i64) -> GRat {
        GRat::new(
            Rational::from(&self.re * n),
            Rational::from(&self.im * n),
        )
    }

    pub fn to_complex(&self, prec: u32) -> Complex {
        Complex::with_val(prec, (&self.re, &self.im))
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// Best rational approximation of `z` with denominators up to `max_den`.
    pub fn rationalize(z: &Complex, max_den: u64) -> GRat {
        GRat::new(
            rationalize_float(z.real(), max_den),
            rationalize_float(z.imag(), max_den),
        )
    }

    /// Lowest common denominator of both parts.
    pub fn denom_lcm(&self) -> Integer {
        self.re.denom().clone().lcm(self.im.denom())
    }
}

/// Continued-fraction approximation of `x` with denominator at most `max_den`.
pub fn rationalize_float(x: &Float, max_den: u64) -> Rational {
    if x.is_zero() || !x.is_finite() {
        return Rational::new();
    }
    let prec = x.prec().max(64);
    let mut rem = Float::with_val(prec, x);
    let (mut p0, mut q0) = (Integer::from(0), Integer::from(1));
    let (mut p1, mut q1) = (Integer::from(1), Integer::from(0));
    for _ in 0..128 {
        let a = rem.clone().floor();
        let ai = a.to_integer().unwrap_or_default();
        let p2 = Integer::from(&ai * &p1) + &p0;
        let q2 = Integer::from(&ai * &q1) + &q0;
        if q2 > max_den {
            break;
        }
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        let frac = rem - a;
        if frac.is_zero() || frac.clone().abs() < Float::with_val(prec, 1) >> (prec - 8) {
            break;
        }
        rem = Float::with_val(prec, 1) / frac;
    }
    if q1 == 0 {
        return Rational::new();
    }
    Rational::from((p1, q1))
}

impl From<i64> for GRat {
    fn from(n: i64) -> Self {
        GRat::from_int(n)
    }
}

impl From<Rational> for GRat {
    fn from(r: Rational) -> Self {
        GRat::from_rational(r)
    }
}

impl<'a> Add<&'a GRat> for &'a GRat {
    type Output = GRat;
    fn add(self, o: &GRat) -> GRat {
        GRat::new(
            Rational::from(&self.re + &o.re),
            Rational::from(&self.im + &o.im),
        )
    }
}

impl<'a> Sub<&'a GRat> for &'a GRat {
    type Output = GRat;
    fn sub(self, o: &GRat) -> GRat {
        GRat::new(
            Rational::from(&self.re - &o.re),
            Rational::from(&self.im - &o.im),
        )
    }
}

impl<'a> Mul<&'a GRat> for &'a GRat {
    type Output = GRat;
    fn mul(self, o: &GRat) -> GRat {
        if self.im.cmp0().is_eq() && o.im.cmp0().is_eq() {
            return GRat::from_rational(Rational::from(&self.re * &o.re));
        }
        let re = Rational::from(&self.re * &o.re) - Rational::from(&self.im * &o.im);
        let im = Rational::from(&self.re * &o.im) + Rational::from(&self.im * &o.re);
        GRat::new(re, im)
    }
}

impl<'a> Div<&'a GRat> for &'a GRat {
    type Output = GRat;
    fn div(self, o: &GRat) -> GRat {
        self * &o.inv().expect("division by zero")
    }
}

impl Neg for &GRat {
    type Output = GRat;
    fn neg(self) -> GRat {
        GRat::new(Rational::from(-&self.re), Rational::from(-&self.im))
    }
}

impl Neg for GRat {
    type Output = GRat;
    fn neg(self) -> GRat {
        GRat::new(-self.re, -self.im)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<GRat> for GRat {
            type Output = GRat;
            fn $m(self, o: GRat) -> GRat {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GRat> for GRat {
            type Output = GRat;
            fn $m(self, o: &GRat) -> GRat {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl AddAssign<&GRat> for GRat {
    fn add_assign(&mut self, o: &GRat) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GRat> for GRat {
    fn sub_assign(&mut self, o: &GRat) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&GRat> for GRat {
    fn mul_assign(&mut self, o: &GRat) {
        *self = &*self * o;
    }
}

impl fmt::Display for GRat {
    /// Canonical form: `3/4`, `-i`, `2/3*i`, `1/2+3*i`, `1-i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re0 = self.re.cmp0().is_eq();
        let im0 = self.im.cmp0().is_eq();
        if im0 {
            return write!(f, "{}", self.re);
        }
        if !re0 {
            write!(f, "{}", self.re)?;
            if self.im.cmp0().is_gt() {
                write!(f, "+")?;
            }
        }
        if self.im == 1 {
            write!(f, "i")
        } else if self.im == -1 {
            write!(f, "-i")
        } else {
            write!(f, "{}*i", self.im)
        }
    }
}

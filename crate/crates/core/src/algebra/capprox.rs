use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::Complex;

use super::cnum::{cabs_f64, to_f64_pair};
use super::grat::GRat;

/// A complex number with a radius bounding its distance to the true value.
#[derive(Clone, Debug, PartialEq)]
pub struct CApprox {
    value: Complex,
    err: f64,
}

impl CApprox {
    pub fn new(value: Complex, err: f64) -> Self {
        CApprox { value, err: err.max(0.0) }
    }

    pub fn from_grat(c: &GRat, prec: u32) -> Self {
        let value = c.to_complex(prec);
        let err = rounding(&value);
        CApprox { value, err }
    }

    pub fn value(&self) -> &Complex {
        &self.value
    }

    pub fn err(&self) -> f64 {
        self.err
    }

    pub fn prec(&self) -> u32 {
        self.value.prec().0
    }

    pub fn re(&self) -> f64 {
        self.value.real().to_f64()
    }

    pub fn im(&self) -> f64 {
        self.value.imag().to_f64()
    }

    pub fn abs(&self) -> f64 {
        cabs_f64(&self.value)
    }

    pub fn contains(&self, c: &GRat, slack: f64) -> bool {
        let d = Complex::with_val(self.prec(), &self.value - &c.to_complex(self.prec()));
        cabs_f64(&d) <= self.err + slack
    }

    pub fn dist(&self, o: &CApprox) -> f64 {
        let d = Complex::with_val(self.prec(), &self.value - &o.value);
        cabs_f64(&d)
    }

    pub fn with_err(mut self, err: f64) -> Self {
        self.err = err.max(0.0);
        self
    }
}

fn rounding(z: &Complex) -> f64 {
    let prec = z.prec().0 as i32;
    cabs_f64(z) * 2f64.powi(-prec + 1)
}

impl Add for &CApprox {
    type Output = CApprox;
    fn add(self, o: &CApprox) -> CApprox {
        let v = Complex::with_val(self.prec(), &self.value + &o.value);
        let e = self.err + o.err + rounding(&v);
        CApprox::new(v, e)
    }
}

impl Sub for &CApprox {
    type Output = CApprox;
    fn sub(self, o: &CApprox) -> CApprox {
        let v = Complex::with_val(self.prec(), &self.value - &o.value);
        let e = self.err + o.err + rounding(&v);
        CApprox::new(v, e)
    }
}

impl Mul for &CApprox {
    type Output = CApprox;
    fn mul(self, o: &CApprox) -> CApprox {
        let v = Complex::with_val(self.prec(), &self.value * &o.value);
        let e = self.abs() * o.err + o.abs() * self.err + self.err * o.err + rounding(&v);
        CApprox::new(v, e)
    }
}

impl Neg for &CApprox {
    type Output = CApprox;
    fn neg(self) -> CApprox {
        CApprox::new(Complex::with_val(self.prec(), -&self.value), self.err)
    }
}

impl fmt::Display for CApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = to_f64_pair(&self.value);
        write!(f, "{} ± {:.1e}", fmt_complex(re, im, 12), self.err)
    }
}

/// `re±im i` with `digits` significant digits, tiny parts rendered as zero.
pub fn fmt_complex(re: f64, im: f64, digits: usize) -> String {
    let scale = re.abs().max(im.abs());
    let clean = |x: f64| if x.abs() <= scale * 1e-30 || x == 0.0 { 0.0 } else { x };
    let (re, im) = (clean(re), clean(im));
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{}{}{}i", fmt_sig(re, digits), sign, fmt_sig(im.abs(), digits))
}

/// Scientific notation with `digits` significant digits; `-0` prints as `0`.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_propagation_covers_exact() {
        let a = CApprox::from_grat(&GRat::from_ratio(1, 3), 128);
        let b = CApprox::from_grat(&GRat::i(), 128);
        let p = &(&a * &b) + &a;
        let exact = &(&GRat::from_ratio(1, 3) * &GRat::i()) + &GRat::from_ratio(1, 3);
        assert!(p.contains(&exact, 0.0));
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt_sig(0.0, 12), "0");
        assert_eq!(fmt_complex(1.5, -0.25, 3), "1.50e0-2.50e-1i");
        assert_eq!(fmt_complex(-0.0, 2.0, 2), "0+2.0e0i");
    }
}

use std::fmt;

use rug::{Complex, Rational};

use crate::algebra::capprox::fmt_complex;
use crate::algebra::cnum::{arg_positive, cpow, unity_root};
use crate::algebra::{CApprox, GRat};

/// One term `coeff · u^exp`.
#[derive(Clone, Debug)]
pub struct PuiseuxTerm {
    pub exp: Rational,
    pub coeff: CApprox,
    /// Set while every step producing the coefficient stayed in `Q(i)`.
    pub exact: Option<GRat>,
}

/// A truncated Laurent–Puiseux series in `u`, one representative of a conjugacy cycle.
#[derive(Clone, Debug)]
pub struct PuiseuxSeries {
    /// Ramification index; every exponent has denominator dividing it.
    pub ram: u32,
    /// Strictly increasing exponents, all below `trunc`.
    pub terms: Vec<PuiseuxTerm>,
    pub trunc: Rational,
    /// The expansion terminated: no terms beyond those listed.
    pub finite: bool,
}

/// Negative-exponent part of a series and its pole order.
#[derive(Clone, Debug)]
pub struct PolePart {
    pub terms: Vec<PuiseuxTerm>,
    pub order: Rational,
}

impl PuiseuxSeries {
    pub fn leading_exponent(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.exp)
    }

    pub fn leading_coefficient(&self) -> Option<&CApprox> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// The series with `u^(1/ram)` replaced by `ζ^k · u^(1/ram)`, `ζ = exp(2πi/ram)`.
    pub fn conjugate(&self, k: u32) -> PuiseuxSeries {
        let e = self.ram;
        let mut out = self.clone();
        for t in out.terms.iter_mut() {
            let n = Rational::from(&t.exp * e);
            let n = n.numer().to_i64().unwrap_or(0);
            if (n * k as i64).rem_euclid(e as i64) == 0 {
                continue;
            }
            let z = unity_root(e, n * k as i64, t.coeff.prec());
            let v = Complex::with_val(t.coeff.prec(), t.coeff.value() * &z);
            t.coeff = CApprox::new(v, t.coeff.err());
            // quarter turns keep exact coefficients exact
            let m = (n * k as i64).rem_euclid(e as i64);
            t.exact = if (4 * m) % e as i64 == 0 {
                let unit = [GRat::one(), GRat::i(), GRat::from_int(-1), -GRat::i()][(4 * m / e as i64) as usize].clone();
                t.exact.as_ref().map(|q| q * &unit)
            } else {
                None
            };
        }
        out
    }

    /// All `ram` conjugates, starting with the series itself.
    pub fn conjugates(&self) -> Vec<PuiseuxSeries> {
        (0..self.ram).map(|k| self.conjugate(k)).collect()
    }

    /// `Σ c_a u0^a` with `u0^(1/ram)` on the principal branch.
    pub fn eval(&self, u0: &Complex) -> Complex {
        let prec = u0.prec().0;
        let mut acc = Complex::new(prec);
        if self.terms.is_empty() {
            return acc;
        }
        let root = crate::algebra::cnum::principal_pow(u0, 1, self.ram);
        for t in &self.terms {
            let n = Rational::from(&t.exp * self.ram);
            let n = n.numer().to_i64().unwrap();
            let p = if n >= 0 {
                cpow(&root, n as u32)
            } else {
                Complex::with_val(prec, cpow(&root, (-n) as u32).recip())
            };
            acc += Complex::with_val(prec, &p * t.coeff.value());
        }
        acc
    }

    pub fn pole_part(&self) -> PolePart {
        pole_part(self)
    }

    /// Canonical rendering with `digits` significant digits.
    pub fn render(&self, var: &str, digits: usize) -> String {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("({})*{}", fmt_complex(t.coeff.re(), t.coeff.im(), digits), monomial(var, &t.exp)))
            .collect();
        if parts.is_empty() {
            parts.push("0".into());
        }
        if !self.finite {
            parts.push(format!("O({})", monomial(var, &self.trunc)));
        }
        parts.join(" + ")
    }

    /// Sort key: leading exponent, then argument of the leading coefficient in `[0, 2π)`.
    pub(crate) fn order_key(&self) -> (Rational, f64) {
        match self.terms.first() {
            Some(t) => (t.exp.clone(), arg_positive(t.coeff.value())),
            None => (self.trunc.clone(), 0.0),
        }
    }
}

fn monomial(var: &str, e: &Rational) -> String {
    if *e.denom() == 1 {
        format!("{}^{}", var, e.numer())
    } else {
        format!("{}^({})", var, e)
    }
}

/// Terms with negative exponent; the order is `-(leading exponent)` when that is negative.
pub fn pole_part(s: &PuiseuxSeries) -> PolePart {
    let terms: Vec<PuiseuxTerm> = s.terms.iter().filter(|t| t.exp < 0).cloned().collect();
    let order = match s.terms.first() {
        Some(t) if t.exp < 0 => Rational::from(-&t.exp),
        _ => Rational::new(),
    };
    PolePart { terms, order }
}

impl PolePart {
    pub fn is_trivial(&self) -> bool {
        self.terms.is_empty()
    }

    /// `-P`, the exponential factor attached to a branch.
    pub fn negated(&self) -> PolePart {
        let terms = self
            .terms
            .iter()
            .map(|t| PuiseuxTerm {
                exp: t.exp.clone(),
                coeff: CApprox::new(Complex::with_val(t.coeff.prec(), -t.coeff.value()), t.coeff.err()),
                exact: t.exact.as_ref().map(|q| -q),
            })
            .collect();
        PolePart { terms, order: self.order.clone() }
    }

    pub fn render(&self, var: &str, digits: usize) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|t| {
                let c = match &t.exact {
                    Some(q) => q.to_string(),
                    None => fmt_complex(t.coeff.re(), t.coeff.im(), digits),
                };
                format!("({})*{}", c, monomial(var, &t.exp))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("u", 12))
    }
}

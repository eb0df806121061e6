use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use rug::ops::Pow;
use rug::Complex;

use super::cnum::{cabs, cpow};
use super::grat::GRat;

pub type Exp = Vec<u32>;

/// Sparse polynomial over ℚ(i) in a fixed number of variables.
///
/// Terms are keyed by exponent vectors in lexicographic order, the first
/// variable being the most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Exp, GRat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: GRat) -> Self {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, GRat::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::monomial(e, GRat::one())
    }

    pub fn monomial(exp: Exp, c: GRat) -> Self {
        let nvars = exp.len();
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exp, GRat)>) -> Self {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, &c);
        }
        p
    }

    /// Linear form `Σ a_j x_j + b`.
    pub fn linear(coeffs: &[GRat], constant: &GRat) -> Self {
        let n = coeffs.len();
        let mut p = MPoly::constant(n, constant.clone());
        for (j, a) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[j] = 1;
            p.add_term(e, a);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exp, &GRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        match self.terms.len() {
            0 => true,
            1 => self.terms.keys().next().unwrap().iter().all(|&e| e == 0),
            _ => false,
        }
    }

    pub fn constant_value(&self) -> Option<GRat> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_default())
    }

    pub fn constant_term(&self) -> GRat {
        self.terms.get(&vec![0; self.nvars]).cloned().unwrap_or_default()
    }

    pub fn coeff(&self, e: &[u32]) -> GRat {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Exp, c: &GRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    /// Leading term in lexicographic order.
    pub fn leading(&self) -> Option<(&Exp, &GRat)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).min().unwrap_or(0)
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    pub fn vars_used(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.contains_var(v)).collect()
    }

    pub fn scale(&self, c: &GRat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one(self.nvars);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> MPoly {
        let mut p = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            p.add_term(e2, &c.mul_int(e[var] as i64));
        }
        p
    }

    /// Coefficients with respect to `var`, index = power of `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<MPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![MPoly::zero(self.nvars); d + 1];
        if self.is_zero() {
            return vec![];
        }
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut e2 = e.clone();
            e2[var] = 0;
            out[k].terms.insert(e2, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(var: usize, coeffs: &[MPoly], nvars: usize) -> MPoly {
        let mut p = MPoly::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, v) in &c.terms {
                let mut e2 = e.clone();
                e2[var] += k as u32;
                p.add_term(e2, v);
            }
        }
        p
    }

    /// Substitute a constant for `var`; the variable count is kept.
    pub fn subst_const(&self, var: usize, val: &GRat) -> MPoly {
        let mut p = MPoly::zero(self.nvars);
        let d = self.degree_in(var);
        let mut pows = vec![GRat::one()];
        for k in 1..=d {
            let next = &pows[k as usize - 1] * val;
            pows.push(next);
        }
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut e2 = e.clone();
            e2[var] = 0;
            p.add_term(e2, &(c * &pows[k]));
        }
        p
    }

    /// Substitute constants for several variables.
    pub fn subst_consts(&self, vals: &[(usize, GRat)]) -> MPoly {
        let mut p = self.clone();
        for (v, x) in vals {
            p = p.subst_const(*v, x);
        }
        p
    }

    /// Substitute a polynomial for `var`.
    pub fn subst(&self, var: usize, q: &MPoly) -> MPoly {
        let coeffs = self.coeffs_in(var);
        let mut acc = MPoly::zero(self.nvars);
        for c in coeffs.iter().rev() {
            acc = &(&acc * q) + c;
        }
        acc
    }

    pub fn eval(&self, point: &[GRat]) -> GRat {
        let mut acc = GRat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                if k > 0 {
                    t *= &x.pow(k);
                }
            }
            acc += &t;
        }
        acc
    }

    pub fn eval_complex(&self, point: &[Complex], prec: u32) -> Complex {
        let mut acc = Complex::new(prec);
        for (e, c) in &self.terms {
            let mut t = c.to_complex(prec);
            for (x, &k) in point.iter().zip(e.iter()) {
                if k == 1 {
                    t *= x;
                } else if k > 1 {
                    t *= cpow(x, k);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Sum of `|c|·|x^e|`, the scale used for relative residuals.
    pub fn eval_abs(&self, point: &[Complex], prec: u32) -> rug::Float {
        let mut acc = rug::Float::new(prec);
        for (e, c) in &self.terms {
            let mut t = cabs(&c.to_complex(prec));
            for (x, &k) in point.iter().zip(e.iter()) {
                if k > 0 {
                    t *= cabs(x).pow(k);
                }
            }
            acc += t;
        }
        acc
    }

    /// Move variable `i` to position `map[i]` in a ring with `nvars` variables.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> MPoly {
        let mut p = MPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] += k;
            }
            p.add_term(e2, c);
        }
        p
    }

    /// Keep only the listed variables, in that order.  Other variables must be absent.
    pub fn project(&self, keep: &[usize]) -> MPoly {
        let mut p = MPoly::zero(keep.len());
        for (e, c) in &self.terms {
            debug_assert!((0..self.nvars).all(|v| keep.contains(&v) || e[v] == 0));
            let e2 = keep.iter().map(|&v| e[v]).collect();
            p.add_term(e2, c);
        }
        p
    }

    /// Componentwise minimum exponent.
    pub fn monomial_content(&self) -> Exp {
        let mut m: Option<Exp> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(m) => m.iter().zip(e).map(|(a, b)| (*a).min(*b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.nvars])
    }

    pub fn div_monomial(&self, m: &[u32]) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a - b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Strip the monomial content restricted to `vars`.
    pub fn strip_monomial(&self, vars: &[usize]) -> MPoly {
        let mut m = self.monomial_content();
        for (v, k) in m.iter_mut().enumerate() {
            if !vars.contains(&v) {
                *k = 0;
            }
        }
        self.div_monomial(&m)
    }

    /// Divide by the lexicographically leading coefficient.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().unwrap();
                self.scale(&inv)
            }
        }
    }

    /// Exact division; `None` if `q` does not divide `self`.
    pub fn exact_div(&self, q: &MPoly) -> Option<MPoly> {
        assert!(!q.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(MPoly::zero(self.nvars));
        }
        if let Some(c) = q.constant_value() {
            return Some(self.scale(&c.inv().unwrap()));
        }
        let (qe, qc) = q.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let qinv = qc.inv().unwrap();
        let mut r = self.clone();
        let mut quo = MPoly::zero(self.nvars);
        while let Some((re, rc)) = r.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&qe).any(|(a, b)| a < b) {
                return None;
            }
            let te: Exp = re.iter().zip(&qe).map(|(a, b)| a - b).collect();
            let tc = &rc * &qinv;
            for (e, c) in &q.terms {
                let e2: Exp = e.iter().zip(&te).map(|(a, b)| a + b).collect();
                r.add_term(e2, &-(c * &tc));
            }
            quo.add_term(te, &tc);
        }
        Some(quo)
    }

    /// Terms in descending graded-lexicographic order.
    pub fn terms_grlex_desc(&self) -> Vec<(&Exp, &GRat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        v
    }

    /// Print with the given variable names.
    pub fn to_string_with(&self, names: &[String]) -> String {
        super::parse::format_poly(self, names)
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c);
        }
        p
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), &-c);
        }
        p
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        let mut acc: BTreeMap<Exp, GRat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exp = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let t = c1 * c2;
                match acc.get_mut(&e) {
                    Some(v) => *v += &t,
                    None => {
                        acc.insert(e, t);
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        MPoly { nvars: self.nvars, terms: acc }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, o: &MPoly) -> MPoly {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> MPoly {
        MPoly::var(3, i)
    }

    #[test]
    fn arithmetic_and_division() {
        let a = &x(0) + &x(1);
        let b = &x(0) - &x(2).scale(&GRat::i());
        let p = &a * &b;
        assert_eq!(p.exact_div(&a).unwrap(), b);
        assert!(p.exact_div(&(&x(0) + &MPoly::one(3))).is_none());
    }

    #[test]
    fn substitution() {
        let p = &x(0).pow(2) - &x(1);
        let q = p.subst(0, &(&x(1) + &MPoly::one(3)));
        let expect = &(&x(1).pow(2) + &x(1)) + &MPoly::one(3);
        assert_eq!(q, expect);
        assert_eq!(p.subst_const(1, &GRat::from_int(4)).subst_const(0, &GRat::from_int(2)), MPoly::zero(3));
    }

    #[test]
    fn derivative_and_coeffs() {
        let p = &x(0).pow(3) * &x(1);
        assert_eq!(p.derivative(0), (&x(0).pow(2) * &x(1)).scale(&GRat::from_int(3)));
        let c = p.coeffs_in(0);
        assert_eq!(c.len(), 4);
        assert_eq!(c[3], x(1));
        assert_eq!(MPoly::from_coeffs_in(0, &c, 3), p);
    }
}

use rug::Complex;

use super::grat::GRat;
use super::mpoly::MPoly;

/// A polynomial in one distinguished variable with `MPoly` coefficients.
///
/// Coefficients live in the same ring as the original polynomial and do not
/// contain `var`.  No trailing zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    var: usize,
    nvars: usize,
    coeffs: Vec<MPoly>,
}

impl UPoly {
    pub fn from_mpoly(p: &MPoly, var: usize) -> Self {
        let mut u = UPoly { var, nvars: p.nvars(), coeffs: p.coeffs_in(var) };
        u.trim();
        u
    }

    pub fn from_coeffs(var: usize, nvars: usize, coeffs: Vec<MPoly>) -> Self {
        let mut u = UPoly { var, nvars, coeffs };
        u.trim();
        u
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> usize {
        self.var
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn to_mpoly(&self) -> MPoly {
        MPoly::from_coeffs_in(self.var, &self.coeffs, self.nvars)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> MPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(|| MPoly::zero(self.nvars))
    }

    pub fn lc(&self) -> MPoly {
        self.coeffs.last().cloned().unwrap_or_else(|| MPoly::zero(self.nvars))
    }

    pub fn derivative(&self) -> UPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&GRat::from_int(k as i64)))
            .collect();
        UPoly::from_coeffs(self.var, self.nvars, coeffs)
    }

    pub fn scale(&self, m: &MPoly) -> UPoly {
        UPoly::from_coeffs(self.var, self.nvars, self.coeffs.iter().map(|c| c * m).collect())
    }

    pub fn exact_div_coeffs(&self, m: &MPoly) -> Option<UPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.exact_div(m)?);
        }
        Some(UPoly::from_coeffs(self.var, self.nvars, out))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) · a mod b`.
    pub fn prem(&self, b: &UPoly) -> UPoly {
        assert!(!b.is_zero());
        let db = b.degree();
        if self.is_zero() || self.degree() < db {
            return self.clone();
        }
        let lcb = b.lc();
        let mut e = self.degree() - db + 1;
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= db {
            let t = r.lc();
            let shift = r.degree() - db;
            let mut next: Vec<MPoly> = r.coeffs.iter().map(|c| c * &lcb).collect();
            for (k, bc) in b.coeffs.iter().enumerate() {
                let prod = bc * &t;
                next[k + shift] = &next[k + shift] - &prod;
            }
            r = UPoly::from_coeffs(self.var, self.nvars, next);
            e -= 1;
        }
        if e > 0 {
            r = r.scale(&lcb.pow(e as u32));
        }
        r
    }
}

/// Dense univariate polynomial over ℚ(i), ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<GRat>,
}

impl UniPoly {
    pub fn new(coeffs: Vec<GRat>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: GRat) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn x() -> Self {
        UniPoly::new(vec![GRat::zero(), GRat::one()])
    }

    /// `p` must not contain variables other than `var`.
    pub fn from_mpoly(p: &MPoly, var: usize) -> Option<Self> {
        let mut coeffs = vec![GRat::zero(); p.degree_in(var) as usize + 1];
        for (e, c) in p.terms() {
            if e.iter().enumerate().any(|(v, &k)| v != var && k > 0) {
                return None;
            }
            coeffs[e[var] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn to_mpoly(&self, nvars: usize, var: usize) -> MPoly {
        let mut p = MPoly::zero(nvars);
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut e = vec![0; nvars];
            e[var] = k as u32;
            p.add_term(e, c);
        }
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[GRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> GRat {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &GRat) -> GRat {
        let mut acc = GRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_complex(&self, x: &Complex) -> Complex {
        let prec = x.prec().0;
        let mut acc = Complex::new(prec);
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c.to_complex(prec);
        }
        acc
    }

    pub fn to_complex(&self, prec: u32) -> Vec<Complex> {
        self.coeffs.iter().map(|c| c.to_complex(prec)).collect()
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_int(k as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().unwrap();
        UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![GRat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = vec![GRat::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k] += c;
        }
        for (k, c) in o.coeffs.iter().enumerate() {
            out[k] -= c;
        }
        UniPoly::new(out)
    }

    pub fn divrem(&self, b: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!b.is_zero());
        if self.degree() < b.degree() || self.is_zero() {
            return (UniPoly::zero(), self.clone());
        }
        let inv = b.lc().inv().unwrap();
        let db = b.degree();
        let mut r = self.coeffs.clone();
        let mut q = vec![GRat::zero(); self.degree() - db + 1];
        for k in (0..q.len()).rev() {
            let t = &r[k + db] * &inv;
            if !t.is_zero() {
                for (j, bc) in b.coeffs.iter().enumerate() {
                    r[k + j] -= &(bc * &t);
                }
            }
            q[k] = t;
        }
        r.truncate(db);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Yun decomposition: `f = lc · Π g_m^m` with `g_m` squarefree and coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = vec![];
        if self.degree() == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.divrem(&a0).0;
        let mut c = fp.divrem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut m = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.clone(), m));
            }
            b = b.divrem(&a).0;
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            m += 1;
        }
        out
    }

    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&k| GRat::from_int(k)).collect())
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)(x+2)^2(x-3)^3
        let f = up(&[-1, 1]).mul(&up(&[2, 1]).mul(&up(&[2, 1]))).mul(&up(&[-3, 1]).mul(&up(&[-3, 1])).mul(&up(&[-3, 1])));
        let d = f.squarefree_decomposition();
        assert_eq!(d, vec![(up(&[-1, 1]), 1), (up(&[2, 1]), 2), (up(&[-3, 1]), 3)]);
        assert_eq!(f.squarefree_part().degree(), 3);
    }

    #[test]
    fn prem_matches_field_remainder() {
        let a = MPoly::from_terms(1, [(vec![3], GRat::from_int(2)), (vec![0], GRat::one())]);
        let b = MPoly::from_terms(1, [(vec![1], GRat::from_int(3)), (vec![0], GRat::from_int(-1))]);
        let r = UPoly::from_mpoly(&a, 0).prem(&UPoly::from_mpoly(&b, 0));
        // 27·(2x^3+1) mod (3x-1) = 27·(2/27+1) = 29
        assert_eq!(r.to_mpoly(), MPoly::constant(1, GRat::from_int(29)));
    }
}

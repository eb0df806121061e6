use super::mpoly::MPoly;
use super::upoly::{UPoly, UniPoly};

fn main_var(a: &MPoly, b: &MPoly) -> Option<usize> {
    (0..a.nvars()).rev().find(|&v| a.contains_var(v) || b.contains_var(v))
}

/// Greatest common divisor over ℚ(i), normalized to be monic.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    let n = a.nvars();
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one(n);
    }
    let used: Vec<usize> = (0..n).filter(|&v| a.contains_var(v) || b.contains_var(v)).collect();
    if used.len() == 1 {
        let v = used[0];
        let ua = UniPoly::from_mpoly(a, v).unwrap();
        let ub = UniPoly::from_mpoly(b, v).unwrap();
        return ua.gcd(&ub).to_mpoly(n, v);
    }
    let var = main_var(a, b).unwrap();
    if !a.contains_var(var) {
        return gcd(a, &content(b, var));
    }
    if !b.contains_var(var) {
        return gcd(&content(a, var), b);
    }
    let ca = content(a, var);
    let cb = content(b, var);
    let pa = UPoly::from_mpoly(&a.exact_div(&ca).unwrap(), var);
    let pb = UPoly::from_mpoly(&b.exact_div(&cb).unwrap(), var);
    let c = gcd(&ca, &cb);
    if coprime_at_a_point(&pa, &pb, var, &used) {
        return c.monic();
    }
    let (mut p, mut q) = if pa.degree() >= pb.degree() { (pa, pb) } else { (pb, pa) };
    loop {
        let r = p.prem(&q);
        if r.is_zero() {
            break;
        }
        if r.degree() == 0 {
            return c;
        }
        p = q;
        q = primitive(&r);
    }
    let g = primitive(&q).to_mpoly();
    (&c * &g).monic()
}

/// Primitive `a`, `b` are coprime if some specialization of the other variables keeps
/// both leading coefficients and leaves coprime univariate images. Cuts off the PRS,
/// whose coefficients swell badly, in the common case.
fn coprime_at_a_point(a: &UPoly, b: &UPoly, var: usize, used: &[usize]) -> bool {
    const PICKS: [i64; 9] = [3, -2, 5, 7, -11, 13, 4, -17, 19];
    for attempt in 0..3 {
        let pt: Vec<(usize, super::grat::GRat)> = used
            .iter()
            .filter(|&&v| v != var)
            .enumerate()
            .map(|(k, &v)| (v, super::grat::GRat::from_int(PICKS[(k + 3 * attempt) % PICKS.len()] + attempt as i64)))
            .collect();
        if a.lc().subst_consts(&pt).is_zero() || b.lc().subst_consts(&pt).is_zero() {
            continue;
        }
        let ua = UniPoly::from_mpoly(&a.to_mpoly().subst_consts(&pt), var).unwrap();
        let ub = UniPoly::from_mpoly(&b.to_mpoly().subst_consts(&pt), var).unwrap();
        if ua.gcd(&ub).degree() == 0 {
            return true;
        }
    }
    false
}

fn primitive(p: &UPoly) -> UPoly {
    let mut cont = MPoly::zero(p.nvars());
    for c in p.coeffs().iter().filter(|c| !c.is_zero()) {
        cont = gcd(&cont, c);
        if cont.is_constant() {
            break;
        }
    }
    if cont.is_constant() {
        let lc = p.lc();
        return match lc.leading() {
            Some((_, k)) => {
                let inv = super::grat::GRat::inv(k).unwrap();
                p.scale(&MPoly::constant(p.nvars(), inv))
            }
            None => p.clone(),
        };
    }
    p.exact_div_coeffs(&cont).unwrap()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub fn content(p: &MPoly, var: usize) -> MPoly {
    let mut g = MPoly::zero(p.nvars());
    for c in p.coeffs_in(var) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() {
            return MPoly::one(p.nvars());
        }
    }
    g
}

pub fn primitive_part(p: &MPoly, var: usize) -> MPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content(p, var);
    p.exact_div(&c).unwrap()
}

/// Squarefree part, one variable at a time.
pub fn squarefree_part(p: &MPoly) -> MPoly {
    if p.is_constant() {
        return if p.is_zero() { p.clone() } else { MPoly::one(p.nvars()) };
    }
    let v = (0..p.nvars()).find(|&v| p.contains_var(v)).unwrap();
    let c = content(p, v);
    let pp = p.exact_div(&c).unwrap();
    let g = gcd(&pp, &pp.derivative(v));
    let sq = if g.is_constant() { pp } else { pp.exact_div(&g).unwrap() };
    (&sq * &squarefree_part(&c)).monic()
}

pub fn is_squarefree(p: &MPoly) -> bool {
    squarefree_part(p).total_degree() == p.total_degree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;

    fn names() -> Vec<String> {
        ["x", "y", "z"].iter().map(|s| s.to_string()).collect()
    }

    fn p(s: &str) -> MPoly {
        parse_poly(s, &names()).unwrap()
    }

    #[test]
    fn multivariate_gcd() {
        let a = p("(x+y)*(x-z)^2");
        let b = p("(x+y)*(y+i*z)");
        assert_eq!(gcd(&a, &b), p("x+y").monic());
        assert_eq!(gcd(&p("x^2-y^2"), &p("x^2+2*x*y+y^2")), p("x+y").monic());
        assert!(gcd(&p("x+1"), &p("y+1")).is_constant());
        // vanishing low coefficients in the main variable
        let a = p("y^3*(x^2*y^2 + x*y + 3*x^2)*(x*y - 2)");
        let b = p("y^4*(x^3*y - x + 1)*(x*y - 2)");
        assert_eq!(gcd(&a, &b), p("y^3*(x*y - 2)").monic());
    }

    #[test]
    fn squarefree() {
        let a = p("(x+y)^3*(x-z)^2*z");
        assert_eq!(squarefree_part(&a), p("(x+y)*(x-z)*z").monic());
        assert!(!is_squarefree(&p("(x^2+y^2)^2")));
        assert!(is_squarefree(&p("x^2+y^2+z^2-1")));
    }
}

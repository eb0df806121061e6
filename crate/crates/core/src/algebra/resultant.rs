use super::mpoly::MPoly;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Resultant of `f` and `g` in their common distinguished variable.
///
/// Subresultant PRS with exact divisions in the coefficient ring.
pub fn resultant(f: &UPoly, g: &UPoly) -> Result<MPoly> {
    assert_eq!(f.var(), g.var());
    let n = f.nvars();
    if f.is_zero() || g.is_zero() {
        return Ok(MPoly::zero(n));
    }
    if f.degree() == 0 && g.degree() == 0 {
        return Err(Error::NothingToEliminate);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut negate = false;
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            negate = true;
        }
    }
    if b.degree() == 0 {
        let r = b.lc().pow(a.degree() as u32);
        return Ok(if negate { -&r } else { r });
    }
    let mut gg = MPoly::one(n);
    let mut h = MPoly::one(n);
    loop {
        let (da, db) = (a.degree(), b.degree());
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.prem(&b);
        a = b;
        if r.is_zero() {
            return Ok(MPoly::zero(n));
        }
        let den = &gg * &h.pow(delta);
        b = r.exact_div_coeffs(&den).expect("subresultant division");
        gg = a.lc();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            _ => gg.pow(delta).exact_div(&h.pow(delta - 1)).expect("subresultant h update"),
        };
        if b.degree() == 0 {
            break;
        }
    }
    let da = a.degree() as u32;
    let num = b.lc().pow(da);
    let r = if da <= 1 {
        num
    } else {
        num.exact_div(&h.pow(da - 1)).expect("subresultant final division")
    };
    Ok(if negate { -&r } else { r })
}

/// Resultant with respect to `var` of two polynomials in the same ring.
pub fn resultant_in(f: &MPoly, g: &MPoly, var: usize) -> Result<MPoly> {
    resultant(&UPoly::from_mpoly(f, var), &UPoly::from_mpoly(g, var))
}

/// `(-1)^(d(d-1)/2) · Res(f, f') / lc(f)`.
pub fn discriminant(f: &UPoly) -> Result<MPoly> {
    let d = f.degree();
    if d == 0 {
        return Err(Error::NothingToEliminate);
    }
    if d == 1 {
        return Ok(MPoly::one(f.nvars()));
    }
    let r = resultant(f, &f.derivative())?;
    let q = r.exact_div(&f.lc()).expect("discriminant division");
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -&q } else { q })
}

pub fn discriminant_in(f: &MPoly, var: usize) -> Result<MPoly> {
    discriminant(&UPoly::from_mpoly(f, var))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn small_resultants() {
        let n = names(&["x", "u"]);
        let f = parse_poly("x-2", &n).unwrap();
        let g = parse_poly("x^2+1", &n).unwrap();
        assert_eq!(resultant_in(&f, &g, 0).unwrap(), parse_poly("5", &n).unwrap());
        let f = parse_poly("x^2-u", &n).unwrap();
        let g = parse_poly("2*x", &n).unwrap();
        assert_eq!(resultant_in(&f, &g, 0).unwrap(), parse_poly("-4*u", &n).unwrap());
    }

    #[test]
    fn small_discriminants() {
        let n = names(&["c", "u"]);
        let f = parse_poly("c^2-u", &n).unwrap();
        assert_eq!(discriminant_in(&f, 0).unwrap(), parse_poly("4*u", &n).unwrap());
        let f = parse_poly("c^3+u*c+1", &n).unwrap();
        assert_eq!(discriminant_in(&f, 0).unwrap(), parse_poly("-4*u^3-27", &n).unwrap());
    }

    #[test]
    fn constant_pair_is_an_error() {
        let n = names(&["x"]);
        let a = parse_poly("3", &n).unwrap();
        assert!(matches!(resultant_in(&a, &a, 0), Err(Error::NothingToEliminate)));
    }
}

mod common;

use common::{load, Lcg};
use holofourier::algebra::{parse_poly, GRat, MPoly};
use holofourier::puiseux::{newton_puiseux, specialize_along_slice, PuiseuxSeries};
use holofourier::{Error, Settings};
use proptest::prelude::*;
use rug::{Complex, Float, Rational};

const PREC: u32 = 256;

fn cu() -> Vec<String> {
    vec!["c".to_string(), "u".to_string()]
}

fn slice_poly(name: &str, comp: usize, label: &str) -> MPoly {
    let f = load(name);
    let s = f.slices.iter().find(|s| s.label == label).unwrap();
    specialize_along_slice(&f.descriptor.components[comp], f.descriptor.dim, s, &Settings::default()).unwrap().poly
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

/// binom(1/2, k) as an exact rational.
fn half_binomial(k: u32) -> Rational {
    let mut acc = Rational::from(1);
    for j in 0..k {
        acc *= rat(1, 2) - Rational::from(j);
        acc /= Rational::from(j + 1);
    }
    acc
}

fn abs(z: &Complex) -> f64 {
    Float::with_val(64, z.abs_ref()).to_f64()
}

fn at(r: f64) -> Complex {
    // off the real axis so no branch cut or real coincidence helps
    let th = 0.37f64;
    Complex::with_val(PREC, (r * th.cos(), r * th.sin()))
}

/// Slope of `log|F(u, φ(u))|` minus slope of `log|∂_c F(u, φ(u))|` between two radii.
/// For a simple branch truncated below `trunc` this is at least `trunc`.
fn residual_gain(f: &MPoly, b: &PuiseuxSeries) -> Option<f64> {
    let fc = f.derivative(0);
    let (r1, r2) = (1e-4, 1e-6);
    let mut logs = vec![];
    for r in [r1, r2] {
        let u = at(r);
        let c = b.eval(&u);
        let pt = [c, u];
        let res = abs(&f.eval_complex(&pt, PREC));
        let der = abs(&fc.eval_complex(&pt, PREC));
        let scale = f.eval_abs(&pt, PREC).to_f64();
        // at the working precision the series is an exact root
        if res < 1e-32 * scale {
            return None;
        }
        logs.push((res.ln(), der.ln()));
    }
    let dl = r1.ln() - r2.ln();
    Some(((logs[0].0 - logs[1].0) - (logs[0].1 - logs[1].1)) / dl)
}

fn check_residuals(f: &MPoly, order: Option<&Rational>) {
    for (b, m) in newton_puiseux(f, order, 128).unwrap() {
        assert_eq!(m, 1);
        for conj in b.conjugates() {
            let trunc = b.trunc.to_f64();
            match residual_gain(f, &conj) {
                // the series terminated and is an exact root
                None => assert!(b.finite || b.terms.iter().all(|t| t.exact.is_some()), "{}", b),
                Some(s) => assert!(s > trunc - 0.05, "slope {} below truncation {} for {}", s, trunc, b),
            }
        }
    }
}

#[test]
fn quadric_slice_polynomial_and_binomial_branch() {
    for name in ["quadric2", "quadric3"] {
        let f = slice_poly(name, 0, "s1");
        assert_eq!(f, parse_poly("c^2 - u*(2 + u)", &cu()).unwrap(), "{}", name);
    }
    let f = slice_poly("quadric2", 0, "s1");
    let order = rat(11, 2);
    let br = newton_puiseux(&f, Some(&order), 128).unwrap();
    assert_eq!(br.len(), 1);
    let (b, m) = &br[0];
    assert_eq!((b.ram, *m), (2, 1));
    assert_eq!(b.terms.len(), 5);
    // sqrt(u(2+u)) = sum binom(1/2, k) 2^(1/2-k) u^(k+1/2)
    let sqrt2 = Float::with_val(PREC, 2).sqrt();
    for (k, t) in b.terms.iter().enumerate() {
        let k = k as u32;
        assert_eq!(t.exp, Rational::from(k) + rat(1, 2));
        let expect = Float::with_val(PREC, &sqrt2 * half_binomial(k)) / Float::with_val(PREC, Float::u_pow_u(2, k));
        let got = t.coeff.value();
        assert!((Float::with_val(PREC, got.real() - &expect)).abs().to_f64() < 1e-30, "term {}", k);
        assert!(got.imag().to_f64().abs() < 1e-30);
    }
    assert_eq!(b.pole_part().order, 0);
    // the other sign is the conjugate
    let lead = b.conjugate(1).terms[0].coeff.value().clone();
    assert!((lead.real().to_f64() + 2f64.sqrt()).abs() < 1e-14);
}

#[test]
fn a23_branch_is_an_exact_double_pole() {
    let f = slice_poly("a23", 1, "s1");
    assert_eq!(f, parse_poly("c*u^2 - 4/27", &cu()).unwrap());
    let br = newton_puiseux(&f, None, 128).unwrap();
    assert_eq!(br.len(), 1);
    let b = &br[0].0;
    assert_eq!(b.ram, 1);
    assert_eq!(b.terms.len(), 1);
    assert_eq!(b.terms[0].exp, -2);
    assert_eq!(b.terms[0].exact, Some(GRat::from_ratio(4, 27)));
    assert!(b.terms[0].coeff.contains(&GRat::from_ratio(4, 27), 1e-20));
    assert_eq!(b.pole_part().order, 2);
}

#[test]
fn paraboloid_branch_has_a_simple_pole() {
    let f = slice_poly("paraboloid3", 0, "s1");
    let br = newton_puiseux(&f, Some(&Rational::from(2)), 128).unwrap();
    assert_eq!(br.len(), 1);
    let b = &br[0].0;
    let got: Vec<(Rational, Option<GRat>)> = b.terms.iter().map(|t| (t.exp.clone(), t.exact.clone())).collect();
    // u + (a1^2 + a2^2)/(4u) with a = (1, 1)
    assert_eq!(got, vec![(Rational::from(-1), Some(GRat::from_ratio(1, 2))), (Rational::from(1), Some(GRat::one()))]);
    assert_eq!(b.pole_part().order, 1);
}

#[test]
fn torus_cycle_has_seven_conjugate_leading_coefficients() {
    let f = slice_poly("torus2", 0, "s3");
    let br = newton_puiseux(&f, None, 128).unwrap();
    assert_eq!(br.len(), 1);
    let b = &br[0].0;
    assert_eq!(b.ram, 7);
    assert_eq!(b.leading_exponent(), Some(&rat(3, 7)));
    assert_eq!(b.pole_part().order, 0);
    // (7 zeta)^7 = 7^7 / 432
    let target = 823543.0 / 432.0;
    let leads: Vec<Complex> = b.conjugates().iter().map(|s| s.leading_coefficient().unwrap().value().clone()).collect();
    for z in &leads {
        let p = Complex::with_val(PREC, rug::ops::Pow::pow(z, 7u32));
        assert!((p.real().to_f64() - target).abs() < 1e-9 * target && p.imag().to_f64().abs() < 1e-9 * target);
    }
    for i in 0..7 {
        for j in 0..i {
            assert!(abs(&Complex::with_val(PREC, &leads[i] - &leads[j])) > 0.1);
        }
    }
}

#[test]
fn branches_satisfy_their_equation_to_truncation_order() {
    for (name, comp, label) in [("quadric2", 0, "s1"), ("quadric3", 0, "s1"), ("a23", 1, "s1"), ("paraboloid3", 0, "s1"), ("torus2", 0, "s3")] {
        let f = slice_poly(name, comp, label);
        check_residuals(&f, None);
        check_residuals(&f, Some(&Rational::from(4)));
    }
    let f = parse_poly("(c^2 - u)*(c^2 - u - u^3)*(c*u - 1 - u^2)", &cu()).unwrap();
    check_residuals(&f, Some(&Rational::from(5)));
}

#[test]
fn truncation_below_leading_exponent_is_refused() {
    let f = slice_poly("a23", 1, "s1");
    let e = newton_puiseux(&f, Some(&Rational::from(-3)), 128).unwrap_err();
    assert!(matches!(e, Error::TruncationBelowLeading { .. }), "{e:?}");
}

/// Laurent polynomial `p(u) / u^k` as exponent/coefficient pairs.
fn laurent(p: &[i64], k: i64) -> Vec<(Rational, GRat)> {
    p.iter().enumerate().filter(|(_, &c)| c != 0).map(|(j, &c)| (Rational::from(j as i64 - k), GRat::from_int(c))).collect()
}

fn factor(p: &[i64], k: u32) -> MPoly {
    // u^k c - p(u)
    let mut terms = vec![(vec![1, k], GRat::one())];
    for (j, &c) in p.iter().enumerate() {
        terms.push((vec![0, j as u32], GRat::from_int(-c)));
    }
    MPoly::from_terms(2, terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn expansions_of_a_product_recover_each_factor(seed in 0u64..10_000) {
        let mut g = Lcg(seed);
        let mut a: Vec<i64> = (0..3).map(|_| g.range(-4, 4)).collect();
        let mut b: Vec<i64> = (0..3).map(|_| g.range(-4, 4)).collect();
        a[0] = g.range(1, 5);
        b[0] = -g.range(1, 5);
        let (ka, kb) = (g.range(0, 2), g.range(0, 2));
        let f = &factor(&a, ka as u32) * &factor(&b, kb as u32);
        let order = Rational::from(3);
        let br = newton_puiseux(&f, Some(&order), 128).unwrap();
        let expected = [laurent(&a, ka), laurent(&b, kb)];
        if expected[0] == expected[1] {
            prop_assert_eq!(br.len(), 1);
            prop_assert_eq!(br[0].1, 2);
        } else {
            prop_assert_eq!(br.len(), 2);
        }
        for e in &expected {
            let want: Vec<(Rational, GRat)> = e.iter().filter(|(x, _)| *x < order).cloned().collect();
            let hit = br.iter().any(|(s, _)| {
                s.ram == 1 && s.terms.len() == want.len()
                    && s.terms.iter().zip(&want).all(|(t, (x, c))| &t.exp == x && t.coeff.contains(c, 1e-25))
            });
            prop_assert!(hit, "missing {:?} in {:?}", e, br.iter().map(|b| b.0.to_string()).collect::<Vec<_>>());
        }
    }
}

mod common;

use common::{analysis, gaussian, ints, Lcg, EXAMPLES};
use holofourier::algebra::{parse_poly, GRat, MPoly};
use holofourier::critical::{Analysis, CriticalFiber};
use holofourier::model::{ComponentKind, DModuleDescriptor, LagrangianComponent};
use holofourier::{Error, Settings};
use num_complex::Complex64 as C;
use proptest::prelude::*;

fn cz(q: &GRat) -> C {
    let (re, im) = q.to_f64_pair();
    C::new(re, im)
}

fn cvec(w: &[GRat]) -> Vec<C> {
    w.iter().map(cz).collect()
}

fn approx(a: &holofourier::algebra::CApprox) -> C {
    C::new(a.re(), a.im())
}

/// Every oracle point matched by exactly one fiber point, within `tol` relative.
fn assert_same_points(fib: &CriticalFiber, oracle: &[Vec<C>], tol: f64) {
    assert_eq!(fib.points.len(), oracle.len(), "fiber size");
    for o in oracle {
        let hits = fib
            .points
            .iter()
            .filter(|p| p.alpha.iter().zip(o).all(|(a, b)| (approx(a) - b).norm() <= tol * b.norm().max(1.0)))
            .count();
        assert_eq!(hits, 1, "oracle point {:?}", o);
    }
}

/// Directions avoiding the values where the examples ramify.
fn random_omega(an: &Analysis, rng: &mut Lcg) -> Vec<GRat> {
    let n = an.descriptor().dim;
    let delta = an.discriminant_locus().unwrap();
    loop {
        let w = rng.direction(n);
        if !delta.eval(&w).is_zero() {
            return w;
        }
    }
}

#[test]
fn critical_value_polynomials_of_the_examples() {
    let cases = [
        ("quadric2", 0, "c^2 - w1^2 - w2^2"),
        ("quadric3", 0, "c^2 - w1^2 - w2^2 - w3^2"),
        ("paraboloid3", 0, "c*w3 - 1/4*w1^2 - 1/4*w2^2 - w3^2"),
        ("a23", 1, "c*w2^2 - 4/27*w1^3"),
        ("torus2", 0, "c^7 - 823543/432*w1^2*w2^2*w3^3"),
    ];
    for (name, i, text) in cases {
        let phi = analysis(name).symbolic(i).unwrap();
        let expect = parse_poly(text, &phi.names).unwrap();
        assert_eq!(phi.poly.monic(), expect.monic(), "{}", name);
    }
}

#[test]
fn covering_degrees_and_volume_cross_check() {
    let expect = [("quadric2", 2, None), ("quadric3", 2, None), ("paraboloid3", 1, None), ("a23", 3, Some(3)), ("torus2", 7, Some(7))];
    for (name, rank, vol) in expect {
        let d = analysis(name).covering_degree().unwrap();
        assert_eq!(d.rank, rank, "{}", name);
        assert_eq!(d.volume, vol, "{}", name);
    }
}

#[test]
fn discriminants_of_the_examples() {
    let expect = [
        ("quadric2", "w1^2 + w2^2"),
        ("quadric3", "w1^2 + w2^2 + w3^2"),
        ("paraboloid3", "w3"),
        ("a23", "w1*w2"),
        ("torus2", "w1*w2*w3"),
    ];
    for (name, text) in expect {
        let d = analysis(name).discriminant_locus().unwrap();
        let e = parse_poly(text, &d.names).unwrap();
        assert_eq!(d.delta.monic(), e.monic(), "{}", name);
    }
}

#[test]
fn quadric_fiber_matches_the_normalized_direction() {
    // critical points of <z, w> on the sphere are ±w/sqrt(w·w)
    let an = analysis("quadric3");
    let mut rng = Lcg(11);
    for _ in 0..5 {
        let w = random_omega(&an, &mut rng);
        let wc = cvec(&w);
        let r = wc.iter().map(|x| x * x).sum::<C>().sqrt();
        let p: Vec<C> = wc.iter().map(|x| x / r).collect();
        let m: Vec<C> = p.iter().map(|x| -x).collect();
        assert_same_points(&an.fiber(&w).unwrap(), &[p, m], 1e-12);
    }
}

#[test]
fn paraboloid_fiber_matches_the_closed_form() {
    // grad f = (2 z1, 2 z2, 1) parallel to w
    let an = analysis("paraboloid3");
    let mut rng = Lcg(12);
    for _ in 0..5 {
        let w = random_omega(&an, &mut rng);
        let wc = cvec(&w);
        let z1 = wc[0] / (2.0 * wc[2]);
        let z2 = wc[1] / (2.0 * wc[2]);
        let z3 = 1.0 - z1 * z1 - z2 * z2;
        let fib = an.fiber(&w).unwrap();
        assert_same_points(&fib, &[vec![z1, z2, z3]], 1e-12);
        let c = wc[2] + (wc[0] * wc[0] + wc[1] * wc[1]) / (4.0 * wc[2]);
        assert!((approx(&fib.points[0].c) - c).norm() < 1e-12 * c.norm().max(1.0));
    }
}

#[test]
fn a23_fiber_matches_the_closed_form() {
    // s = -2 w1 / (3 w2) on the orbit (s^2, s^3); the doubled point is the origin
    let an = analysis("a23");
    let mut rng = Lcg(13);
    for _ in 0..5 {
        let w = random_omega(&an, &mut rng);
        let wc = cvec(&w);
        let s = -2.0 * wc[0] / (3.0 * wc[1]);
        let fib = an.fiber(&w).unwrap();
        assert_same_points(&fib, &[vec![C::new(0.0, 0.0); 2], vec![s * s, s * s * s]], 1e-12);
        let c = wc[0].powi(3) * 4.0 / (27.0 * wc[1] * wc[1]);
        let torus = fib.points.iter().find(|p| p.component == 1).unwrap();
        let exact = GRat::from_ratio(4, 27) * w[0].pow(3) / w[1].pow(2);
        assert_eq!(torus.c_exact.as_ref(), Some(&exact));
        assert!((approx(&torus.c) - c).norm() < 1e-12 * c.norm().max(1.0));
        assert_eq!(fib.points.iter().find(|p| p.component == 0).unwrap().mult, 2);
    }
}

#[test]
fn torus2_fiber_satisfies_the_orbit_relations() {
    // on the orbit alpha1^2 alpha2^2 alpha3^3 = 1; criticality is A·(w ∘ alpha) = 0
    let an = analysis("torus2");
    let a = [[2.0, 1.0, -2.0], [-1.0, 1.0, 0.0]];
    let mut rng = Lcg(14);
    for _ in 0..3 {
        let w = random_omega(&an, &mut rng);
        let wc = cvec(&w);
        let fib = an.fiber(&w).unwrap();
        assert_eq!(fib.degree(), 7);
        for p in &fib.points {
            let al: Vec<C> = p.alpha.iter().map(approx).collect();
            let scale = al.iter().map(|x| x.norm()).fold(1.0, f64::max);
            assert!((al[0].powi(2) * al[1].powi(2) * al[2].powi(3) - 1.0).norm() < 1e-12 * scale.powi(7));
            for row in a {
                let s: C = (0..3).map(|j| row[j] * wc[j] * al[j]).sum();
                assert!(s.norm() < 1e-12 * scale * 50.0, "criticality residual {}", s.norm());
            }
            let c: C = (0..3).map(|j| wc[j] * al[j]).sum();
            assert!((approx(&p.c) - c).norm() < 1e-12 * c.norm().max(1.0));
        }
    }
}

/// `(exponents, coefficient)` pairs, converted once.
type Dense = Vec<(Vec<u32>, C)>;

fn dense(p: &MPoly) -> Dense {
    p.terms().map(|(e, c)| (e.clone(), cz(c))).collect()
}

fn eval(p: &Dense, z: &[C]) -> C {
    p.iter()
        .map(|(e, c)| {
            let mut t = *c;
            for (k, &d) in e.iter().enumerate() {
                t *= z[k].powu(d);
            }
            t
        })
        .sum()
}

/// Affine solutions of `f = 0, w2 f_1 - w1 f_2 = 0` by Newton from many seeded starts.
fn multistart_lagrange(f: &MPoly, w: &[GRat], rng: &mut Lcg) -> Vec<Vec<C>> {
    let (f1, f2) = (f.derivative(0), f.derivative(1));
    let g = &f1.scale(&w[1]) - &f2.scale(&w[0]);
    let (g1, g2) = (dense(&g.derivative(0)), dense(&g.derivative(1)));
    let (f, g, f1, f2) = (dense(f), dense(&g), dense(&f1), dense(&f2));
    let mut found: Vec<Vec<C>> = vec![];
    for _ in 0..800 {
        let r = 0.25 * (1 << rng.range(0, 5)) as f64;
        let mut z = vec![
            C::new(rng.range(-1000, 1000) as f64, rng.range(-1000, 1000) as f64) * (r / 1000.0),
            C::new(rng.range(-1000, 1000) as f64, rng.range(-1000, 1000) as f64) * (r / 1000.0),
        ];
        let mut ok = false;
        for _ in 0..60 {
            let (a, b) = (eval(&f, &z), eval(&g, &z));
            let (j11, j12, j21, j22) = (eval(&f1, &z), eval(&f2, &z), eval(&g1, &z), eval(&g2, &z));
            let det = j11 * j22 - j12 * j21;
            if det.norm() < 1e-300 || !det.is_finite() {
                break;
            }
            let d0 = (j22 * a - j12 * b) / det;
            let d1 = (j11 * b - j21 * a) / det;
            z[0] -= d0;
            z[1] -= d1;
            if d0.norm() + d1.norm() < 1e-14 * (1.0 + z[0].norm() + z[1].norm()) {
                ok = true;
                break;
            }
        }
        if ok && z.iter().all(|x| x.is_finite()) && !found.iter().any(|y| (y[0] - z[0]).norm() + (y[1] - z[1]).norm() < 1e-8) {
            found.push(z);
        }
    }
    found
}

#[test]
fn plane_curve_fibers_agree_with_multistart_newton() {
    let names: Vec<String> = vec!["z1".into(), "z2".into()];
    let curves = ["z1^2 + 2*z2^2 - 3*z1*z2 + z1 - 5", "z2^2 - z1^3 + 2*z1 - 1", "z1^3 + z2^3 - 3*z1*z2 + z2 - 2", "z1*z2^2 + z1^2 - z2 + 3"];
    let mut rng = Lcg(15);
    for text in curves {
        let f = parse_poly(text, &names).unwrap();
        let desc = DModuleDescriptor::new(2, vec![LagrangianComponent::new(ComponentKind::ConormalHypersurface { f: f.clone() }, 1)]);
        let an = Analysis::new(&desc, Settings::default());
        let total = an.covering_degree().unwrap().total;
        let w = random_omega(&an, &mut rng);
        let fib = an.fiber(&w).unwrap();
        assert_eq!(fib.degree(), total, "{}", text);
        let oracle = multistart_lagrange(&f, &w, &mut rng);
        assert_same_points(&fib, &oracle, 1e-9);
    }
}

#[test]
fn fiber_outside_omega_is_refused() {
    for (name, w) in [("a23", ints(&[0, 1])), ("a23", ints(&[3, 0])), ("paraboloid3", ints(&[1, 2, 0])), ("torus2", ints(&[1, 0, 2]))] {
        let an = analysis(name);
        assert!(!an.omega(&w).unwrap().member);
        let err = an.fiber(&w).unwrap_err();
        assert!(matches!(err, Error::NotInOmega(_)), "{:?}", err);
        assert_eq!(err.exit_code(), 3);
    }
    let q = analysis("quadric3");
    let iso = vec![GRat::from_int(3), GRat::from_int(4), gaussian(0, 5, 1)];
    assert_eq!(q.fiber(&iso).unwrap_err().exit_code(), 3);
}

#[test]
fn zero_direction_is_not_in_omega() {
    for name in EXAMPLES {
        let an = analysis(name);
        let v = an.omega(&vec![GRat::zero(); an.descriptor().dim]).unwrap();
        assert!(!v.member, "{}", name);
    }
}

/// Points on the discriminant, one family per example.
fn on_delta(name: &str, rng: &mut Lcg) -> Vec<GRat> {
    let mut x = || loop {
        let q = rng.grat();
        if !q.is_zero() {
            return q;
        }
    };
    match name {
        "quadric2" => {
            let a = x();
            vec![a.clone(), &a * &GRat::i()]
        }
        "quadric3" => {
            let a = x();
            vec![a.mul_int(3), a.mul_int(4), &a.mul_int(5) * &GRat::i()]
        }
        "paraboloid3" => vec![x(), x(), GRat::zero()],
        "a23" => {
            let mut v = vec![x(), x()];
            let k = (x().re().numer().to_i64().unwrap_or(0).unsigned_abs() % 2) as usize;
            v[k] = GRat::zero();
            v
        }
        "torus2" => {
            let mut v = vec![x(), x(), x()];
            let k = (x().re().numer().to_i64().unwrap_or(0).unsigned_abs() % 3) as usize;
            v[k] = GRat::zero();
            v
        }
        _ => unreachable!(),
    }
}

#[test]
fn omega_is_the_complement_of_the_discriminant() {
    let mut rng = Lcg(16);
    for name in EXAMPLES {
        let an = analysis(name);
        let delta = an.discriminant_locus().unwrap();
        for _ in 0..10 {
            let w = random_omega(&an, &mut rng);
            assert!(an.omega(&w).unwrap().member, "{} at {:?}", name, w);
            let z = on_delta(name, &mut rng);
            assert!(delta.eval(&z).is_zero());
            assert!(!an.omega(&z).unwrap().member, "{} at {:?}", name, z);
        }
    }
}

#[test]
fn profile_multiplicities_sum_to_the_rank() {
    let mut rng = Lcg(17);
    for name in EXAMPLES {
        let an = analysis(name);
        let rank = an.covering_degree().unwrap().rank as u32;
        for _ in 0..20 {
            let w = random_omega(&an, &mut rng);
            let total: u32 = an.stalk_profile(&w).unwrap().iter().map(|j| j.mult).sum();
            assert_eq!(total, rank, "{}", name);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn fibers_are_conic(re in -30i64..=30, im in -30i64..=30, den in 1i64..=7, idx in 0usize..5) {
        let lambda = gaussian(re, im, den);
        prop_assume!(!lambda.is_zero());
        let name = EXAMPLES[idx];
        let an = analysis(name);
        let mut rng = Lcg(18 + idx as u64);
        let w = random_omega(&an, &mut rng);
        let lw: Vec<GRat> = w.iter().map(|x| x * &lambda).collect();
        let (a, b) = (an.fiber(&w).unwrap(), an.fiber(&lw).unwrap());
        prop_assert_eq!(a.points.len(), b.points.len());
        let l = cz(&lambda);
        for p in &a.points {
            let hit = b.points.iter().find(|q| {
                p.alpha.iter().zip(&q.alpha).all(|(x, y)| (approx(x) - approx(y)).norm() <= 1e-9 * approx(x).norm().max(1.0))
            });
            prop_assert!(hit.is_some(), "{}: point lost under scaling", name);
            let q = hit.unwrap();
            let want = approx(&p.c) * l;
            prop_assert!((approx(&q.c) - want).norm() <= 1e-9 * want.norm().max(1.0));
            prop_assert_eq!(p.mult, q.mult);
        }
    }

    #[test]
    fn critical_value_polynomials_are_homogeneous(re in -9i64..=9, im in -9i64..=9, idx in 0usize..5) {
        let lambda = gaussian(re, im, 3);
        prop_assume!(!lambda.is_zero());
        let an = analysis(EXAMPLES[idx]);
        let comp = if EXAMPLES[idx] == "a23" { 1 } else { 0 };
        let phi = an.symbolic(comp).unwrap();
        let k = phi.generic_degree as u32;
        let deg = phi.poly.total_degree();
        let mut rng = Lcg((40 + re + 10 * im) as u64);
        let x: Vec<GRat> = (0..phi.poly.nvars()).map(|_| rng.grat()).collect();
        let lx: Vec<GRat> = x.iter().map(|v| v * &lambda).collect();
        prop_assert!(k >= 1);
        prop_assert_eq!(phi.poly.eval(&lx), lambda.pow(deg) * phi.poly.eval(&x));
    }
}

mod common;

use common::{analysis, ints, load, Lcg, EXAMPLES};
use holofourier::algebra::{parse_poly, GRat};
use holofourier::invariants::{
    boundary_factors, chi_c, chi_hypersurface, chi_slice, divisor_at, ft_multiplicity_chi_route, ft_multiplicity_conified_route,
    generic_rank, infinity_factors, normalized_volume, pointwise_solution_chi, stokes_directions, Region,
};
use holofourier::model::default_constructible;
use holofourier::report::{run, Command, RunConfig};
use holofourier::{Error, Settings};
use proptest::prelude::*;
use rug::Rational;

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("z{}", i)).collect()
}

/// Twice the area of the convex hull of the origin and the columns, by monotone chain and shoelace.
fn hull_double_area(cols: &[(i64, i64)]) -> i64 {
    let mut p: Vec<(i64, i64)> = cols.to_vec();
    p.push((0, 0));
    p.sort();
    p.dedup();
    if p.len() < 3 {
        return 0;
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut hull: Vec<(i64, i64)> = vec![];
    for pass in 0..2 {
        let start = hull.len();
        let it: Box<dyn Iterator<Item = &(i64, i64)>> = if pass == 0 { Box::new(p.iter()) } else { Box::new(p.iter().rev()) };
        for &q in it {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 0 {
                hull.pop();
            }
            hull.push(q);
        }
        hull.pop();
    }
    let n = hull.len();
    (0..n).map(|i| cross((0, 0), hull[i], hull[(i + 1) % n])).sum::<i64>().abs()
}

#[test]
fn normalized_volumes_of_the_examples() {
    assert_eq!(normalized_volume(&[vec![2, 3]]).unwrap(), 3);
    assert_eq!(normalized_volume(&[vec![2, 1, -2], vec![-1, 1, 0]]).unwrap(), 7);
    assert_eq!(normalized_volume(&[vec![1]]).unwrap(), 1);
    assert!(normalized_volume(&[vec![1, 2], vec![2, 4]]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planar_volume_matches_shoelace(cols in proptest::collection::vec((-6i64..=6, -6i64..=6), 1..6)) {
        let m = vec![cols.iter().map(|c| c.0).collect::<Vec<_>>(), cols.iter().map(|c| c.1).collect()];
        let area = hull_double_area(&cols);
        match normalized_volume(&m) {
            Ok(v) => prop_assert_eq!(v as i64, area),
            Err(_) => prop_assert_eq!(area, 0),
        }
    }
}

#[test]
fn euler_characteristics_of_affine_hypersurfaces() {
    let st = Settings::default();
    let chi = |s: &str, n: usize| chi_hypersurface(&parse_poly(s, &names(n)).unwrap(), &st).unwrap();
    // C* , the complexified sphere, a once-punctured elliptic curve
    assert_eq!(chi("z1*z2 - 1", 2), 0);
    assert_eq!(chi("z1^2 + z2^2 + z3^2 - 1", 3), 2);
    assert_eq!(chi("z2^2 - z1^3 - z1 - 1", 2), -1);
    assert_eq!(chi("z1 + 2*z2 - 3", 2), 1);
    assert_eq!(chi("z1^2 - 4", 2), 2);
    assert_eq!(chi("z1^2 + z2^2 - 1", 2), 0);
}

#[test]
fn chi_route_values_reproduce_the_worked_examples() {
    let st = Settings::default();
    // (example, v on D, v0 in Omega, irr, chi difference, multiplicity)
    let cases: [(&str, Vec<GRat>, Vec<GRat>, i64, i64, i64); 3] = [
        ("a23", ints(&[1, 0]), vec![GRat::one(), GRat::from_ratio(1, 7)], 2, 1, 3),
        ("paraboloid3", ints(&[1, 1, 0]), ints(&[1, 1, 1]), 1, 1, 2),
        ("quadric2", vec![GRat::one(), GRat::i()], ints(&[2, 3]), 0, 1, 1),
    ];
    for (name, v, v0, irr, diff, m) in cases {
        let model = default_constructible(&load(name).descriptor).unwrap();
        let r = ft_multiplicity_chi_route(&model, &v, &v0, &Rational::from(irr), &st).unwrap();
        assert_eq!(r.chi_v - r.chi_v0, diff, "{}", name);
        assert_eq!(r.mult, m, "{}", name);
        if name == "a23" {
            assert_eq!((r.chi_v, r.chi_v0), (-2, -3));
        }
    }
    assert_eq!(ft_multiplicity_conified_route(1, &Rational::new()).unwrap(), 1);
    assert_eq!(ft_multiplicity_conified_route(5, &Rational::new()).unwrap(), 5);
    assert!(matches!(ft_multiplicity_conified_route(4, &Rational::from((1, 2))), Err(Error::InconsistentBranchData(_))));
}

#[test]
fn pointwise_chi_equals_rank_on_omega() {
    let st = Settings::default();
    for name in EXAMPLES {
        let an = analysis(name);
        let model = default_constructible(an.descriptor()).unwrap();
        let rank = generic_rank(&an).unwrap() as i64;
        let mut g = Lcg(7);
        let w = loop {
            let w = g.direction(an.descriptor().dim);
            if an.omega(&w).unwrap().member {
                break w;
            }
        };
        assert_eq!(pointwise_solution_chi(&model, &w, &st).unwrap(), rank, "{}", name);
    }
}

#[test]
fn boundary_irregularity_is_a_nonnegative_integer() {
    let expect = [("quadric2", "s1", 0), ("quadric3", "s1", 0), ("paraboloid3", "s1", 1), ("a23", "s1", 2), ("torus2", "s3", 0)];
    for (name, label, irr) in expect {
        let f = load(name);
        let an = analysis(name);
        let s = f.slices.iter().find(|s| s.label == label).unwrap();
        let b = boundary_factors(&an, s).unwrap();
        assert_eq!(b.irregularity, irr, "{}", name);
        assert!(*b.irregularity.denom() == 1 && b.irregularity >= 0);
    }
    for s in &load("torus2").slices {
        let b = boundary_factors(&analysis("torus2"), s).unwrap();
        assert_eq!(b.irregularity, 0);
        assert!(b.factors.iter().all(|f| f.pole_series.is_trivial()));
    }
}

#[test]
fn smooth_base_point_has_no_boundary_data() {
    let mut f = load("quadric2");
    f.slices[0].base = ints(&[1, 1]);
    assert!(matches!(boundary_factors(&analysis("quadric2"), &f.slices[0]), Err(Error::SmoothBasePoint)));
}

#[test]
fn stokes_lines_of_the_quadric() {
    let an = analysis("quadric2");
    let a = stokes_directions(&an, &ints(&[1, 0])).unwrap();
    assert_eq!(a.directions.len(), 1);
    assert!((a.directions[0].theta - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    assert_eq!(a.directions[0].pairs, vec![(0, 1)]);
}

#[test]
fn stokes_count_is_bounded_by_pairs() {
    let mut g = Lcg(11);
    for name in EXAMPLES {
        let an = analysis(name);
        for _ in 0..3 {
            let w = g.direction(an.descriptor().dim);
            if !an.omega(&w).unwrap().member {
                continue;
            }
            let a = stokes_directions(&an, &w).unwrap();
            let k = a.values.len();
            assert!(a.directions.len() <= k * (k - 1) / 2, "{}", name);
            let listed: usize = a.directions.iter().map(|l| l.pairs.len()).sum();
            assert_eq!(listed, a.pairs.len());
        }
    }
}

#[test]
fn infinity_factors_scale_with_the_direction() {
    let mut g = Lcg(5);
    for name in ["quadric2", "paraboloid3", "a23", "torus2"] {
        let an = analysis(name);
        let w = loop {
            let w = g.direction(an.descriptor().dim);
            if an.omega(&w).unwrap().member {
                break w;
            }
        };
        let lam = GRat::from_ratio(5, 2);
        let scaled: Vec<GRat> = w.iter().map(|x| x * &lam).collect();
        let a = infinity_factors(&an, &w).unwrap();
        let b = infinity_factors(&an, &scaled).unwrap();
        assert_eq!(a.factors.len(), b.factors.len(), "{}", name);
        for fa in &a.factors {
            let hit = b.factors.iter().find(|fb| {
                let (x, y) = (fa.c.re() * 2.5, fa.c.im() * 2.5);
                ((fb.c.re() - x).powi(2) + (fb.c.im() - y).powi(2)).sqrt() < 1e-9 * (1.0 + fa.c.abs())
            });
            let hit = hit.unwrap_or_else(|| panic!("{}: no scaled partner", name));
            assert_eq!(hit.mult, fa.mult);
            if let (Some(x), Some(y)) = (&fa.exact, &hit.exact) {
                assert_eq!(&(x * &lam), y);
            }
        }
    }
}

#[test]
fn routes_agree_where_both_apply() {
    for name in ["quadric2", "quadric3", "torus2", "a23"] {
        let f = load(name);
        let rep = run(&f, &RunConfig::new(Command::Multiplicity)).unwrap();
        assert!(!rep.multiplicities.is_empty(), "{}", name);
        for row in &rep.multiplicities {
            if row.conified.is_some() {
                assert_eq!(row.agree(), Some(true), "{} {}", name, row.slice);
            }
        }
    }
    let rep = run(&load("torus2"), &RunConfig::new(Command::Multiplicity)).unwrap();
    let mut m: Vec<i64> = rep.multiplicities.iter().filter_map(|r| r.conified.map(|c| c.1)).collect();
    m.sort();
    assert_eq!(m, vec![4, 5, 5]);
}

#[test]
fn divisor_lookup_on_the_a23_discriminant() {
    let locus = analysis("a23").discriminant_locus().unwrap();
    let k = divisor_at(&locus, &ints(&[1, 0])).unwrap();
    let f = &locus.factors()[k];
    assert!(f.eval(&ints(&[1, 0])).is_zero() && !f.eval(&ints(&[0, 1])).is_zero());
    assert!(matches!(divisor_at(&locus, &ints(&[1, 1])), Err(Error::SmoothBasePoint)));
    assert!(matches!(divisor_at(&locus, &ints(&[0, 0])), Err(Error::Precondition(_))));
}

/// χ_c over the whole space, once directly and once by integrating along the levels of `ℓ(w)`:
/// the generic level plus the jump at every critical value.
#[test]
fn chi_is_additive_over_the_levels_of_a_linear_form() {
    let st = Settings::default();
    for (name, w) in [("quadric2", ints(&[1, 0])), ("paraboloid3", ints(&[1, 2, 1])), ("a23", ints(&[2, 3]))] {
        let an = analysis(name);
        let model = default_constructible(an.descriptor()).unwrap();
        let direct = chi_c(&model, &Region::Full, &st).unwrap();
        let (generic, _) = chi_slice(&model, &w, &st).unwrap();
        let mut levels: Vec<GRat> = an.fiber(&w).unwrap().points.iter().map(|p| p.c_exact.clone().expect("rational critical value")).collect();
        levels.sort_by(|a, b| a.to_f64_pair().partial_cmp(&b.to_f64_pair()).unwrap());
        levels.dedup();
        let mut summed = generic;
        for tau in levels {
            let x = chi_c(&model, &Region::Hyperplane { v: w.clone(), tau }, &st).unwrap();
            summed += x - generic;
        }
        assert_eq!(direct, summed, "{}", name);
    }
}

//! Euler characteristics of constructible functions by polar recursion.
//!
//! For a smooth affine hypersurface `V ⊂ C^k` and a generic linear form `l`,
//! `χ(V) = χ(V ∩ {l = t}) + (-1)^(k-1) · #crit(l|V)`.

use crate::algebra::{squarefree_part, GRat, MPoly};
use crate::critical::{certify, DirectionFamily};
use crate::error::{Error, Result};
use crate::model::{ComponentKind, ConstructibleModel, LagrangianComponent, Piece, Support};
use crate::settings::{random_rational, Settings};

/// Where the constructible function is integrated.
#[derive(Clone, Debug, PartialEq)]
pub enum Region {
    Full,
    /// `{z : ⟨z, v⟩ = τ}`.
    Hyperplane { v: Vec<GRat>, tau: GRat },
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of critical points of `l` on `V(g)`.
fn count_critical(g: &MPoly, l: &[GRat], st: &Settings) -> Result<i64> {
    let k = g.nvars();
    let comp = LagrangianComponent::new(ComponentKind::ConormalHypersurface { f: g.clone() }, 1);
    let cert = certify(&comp, k, &DirectionFamily::point(l), st)?;
    Ok(cert.lifted.iter().map(|r| r.solutions.len() as i64).sum())
}

/// `χ(V(g))` for `g` in `k` variables; `g ≡ 0` is the whole space.
pub fn chi_hypersurface(g: &MPoly, st: &Settings) -> Result<i64> {
    chi_rec(g, st, 0, false)
}

fn chi_rec(g: &MPoly, st: &Settings, depth: usize, smooth: bool) -> Result<i64> {
    if g.is_zero() {
        return Ok(1);
    }
    if g.is_constant() {
        return Ok(0);
    }
    let used = g.vars_used();
    let g = if used.len() < g.nvars() { g.project(&used) } else { g.clone() };
    let g = squarefree_part(&g);
    let k = g.nvars();
    if k == 1 {
        return Ok(g.degree_in(0) as i64);
    }
    if !smooth && !provably_smooth(&g, st) {
        if k == 2 {
            // singular curves go through a finite projection
            let mut rng = st.rng("projection");
            for _ in 0..4 {
                if let Some(x) = super::curve::chi_monic_curve(&generic_coordinates(&g, &mut rng)) {
                    return Ok(x);
                }
            }
        }
        // {g ≠ 0} is the smooth hypersurface {s·g = 1} one dimension up
        let map: Vec<usize> = (0..k).collect();
        let s = MPoly::var(k + 1, k);
        let h = &(&s * &g.embed(k + 1, &map)) - &MPoly::one(k + 1);
        // mixing s into the other coordinates keeps the elimination away from special
        // positions; a few mixings are tried before giving up
        let mut rng = st.rng("complement");
        let mut last = None;
        for _ in 0..4 {
            match chi_rec(&generic_coordinates(&h, &mut rng), st, depth, true) {
                Ok(x) => return Ok(1 - x),
                Err(e @ (Error::DegenerateDirection(_) | Error::DegreeCap(_))) => last = Some(e),
                Err(e) => return Err(e),
            }
        }
        return Err(last.unwrap());
    }
    let mut rng = st.rng(&format!("polar-{}", depth));
    let l: Vec<GRat> = (0..k).map(|_| random_rational(&mut rng)).collect();
    let t = random_rational(&mut rng);
    let crit = count_critical(&g, &l, st)?;
    // a generic hyperplane section of a smooth hypersurface is smooth
    let slice = restrict_hyperplane(&g, &l, &t);
    Ok(chi_rec(&slice, st, depth + 1, true)? + sign(k - 1) * crit)
}

/// `g`, `∂g` have no common zero, shown by successive resultants.  `false` means unproved.
///
/// Coordinates are first put in general position so that leading coefficients are
/// constants and the resultants pick up no zeros at infinity.
fn provably_smooth(g: &MPoly, st: &Settings) -> bool {
    let mut rng = st.rng("smoothness");
    (0..2).any(|_| {
        let h = generic_coordinates(g, &mut rng);
        let mut eqs = vec![h.clone()];
        eqs.extend((0..h.nvars()).map(|j| h.derivative(j)));
        zero_free(eqs)
    })
}

/// `g(M z)` for a random unit upper-triangular `M`.
fn generic_coordinates(g: &MPoly, rng: &mut rand_chacha::ChaCha8Rng) -> MPoly {
    let k = g.nvars();
    let lifted: Vec<usize> = (k..2 * k).collect();
    let mut h = g.embed(2 * k, &lifted);
    for i in 0..k {
        let mut q = MPoly::var(2 * k, i);
        for j in i + 1..k {
            q = &q + &MPoly::var(2 * k, j).scale(&random_rational(rng));
        }
        h = h.subst(k + i, &q);
    }
    let keep: Vec<usize> = (0..k).collect();
    h.project(&keep)
}

/// Every common zero of the system survives into each resultant, so a contradiction
/// among the eliminants proves the system has none.
fn zero_free(eqs: Vec<MPoly>) -> bool {
    let eqs: Vec<MPoly> = eqs.into_iter().filter(|e| !e.is_zero()).collect();
    if eqs.iter().any(|e| e.is_constant()) {
        return true;
    }
    let Some(m) = eqs.iter().flat_map(|e| e.vars_used()).max() else { return false };
    let (with, without): (Vec<MPoly>, Vec<MPoly>) = eqs.into_iter().partition(|e| e.contains_var(m));
    if eqs_in_one_var(&with, &without, m) {
        let mut acc = MPoly::zero(with[0].nvars());
        for e in &with {
            acc = crate::algebra::gcd(&acc, e);
        }
        return acc.is_constant();
    }
    let pivot = (0..with.len()).min_by_key(|&i| (with[i].degree_in(m), with[i].num_terms())).unwrap();
    let mut next = without.clone();
    for (i, e) in with.iter().enumerate() {
        if i == pivot {
            continue;
        }
        match crate::algebra::resultant_in(&with[pivot], e, m) {
            Ok(r) if r.is_zero() => {
                // V(A, B, ..) = V(d, ..) ∪ V(A/d, B, ..) with d = gcd(A, B)
                let d = crate::algebra::gcd(&with[pivot], e);
                if d.is_constant() {
                    return false;
                }
                let Some(rest) = with[pivot].exact_div(&d) else { return false };
                let mut on_d: Vec<MPoly> = without.clone();
                on_d.push(d.clone());
                on_d.extend(with.iter().enumerate().filter(|&(j, _)| j != pivot && j != i).map(|(_, x)| x.clone()));
                let mut off_d: Vec<MPoly> = without.clone();
                off_d.extend(with.iter().enumerate().map(|(j, x)| if j == pivot { rest.clone() } else { x.clone() }));
                return zero_free(on_d) && zero_free(off_d);
            }
            Ok(r) => next.push(r),
            Err(_) => return false,
        }
    }
    zero_free(next)
}

fn eqs_in_one_var(with: &[MPoly], without: &[MPoly], m: usize) -> bool {
    without.is_empty() && with.iter().all(|e| e.vars_used() == [m])
}

/// `g` on `{⟨z, l⟩ = t}`, parametrized by all coordinates except the last with `l_j ≠ 0`.
fn restrict_hyperplane(g: &MPoly, l: &[GRat], t: &GRat) -> MPoly {
    let k = g.nvars();
    let j = (0..k).rev().find(|&j| !l[j].is_zero()).expect("nonzero linear form");
    let inv = l[j].inv().unwrap();
    // z_j = (t - Σ_{i≠j} l_i z_i) / l_j
    let mut coeffs = vec![GRat::zero(); k];
    for i in 0..k {
        if i != j {
            coeffs[i] = -(&l[i] * &inv);
        }
    }
    let zj = MPoly::linear(&coeffs, &(t * &inv));
    let keep: Vec<usize> = (0..k).filter(|&i| i != j).collect();
    g.subst(j, &zj).project(&keep)
}

/// `Σ v_j s^a(j) - τ` cleared of denominators and monomial content.
fn torus_slice_poly(matrix: &[Vec<i64>], v: &[GRat], tau: &GRat) -> MPoly {
    let d = matrix.len();
    let n = matrix[0].len();
    let mut terms: Vec<(Vec<i64>, GRat)> = (0..n)
        .filter(|&j| !v[j].is_zero())
        .map(|j| ((0..d).map(|i| matrix[i][j]).collect(), v[j].clone()))
        .collect();
    terms.push((vec![0; d], -tau));
    let mut shift = vec![0i64; d];
    for (e, _) in &terms {
        for i in 0..d {
            shift[i] = shift[i].max(-e[i]);
        }
    }
    let mut acc = MPoly::zero(d);
    for (e, c) in terms {
        let m: Vec<u32> = (0..d).map(|i| (e[i] + shift[i]) as u32).collect();
        acc = &acc + &MPoly::monomial(m, c);
    }
    let all: Vec<usize> = (0..d).collect();
    acc.strip_monomial(&all)
}

/// `χ(V(G) ∩ (C*)^d)` by inclusion–exclusion over coordinate subspaces.
fn chi_in_torus(g: &MPoly, st: &Settings) -> Result<i64> {
    let d = g.nvars();
    let mut total = 0;
    for mask in 0u32..(1 << d) {
        let mut h = g.clone();
        let mut keep = vec![];
        for i in 0..d {
            if mask & (1 << i) != 0 {
                h = h.subst_const(i, &GRat::zero());
            } else {
                keep.push(i);
            }
        }
        let h = h.project(&keep);
        let c = if keep.is_empty() {
            if h.is_zero() {
                1
            } else {
                0
            }
        } else {
            chi_hypersurface(&h, st)?
        };
        total += sign(mask.count_ones() as usize) * c;
    }
    Ok(total)
}

fn dot(a: &[GRat], b: &[GRat]) -> GRat {
    let mut s = GRat::zero();
    for (x, y) in a.iter().zip(b) {
        s += &(x * y);
    }
    s
}

/// Point and direction basis of an affine subspace.
fn parametrize(eqs: &[MPoly], n: usize) -> Result<(Vec<GRat>, Vec<Vec<GRat>>)> {
    let basis = crate::critical::direction_basis(eqs, n);
    // fix the free coordinates of the echelon form to 0 to find a point
    let mut full = eqs.to_vec();
    for (k, b) in basis.iter().enumerate() {
        let j = (0..n)
            .find(|&j| b[j].is_one() && basis.iter().enumerate().all(|(m, c)| m == k || c[j].is_zero()))
            .unwrap();
        full.push(MPoly::var(n, j));
    }
    let p = crate::critical::linear_point(&full, n)?;
    Ok((p, basis))
}

/// χ of one support intersected with the region, before removing lower strata.
fn chi_support(s: &Support, n: usize, region: &Region, st: &Settings) -> Result<i64> {
    match (s, region) {
        (Support::Whole, Region::Full) => Ok(1),
        (Support::Whole, Region::Hyperplane { .. }) => Ok(1),
        (Support::Point(_), Region::Full) => Ok(1),
        (Support::Point(p), Region::Hyperplane { v, tau }) => Ok((dot(p, v) == *tau) as i64),
        (Support::Hypersurface(f), Region::Full) => chi_hypersurface(f, st),
        (Support::Hypersurface(f), Region::Hyperplane { v, tau }) => chi_hypersurface(&restrict_hyperplane(f, v, tau), st),
        (Support::Linear(eqs), Region::Full) => {
            let _ = eqs;
            Ok(1)
        }
        (Support::Linear(eqs), Region::Hyperplane { v, tau }) => {
            let (p, basis) = parametrize(eqs, n)?;
            if basis.iter().all(|b| dot(b, v).is_zero()) {
                Ok((dot(&p, v) == *tau) as i64)
            } else {
                Ok(1)
            }
        }
        (Support::TorusOrbit(_), Region::Full) => Ok(0),
        (Support::TorusOrbit(a), Region::Hyperplane { v, tau }) => chi_in_torus(&torus_slice_poly(a, v, tau), st),
    }
}

fn support_dim(s: &Support, n: usize) -> usize {
    match s {
        Support::Whole => n,
        Support::Hypersurface(_) => n - 1,
        Support::Point(_) => 0,
        Support::Linear(e) => n - e.len(),
        Support::TorusOrbit(a) => a.len(),
    }
}

/// χ of `lower ∩ region` when `lower` lies inside `upper`; `None` when disjoint.
fn contained(lower: &Support, upper: &Support, n: usize, region: &Region, st: &Settings) -> Result<Option<i64>> {
    let inside = match (lower, upper) {
        (_, Support::Whole) => true,
        (Support::Point(p), Support::Hypersurface(f)) => f.eval(p).is_zero(),
        (Support::Point(p), Support::Linear(eqs)) => eqs.iter().all(|e| e.eval(p).is_zero()),
        // torus orbits are open orbits; points with a zero coordinate are outside
        (Support::Point(p), Support::TorusOrbit(_)) => {
            if p.iter().any(|x| x.is_zero()) {
                false
            } else {
                return Err(Error::Unsupported("point strata inside a torus orbit".into()));
            }
        }
        (Support::Linear(eqs), Support::Hypersurface(f)) => {
            // a polynomial vanishing at several random points of the subspace vanishes on it
            let (p, basis) = parametrize(eqs, n)?;
            let mut rng = st.rng("linear-in-hypersurface");
            (0..3).all(|_| {
                let mut x = p.clone();
                for b in &basis {
                    let r = random_rational(&mut rng);
                    for j in 0..n {
                        x[j] += &(&b[j] * &r);
                    }
                }
                f.eval(&x).is_zero()
            })
        }
        _ => false,
    };
    if !inside {
        return Ok(None);
    }
    Ok(Some(chi_support(lower, n, region, st)?))
}

/// `χ_c` of the constructible function over the region.
///
/// Each piece contributes its weight times χ of its support minus the
/// lower-dimensional supports it contains.
pub fn chi_c(model: &ConstructibleModel, region: &Region, st: &Settings) -> Result<i64> {
    let n = model.dim;
    let mut total = 0;
    for (i, Piece { support, weight }) in model.pieces.iter().enumerate() {
        if *weight == 0 {
            continue;
        }
        let mut x = chi_support(support, n, region, st)?;
        let d = support_dim(support, n);
        for (j, other) in model.pieces.iter().enumerate() {
            if i == j || support_dim(&other.support, n) >= d {
                continue;
            }
            if let Some(c) = contained(&other.support, support, n, region, st)? {
                x -= c;
            }
        }
        total += weight * x;
    }
    Ok(total)
}

/// `χ_c` over `{⟨z, v⟩ = τ}` for `|τ| ≫ 0`, with the chosen `τ`.
///
/// `τ = T(1 + i/7)` with `T` doubled until three consecutive values agree.
pub fn chi_slice(model: &ConstructibleModel, v: &[GRat], st: &Settings) -> Result<(i64, GRat)> {
    if v.iter().all(|x| x.is_zero()) {
        return Err(Error::Precondition("zero direction".into()));
    }
    let dir = GRat::new(rug::Rational::from(1), rug::Rational::from((1, 7)));
    let mut hist: Vec<(i64, GRat)> = vec![];
    let mut t = 16i64;
    for _ in 0..14 {
        let tau = dir.mul_int(t);
        let x = chi_c(model, &Region::Hyperplane { v: v.to_vec(), tau: tau.clone() }, st)?;
        hist.push((x, tau));
        let k = hist.len();
        if k >= 3 && hist[k - 1].0 == hist[k - 2].0 && hist[k - 2].0 == hist[k - 3].0 {
            return Ok(hist[k - 3].clone());
        }
        t *= 2;
    }
    Err(Error::TauOnWall)
}

/// `χ_c` at an explicit `τ`, accepted only if nearby values agree.
pub fn chi_slice_at(model: &ConstructibleModel, v: &[GRat], tau: &GRat, st: &Settings) -> Result<i64> {
    let at = |t: &GRat| chi_c(model, &Region::Hyperplane { v: v.to_vec(), tau: t.clone() }, st);
    let x = at(tau)?;
    for (a, b) in [(1i64, 101i64), (-1, 103)] {
        let eps = GRat::new(rug::Rational::from((a, b)), rug::Rational::from((a, 7 * b)));
        if at(&(tau + &eps))? != x {
            return Err(Error::TauOnWall);
        }
    }
    Ok(x)
}

/// `χ_w` of the solution complex of the Fourier transform at `w`: `χ_c(X) - χ_c(ℓ(w)⁻¹(τ))`.
pub fn pointwise_solution_chi(model: &ConstructibleModel, w: &[GRat], st: &Settings) -> Result<i64> {
    let full = chi_c(model, &Region::Full, st)?;
    let (slice, _) = chi_slice(model, w, st)?;
    Ok(full - slice)
}

/// The χ-route multiplicity and the values entering it.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiRoute {
    pub chi_v: i64,
    pub chi_v0: i64,
    pub irr: i64,
    pub mult: i64,
}

/// `χ(ℓ(v)⁻¹(τ)) - χ(ℓ(v₀)⁻¹(τ)) + irr` for `v` on a discriminant component and `v₀ ∈ Ω`.
pub fn ft_multiplicity_chi_route(model: &ConstructibleModel, v: &[GRat], v0: &[GRat], irr: &rug::Rational, st: &Settings) -> Result<ChiRoute> {
    if *irr.denom() != 1 {
        return Err(Error::InconsistentBranchData(format!("irregularity {} is not an integer", irr)));
    }
    let irr = irr.numer().to_i64().unwrap();
    let (chi_v, _) = chi_slice(model, v, st)?;
    let (chi_v0, _) = chi_slice(model, v0, st)?;
    Ok(ChiRoute { chi_v, chi_v0, irr, mult: chi_v - chi_v0 + irr })
}

/// `n_i + irr` from the user-supplied conified multiplicity.
pub fn ft_multiplicity_conified_route(n_i: i64, irr: &rug::Rational) -> Result<i64> {
    if n_i < 1 {
        return Err(Error::Precondition("conified multiplicity must be at least 1".into()));
    }
    if *irr.denom() != 1 {
        return Err(Error::InconsistentBranchData(format!("irregularity {} is not an integer", irr)));
    }
    Ok(n_i + irr.numer().to_i64().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::algebra::parse::indexed_names;

    fn chi(s: &str, n: usize) -> i64 {
        let g = parse_poly(s, &indexed_names("z", n)).unwrap();
        chi_hypersurface(&g, &Settings::default()).unwrap()
    }

    #[test]
    fn small_varieties() {
        assert_eq!(chi("z1*z2 - 1", 2), 0);
        assert_eq!(chi("z1^2 + z2^2 - 1", 2), 0);
        assert_eq!(chi("z2", 2), 1);
        assert_eq!(chi("z1^2 + z2^2 + z3^2 - 1", 3), 2);
        assert_eq!(chi("z1^2 + z2^2 + z3 - 1", 3), 1);
        // smooth affine cubic curve: genus 1 minus 3 points at infinity
        assert_eq!(chi("z2^2 - z1^3 - z1 - 1", 2), -1);
    }

    #[test]
    fn singular_curves() {
        // two crossing lines; a cusp and a node, each a rational cubic minus one point at infinity
        assert_eq!(chi("z1^2 + z2^2 - z1 - 2*z2 + 5/4", 2), 1);
        assert_eq!(chi("z2^2 - z1^3", 2), 1);
        assert_eq!(chi("z2^2 - z1^2*(z1 + 1)", 2), 0);
        // three concurrent lines
        assert_eq!(chi("z1*z2*(z1 - z2)", 2), 1);
    }

    #[test]
    fn partials_sharing_a_factor_still_prove_smoothness() {
        // both partials vanish along z1 = 0, which misses the curve
        let n = indexed_names("z", 2);
        let g = parse_poly("z1^3*z2 + (-16-16/7*i)*z1^2 + 1", &n).unwrap();
        assert!(provably_smooth(&g, &Settings::default()));
        let lines = parse_poly("z1^2 + z2^2 - z1 - 2*z2 + 5/4", &n).unwrap();
        assert!(!provably_smooth(&lines, &Settings::default()));
    }
}

//! Normalized volume of `conv({0} ∪ columns)` by recursive pulling triangulation.

use rug::{Integer, Rational};

use crate::error::{Error, Result};

type Pt = Vec<Rational>;

fn sub(a: &Pt, b: &Pt) -> Pt {
    a.iter().zip(b).map(|(x, y)| Rational::from(x - y)).collect()
}

fn dot(a: &Pt, b: &Pt) -> Rational {
    let mut s = Rational::new();
    for (x, y) in a.iter().zip(b) {
        s += Rational::from(x * y);
    }
    s
}

fn det(mut m: Vec<Pt>) -> Rational {
    let n = m.len();
    let mut d = Rational::from(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| m[r][k] != 0) else { return Rational::new() };
        if p != k {
            m.swap(p, k);
            d = -d;
        }
        d *= &m[k][k];
        for r in k + 1..n {
            if m[r][k] != 0 {
                let f = Rational::from(&m[r][k] / &m[k][k]);
                for j in k..n {
                    let t = Rational::from(&f * &m[k][j]);
                    m[r][j] -= t;
                }
            }
        }
    }
    d
}

/// Row-reduce and return the indices of a maximal linearly independent subset.
fn independent(rows: &[Pt]) -> Vec<usize> {
    let mut basis: Vec<Pt> = vec![];
    let mut pivots: Vec<usize> = vec![];
    let mut keep = vec![];
    for (idx, r) in rows.iter().enumerate() {
        let mut v = r.clone();
        for (b, &pc) in basis.iter().zip(&pivots) {
            if v[pc] != 0 {
                let f = Rational::from(&v[pc] / &b[pc]);
                for j in 0..v.len() {
                    let t = Rational::from(&f * &b[j]);
                    v[j] -= t;
                }
            }
        }
        if let Some(pc) = v.iter().position(|x| *x != 0) {
            basis.push(v);
            pivots.push(pc);
            keep.push(idx);
        }
    }
    keep
}

/// Coordinates of the points in their own affine hull.
fn intrinsic(points: &[Pt]) -> (Vec<Pt>, usize) {
    let diffs: Vec<Pt> = points.iter().map(|p| sub(p, &points[0])).collect();
    let basis: Vec<Pt> = independent(&diffs).into_iter().map(|i| diffs[i].clone()).collect();
    let k = basis.len();
    // y solves (BᵀB) y = Bᵀ x, exact since x lies in the span
    let gram: Vec<Pt> = basis.iter().map(|a| basis.iter().map(|b| dot(a, b)).collect()).collect();
    let coords = diffs
        .iter()
        .map(|x| {
            let rhs: Pt = basis.iter().map(|b| dot(b, x)).collect();
            solve(gram.clone(), rhs)
        })
        .collect();
    (coords, k)
}

fn solve(mut m: Vec<Pt>, mut b: Pt) -> Pt {
    let n = m.len();
    for k in 0..n {
        let p = (k..n).find(|&r| m[r][k] != 0).unwrap();
        m.swap(p, k);
        b.swap(p, k);
        for r in 0..n {
            if r != k && m[r][k] != 0 {
                let f = Rational::from(&m[r][k] / &m[k][k]);
                for j in 0..n {
                    let t = Rational::from(&f * &m[k][j]);
                    m[r][j] -= t;
                }
                let t = Rational::from(&f * &b[k]);
                b[r] -= t;
            }
        }
    }
    (0..n).map(|k| Rational::from(&b[k] / &m[k][k])).collect()
}

/// Facets of a full-dimensional point set in `R^k`, as index sets.
fn facets(pts: &[Pt], k: usize) -> Vec<Vec<usize>> {
    let m = pts.len();
    let mut out: Vec<Vec<usize>> = vec![];
    let mut comb: Vec<usize> = (0..k).collect();
    loop {
        if let Some(normal) = hyperplane(pts, &comb, k) {
            let h = dot(&normal, &pts[comb[0]]);
            let vals: Vec<Rational> = pts.iter().map(|p| Rational::from(&dot(&normal, p) - &h)).collect();
            let pos = vals.iter().any(|v| *v > 0);
            let neg = vals.iter().any(|v| *v < 0);
            if pos != neg {
                let on: Vec<usize> = (0..m).filter(|&i| vals[i] == 0).collect();
                if !out.contains(&on) {
                    out.push(on);
                }
            }
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if comb[i] < m - k + i {
                comb[i] += 1;
                for j in i + 1..k {
                    comb[j] = comb[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Normal of the hyperplane through `k` points in `R^k`, if they are affinely independent.
fn hyperplane(pts: &[Pt], idx: &[usize], k: usize) -> Option<Pt> {
    let rows: Vec<Pt> = idx[1..].iter().map(|&i| sub(&pts[i], &pts[idx[0]])).collect();
    // cofactor expansion: normal_j = (-1)^j det(rows without column j)
    let normal: Pt = (0..k)
        .map(|j| {
            let minor: Vec<Pt> = rows.iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()).collect();
            let d = if minor.is_empty() { Rational::from(1) } else { det(minor) };
            if j % 2 == 0 { d } else { -d }
        })
        .collect();
    if normal.iter().all(|x| *x == 0) {
        None
    } else {
        Some(normal)
    }
}

/// Simplices (index sets of size `k+1`) triangulating a full-dimensional point set in `R^k`.
fn triangulate(pts: &[Pt], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![0]];
    }
    if k == 1 {
        let (mut lo, mut hi) = (0, 0);
        for i in 0..pts.len() {
            if pts[i][0] < pts[lo][0] {
                lo = i;
            }
            if pts[i][0] > pts[hi][0] {
                hi = i;
            }
        }
        return vec![vec![lo, hi]];
    }
    let apex = 0;
    let mut out = vec![];
    for f in facets(pts, k) {
        if f.contains(&apex) {
            continue;
        }
        let sub_pts: Vec<Pt> = f.iter().map(|&i| pts[i].clone()).collect();
        let (coords, kk) = intrinsic(&sub_pts);
        debug_assert_eq!(kk, k - 1);
        for s in triangulate(&coords, kk) {
            let mut simplex: Vec<usize> = s.iter().map(|&i| f[i]).collect();
            simplex.push(apex);
            out.push(simplex);
        }
    }
    out
}

/// `d!·vol(conv({0} ∪ columns of A))` for a `d × N` integer matrix.
pub fn normalized_volume(matrix: &[Vec<i64>]) -> Result<u64> {
    let d = matrix.len();
    if d == 0 || matrix[0].is_empty() {
        return Err(Error::DegenerateHull);
    }
    let n = matrix[0].len();
    let mut pts: Vec<Pt> = vec![vec![Rational::new(); d]];
    for j in 0..n {
        let p: Pt = (0..d).map(|i| Rational::from(matrix[i][j])).collect();
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    let (coords, k) = intrinsic(&pts);
    if k < d {
        return Err(Error::DegenerateHull);
    }
    let mut total = Integer::new();
    for s in triangulate(&coords, k) {
        let rows: Vec<Pt> = s[1..].iter().map(|&i| sub(&pts[i], &pts[s[0]])).collect();
        let v = det(rows).abs();
        total += v.numer();
    }
    total.to_u64().ok_or(Error::DegenerateHull)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_polytopes() {
        assert_eq!(normalized_volume(&[vec![2, 3]]).unwrap(), 3);
        assert_eq!(normalized_volume(&[vec![2, 1, -2], vec![-1, 1, 0]]).unwrap(), 7);
        assert_eq!(normalized_volume(&[vec![1, 0, 1], vec![0, 1, 1]]).unwrap(), 2);
        // unit cube has normalized volume 3! = 6
        let cube = vec![vec![1, 0, 0, 1, 1, 0, 1], vec![0, 1, 0, 1, 0, 1, 1], vec![0, 0, 1, 0, 1, 1, 1]];
        assert_eq!(normalized_volume(&cube).unwrap(), 6);
        assert!(normalized_volume(&[vec![1, 2], vec![2, 4]]).is_err());
    }
}

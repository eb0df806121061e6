use crate::algebra::{GRat, MPoly};
use crate::error::{Error, Result};
use crate::model::validate_helpers::{linear_rows, rank};

/// The unique point of a zero-dimensional affine subspace.
pub fn linear_point(eqs: &[MPoly], n: usize) -> Result<Vec<GRat>> {
    let rows = linear_rows(eqs, n);
    if rows.len() != n {
        return Err(Error::Invalid("linear subspace is not a point".into()));
    }
    let mut m: Vec<Vec<GRat>> = rows;
    for k in 0..n {
        let p = (k..n).find(|&r| !m[r][k].is_zero()).ok_or_else(|| Error::Invalid("singular linear system".into()))?;
        m.swap(k, p);
        let inv = m[k][k].inv().unwrap();
        for j in 0..=n {
            m[k][j] = &m[k][j] * &inv;
        }
        for r in 0..n {
            if r != k && !m[r][k].is_zero() {
                let f = m[r][k].clone();
                for j in 0..=n {
                    let t = &f * &m[k][j];
                    m[r][j] -= &t;
                }
            }
        }
    }
    // a·z + b = 0  ⇒  z = -b
    Ok((0..n).map(|k| -&m[k][n]).collect())
}

/// Whether `w` lies in the span of the linear parts, i.e. `ℓ(w)` is constant on the subspace.
pub fn annihilates(eqs: &[MPoly], n: usize, w: &[GRat]) -> bool {
    let mut rows: Vec<Vec<GRat>> = linear_rows(eqs, n)
        .into_iter()
        .map(|mut r| {
            r.pop();
            r
        })
        .collect();
    let r0 = rank(&rows);
    rows.push(w.to_vec());
    rank(&rows) == r0
}

/// Basis of the direction space `{a·x = 0}` of the subspace.
pub fn direction_basis(eqs: &[MPoly], n: usize) -> Vec<Vec<GRat>> {
    let rows: Vec<Vec<GRat>> = linear_rows(eqs, n)
        .into_iter()
        .map(|mut r| {
            r.pop();
            r
        })
        .collect();
    // reduced row echelon form
    let mut m = rows;
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&k| !m[k][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for j in 0..n {
            m[r][j] = &m[r][j] * &inv;
        }
        for k in 0..m.len() {
            if k != r && !m[k][c].is_zero() {
                let f = m[k][c].clone();
                for j in 0..n {
                    let t = &f * &m[r][j];
                    m[k][j] -= &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![GRat::zero(); n];
            v[f] = GRat::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[k][f];
            }
            v
        })
        .collect()
}

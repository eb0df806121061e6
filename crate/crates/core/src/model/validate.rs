use rug::Integer;

use super::{ComponentKind, DModuleDescriptor};
use crate::algebra::is_squarefree;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub component: Option<usize>,
    pub reason: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.component {
            Some(i) => write!(f, "component {}: {}", i, self.reason),
            None => write!(f, "{}", self.reason),
        }
    }
}

fn diag(i: Option<usize>, reason: impl Into<String>) -> Diagnostic {
    Diagnostic { component: i, reason: reason.into() }
}

/// Check the structural invariants of a descriptor; an empty list means valid.
pub fn validate(desc: &DModuleDescriptor) -> Vec<Diagnostic> {
    let n = desc.dim;
    let mut out = vec![];
    if n == 0 {
        out.push(diag(None, "dimension must be at least 1"));
        return out;
    }
    if desc.components.is_empty() {
        out.push(diag(None, "no components"));
    }
    let zs = desc
        .components
        .iter()
        .filter(|c| matches!(c.kind, ComponentKind::ZeroSection))
        .count();
    if zs > 1 {
        out.push(diag(None, "zero section listed more than once"));
    }
    for (i, c) in desc.components.iter().enumerate() {
        let i = Some(i);
        if c.mult == 0 {
            out.push(diag(i, "multiplicity must be positive"));
        }
        match &c.kind {
            ComponentKind::ConormalHypersurface { f } => {
                if f.nvars() != n {
                    out.push(diag(i, "polynomial ring does not match the dimension"));
                } else if f.is_constant() {
                    out.push(diag(i, "hypersurface polynomial is constant"));
                } else if !is_squarefree(f) {
                    out.push(diag(i, "hypersurface polynomial is not squarefree"));
                }
            }
            ComponentKind::ConormalPoint { point } => {
                if point.len() != n {
                    out.push(diag(i, format!("point has {} coordinates, expected {}", point.len(), n)));
                }
            }
            ComponentKind::ZeroSection => {}
            ComponentKind::ConormalLinear { equations } => {
                if equations.is_empty() {
                    out.push(diag(i, "no linear equations; use zero_section"));
                }
                if equations.iter().any(|e| e.nvars() != n || e.total_degree() != 1) {
                    out.push(diag(i, "equations must be nonconstant linear polynomials in z1..zN"));
                } else {
                    let rows: Vec<_> = linear_rows(equations, n).into_iter().map(|mut r| {
                        r.pop();
                        r
                    }).collect();
                    if rank(&rows) != equations.len() {
                        out.push(diag(i, "linear equations are dependent or inconsistent"));
                    }
                }
            }
            ComponentKind::TorusConormal { matrix, .. } => {
                if matrix.is_empty() {
                    out.push(diag(i, "torus matrix has no rows"));
                } else if matrix.iter().any(|r| r.len() != n) {
                    out.push(diag(i, format!("torus matrix must have {} columns", n)));
                } else if matrix.len() > n {
                    out.push(diag(i, "torus matrix has more rows than columns"));
                } else if maximal_minor_gcd(matrix) != 1 {
                    out.push(diag(i, "columns of the torus matrix do not span the lattice"));
                }
            }
        }
    }
    out
}

/// Augmented rows `[a_1 … a_N | b]` of `a·z + b`.
pub(crate) fn linear_rows(eqs: &[crate::algebra::MPoly], n: usize) -> Vec<Vec<crate::algebra::GRat>> {
    eqs.iter()
        .map(|e| {
            let mut row: Vec<_> = (0..n)
                .map(|j| {
                    let mut ex = vec![0; n];
                    ex[j] = 1;
                    e.coeff(&ex)
                })
                .collect();
            row.push(e.constant_term());
            row
        })
        .collect()
}

/// Row rank over ℚ(i).
pub(crate) fn rank(rows: &[Vec<crate::algebra::GRat>]) -> usize {
    let mut m: Vec<Vec<_>> = rows.to_vec();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&k| !m[k][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for k in 0..m.len() {
            if k != r && !m[k][c].is_zero() {
                let f = &m[k][c] * &inv;
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[k][j] -= &t;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

fn det_int(m: &[Vec<Integer>]) -> Integer {
    // Bareiss
    let n = m.len();
    let mut a: Vec<Vec<Integer>> = m.to_vec();
    let mut sign = 1;
    let mut prev = Integer::from(1);
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Integer::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = Integer::from(&a[i][j] * &a[k][k]) - Integer::from(&a[i][k] * &a[k][j]);
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 { -d } else { d }
}

/// Gcd of all `d × d` minors of a `d × n` integer matrix.
pub(crate) fn maximal_minor_gcd(a: &[Vec<i64>]) -> Integer {
    let d = a.len();
    let n = a[0].len();
    let mut g = Integer::new();
    let mut cols: Vec<usize> = (0..d).collect();
    loop {
        let m: Vec<Vec<Integer>> = (0..d).map(|r| cols.iter().map(|&c| Integer::from(a[r][c])).collect()).collect();
        g = g.gcd(&det_int(&m));
        // next combination
        let mut k = d;
        loop {
            if k == 0 {
                return g;
            }
            k -= 1;
            if cols[k] < n - d + k {
                cols[k] += 1;
                for j in k + 1..d {
                    cols[j] = cols[j - 1] + 1;
                }
                break;
            }
        }
    }
}

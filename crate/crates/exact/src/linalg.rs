//! Gaussian elimination over any [`Field`].

use crate::Field;

/// Row-reduces in place; returns the pivot columns.
pub fn row_reduce<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one().div(&m[r][c]);
        for j in c..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let d = f.mul(&m[r][j]);
                    m[i][j] = m[i][j].sub(&d);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut work = m.to_vec();
    row_reduce(&mut work).len()
}

/// Solves `A·X = B` column by column for every right-hand side in `rhs`.
/// Free unknowns are set to zero. `None` if some system is inconsistent.
pub fn solve_many<F: Field>(a: &[Vec<F>], rhs: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = a.first().map_or(0, |r| r.len());
    let k = rhs.len();
    let mut aug: Vec<Vec<F>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(rhs.iter().map(|b| b[i].clone()));
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.iter().any(|&c| c >= n) {
        return None;
    }
    let mut out = vec![vec![F::zero(); n]; k];
    for (r, &c) in pivots.iter().enumerate() {
        for (j, x) in out.iter_mut().enumerate() {
            x[c] = aug[r][n + j].clone();
        }
    }
    Some(out)
}

pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    solve_many(a, &[b.to_vec()]).map(|mut v| v.remove(0))
}

/// Dimension of `{x : A·x = 0}`.
pub fn nullity<F: Field>(a: &[Vec<F>]) -> usize {
    let n = a.first().map_or(0, |r| r.len());
    n - rank(a)
}

//! Gaussian elimination over ℚ, enough for per-degree subspace questions.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Reduced row echelon form of `rows` (each of length `ncols`), returning
/// the nonzero rows and their pivot columns.
pub fn row_reduce(rows: &[Vec<BigRational>], ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<BigRational>], ncols: usize) -> usize {
    row_reduce(rows, ncols).1.len()
}

/// Basis of `{x : A x = 0}`.
pub fn nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let (m, pivots) = row_reduce(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// One solution of `A x = b` together with a nullspace basis, or `None` when
/// the system is inconsistent.
pub fn solve(
    rows: &[Vec<BigRational>],
    rhs: &[BigRational],
    ncols: usize,
) -> Option<(Vec<BigRational>, Vec<Vec<BigRational>>)> {
    let augmented: Vec<Vec<BigRational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| r.iter().cloned().chain(std::iter::once(b.clone())).collect())
        .collect();
    let (m, pivots) = row_reduce(&augmented, ncols + 1);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (row, &p) in m.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some((x, nullspace(rows, ncols)))
}

/// Whether `v` lies in the row span of `rows`.
pub fn in_span(rows: &[Vec<BigRational>], v: &[BigRational]) -> bool {
    let n = v.len();
    let mut with_v = rows.to_vec();
    with_v.push(v.to_vec());
    rank(rows, n) == rank(&with_v, n)
}

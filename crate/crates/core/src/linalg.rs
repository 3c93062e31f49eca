//! Exact Gaussian elimination over the rationals.
//!
//! The matrices here are tiny (bounded by the number of odd/strict
//! partitions in range), so plain dense elimination is enough.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub(crate) type Matrix = Vec<Vec<Rational>>;

pub(crate) fn identity(k: usize) -> Matrix {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

pub(crate) fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![Rational::zero(); cols]; rows];
    for i in 0..rows {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                let prod = &a[i][k] * &bk[j];
                out[i][j] += prod;
            }
        }
    }
    out
}

pub(crate) fn mat_vec(a: &Matrix, x: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .map(|(r, v)| r * v)
                .fold(Rational::zero(), |acc, t| acc + t)
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot column of each
/// pivot row in order.
pub(crate) fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
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
        let inv = m[r][c].clone().recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the null space `{x : m x = 0}`.
pub(crate) fn kernel(mut m: Matrix) -> Vec<Vec<Rational>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    for free in (0..cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `m x = rhs` expecting a unique solution; `None` when the system
/// is inconsistent or underdetermined.
pub(crate) fn solve_unique(m: &Matrix, rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut aug: Matrix = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    // Inconsistent when a pivot lands in the augmented column.
    if pivots.last() == Some(&cols) {
        return None;
    }
    if pivots.len() != cols {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][cols].clone();
    }
    Some(x)
}

/// Exact inverse; `None` for singular matrices.
pub(crate) fn invert(m: &Matrix) -> Option<Matrix> {
    let k = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), k, "invert expects a square matrix");
            let mut r = row.clone();
            for j in 0..k {
                r.push(if i == j { Rational::one() } else { Rational::zero() });
            }
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != k || pivots.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[k..].to_vec()).collect())
}

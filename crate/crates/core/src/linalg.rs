//! Exact linear algebra over ℚ and determinants over ℚ[x].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::polynomial::{Polynomial, Rational};

/// Row-major matrix of rationals.
pub type RationalMatrix = Vec<Vec<Rational>>;

fn ncols(m: &[Vec<Rational>]) -> usize {
    m.first().map_or(0, |r| r.len())
}

/// Scales every row by the lcm of its denominators.
fn integer_rows(m: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .collect()
}

/// Rank by fraction-free (Bareiss) elimination on the integer-scaled rows.
pub fn rank(m: &[Vec<Rational>]) -> usize {
    let mut a = integer_rows(m);
    let rows = a.len();
    let cols = ncols(m);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&v % &prev).is_zero());
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = ncols(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for j in c..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let v = &m[r][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{v : m·v = 0}`, one vector per free column.
pub fn kernel(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Checks that `m` is in row echelon form and returns the pivot entries, or
/// `None` if some row is out of shape.
pub fn echelon_pivots(m: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let mut last: Option<usize> = None;
    let mut pivots = Vec::new();
    let mut seen_zero_row = false;
    for row in m {
        match row.iter().position(|q| !q.is_zero()) {
            None => seen_zero_row = true,
            Some(c) => {
                if seen_zero_row || last.is_some_and(|l| c <= l) {
                    return None;
                }
                last = Some(c);
                pivots.push(row[c].clone());
            }
        }
    }
    Some(pivots)
}

pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Determinant of a square rational matrix.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "square matrix expected");
    let mut a = m.to_vec();
    let mut acc = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            acc = -acc;
        }
        acc *= &a[k][k];
        let inv = a[k][k].recip();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] * &inv;
            for j in k..n {
                let v = &a[k][j] * &f;
                a[i][j] -= v;
            }
        }
    }
    acc
}

/// Determinant of a square polynomial matrix by Bareiss elimination with
/// exact division.
pub fn det_bareiss(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    assert!(
        n > 0 && m.iter().all(|r| r.len() == n),
        "square matrix expected"
    );
    let ring = m[0][0].ring().clone();
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut sign_flip = false;
    let mut prev = Polynomial::one(&ring);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign_flip = !sign_flip;
                }
                None => return Polynomial::zero(&ring),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign_flip {
        -d
    } else {
        d
    }
}

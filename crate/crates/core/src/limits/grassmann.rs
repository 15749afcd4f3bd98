//! Subspaces from Plücker coordinates, and annihilators.

use num_traits::{One, Zero};

use super::LimitError;
use crate::hjac::column_subsets;
use crate::linalg;
use crate::multiindex::binomial_usize;
use crate::polynomial::Rational;

/// The maximal minors of an `m × d` matrix, in lexicographic order of the
/// column tuple.
pub fn pluecker_vector(rows: &[Vec<Rational>]) -> Vec<Rational> {
    let m = rows.len();
    let d = rows.first().map_or(0, |r| r.len());
    column_subsets(d, m)
        .iter()
        .map(|cols| {
            let sub: Vec<Vec<Rational>> = rows
                .iter()
                .map(|r| cols.iter().map(|&j| r[j].clone()).collect())
                .collect();
            linalg::det(&sub)
        })
        .collect()
}

/// Sorts `tuple` in place and returns the sign of the sorting permutation,
/// or zero if an entry repeats.
fn sort_sign(tuple: &mut [usize]) -> i32 {
    let mut sign = 1;
    for i in 1..tuple.len() {
        let mut j = i;
        while j > 0 && tuple[j - 1] > tuple[j] {
            tuple.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && tuple[j - 1] == tuple[j] {
            return 0;
        }
    }
    if tuple.windows(2).any(|w| w[0] == w[1]) {
        return 0;
    }
    sign
}

/// An `m`-dimensional subspace of ℚ^d whose Plücker coordinates are `v` (up
/// to scale), given as `m` row vectors.
pub fn pluecker_reconstruct(
    v: &[Rational],
    m: usize,
    d: usize,
) -> Result<Vec<Vec<Rational>>, LimitError> {
    let expected = binomial_usize(d, m);
    if v.len() != expected {
        return Err(LimitError::LengthMismatch {
            expected,
            found: v.len(),
        });
    }
    let tuples = column_subsets(d, m);
    let Some(k0) = v.iter().position(|c| !c.is_zero()) else {
        return Err(LimitError::ZeroVector);
    };
    let j0 = &tuples[k0];
    let scale = v[k0].recip();
    let mut rows = vec![vec![Rational::zero(); d]; m];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut t = j0.clone();
            t[i] = j;
            let sign = sort_sign(&mut t);
            if sign == 0 {
                continue;
            }
            let idx = tuples
                .binary_search(&t)
                .expect("sorted tuple is a valid index");
            *cell = &v[idx] * &scale;
            if sign < 0 {
                *cell = -cell.clone();
            }
        }
    }
    let w = pluecker_vector(&rows);
    // w is v scaled by 1/v[k0]; compare entrywise.
    if w.iter().zip(v).any(|(a, b)| *a != b * &scale) {
        return Err(LimitError::NotDecomposable);
    }
    Ok(rows)
}

/// Basis of `{w : ⟨w, b⟩ = 0 for every b in basis}`.
pub fn annihilator(basis: &[Vec<Rational>], d: usize) -> Result<Vec<Vec<Rational>>, LimitError> {
    if let Some(b) = basis.iter().find(|b| b.len() != d) {
        return Err(LimitError::LengthMismatch {
            expected: d,
            found: b.len(),
        });
    }
    if linalg::rank(basis) != basis.len() {
        return Err(LimitError::DependentVectors);
    }
    if basis.is_empty() {
        return Ok((0..d)
            .map(|i| {
                let mut e = vec![Rational::zero(); d];
                e[i] = Rational::one();
                e
            })
            .collect());
    }
    Ok(linalg::kernel(basis, d))
}

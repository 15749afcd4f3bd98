//! The higher-order Jacobian matrix of a hypersurface, its evaluation, rank,
//! kernel, and maximal minors.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::groebner::{normal_form, Ideal};
use crate::linalg::{self, RationalMatrix};
use crate::multiindex::{binomial_usize, enumerate, MultiIndex};
use crate::polynomial::{MonomialOrder, PolyError, Polynomial, Rational, RationalPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HjacError {
    #[error("the zero polynomial does not define a hypersurface")]
    ZeroPolynomial,
    #[error("the order must be at least 1")]
    ZeroOrder,
    #[error("point {0} is not on the hypersurface")]
    NotOnHypersurface(RationalPoint),
    #[error("point {0} is singular")]
    SingularPoint(RationalPoint),
    #[error("point {0} is non-singular")]
    NonSingularPoint(RationalPoint),
    #[error("fewer columns than rows: no maximal minors")]
    TooFewColumns,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `Jac_n(F)`: rows indexed by `β` with `|β| ≤ n−1`, columns by `α` with
/// `1 ≤ |α| ≤ n`, both in canonical order.
#[derive(Debug, Clone)]
pub struct HigherJacobian {
    f: Polynomial,
    n: u32,
    rows: Vec<MultiIndex>,
    cols: Vec<MultiIndex>,
    entries: Vec<Vec<Polynomial>>,
}

impl HigherJacobian {
    pub fn build(f: &Polynomial, n: u32) -> Result<Self, HjacError> {
        if f.is_zero() {
            return Err(HjacError::ZeroPolynomial);
        }
        if n == 0 {
            return Err(HjacError::ZeroOrder);
        }
        let s = f.nvars();
        let rows = enumerate(s, 0, n - 1).expect("ring has variables");
        let cols = enumerate(s, 1, n).expect("ring has variables");
        let zero = Polynomial::zero(f.ring());
        let mut taylor: HashMap<MultiIndex, Polynomial> = HashMap::new();
        let entries = rows
            .iter()
            .map(|beta| {
                cols.iter()
                    .map(|alpha| match alpha.checked_sub(beta) {
                        Ok(d) => taylor
                            .entry(d.clone())
                            .or_insert_with(|| f.taylor_coeff(&d))
                            .clone(),
                        Err(_) => zero.clone(),
                    })
                    .collect()
            })
            .collect();
        Ok(HigherJacobian {
            f: f.clone(),
            n,
            rows,
            cols,
            entries,
        })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    /// Number of rows, `C(n+s−1, s)`.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns, `C(n+s, s) − 1`.
    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_labels(&self) -> &[MultiIndex] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[MultiIndex] {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row][col]
    }

    /// Entry at labels `(β, α)`, if both are labels of this matrix.
    pub fn entry_at(&self, beta: &MultiIndex, alpha: &MultiIndex) -> Option<&Polynomial> {
        let i = self.rows.iter().position(|b| b == beta)?;
        let j = self.cols.iter().position(|a| a == alpha)?;
        Some(&self.entries[i][j])
    }

    fn check_on_hypersurface(&self, p: &RationalPoint) -> Result<(), HjacError> {
        if !self.f.evaluate(p)?.is_zero() {
            return Err(HjacError::NotOnHypersurface(p.clone()));
        }
        Ok(())
    }

    /// Entrywise evaluation at a point of the hypersurface.
    pub fn evaluate_at(&self, p: &RationalPoint) -> Result<RationalMatrix, HjacError> {
        self.check_on_hypersurface(p)?;
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| Ok(e.evaluate(p)?)).collect())
            .collect()
    }

    pub fn rank_at(&self, p: &RationalPoint) -> Result<usize, HjacError> {
        Ok(linalg::rank(&self.evaluate_at(p)?))
    }

    /// All maximal minors, indexed in ascending lexicographic order of the
    /// column-position tuple.
    pub fn maximal_minors(&self) -> Result<Vec<(MinorIndex, Polynomial)>, HjacError> {
        let m = self.num_rows();
        let c = self.num_cols();
        if c < m {
            return Err(HjacError::TooFewColumns);
        }
        let table = if c <= 128 {
            laplace_minors(&self.entries, c)
        } else {
            HashMap::new()
        };
        let zero = Polynomial::zero(self.f.ring());
        Ok(column_subsets(c, m)
            .into_iter()
            .map(|cols| {
                let det = if c <= 128 {
                    let key = cols.iter().fold(0u128, |k, &j| k | (1 << j));
                    table.get(&key).cloned().unwrap_or_else(|| zero.clone())
                } else {
                    self.minor_bareiss(&cols)
                };
                (MinorIndex(cols), det)
            })
            .collect())
    }

    /// Determinant of the submatrix on the given (0-based) columns, by
    /// fraction-free elimination.
    pub fn minor_bareiss(&self, cols: &[usize]) -> Polynomial {
        let sub: Vec<Vec<Polynomial>> = self
            .entries
            .iter()
            .map(|row| cols.iter().map(|&j| row[j].clone()).collect())
            .collect();
        linalg::det_bareiss(&sub)
    }
}

impl fmt::Display for HigherJacobian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Strictly increasing tuple of 0-based column positions selecting a maximal
/// square submatrix. Displayed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MinorIndex(pub Vec<usize>);

impl MinorIndex {
    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|j| j + 1).collect()
    }
}

impl fmt::Display for MinorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|j| j.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All `k`-subsets of `0..n` in ascending lexicographic order.
pub fn column_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial_usize(n, k));
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Every non-zero maximal minor, keyed by the column bitmask.
///
/// Rows are expanded one at a time, sparsest first, keeping only the non-zero
/// minors of the rows processed so far; each entry is pushed forward along
/// every non-zero entry of the next row.
fn laplace_minors(entries: &[Vec<Polynomial>], ncols: usize) -> HashMap<u128, Polynomial> {
    let m = entries.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| {
        (
            entries[i].iter().filter(|e| !e.is_zero()).count(),
            std::cmp::Reverse(i),
        )
    });
    let ring = entries[0][0].ring().clone();
    let mut layer: HashMap<u128, Polynomial> = HashMap::new();
    layer.insert(0, Polynomial::one(&ring));
    for (k, &r) in order.iter().enumerate() {
        let mut next: HashMap<u128, Polynomial> = HashMap::with_capacity(layer.len() * 2);
        for (&set, d) in &layer {
            for j in 0..ncols {
                let a = &entries[r][j];
                if a.is_zero() || set & (1 << j) != 0 {
                    continue;
                }
                // The new row sits at position k in the submatrix and column j
                // at position `pos` among the selected columns.
                let pos = (set & ((1u128 << j) - 1)).count_ones() as usize;
                let term = a * d;
                let term = if (k + pos) % 2 == 1 { -term } else { term };
                let key = set | (1 << j);
                match next.get_mut(&key) {
                    Some(acc) => *acc = &*acc + &term,
                    None => {
                        next.insert(key, term);
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        layer = next;
    }
    // Rows were taken in `order`; undo that permutation.
    if permutation_is_odd(&order) {
        for v in layer.values_mut() {
            *v = -v.clone();
        }
    }
    layer
}

fn permutation_is_odd(p: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

pub fn build(f: &Polynomial, n: u32) -> Result<HigherJacobian, HjacError> {
    HigherJacobian::build(f, n)
}

/// Whether `Jac_1(F)` is the row of first partials.
pub fn jac1_equals_classical(f: &Polynomial) -> bool {
    let Ok(j) = HigherJacobian::build(f, 1) else {
        return false;
    };
    j.num_rows() == 1
        && j.entries[0]
            .iter()
            .enumerate()
            .all(|(i, e)| *e == f.partial(i))
}

pub fn evaluate_at(jac: &HigherJacobian, p: &RationalPoint) -> Result<RationalMatrix, HjacError> {
    jac.evaluate_at(p)
}

pub fn rank_at(f: &Polynomial, n: u32, p: &RationalPoint) -> Result<usize, HjacError> {
    HigherJacobian::build(f, n)?.rank_at(p)
}

pub fn is_singular(f: &Polynomial, n: u32, p: &RationalPoint) -> Result<bool, HjacError> {
    let j = HigherJacobian::build(f, n)?;
    Ok(j.rank_at(p)? < j.num_rows())
}

/// Basis of `T^n_p X` as the kernel of the evaluated matrix; only defined
/// at non-singular points.
pub fn tangent_space(
    f: &Polynomial,
    n: u32,
    p: &RationalPoint,
) -> Result<Vec<Vec<Rational>>, HjacError> {
    let j = HigherJacobian::build(f, n)?;
    let m = j.evaluate_at(p)?;
    if linalg::rank(&m) < j.num_rows() {
        return Err(HjacError::SingularPoint(p.clone()));
    }
    Ok(linalg::kernel(&m, j.num_cols()))
}

/// `(N−1) − rank`, defined at singular points too.
pub fn dim_tn(f: &Polynomial, n: u32, p: &RationalPoint) -> Result<usize, HjacError> {
    let j = HigherJacobian::build(f, n)?;
    Ok(j.num_cols() - j.rank_at(p)?)
}

pub fn maximal_minors(f: &Polynomial, n: u32) -> Result<Vec<(MinorIndex, Polynomial)>, HjacError> {
    HigherJacobian::build(f, n)?.maximal_minors()
}

/// Generators of the ideal of maximal minors taken modulo `F`: the grevlex
/// normal form of each minor with respect to `{F}`, without zeros or repeats.
pub fn nash_generators(f: &Polynomial, n: u32) -> Result<Vec<Polynomial>, HjacError> {
    let ord = MonomialOrder::grevlex(f.nvars());
    let divisor = [f.clone()];
    let mut seen: std::collections::HashSet<String> = std::collections::HashSet::new();
    let mut out = Vec::new();
    for (_, d) in maximal_minors(f, n)? {
        let r = normal_form(&d, &divisor, &ord);
        if r.is_zero() {
            continue;
        }
        if seen.insert(r.monic(&ord).to_string()) {
            out.push(r);
        }
    }
    Ok(out)
}

/// The ideal of maximal minors modulo `F`, as an ideal of the ambient ring.
pub fn nash_ideal(f: &Polynomial, n: u32) -> Result<Ideal, HjacError> {
    Ok(Ideal::new(f.ring(), nash_generators(f, n)?)?)
}
